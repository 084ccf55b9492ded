"""Eigenvalue data of a normal matrix.

A normal matrix is unitarily diagonalisable, so everything this package
computes about it is a function of its eigenvalue multiset.
:class:`NormalSpectrum` stores that multiset as distinct values with
multiplicities.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DegenerateScale
from .geometry import cross, dot
from .tolerance import get_tol


@dataclass(frozen=True)
class NormalSpectrum:
    """Distinct eigenvalues with positive integer multiplicities."""

    eigs: tuple[tuple[complex, int], ...]

    def __post_init__(self):
        if not self.eigs:
            raise ValueError("a spectrum needs at least one eigenvalue")
        for z, mult in self.eigs:
            if not (math.isfinite(z.real) and math.isfinite(z.imag)):
                raise ValueError(f"eigenvalue {z} is not finite")
            if int(mult) != mult or mult < 1:
                raise ValueError(f"multiplicity {mult} must be a positive integer")

    @property
    def n(self) -> int:
        return sum(mult for _, mult in self.eigs)

    @property
    def m(self) -> int:
        return len(self.eigs)

    @property
    def values(self) -> list[complex]:
        """Distinct eigenvalues, in storage order."""
        return [z for z, _ in self.eigs]

    @property
    def multiplicities(self) -> list[int]:
        return [mult for _, mult in self.eigs]

    def expanded(self) -> list[complex]:
        """All ``n`` eigenvalues, repeated according to multiplicity."""
        return [z for z, mult in self.eigs for _ in range(mult)]

    def __iter__(self):
        return iter(self.eigs)

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[complex, int]]) -> NormalSpectrum:
        """Build from ``(value, multiplicity)`` pairs, merging values within tol."""
        vals: list[complex] = []
        for z, mult in pairs:
            if int(mult) != mult or mult < 1:
                raise ValueError(f"multiplicity {mult} must be a positive integer")
            vals.extend([complex(z)] * int(mult))
        return from_values(vals)


def from_values(vals: Sequence[complex]) -> NormalSpectrum:
    """Spectrum from a list of eigenvalues.

    Values closer than the active tolerance are merged transitively into one
    entry whose representative is the multiplicity-weighted mean.  Entries
    are ordered lexicographically by (real, imag) so the result does not
    depend on input order.
    """
    zs = [complex(v) for v in vals]
    if not zs:
        raise ValueError("from_values needs at least one value")
    for z in zs:
        if not (math.isfinite(z.real) and math.isfinite(z.imag)):
            raise ValueError(f"eigenvalue {z} is not finite")
    tol = get_tol()
    zs.sort(key=lambda z: (z.real, z.imag))
    parent = list(range(len(zs)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(len(zs)):
        for j in range(i + 1, len(zs)):
            if zs[j].real - zs[i].real > tol:
                break
            if abs(zs[j] - zs[i]) <= tol:
                parent[find(j)] = find(i)

    groups: dict[int, list[complex]] = {}
    for i, z in enumerate(zs):
        groups.setdefault(find(i), []).append(z)
    eigs = [(sum(g) / len(g), len(g)) for g in groups.values()]
    eigs.sort(key=lambda e: (e[0].real, e[0].imag))
    return NormalSpectrum(tuple(eigs))


@dataclass(frozen=True)
class Collinearity:
    """Result of :func:`collinearity`.

    ``kind`` is ``"Scalar"``, ``"Collinear"`` or ``"General"``.  For the
    collinear case ``theta`` is the line direction in ``(-pi/2, pi/2]``,
    ``offsets`` are the positions ``Re(exp(-1j*theta) a)`` of all ``n``
    eigenvalues sorted descending and ``ordered`` lists the eigenvalues
    themselves in the same order.
    """

    kind: str
    theta: float | None = None
    offsets: tuple[float, ...] = ()
    ordered: tuple[complex, ...] = ()


def collinearity(sp: NormalSpectrum) -> Collinearity:
    """Classify the spectrum as a scalar, collinear or general point set."""
    vals = sp.values
    if sp.m == 1:
        return Collinearity("Scalar")
    best = (vals[0], vals[0], 0.0)
    for i in range(len(vals)):
        for j in range(i + 1, len(vals)):
            dist = abs(vals[i] - vals[j])
            if dist > best[2]:
                best = (vals[i], vals[j], dist)
    a, b, spread = best
    u = (b - a) / spread
    if u.real < 0 or (u.real == 0 and u.imag < 0):
        u = -u
    # residual relative to the spread, but never tighter than the absolute tol
    if max(abs(cross(u, z - a)) for z in vals) > get_tol() * max(1.0, spread):
        return Collinearity("General")
    theta = cmath.phase(u)
    ordered = sorted(sp.expanded(), key=lambda z: dot(u, z), reverse=True)
    return Collinearity("Collinear", theta, tuple(dot(u, z) for z in ordered), tuple(ordered))


def transform(sp: NormalSpectrum, mu: complex, shift: complex = 0j) -> NormalSpectrum:
    """Spectrum of ``mu*A + shift*I``."""
    mu = complex(mu)
    if abs(mu) <= get_tol():
        raise DegenerateScale(f"scale factor {mu} is numerically zero")
    return from_values([mu * z + shift for z in sp.expanded()])
