"""``rankrange`` command line.

Exit status is 0 on success, 1 for invalid input and 2 when an internal
self-check fails.  Errors are written to stderr as a JSON object.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import io
from .errors import RankRangeError, VerificationFailed
from .geometry import region_equal
from .kregular import DirectionSet, count_antipodal, is_k_regular, minimal_extension
from .oracle import angle_sweep, brute_force_12, sweep_region
from .rank_range import lambda_k
from .synthesis import prune_spectrum, synthesize
from .tolerance import tolerances

COMMANDS = ("range", "synthesize", "check-regular", "verify", "prune")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="rankrange", description="Rank-k numerical ranges of normal matrices.")
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("--input", help="JSON input file (default: stdin)")
    ap.add_argument("--k", type=int, required=True, help="rank k")
    ap.add_argument("--tol", type=float, help="coordinate tolerance")
    ap.add_argument("--angle-tol", type=float, help="angular tolerance")
    ap.add_argument("--svg", help="write a figure to this file")
    ap.add_argument("--oracle", action="store_true", help="cross-check against the reference computations")
    ap.add_argument("--json", action="store_true", help="compact single-line output")
    return ap


def _range(doc, args):
    sp = io.parse_spectrum(doc)
    region = lambda_k(sp, args.k)
    out = {"k": args.k, "region": io.region_to_doc(region)}
    if args.oracle:
        out["oracle_agrees"] = region_equal(region, brute_force_12(sp, args.k))
    return out, (region, sp.expanded(), ())


def _synthesize(doc, args):
    spec = io.parse_polygon(doc)
    res = synthesize(spec, args.k)
    out = {"k": args.k, "p": spec.p, **io.synthesis_to_doc(res)}
    return out, (spec.region(), res.spectrum.expanded(), spec.vertices)


def _check_regular(doc, args):
    ds = DirectionSet(tuple(io.parse_angles(doc)))
    out = {"k": args.k, "p": ds.p, "s": count_antipodal(ds), "regular": is_k_regular(ds, args.k)}
    if is_k_regular(ds, 1):
        ext = minimal_extension(ds, args.k)
        out["q"] = ext.q
        out["added"] = [io.rounded(x) for x in ext.added]
        if ext.witness_removed is not None:
            out["witness_removed"] = [io.rounded(x) for x in ext.witness_removed]
    return out, None


def _verify(doc, args):
    sp = io.parse_spectrum(doc)
    region = lambda_k(sp, args.k)
    brute = brute_force_12(sp, args.k)
    out = {
        "k": args.k,
        "region": io.region_to_doc(region),
        "brute_force": io.region_to_doc(brute),
        "agrees": region_equal(region, brute),
    }
    if args.oracle:
        swept = sweep_region(angle_sweep(sp, args.k, 360))
        out["sweep"] = io.region_to_doc(swept)
        out["sweep_agrees"] = region_equal(region, swept)
    return out, (region, sp.expanded(), ())


def _prune(doc, args):
    sp = io.parse_spectrum(doc)
    pruned = prune_spectrum(sp, args.k)
    out = {"k": args.k, "removed": sp.n - pruned.n, "spectrum": io.spectrum_to_doc(pruned)}
    return out, (lambda_k(pruned, args.k), pruned.expanded(), ())


HANDLERS = {
    "range": _range,
    "synthesize": _synthesize,
    "check-regular": _check_regular,
    "verify": _verify,
    "prune": _prune,
}


def _fail(code: int, exc: BaseException) -> int:
    sys.stderr.write(json.dumps({"error": type(exc).__name__, "message": str(exc)}) + "\n")
    return code


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.input:
            with open(args.input, encoding="utf-8") as fh:
                doc = json.load(fh)
        else:
            doc = json.load(sys.stdin)
    except (OSError, json.JSONDecodeError) as exc:
        return _fail(1, exc)
    try:
        with tolerances(tol=args.tol, angle_tol=args.angle_tol):
            out, figure = HANDLERS[args.command](doc, args)
    except VerificationFailed as exc:
        return _fail(2, exc)
    except (RankRangeError, ValueError, TypeError, KeyError) as exc:
        return _fail(1, exc)
    sys.stdout.write(io.dumps(out, compact=args.json) + "\n")
    if args.svg and figure is not None:
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(io.render_svg(*figure))
    return 0


if __name__ == "__main__":
    sys.exit(main())
