"""``skewspec`` command line.

Exit codes: 0 success, 1 analysis-negative (invalid pwls input for
``validate``, non-invariant under ``--expect-invariant``), 2 usage or parse
error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from pathlib import Path

from . import catalogue
from .charpoly import char_poly
from .graph import NotPwlsError, WeightedDigraph, from_graph, to_matrix, validate_pwls
from .signing import (
    CapExceededError,
    NotInvariantError,
    SkewSigning,
    apply_signing,
    brute_force_invariance,
    decide_invariance,
    invariant_char_poly,
)
from .subdigraphs import TooLargeError, enumerate_cycles
from .symmetry import build_scaling_certificate, cycle_symmetry_up_to, ScalingCertificate, SymmetryVerdict
from .wdg import ParseError, digest, parse_edge_list, parse_wdg, serialize_wdg


class UsageError(ValueError):
    pass


def _load(path: str) -> WeightedDigraph:
    text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    return parse_wdg(text)


def _report(command: str, d: WeightedDigraph, result: dict, args, started: float) -> dict:
    out = {
        "command": command,
        "input_digest": digest(d),
        "result": result,
        "seed": getattr(args, "seed", None),
    }
    if not args.no_timing:
        out["timing"] = {"seconds": round(time.perf_counter() - started, 6)}
    return out


def _signing(d: WeightedDigraph, spec: str):
    if spec == "none":
        return None
    digons = tuple(d.digons())
    if spec == "all-plus":
        return SkewSigning(digons, (1,) * len(digons))
    if spec.startswith("bits:"):
        try:
            return SkewSigning.from_bits(digons, spec[5:])
        except ValueError as exc:
            raise UsageError(f"bad signing spec {spec!r}: {exc}") from None
    raise UsageError(f"bad signing spec {spec!r}; use none, all-plus or bits:<01...>")


def cmd_validate(args) -> tuple[dict, int]:
    started = time.perf_counter()
    d = _load(args.file)
    report = validate_pwls(d)
    return _report("validate", d, report.to_json(), args, started), 0 if report.ok else 1


def cmd_charpoly(args) -> tuple[dict, int]:
    started = time.perf_counter()
    d = _load(args.file)
    s = _signing(d, args.signing)
    if s is None:
        m = to_matrix(d)
    else:
        d.require_pwls()
        m = apply_signing(d, s)
    result = {"signing": args.signing, "poly": char_poly(m).to_json()}
    return _report("charpoly", d, result, args, started), 0


def cmd_decide(args) -> tuple[dict, int]:
    started = time.perf_counter()
    d = _load(args.file)
    v = decide_invariance(d)
    code = 1 if args.expect_invariant and not v.invariant else 0
    return _report("decide", d, v.to_json(), args, started), code


def cmd_brute(args) -> tuple[dict, int]:
    started = time.perf_counter()
    d = _load(args.file)
    r = brute_force_invariance(d, args.cap)
    code = 1 if args.expect_invariant and not r.invariant else 0
    return _report("brute", d, r.to_json(), args, started), code


def cmd_cycles(args) -> tuple[dict, int]:
    started = time.perf_counter()
    d = _load(args.file)
    cycles = [c.to_json() for c in enumerate_cycles(d, args.max_len)]
    return _report("cycles", d, {"cycles": cycles}, args, started), 0


def cmd_symmetry(args) -> tuple[dict, int]:
    started = time.perf_counter()
    d = _load(args.file)
    if args.max_len is None:
        res = build_scaling_certificate(d)
        if isinstance(res, ScalingCertificate):
            v = SymmetryVerdict(True, certificate=res)
        else:
            v = SymmetryVerdict(False, witness=res)
    else:
        v = cycle_symmetry_up_to(d, args.max_len)
    result = {"cycle_symmetric": v.is_cycle_symmetric, **v.to_json()}
    return _report("symmetry", d, result, args, started), 0


def cmd_invariant_poly(args) -> tuple[dict, int]:
    started = time.perf_counter()
    d = _load(args.file)
    try:
        p = invariant_char_poly(d)
    except NotInvariantError as exc:
        return _report("invariant-poly", d, {"poly": None, **exc.verdict.to_json()}, args, started), 1
    return _report("invariant-poly", d, {"poly": p.to_json()}, args, started), 0


def cmd_from_graph(args) -> str:
    text = sys.stdin.read() if args.file == "-" else Path(args.file).read_text(encoding="utf-8")
    edges, n = parse_edge_list(text)
    if args.seed is None:
        d = from_graph(edges, n)
    else:
        d = catalogue.random_weighting(tuple(edges), n, random.Random(args.seed))
    return serialize_wdg(d)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skewspec",
        description="Characteristic polynomials of skew-signings of positive weighted symmetric digraphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, **flags):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file", help="input file, or - for stdin")
        p.add_argument("--no-timing", action="store_true", help="omit the timing field")
        p.add_argument("--seed", type=int, default=None)
        if flags.get("expect"):
            p.add_argument("--expect-invariant", action="store_true")
        if flags.get("max_len"):
            p.add_argument("--max-len", type=int, default=None)
        if flags.get("cap"):
            p.add_argument("--cap", type=int, default=None, help="digon cap (default $SKEWSPEC_CAP or 20)")
        p.set_defaults(func=func)
        return p

    add("validate", cmd_validate, "check the pwls conditions")
    p = add("charpoly", cmd_charpoly, "characteristic polynomial of one signing")
    p.add_argument("--signing", default="none", help="none | all-plus | bits:<01-string>")
    add("decide", cmd_decide, "structural invariance decision", expect=True)
    add("brute", cmd_brute, "brute force over all skew-signings", expect=True, cap=True)
    add("cycles", cmd_cycles, "list directed cycles", max_len=True)
    add("symmetry", cmd_symmetry, "cycle symmetry and scaling certificate", max_len=True)
    add("invariant-poly", cmd_invariant_poly, "common polynomial via digon covers")
    fg = sub.add_parser("from-graph", help="edge list to wdg on stdout")
    fg.add_argument("file")
    fg.add_argument("--seed", type=int, default=None, help="random positive weights instead of 1")
    fg.set_defaults(func=cmd_from_graph)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out = args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except (UsageError, NotPwlsError, CapExceededError, TooLargeError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if isinstance(out, str):
        sys.stdout.write(out)
        return 0
    report, code = out
    sys.stdout.write(json.dumps(report, indent=2) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
