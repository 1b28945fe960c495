"""Command-line front end: JSON on stdout, diagnostics on stderr.

Exit codes: 0 success, 2 precondition or usage error, 3 internal inconsistency.
"""
from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Any, Optional, Sequence

from .core import AlphaLinear, CsType, SubsystemData
from .critical import (
    chambers,
    compare_closed_form,
    critical_values_closed_form,
    equality_locus,
    verify_critical_value,
)
from .errors import GenerationError, InconsistencyError, PreconditionError, RangeError
from .exactnum import rational_to_str
from .flips import flip_dims
from .nonempty import b_threshold, clause_thresholds, nonempty_iff, nonempty_sufficient
from .pointconfig import (
    PointConfig,
    cayley_bacharach,
    gen_collinear,
    gen_general,
    h0_ideal,
    lies_on_no_curve,
    witness_config,
)
from .schemas import SCHEMAS
from .segre import cycle_length, segre_feasible, segre_threshold
from .stability import classify_with_maximal, compare_sub_linear

RATIONAL_KEYS = {"a", "b", "bound"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}")


def _add_floats(obj: Any) -> Any:
    """Attach approximate decimals next to rational strings, for reading only."""
    if isinstance(obj, list):
        return [_add_floats(x) for x in obj]
    if isinstance(obj, dict):
        out = {}
        for k, v in obj.items():
            out[k] = _add_floats(v)
            if k in RATIONAL_KEYS and isinstance(v, str):
                out[f"{k}_float"] = float(Fraction(v))
        return out
    return obj


# -- subcommands --------------------------------------------------------------

def cmd_segre(args) -> dict:
    ss = [args.s] if args.s is not None else list(range(-args.r + 1, args.r + 1))
    values = []
    for s in ss:
        ok = segre_feasible(args.r, args.t, args.c2, s)
        values.append({
            "s": s,
            "threshold": segre_threshold(args.r, args.t, s),
            "feasible": ok,
            "cycle_length": cycle_length(args.r, args.t, args.c2, s) if ok else None,
        })
    return {"r": args.r, "t": args.t, "c2": args.c2, "values": values}


def cmd_stability(args) -> dict:
    cs = CsType(args.r, args.t, args.c2, args.k)
    alpha = AlphaLinear(args.a, args.b)
    c1L = args.c1L if args.c1L is not None else (args.r - args.s if args.s is not None else None)
    if c1L is None:
        raise PreconditionError("give --c1L or --s")
    sub = SubsystemData(c1L, args.w)
    out = {
        "ordering": compare_sub_linear(cs, alpha, sub).name,
        "alpha": alpha.to_json(),
        "sub": sub.to_json(),
    }
    if args.s is not None:
        out["verdict"] = classify_with_maximal(cs, alpha, sub, args.s).value
    return out


def _check_walls(cs: CsType, walls) -> None:
    for cv in walls:
        if not verify_critical_value(cs, cv):
            raise InconsistencyError(f"wall ({cv.a}, {cv.b}) fails its equality conditions")


def cmd_critical(args) -> dict:
    cs = CsType(args.r, args.t, args.c2, 2)
    oracle = equality_locus(cs)
    _check_walls(cs, oracle)
    out: dict[str, Any] = {"r": args.r, "t": args.t, "c2": args.c2, "oracle": [cv.to_json() for cv in oracle]}
    if args.compare:
        cmp = compare_closed_form(args.r, args.t, args.c2)
        out.update({
            "window": cmp.window.to_json(),
            "closed_form": [cv.to_json() for cv in cmp.closed_form],
            "discrepancies": [d.to_json() for d in cmp.discrepancies],
            "ok": cmp.ok,
        })
    elif args.closed_form or args.as_printed:
        cf = critical_values_closed_form(args.r, args.t, args.c2, as_printed=args.as_printed)
        out["closed_form"] = [cv.to_json() for cv in cf]
    return out


def cmd_chambers(args) -> dict:
    cs = CsType(args.r, args.t, args.c2, 2)
    walls = equality_locus(cs)
    _check_walls(cs, walls)
    return {
        "r": args.r,
        "t": args.t,
        "c2": args.c2,
        "walls": [cv.to_json() for cv in walls],
        "chambers": [ch.to_json() for ch in chambers(cs, walls)],
    }


def cmd_flip(args) -> dict:
    return flip_dims(args.r, args.s, args.t, args.c2)


def _load_points(path: str) -> PointConfig:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise PreconditionError(f"cannot read point file {path}: {exc}")
    if not isinstance(data, list):
        raise PreconditionError("point file must hold a JSON array of coordinate triples")
    try:
        return PointConfig.from_json(data)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        if isinstance(exc, PreconditionError):
            raise
        raise PreconditionError(f"bad coordinates in {path}: {exc}")


def cmd_points(args) -> dict:
    if args.action == "gen":
        gen = gen_collinear if args.collinear else gen_general
        z = gen(args.l, args.seed)
        return {"points": z.to_json(), "length": len(z)}
    if args.action == "witness":
        return witness_config(args.r, args.t, args.c2, args.s, seed=args.seed).to_json()
    z = _load_points(args.file)
    out: dict[str, Any] = {"length": len(z), "d": args.d}
    if args.action == "h0":
        out["h0"] = h0_ideal(z, args.d)
    elif args.action == "no-curve":
        out["no_curve"] = lies_on_no_curve(z, args.d)
    else:
        out["cb"] = cayley_bacharach(z, args.d)
    return out


def cmd_nonempty(args) -> dict:
    out: dict[str, Any] = {
        "r": args.r,
        "t": args.t,
        "c2": args.c2,
        "a": rational_to_str(args.a),
        "clause": nonempty_sufficient(args.r, args.t, args.c2, args.a),
        "thresholds": _stringify(clause_thresholds(args.r, args.t)),
    }
    if args.s0 is not None:
        b = args.b if args.b is not None else Fraction(0)
        out["iff"] = {
            "s0": args.s0,
            "b": rational_to_str(b),
            "bound": rational_to_str(b_threshold(args.r, args.t, args.c2, args.s0)),
            "semistable": args.semistable,
            "nonempty": nonempty_iff(args.r, args.t, args.c2, args.s0, args.a, b, args.semistable),
        }
    return out


def _stringify(obj: Any) -> Any:
    if isinstance(obj, Fraction):
        return rational_to_str(obj)
    if isinstance(obj, dict):
        return {k: _stringify(v) for k, v in obj.items()}
    if isinstance(obj, list):
        return [_stringify(v) for v in obj]
    return obj


def sweep_cell(key: tuple[int, int, int]) -> dict:
    r, t, c2 = key
    cs = CsType(r, t, c2, 2)
    try:
        cmp = compare_closed_form(r, t, c2)
    except RangeError:
        oracle = equality_locus(cs)
        _check_walls(cs, oracle)
        return {
            "r": r, "t": t, "c2": c2, "window": None,
            "oracle": [cv.to_json() for cv in oracle],
            "closed_form": None, "discrepancies": [], "ok": True,
        }
    _check_walls(cs, cmp.oracle)
    return cmp.to_json()


def cmd_sweep(args) -> list[dict]:
    if args.r_min < 1:
        raise PreconditionError("sweep needs r >= 1")
    keys = sorted(
        (r, t, c2)
        for r in range(args.r_min, args.r_max + 1)
        for t in args.t
        for c2 in range(args.c2_min, args.c2_max + 1)
    )
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            return list(pool.map(sweep_cell, keys, chunksize=16))
    return [sweep_cell(k) for k in keys]


# -- parser -------------------------------------------------------------------

def _cs_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--t", type=int, choices=(0, 1), required=True)
    p.add_argument("--c2", type=int, required=True)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="p2cohsys", description="Coherent systems of rank 2 on the projective plane.")
    parser.add_argument("--float", action="store_true", help="add approximate decimals next to rationals")
    parser.add_argument("--out", help="write JSON here instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("segre", help="feasible Segre indices and cycle lengths")
    _cs_args(p)
    p.add_argument("--s", type=int)
    p.set_defaults(func=cmd_segre)

    p = sub.add_parser("stability", help="compare a system against a line subsystem at alpha = a*m + b")
    _cs_args(p)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--c1L", type=int)
    p.add_argument("--s", type=int, help="treat the subsystem as maximal with c1L = r - s")
    p.add_argument("--w", type=int, required=True)
    p.add_argument("--a", type=_rational, required=True)
    p.add_argument("--b", type=_rational, default=Fraction(0))
    p.set_defaults(func=cmd_stability)

    p = sub.add_parser("critical", help="critical values for k = 2")
    _cs_args(p)
    p.add_argument("--closed-form", action="store_true")
    p.add_argument("--as-printed", action="store_true", help="closed form without corrections")
    p.add_argument("--compare", action="store_true", help="closed form against the oracle")
    p.set_defaults(func=cmd_critical)

    p = sub.add_parser("chambers", help="walls and chamber representatives for k = 2")
    _cs_args(p)
    p.set_defaults(func=cmd_chambers)

    p = sub.add_parser("flip-dim", help="dimensions of the flip locus at a w = 2 wall")
    _cs_args(p)
    p.add_argument("--s", type=int, required=True)
    p.set_defaults(func=cmd_flip)

    p = sub.add_parser("points", help="reduced point configurations")
    p.add_argument("action", choices=("gen", "h0", "no-curve", "cb", "witness"))
    p.add_argument("--file", help="JSON array of coordinate triples")
    p.add_argument("--d", type=int)
    p.add_argument("--l", type=int)
    p.add_argument("--collinear", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--r", type=int)
    p.add_argument("--t", type=int, choices=(0, 1))
    p.add_argument("--c2", type=int)
    p.add_argument("--s", type=int)
    p.set_defaults(func=cmd_points)

    p = sub.add_parser("nonempty", help="non-emptiness verdicts for k = 2")
    _cs_args(p)
    p.add_argument("--a", type=_rational, required=True)
    p.add_argument("--b", type=_rational)
    p.add_argument("--s0", type=int)
    p.add_argument("--semistable", action="store_true")
    p.set_defaults(func=cmd_nonempty)

    p = sub.add_parser("sweep", help="closed form against oracle over a grid, one JSON line per cell")
    p.add_argument("--r-min", type=int, default=1)
    p.add_argument("--r-max", type=int, required=True)
    p.add_argument("--t", type=int, choices=(0, 1), nargs="+", default=[0, 1])
    p.add_argument("--c2-min", type=int, default=0)
    p.add_argument("--c2-max", type=int, required=True)
    p.add_argument("--compare", action="store_true", help="exit 3 on any unexplained mismatch")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_sweep)
    return parser


_POINT_NEEDS = {
    "gen": ("l",),
    "h0": ("file", "d"),
    "no-curve": ("file", "d"),
    "cb": ("file", "d"),
    "witness": ("r", "t", "c2", "s"),
}


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = parser.parse_args(argv)
        if args.command == "points":
            missing = [n for n in _POINT_NEEDS[args.action] if getattr(args, n) is None]
            if missing:
                raise UsageError(f"points {args.action}: missing --{', --'.join(missing)}")
    except UsageError as exc:
        cmd = next((a for a in argv if a in SCHEMAS), None)
        print(str(exc), file=sys.stderr)
        parser.print_usage(sys.stderr)
        if cmd:
            print(f"output schema for {cmd}:", file=sys.stderr)
            print(json.dumps(SCHEMAS[cmd], indent=2), file=sys.stderr)
        return 2

    try:
        result = args.func(args)
    except (InconsistencyError, GenerationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except PreconditionError as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return 2

    if args.float:
        result = _add_floats(result)
    if args.command == "sweep":
        text = "".join(json.dumps(rec, sort_keys=True) + "\n" for rec in result)
        _emit(text, args.out)
        if args.compare and not all(rec["ok"] for rec in result):
            print("unexplained closed-form/oracle mismatch", file=sys.stderr)
            return 3
        return 0
    _emit(json.dumps(result, sort_keys=True) + "\n", args.out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
