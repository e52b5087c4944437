"""Command-line front end.

Exit codes: 0 success (paper disagreements included), 1 invalid parameters
or usage, 2 internal consistency failure, 3 resource guard.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import engine
from .curve import enumerate_basis, enumerate_paper_index_set, validate_params
from .errors import CartierError, GenusCapExceeded, InternalConsistencyError, ParameterError, ResourceGuardError
from .points import count_points
from .report import emit_report, to_record
from .sweep import DEFAULT_GENUS_CAP, SweepSpec, write_sweep

EXIT_OK, EXIT_USAGE, EXIT_INTERNAL, EXIT_RESOURCE = 0, 1, 2, 3


class UsageError(ParameterError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _curve_args(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--p", type=int, required=True, help="characteristic (prime > 3)")
    sp.add_argument("--s", type=int, required=True, help="q = p^s")
    sp.add_argument("--m", type=int, required=True, help="degree of x^m + x")
    sp.add_argument("--strict", action="store_true", help="reject parameters failing any hypothesis")
    sp.add_argument("--genus-cap", type=int, default=DEFAULT_GENUS_CAP)


def _format_args(sp: argparse.ArgumentParser) -> None:
    fmt = sp.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="fmt", action="store_const", const="json")
    fmt.add_argument("--csv", dest="fmt", action="store_const", const="csv")
    sp.set_defaults(fmt="table")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cartier", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name, help_ in [
        ("check", "validate parameters; print genus and basis sizes"),
        ("a-number", "a-number from the Cartier matrix"),
        ("rank", "rank of the Cartier matrix"),
        ("p-rank", "stable rank of the Cartier matrix"),
        ("matrix", "Cartier matrix columns"),
        ("congruence-count", "count of solvable congruence systems"),
        ("point-count", "rational points over F_(p^e)"),
        ("verify", "full verification report"),
    ]:
        sp = sub.add_parser(name, help=help_)
        _curve_args(sp)
        _format_args(sp)
        if name == "matrix":
            sp.add_argument("--dump", action="store_true", help="print each column image as a polynomial")
        elif name == "congruence-count":
            sp.add_argument("--exponent-mode", choices=["honest", "paper_literal"], default="honest")
            sp.add_argument("--index-mode", choices=["derived_basis", "paper_literal"], default="derived_basis")
            sp.add_argument("--h-range", choices=["half", "full"], default="half")
        elif name == "point-count":
            sp.add_argument("--e", type=int, default=None, help="extension degree (default 2s)")
        elif name == "verify":
            sp.add_argument("--no-points", action="store_true", help="skip the point count")

    sp = sub.add_parser("sweep", help="run a parameter grid from a JSON spec file")
    sp.add_argument("--spec", required=True)
    sp.add_argument("--output", default=None, help="append here instead of the spec's output_path / stdout")
    _format_args(sp)
    return parser


def _emit(args, data: dict, out) -> None:
    if args.fmt == "json":
        out.write(json.dumps(data) + "\n")
    elif args.fmt == "csv":
        keys = list(data)
        out.write(",".join(keys) + "\n")
        out.write(",".join("" if data[k] is None else str(data[k]) for k in keys) + "\n")
    else:
        width = max(map(len, data))
        for k, v in data.items():
            out.write(f"{k:<{width}}  {v}\n")


def _capped(args, params):
    g = engine.genus(params)
    if g > args.genus_cap:
        raise GenusCapExceeded(f"genus {g} exceeds cap {args.genus_cap}")
    return params


def _run(args, out) -> int:
    cmd = args.command
    if cmd == "sweep":
        spec = SweepSpec.load(args.spec)
        if args.fmt != "table":
            spec.format = args.fmt
        path = args.output or spec.output_path
        if path:
            path = Path(path)
            fresh = not path.exists() or path.stat().st_size == 0
            with open(path, "ab") as fh:
                write_sweep(spec, fh.write, header=fresh)
        else:
            write_sweep(spec, lambda b: out.write(b.decode()), header=True)
        for line in spec.rejected:
            print(f"rejected: {line}", file=sys.stderr)
        return EXIT_OK

    params = validate_params(args.p, args.s, args.m, strict=args.strict)
    base = {"p": params.p, "s": params.s, "m": params.m}

    if cmd == "check":
        data = dict(base, n=params.n, q=params.q, g=params.g)
        data["basis_size"] = len(enumerate_basis(params)) if params.g is not None else None
        data["paper_index_set_size"] = len(enumerate_paper_index_set(params))
        data.update({f"hyp_{k}": v for k, v in params.hypotheses.as_dict().items()})
        data["all_hypotheses"] = params.hypotheses.all_hold
        _emit(args, data, out)
        return EXIT_OK

    if cmd == "point-count":
        e = args.e if args.e is not None else 2 * params.s
        pc = count_points(params, e)
        data = dict(base, e=e, affine=pc.affine, at_infinity=pc.at_infinity, total=pc.total)
        if pc.hasse_weil_interval is not None:
            data["hasse_weil_low"], data["hasse_weil_high"] = pc.hasse_weil_interval
        if e == 2 * params.s:
            data["maximal"] = pc.total == params.q**2 + 1 + 2 * params.g * params.q
        _emit(args, data, out)
        return EXIT_OK

    if cmd == "congruence-count":
        value = engine.congruence_count(params, args.exponent_mode, args.index_mode, args.h_range)
        _emit(args, dict(base, exponent_mode=args.exponent_mode, index_mode=args.index_mode,
                         h_range=args.h_range, count=value), out)
        return EXIT_OK

    _capped(args, params)
    if cmd == "verify":
        report = engine.verify(params, points=not args.no_points)
        if args.fmt == "table":
            rec = to_record(report)
            flags = rec.pop("flags")
            rec.pop("skip_reason")
            rec.update(flags)
            _emit(args, rec, out)
        else:
            out.write(emit_report(report, args.fmt).decode())
        return EXIT_OK

    mat = engine.cartier_matrix(params)
    if cmd == "matrix":
        if args.dump:
            out.write(mat.dump() + "\n")
        else:
            for row in mat.to_array().tolist():
                out.write(" ".join(map(str, row)) + "\n")
        return EXIT_OK
    if cmd == "rank":
        key, value = "rank", engine.rank(mat)
    elif cmd == "a-number":
        key, value = "a_number", engine.a_number(params, mat)
    else:
        key, value = "p_rank", engine.p_rank(params, mat)
    if args.fmt == "table":
        out.write(f"{value}\n")
    else:
        _emit(args, dict(base, g=mat.g, **{key: value}), out)
    return EXIT_OK


def _exit_code(exc: CartierError) -> int:
    if isinstance(exc, ParameterError):
        return EXIT_USAGE
    if isinstance(exc, InternalConsistencyError):
        return EXIT_INTERNAL
    if isinstance(exc, ResourceGuardError):
        return EXIT_RESOURCE
    return EXIT_USAGE


def run_cli(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    argv = list(sys.argv[1:] if argv is None else argv)
    want_json = "--json" in argv
    try:
        args = build_parser().parse_args(argv)
        return _run(args, out)
    except CartierError as exc:
        code = _exit_code(exc)
        if want_json:
            err = {"error": type(exc).__name__, "message": str(exc), "exit_code": code}
            print(json.dumps(err), file=sys.stderr)
        else:
            print(f"error: {exc}", file=sys.stderr)
        return code


def main() -> None:
    sys.exit(run_cli())
