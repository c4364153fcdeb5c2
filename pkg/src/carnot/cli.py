"""Command-line front end.

Subcommands compute one decision or object each and print a report, either
human-readable text (default) or JSON (``--format json``).  Reports are
byte-identical across runs on identical input.

Exit codes: 0 the computed answer is affirmative (valid algebra, current,
covered, verdict YES, cycles exist); 1 the answer is negative; 3 a verdict
is UNKNOWN; 64 usage error; 65 input data error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import catalog
from .algebra import (
    SpecDocumentError,
    StratifiedLieAlgebra,
    load_algebra,
    to_spec_document,
    validate,
)
from .currents import (
    InvariantPrecurrent,
    ce_boundary,
    invariant_boundary,
    is_current,
    restrict_by_dtheta,
    vertical_basis,
)
from .expressions import ExpressionError, format_multivector, format_vector, parse_multivector
from .rectifiability import (
    NO,
    UNKNOWN,
    YES,
    Verdict,
    find_simple_cycle,
    is_purely_unrectifiable,
    nonsimple_cycle_exists,
)
from .rumin import invariant_cycle_space, vertical_ideal, vertical_ideal_covers

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_UNKNOWN = 3
EXIT_USAGE = 64
EXIT_DATA = 65


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="carnot", description=__doc__, add_help=True)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, *, degree=False, kvector=False, theta=False, height=False):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("algebra_pos", nargs="?", metavar="ALGEBRA", default=None)
        p.add_argument("--algebra", default=None, help="catalog name, file path, or '-' for stdin")
        p.add_argument("--format", choices=("text", "json"), default="text")
        if degree:
            p.add_argument("--degree", type=int, default=None)
        if kvector:
            p.add_argument("--kvector", default=None, help="multivector expression")
        if theta:
            p.add_argument("--theta", default=None, help="vertical 1-covector expression")
        if height:
            p.add_argument("--height-bound", type=int, default=5, dest="height_bound")
        return p

    add("validate", "check the grading axioms")
    add("info", "dimensions, homogeneous dimension, vertical basis")
    add("boundary", "boundary of a k-vector", degree=True, kvector=True)
    add("is-current", "decide whether an invariant precurrent is a current", degree=True, kvector=True)
    add("restrict-dtheta", "contract a horizontal k-vector against d(theta)", degree=True, kvector=True, theta=True)
    add("cycles", "basis of the invariant cycle space", degree=True)
    add("rumin", "vertical ideal of k-forms and its coverage", degree=True)
    add("simple-cycle", "search for a simple invariant cycle", degree=True, height=True)
    add("nonsimple-cycle", "cycles exist but none is simple?", degree=True, height=True)
    add("rectifiable", "decide pure k-unrectifiability", degree=True, height=True)

    p = sub.add_parser("catalog", help="instantiate a named algebra")
    p.add_argument("name")
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--emit-spec", action="store_true", dest="emit_spec")
    p.add_argument("--format", choices=("text", "json"), default="text")
    return parser


# -- algebra resolution ------------------------------------------------------


def _parse_catalog_ref(ref: str):
    name, params = ref, ()
    if "(" in ref:
        if not ref.endswith(")"):
            return None
        name, _, rest = ref.partition("(")
        body = rest[:-1]
        try:
            params = tuple(int(p) for p in body.split(",")) if body else ()
        except ValueError:
            return None
    if name not in catalog.CATALOG:
        return None
    return name, params


def _resolve_algebra(args, stdin) -> tuple[StratifiedLieAlgebra, str]:
    if args.algebra_pos is not None and args.algebra is not None:
        raise UsageError("specify the algebra once (positionally or via --algebra)")
    ref = args.algebra_pos if args.algebra_pos is not None else args.algebra
    if ref is None:
        raise UsageError("an algebra is required (catalog name, path, or '-')")
    if ref == "-":
        alg = load_algebra(stdin.read())
        return alg, alg.name
    if os.path.exists(ref):
        with open(ref, "r", encoding="utf-8") as fh:
            alg = load_algebra(fh.read())
        return alg, alg.name
    parsed = _parse_catalog_ref(ref)
    if parsed is None:
        raise SpecDocumentError(
            f"unknown algebra {ref!r}: not a catalog name, file, or '-'"
        )
    name, params = parsed
    alg = catalog.build(name, *params)
    return alg, alg.name


def _parse_kvector(args, alg) -> InvariantPrecurrent:
    if args.kvector is None:
        raise UsageError("--kvector is required")
    m = parse_multivector(args.kvector, alg)
    if getattr(args, "degree", None) is not None and args.degree != m.degree:
        raise UsageError(
            f"--degree {args.degree} does not match expression degree {m.degree}"
        )
    return InvariantPrecurrent(alg, m)


def _require_degree(args) -> int:
    if args.degree is None:
        raise UsageError("--degree is required")
    return args.degree


# -- report rendering --------------------------------------------------------


def _jsonable(value):
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def _text_lines(value, key="", indent=""):
    label = f"{indent}{key}: " if key else indent
    if isinstance(value, dict):
        if not value:
            return [f"{label}{{}}"] if key else []
        lines = [f"{indent}{key}:"] if key else []
        for k, v in value.items():
            lines.extend(_text_lines(v, k, indent + ("  " if key else "")))
        return lines
    if isinstance(value, (list, tuple)):
        if not value:
            return [f"{label}[]"]
        if all(not isinstance(v, (dict, list, tuple)) for v in value):
            return [label + ", ".join(_scalar(v) for v in value)]
        lines = [f"{indent}{key}:"] if key else []
        for v in value:
            sub = _text_lines(v, "", indent + "    ")
            if sub:
                sub[0] = indent + "  - " + sub[0].lstrip()
            lines.extend(sub)
        return lines
    return [label + _scalar(value)]


def _scalar(value) -> str:
    if value is None:
        return "null"
    if value is True:
        return "true"
    if value is False:
        return "false"
    return str(value)


def _emit(report: dict, fmt: str, stdout) -> None:
    report = _jsonable(report)
    if fmt == "json":
        print(json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False), file=stdout)
    else:
        for line in _text_lines(report):
            print(line, file=stdout)


def _report(command, algebra_name, inputs, result, certificates=None) -> dict:
    report = {
        "command": command,
        "algebra": algebra_name,
        "inputs": inputs,
        "result": result,
    }
    if certificates:
        report["certificates"] = certificates
    return report


def _verdict_payload(v: Verdict, alg) -> tuple[dict, list]:
    result = {"status": v.status, "reason": v.reason}
    if v.witness is not None:
        result["witness"] = [format_vector(u, alg) for u in v.witness]
    if v.cycle is not None:
        result["cycle"] = format_multivector(v.cycle, alg)
    certs = [v.certificate] if v.certificate else []
    return result, certs


def _verdict_exit(v: Verdict) -> int:
    return {YES: EXIT_OK, NO: EXIT_NEGATIVE, UNKNOWN: EXIT_UNKNOWN}[v.status]


# -- command handlers --------------------------------------------------------


def _cmd_validate(args, alg, name):
    report = validate(alg)
    payload = {
        "valid": report.ok,
        "violations": [
            {"axiom": v.axiom, "witness": list(v.witness), "detail": v.detail}
            for v in report.violations
        ],
    }
    return (
        EXIT_OK if report.ok else EXIT_NEGATIVE,
        _report("validate", name, {}, payload),
    )


def _cmd_info(args, alg, name):
    payload = {
        "layer_dims": list(alg.layer_dims),
        "layers": [
            [alg.label(i) for i in alg.layer_range(j)]
            for j in range(1, alg.step + 1)
        ],
        "step": alg.step,
        "total_dim": alg.total_dim,
        "horizontal_dim": alg.horizontal_dim,
        "homogeneous_dimension": alg.homogeneous_dimension,
        "vertical_basis": [
            format_multivector(th, alg) for th in vertical_basis(alg)
        ],
    }
    return EXIT_OK, _report("info", name, {}, payload)


def _cmd_boundary(args, alg, name):
    if args.kvector is None:
        raise UsageError("--kvector is required")
    m = parse_multivector(args.kvector, alg)
    if args.degree is not None and args.degree != m.degree:
        raise UsageError(
            f"--degree {args.degree} does not match expression degree {m.degree}"
        )
    b = ce_boundary(alg, m)
    payload = {
        "degree": m.degree,
        "boundary": format_multivector(b, alg),
        "is_zero": b.is_zero(),
    }
    return (
        EXIT_OK if b.is_zero() else EXIT_NEGATIVE,
        _report("boundary", name, {"kvector": args.kvector}, payload),
    )


def _cmd_is_current(args, alg, name):
    T = _parse_kvector(args, alg)
    b = invariant_boundary(T)
    current = is_current(T)
    payload = {
        "degree": T.degree,
        "is_current": current,
        "boundary": format_multivector(b.vector, alg),
    }
    return (
        EXIT_OK if current else EXIT_NEGATIVE,
        _report("is-current", name, {"kvector": args.kvector}, payload),
    )


def _cmd_restrict(args, alg, name):
    T = _parse_kvector(args, alg)
    if args.theta is not None:
        thetas = [parse_multivector(args.theta, alg, covector=True)]
    else:
        thetas = vertical_basis(alg)
    entries = []
    all_zero = True
    for th in thetas:
        r = restrict_by_dtheta(T, th)
        all_zero = all_zero and r.is_zero()
        entries.append(
            {
                "theta": format_multivector(th, alg),
                "restriction": format_multivector(r, alg),
                "is_zero": r.is_zero(),
            }
        )
    payload = {"degree": T.degree, "per_theta": entries, "all_zero": all_zero}
    inputs = {"kvector": args.kvector}
    if args.theta is not None:
        inputs["theta"] = args.theta
    return (
        EXIT_OK if all_zero else EXIT_NEGATIVE,
        _report("restrict-dtheta", name, inputs, payload),
    )


def _cmd_cycles(args, alg, name):
    k = _require_degree(args)
    sub = invariant_cycle_space(alg, k)
    payload = {
        "degree": k,
        "dimension": sub.dimension,
        "ambient_dimension": sub.ambient_dimension,
        "basis": [format_multivector(sub.element(i), alg) for i in range(sub.dimension)],
    }
    return (
        EXIT_OK if sub.dimension > 0 else EXIT_NEGATIVE,
        _report("cycles", name, {"degree": k}, payload),
    )


def _cmd_rumin(args, alg, name):
    k = _require_degree(args)
    sub = vertical_ideal(alg, k)
    covers, codim = vertical_ideal_covers(alg, k)
    payload = {
        "degree": k,
        "dimension": sub.dimension,
        "ambient_dimension": sub.ambient_dimension,
        "covers": covers,
        "codimension": codim,
        "basis": [format_multivector(sub.element(i), alg) for i in range(sub.dimension)],
    }
    return (
        EXIT_OK if covers else EXIT_NEGATIVE,
        _report("rumin", name, {"degree": k}, payload),
    )


def _cmd_simple_cycle(args, alg, name):
    k = _require_degree(args)
    v = find_simple_cycle(alg, k, args.height_bound)
    result, certs = _verdict_payload(v, alg)
    inputs = {"degree": k, "height_bound": args.height_bound}
    return _verdict_exit(v), _report("simple-cycle", name, inputs, result, certs)


def _cmd_nonsimple_cycle(args, alg, name):
    k = _require_degree(args)
    v = nonsimple_cycle_exists(alg, k)
    result, certs = _verdict_payload(v, alg)
    inputs = {"degree": k, "height_bound": args.height_bound}
    return _verdict_exit(v), _report("nonsimple-cycle", name, inputs, result, certs)


def _cmd_rectifiable(args, alg, name):
    k = _require_degree(args)
    v = is_purely_unrectifiable(alg, k)
    result, certs = _verdict_payload(v, alg)
    inputs = {"degree": k, "height_bound": args.height_bound}
    return _verdict_exit(v), _report("rectifiable", name, inputs, result, certs)


_HANDLERS = {
    "validate": _cmd_validate,
    "info": _cmd_info,
    "boundary": _cmd_boundary,
    "is-current": _cmd_is_current,
    "restrict-dtheta": _cmd_restrict,
    "cycles": _cmd_cycles,
    "rumin": _cmd_rumin,
    "simple-cycle": _cmd_simple_cycle,
    "nonsimple-cycle": _cmd_nonsimple_cycle,
    "rectifiable": _cmd_rectifiable,
}


def run(argv=None, *, stdin=None, stdout=None, stderr=None) -> int:
    """Parse arguments, dispatch, print the report; returns the exit code."""
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_USAGE

    try:
        if args.command == "catalog":
            try:
                alg = catalog.build(args.name, *args.params)
            except KeyError as exc:
                print(f"error: {exc.args[0]}", file=stderr)
                return EXIT_DATA
            if args.emit_spec:
                doc = to_spec_document(alg)
                print(json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False), file=stdout)
                return EXIT_OK
            code, report = _cmd_info(args, alg, alg.name)
            report["command"] = "catalog"
            _emit(report, args.format, stdout)
            return code

        alg, name = _resolve_algebra(args, stdin)
        code, report = _HANDLERS[args.command](args, alg, name)
        _emit(report, args.format, stdout)
        return code
    except UsageError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_USAGE
    except (ExpressionError, SpecDocumentError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_DATA
    except ValueError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_DATA


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
