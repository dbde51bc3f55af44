"""Command-line interface.

Exit codes: 0 for success and positive outcomes (pass, equivalent, match),
1 for definitive negative outcomes (fail, not equivalent, no match, vertex
not reflectable), 2 for inconclusive outcomes (a search bound was exceeded),
and 64 for parse or usage errors.  Vertices and indices are 1-based here,
matching the q11/q21/q22 conventions of the table.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .braiding import (
    BraidingMatrix,
    NotReflectableError,
    canonicalize,
    cartan_matrix,
    m_exponent,
    parse_matrix,
    reflect,
    rep_matrix,
)
from .catalog import (
    MatchStatus,
    Verdict,
    classify,
    format_assignment,
    row_by_id,
    verify_all,
)
from .groupoid import (
    DEFAULT_BOUND,
    Equivalence,
    Status,
    enumerate_orbit,
    enumerate_real_roots,
    orbit_to_dot,
    orbit_to_json,
    weyl_equivalent,
)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INCONCLUSIVE = 2
EXIT_USAGE = 64


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _add_matrix_arguments(sub: argparse.ArgumentParser) -> None:
    group = sub.add_mutually_exclusive_group(required=True)
    group.add_argument("--matrix", help='inline matrix, e.g. "t,1;t^-1,u(1/2)"')
    group.add_argument("--file", help="path to a JSON matrix document")


def build_parser() -> _Parser:
    parser = _Parser(prog="weylbrandt", description=__doc__.splitlines()[0])
    subs = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def command(name, help_text, *, matrix=True, vertex=False, bound=None, formats=("text", "json")):
        sub = subs.add_parser(name, help=help_text)
        if matrix:
            _add_matrix_arguments(sub)
        if vertex:
            sub.add_argument("--i", type=int, required=True, metavar="VERTEX",
                             help="vertex to reflect at (1-based)")
        if bound is not None:
            sub.add_argument("--bound", type=int, default=bound, metavar="N",
                             help=f"search bound (default {bound})")
        sub.add_argument("--format", choices=formats, default="text")
        return sub

    command("reflect", "reflect a braiding matrix at one vertex", vertex=True)
    command("mij", "print the matrix of interaction exponents")
    command("cartan", "print the generalized Cartan matrix")
    command("canon", "print the canonical twist class and its representative")
    command("orbit", "enumerate the reflection orbit of the twist class",
            bound=DEFAULT_BOUND, formats=("text", "json", "dot"))
    command("roots", "enumerate nonnegative real roots with heights",
            bound=DEFAULT_BOUND)
    equiv = command("equiv", "decide whether two braidings share an orbit",
                    bound=DEFAULT_BOUND)
    equiv.add_argument("--second", required=True, metavar="MATRIX_OR_FILE",
                       help="second matrix, inline or a JSON file path")
    command("classify", "locate a rank-2 braiding in the bundled table", bound=64)
    verify = command("verify", "verify the bundled rank-2 table", matrix=False, bound=64)
    verify.add_argument("--row", type=int, action="append", metavar="ID",
                        help="restrict to this row (repeatable)")
    return parser


def _load_matrix(args) -> BraidingMatrix:
    if args.matrix is not None:
        return parse_matrix(args.matrix)
    return BraidingMatrix.from_json(Path(args.file).read_text())


def _load_inline_or_file(text: str) -> BraidingMatrix:
    path = Path(text)
    if path.exists():
        return BraidingMatrix.from_json(path.read_text())
    return parse_matrix(text)


def _emit(doc: dict) -> None:
    print(json.dumps(doc, indent=2))


def _int_rows(rows) -> str:
    return "\n".join(" ".join(str(c) for c in row) for row in rows)


def _cmd_reflect(args) -> int:
    matrix = _load_matrix(args)
    if not 1 <= args.i <= matrix.rank:
        raise ValueError(f"vertex {args.i} out of range for rank {matrix.rank}")
    r = reflect(matrix, args.i - 1)
    if args.format == "json":
        _emit({
            "schema": 1,
            "vertex": r.vertex + 1,
            "m_row": list(r.m_row),
            "p_row": [None if j == r.vertex else str(p) for j, p in enumerate(r.p_row)],
            "s_matrix": [list(row) for row in r.s_matrix],
            "reflected": r.reflected.to_document(),
        })
        return EXIT_OK
    print(f"vertex: {r.vertex + 1}")
    print("m_row:", " ".join(str(m) for m in r.m_row))
    print("p_row:", " ".join("-" if j == r.vertex else str(p)
                             for j, p in enumerate(r.p_row)))
    print("s_matrix:")
    print(_int_rows(r.s_matrix))
    print(f"reflected: {r.reflected}")
    return EXIT_OK


def _cmd_mij(args) -> int:
    matrix = _load_matrix(args)
    n = matrix.rank
    rows = [
        [-2 if i == j else m_exponent(matrix, i, j) for j in range(n)]
        for i in range(n)
    ]
    if args.format == "json":
        _emit({"schema": 1, "m_matrix": rows})
        return EXIT_OK
    print("m_matrix:")
    print("\n".join(" ".join("undef" if m is None else str(m) for m in row)
                    for row in rows))
    return EXIT_OK


def _cmd_cartan(args) -> int:
    matrix = _load_matrix(args)
    cartan = cartan_matrix(matrix)
    if args.format == "json":
        _emit({"schema": 1, "cartan_matrix": [list(row) for row in cartan]})
        return EXIT_OK
    print("cartan_matrix:")
    print(_int_rows(cartan))
    return EXIT_OK


def _cmd_canon(args) -> int:
    matrix = _load_matrix(args)
    twist = canonicalize(matrix)
    rep = rep_matrix(twist)
    if args.format == "json":
        _emit({"schema": 1, "class": twist.to_document(), "representative": rep.to_document()})
        return EXIT_OK
    print("diagonal:", ", ".join(str(q) for q in twist.diagonal))
    if twist.products:
        print("products:", ", ".join(str(q) for q in twist.products))
    print(f"representative: {rep}")
    return EXIT_OK


def _cmd_orbit(args) -> int:
    matrix = _load_matrix(args)
    orbit = enumerate_orbit(matrix, args.bound)
    code = EXIT_OK if orbit.status is Status.COMPLETE else EXIT_INCONCLUSIVE
    if args.format == "json":
        _emit(orbit_to_json(orbit))
        return code
    if args.format == "dot":
        print(orbit_to_dot(orbit), end="")
        return code
    print(f"status: {orbit.status.value}")
    print(f"nodes: {len(orbit.nodes)}")
    for node in orbit.nodes:
        print(f"node {node.index}: {node.matrix}")
    for edge in orbit.edges:
        print(f"edge {edge.source} --s{edge.vertex + 1}-- {edge.target}")
    for node, vertex in orbit.dead_ends:
        print(f"dead_end: node {node} vertex {vertex + 1}")
    return code


def _cmd_roots(args) -> int:
    matrix = _load_matrix(args)
    result = enumerate_real_roots(matrix, args.bound)
    code = EXIT_OK if result.status is Status.COMPLETE else EXIT_INCONCLUSIVE
    if args.format == "json":
        _emit({
            "schema": 1,
            "status": result.status.value,
            "roots": [
                {"vector": list(vector), "height": height}
                for vector, height in result.roots
            ],
        })
        return code
    print(f"status: {result.status.value}")
    for vector, height in result.roots:
        shown = "infinite" if height is None else str(height)
        print(f"root {','.join(str(c) for c in vector)} height {shown}")
    return code


def _cmd_equiv(args) -> int:
    first = _load_matrix(args)
    second = _load_inline_or_file(args.second)
    outcome = weyl_equivalent(first, second, args.bound)
    if args.format == "json":
        _emit({"schema": 1, "result": outcome.value})
    else:
        print(outcome.value.replace("_", " "))
    if outcome is Equivalence.EQUIVALENT:
        return EXIT_OK
    if outcome is Equivalence.NOT_EQUIVALENT:
        return EXIT_NEGATIVE
    return EXIT_INCONCLUSIVE


def _cmd_classify(args) -> int:
    matrix = _load_matrix(args)
    result = classify(matrix, args.bound)
    if args.format == "json":
        _emit({
            "schema": 1,
            "status": result.status.value,
            "row": result.row_id,
            "assignment": None if result.assignment is None
            else {name: str(value) for name, value in result.assignment.items()},
        })
    elif result.status is MatchStatus.MATCH:
        print(f"match: row {result.row_id} {format_assignment(result.assignment)}")
    else:
        print(result.status.value.replace("_", " "))
    if result.status is MatchStatus.MATCH:
        return EXIT_OK
    if result.status is MatchStatus.NO_MATCH:
        return EXIT_NEGATIVE
    return EXIT_INCONCLUSIVE


def _cmd_verify(args) -> int:
    row_ids = None
    if args.row:
        for row_id in args.row:
            row_by_id(row_id)
        row_ids = args.row
    report = verify_all(row_ids, args.bound)
    code = {
        Verdict.PASS: EXIT_OK,
        Verdict.FAIL: EXIT_NEGATIVE,
        Verdict.INCONCLUSIVE: EXIT_INCONCLUSIVE,
    }[report.verdict]
    if args.format == "json":
        _emit({
            "schema": 1,
            "result": report.verdict.value,
            "checks": [
                {
                    "row": c.row_id,
                    "assignment": {k: str(v) for k, v in c.assignment.items()},
                    "verdict": c.verdict.value,
                    "detail": c.detail,
                    "classes": [t.label() for t in c.instantiation.classes],
                    "orbit_size": len(c.orbit.nodes),
                }
                for c in report.checks
            ],
            "overlaps": [
                {
                    "first": o.first,
                    "second": o.second,
                    "shared": [t.label() for t in o.shared],
                }
                for o in report.overlaps
            ],
        })
        return code
    for c in report.checks:
        print(f"row {c.row_id:>2} [{format_assignment(c.assignment)}]:"
              f" {c.verdict.value} ({c.detail})")
    pairs = len(report.checks) * (len(report.checks) - 1) // 2
    if report.overlaps:
        for o in report.overlaps:
            x = report.checks[o.first]
            y = report.checks[o.second]
            print(f"overlap: row {x.row_id} [{format_assignment(x.assignment)}]"
                  f" and row {y.row_id} [{format_assignment(y.assignment)}]"
                  f" share {len(o.shared)} class(es)")
    else:
        print(f"disjointness: ok ({pairs} pairs)")
    rows_checked = sorted({c.row_id for c in report.checks})
    rows_passed = [
        r for r in rows_checked
        if all(c.verdict is Verdict.PASS for c in report.checks if c.row_id == r)
    ]
    print(f"result: {report.verdict.value}"
          f" ({len(rows_passed)}/{len(rows_checked)} rows,"
          f" {len(report.checks)} instantiations)")
    return code


_HANDLERS = {
    "reflect": _cmd_reflect,
    "mij": _cmd_mij,
    "cartan": _cmd_cartan,
    "canon": _cmd_canon,
    "orbit": _cmd_orbit,
    "roots": _cmd_roots,
    "equiv": _cmd_equiv,
    "classify": _cmd_classify,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return _HANDLERS[args.command](args)
    except NotReflectableError as exc:
        print(f"error: vertex {exc.vertex + 1} is not reflectable", file=sys.stderr)
        return EXIT_NEGATIVE
    except (ValueError, IndexError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())
