"""Command-line front end.

Subcommands::

    les-solve       ranks forced in an exact sequence (dims or --g)
    dims            Hodge / Hochschild / deformation dimensions for --g
    ec-analyze      point count, trace, p-rank, j, automorphisms of p a b
    ec-derived-eq   derived equivalence of two curves p a1 b1 a2 b2
    isom-check      isometry test for one matrix over --ring
    isom-enumerate  bounded enumeration of isometric matrices
    kernel-report   kernel of Aut D(E) -> U(E x E^) as counting data

Batch files (``--input``) are line oriented; ``#`` starts a comment and each
non-blank line holds the positional arguments of one item.  Exit codes: 0 ok,
2 bad input, 3 infeasible result under ``--strict``, 4 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, TextIO

from . import report
from .dims import dim_report, graph_les, graph_les_notes, match_graph_les
from .ec_arith import analyze, derived_equivalence_notes, derived_equivalent, j_invariant, parse_curve
from .errors import BadInput, ResourceLimit, WorkbenchError
from .exact_seq import build_sequence, solve_ranks
from .isometry import EndMatrix, EndRing, enumerate_isometric, is_isometric, kernel_report, tilde

EXIT_OK = 0
EXIT_BAD_INPUT = 2
EXIT_INFEASIBLE = 3
EXIT_RESOURCE = 4

SUBCOMMANDS = (
    "les-solve",
    "dims",
    "ec-analyze",
    "ec-derived-eq",
    "isom-check",
    "isom-enumerate",
    "kernel-report",
)


class UnknownSubcommand(BadInput):
    field = "subcommand"


@dataclass
class RunConfig:
    subcommand: str
    args: list[str] = field(default_factory=list)
    input_path: str | None = None
    output_format: str = "table"
    g: int | None = None
    height: int | None = None
    use_paper_display: bool = False
    characteristic: int | None = None
    ring: str = "Z"
    left: str = "closed"
    right: str = "open"
    strict: bool = False


def _int(token: str, name: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise BadInput(f"expected an integer, got {token!r}", field=name) from None


def _ints(tokens: list[str], names: list[str]) -> list[int]:
    if len(tokens) != len(names):
        raise BadInput(
            f"expected {len(names)} integers ({' '.join(names)}), got {len(tokens)}",
            field=" ".join(names),
        )
    return [_int(t, n) for t, n in zip(tokens, names)]


def _split(text: str) -> list[str]:
    return text.replace(",", " ").split()


def _items(config: RunConfig) -> list[tuple[int | None, list[str]]]:
    """(line number, tokens) per batch item; a single item from argv otherwise."""
    if config.input_path is None:
        return [(None, _split(" ".join(config.args)))]
    try:
        text = Path(config.input_path).read_text()
    except OSError as exc:
        raise BadInput(f"cannot read {config.input_path}: {exc}", field="input") from None
    out = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if line:
            out.append((lineno, _split(line)))
    return out


def _end(value: str, name: str) -> str:
    if value not in ("open", "closed"):
        raise BadInput(f"expected open or closed, got {value!r}", field=name)
    return value


# -- handlers: tokens -> record --------------------------------------------


def _les_solve(tokens: list[str], cfg: RunConfig) -> dict:
    dims, g = [], cfg.g
    left, right, paper = cfg.left, cfg.right, cfg.use_paper_display
    for tok in tokens:
        key, sep, val = tok.partition("=")
        if not sep:
            dims.append(_int(tok, f"dims[{len(dims)}]"))
        elif key == "left":
            left = _end(val, "left")
        elif key == "right":
            right = _end(val, "right")
        elif key == "g":
            g = _int(val, "g")
        elif key == "display":
            if val not in ("paper", "normal"):
                raise BadInput(f"display must be paper or normal, got {val!r}", field="display")
            paper = val == "paper"
        else:
            raise BadInput(f"unknown option {key!r}", field=key)
    if dims and g is not None:
        raise BadInput("give either dims or g, not both", field="g")
    if g is not None:
        spec = graph_les(g, paper)
    elif dims:
        spec = build_sequence(dims, left == "closed", right == "open")
    else:
        raise BadInput("no dims given", field="dims")
    match = match_graph_les(spec)
    if match is not None and g is None:
        g, paper = match
        spec = graph_les(g, paper)
    sol = solve_ranks(spec)
    if match is not None or g is not None:
        sol.notes.extend(graph_les_notes(g, paper, sol))
    rec = report.rank_solution_record(sol)
    if g is not None:
        rec["graph_les"] = {"g": g, "use_paper_display": paper}
    return rec


def _dims(tokens: list[str], cfg: RunConfig) -> dict:
    if tokens:
        (g,) = _ints(tokens[:1], ["g"])
        char = _int(tokens[1], "char") if len(tokens) > 1 else cfg.characteristic
        if len(tokens) > 2:
            raise BadInput("expected: g [char]", field="dims")
    elif cfg.g is not None:
        g, char = cfg.g, cfg.characteristic
    else:
        raise BadInput("--g is required", field="g")
    return report.dim_report_record(dim_report(g, char))


def _ec_analyze(tokens: list[str], cfg: RunConfig) -> dict:
    return report.analysis_record(analyze(parse_curve(*_ints(tokens, ["p", "a", "b"]))))


def _ec_derived_eq(tokens: list[str], cfg: RunConfig) -> dict:
    p, a1, b1, a2, b2 = _ints(tokens, ["p", "a1", "b1", "a2", "b2"])
    e, f = parse_curve(p, a1, b1), parse_curve(p, a2, b2)
    return {
        "first": report.curve_record(e),
        "second": report.curve_record(f),
        "j_first": j_invariant(e),
        "j_second": j_invariant(f),
        "derived_equivalent": derived_equivalent(e, f),
        "notes": derived_equivalence_notes(e, f),
    }


def _isom_check(tokens: list[str], cfg: RunConfig) -> dict:
    ring_text = cfg.ring
    if tokens and not tokens[0].lstrip("-").isdigit():
        ring_text, tokens = tokens[0], tokens[1:]
    ring = EndRing.parse(ring_text)
    f = EndMatrix.from_ints(ring, [_int(t, f"matrix[{i}]") for i, t in enumerate(tokens)])
    return {
        "matrix": report.matrix_record(f),
        "tilde": report.matrix_record(tilde(f)),
        "isometric": is_isometric(f),
        "notes": [],
    }


def _isom_enumerate(tokens: list[str], cfg: RunConfig) -> dict:
    ring_text, height = cfg.ring, cfg.height
    for tok in tokens:
        if tok.lstrip("-").isdigit():
            height = _int(tok, "height")
        else:
            ring_text = tok
    if height is None:
        raise BadInput("--height is required", field="height")
    ring = EndRing.parse(ring_text)
    found = enumerate_isometric(ring, height)
    return {
        "ring": str(ring),
        "height": height,
        "count": len(found),
        "matrices": [report.matrix_record(f) for f in found],
        "notes": [],
    }


def _kernel_report(tokens: list[str], cfg: RunConfig) -> dict:
    curve = parse_curve(*_ints(tokens, ["p", "a", "b"]))
    return report.kernel_record(curve, kernel_report(curve))


HANDLERS: dict[str, tuple[Callable[[list[str], RunConfig], dict], Callable[[dict], list[str]]]] = {
    "les-solve": (_les_solve, report.rank_solution_table),
    "dims": (_dims, report.dim_report_table),
    "ec-analyze": (_ec_analyze, report.analysis_table),
    "ec-derived-eq": (_ec_derived_eq, report.derived_eq_table),
    "isom-check": (_isom_check, report.isometric_table),
    "isom-enumerate": (_isom_enumerate, report.enumerate_table),
    "kernel-report": (_kernel_report, report.kernel_table),
}


def _describe(exc: WorkbenchError, lineno: int | None) -> str:
    where = f"line {lineno}: " if lineno is not None else ""
    fld = f"field {exc.field}: " if exc.field else ""
    return f"error: {where}{fld}{exc}"


def run(config: RunConfig, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        if config.subcommand not in HANDLERS:
            raise UnknownSubcommand(f"unknown subcommand {config.subcommand!r}")
        if config.output_format not in ("table", "record"):
            raise BadInput(f"unknown format {config.output_format!r}", field="format")
        handler, table = HANDLERS[config.subcommand]
        items = _items(config)
    except WorkbenchError as exc:
        print(_describe(exc, None), file=err)
        return EXIT_BAD_INPUT

    results = []
    for lineno, tokens in items:
        try:
            results.append(handler(tokens, config))
        except WorkbenchError as exc:
            print(_describe(exc, lineno), file=err)
            return EXIT_RESOURCE if isinstance(exc, ResourceLimit) else EXIT_BAD_INPUT

    if config.output_format == "record":
        out.write(report.dump_record(config.subcommand, results))
    else:
        for i, rec in enumerate(results):
            if i:
                out.write("\n")
            out.write("\n".join(table(rec)) + "\n")

    if config.strict and any(r.get("feasible") is False for r in results):
        return EXIT_INFEASIBLE
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="avlift", description=__doc__.split("\n\n")[0]
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--input", dest="input_path", help="line-oriented batch file")
        p.add_argument("--format", dest="output_format", choices=("table", "record"), default="table")

    p = sub.add_parser("les-solve", help="forced ranks in an exact sequence")
    p.add_argument("args", nargs="*", help="dimensions, e.g. 1 2 1 1 1 or 1,2,1,1,1")
    p.add_argument("--g", type=int, help="solve the graph deformation sequence for this g")
    p.add_argument("--paper-display", dest="use_paper_display", action="store_true",
                   help="use 2g instead of g^2 for H1(N)")
    p.add_argument("--left", choices=("open", "closed"), default="closed")
    p.add_argument("--right", choices=("open", "closed"), default="open")
    p.add_argument("--strict", action="store_true", help="exit 3 when infeasible")
    common(p)

    p = sub.add_parser("dims", help="dimension report for an abelian variety")
    p.add_argument("args", nargs="*", help=argparse.SUPPRESS)
    p.add_argument("--g", type=int)
    p.add_argument("--char", dest="characteristic", type=int)
    common(p)

    p = sub.add_parser("ec-analyze", help="invariants of y^2 = x^3 + ax + b over F_p")
    p.add_argument("args", nargs="*", metavar="p a b")
    common(p)

    p = sub.add_parser("ec-derived-eq", help="are two curves derived equivalent")
    p.add_argument("args", nargs="*", metavar="p a1 b1 a2 b2")
    common(p)

    p = sub.add_parser("isom-check", help="isometry test for one matrix")
    p.add_argument("args", nargs="*", metavar="int", help="4 integers over Z, 8 over an order")
    p.add_argument("--ring", default="Z", help="Z, Z[i], Z[w] or Q(b,c)")
    common(p)

    p = sub.add_parser("isom-enumerate", help="isometric matrices of bounded height")
    p.add_argument("args", nargs="*", help=argparse.SUPPRESS)
    p.add_argument("--ring", default="Z")
    p.add_argument("--height", type=int)
    common(p)

    p = sub.add_parser("kernel-report", help="kernel of Aut D(E) -> U(E x E^)")
    p.add_argument("args", nargs="*", metavar="p a b")
    common(p)
    return parser


def main(argv: list[str] | None = None) -> int:
    ns = build_parser().parse_args(argv)
    config = RunConfig(**{k: v for k, v in vars(ns).items() if v is not None})
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
