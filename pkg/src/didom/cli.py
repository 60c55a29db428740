"""Command-line front end.

Every subcommand streams one JSON record per check to stdout as it is
computed, then a final summary record.  Identical inputs produce
byte-identical output.  Exit codes: 0 all checks passed, 1 some check
failed, 2 usage or parse error, 3 size limit exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Callable, Optional, Sequence

from .digraph import cartesian_product, dipath, is_packing
from .errors import InfeasibleStructureError, ParseError, SizeLimitError
from .grid import (
    check_grid_lemmas,
    closed_form_witness,
    three_row_closed_form,
    total_italian_grid,
    two_row_closed_form,
)
from .harness import (
    check_parameter_relations,
    format_digraph,
    parse_digraph,
    random_digraph,
)
from .labeling import Variant, validate, weight
from .report import Record, Report
from .solver import Parameter, solve, variant_of
from .trees import verify_trees_total_equality, verify_trees_triple_bound

OnRecord = Optional[Callable[[Record], None]]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="didom",
        description="Exact domination-parameter computations on digraphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="compute one parameter of a digraph file")
    p.add_argument("file", type=Path)
    p.add_argument("parameter", choices=[x.value for x in Parameter])

    p = sub.add_parser("grid", help="total Italian domination number of a k-by-n grid")
    p.add_argument("k", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--witness", action="store_true", help="include an optimal labeling")

    p = sub.add_parser("grid-sweep", help="grid values over a range of columns")
    p.add_argument("k", type=int)
    p.add_argument("n_min", type=int)
    p.add_argument("n_max", type=int)
    p.add_argument("--csv", action="store_true", help="emit CSV instead of JSON")

    p = sub.add_parser("formula", help="closed-form value for 2- or 3-row grids")
    p.add_argument("family", choices=["p2", "p3"])
    p.add_argument("n", type=int)

    p = sub.add_parser("witness", help="explicit optimal labeling for 2- or 3-row grids")
    p.add_argument("family", choices=["p2", "p3"])
    p.add_argument("n", type=int)

    p = sub.add_parser("verify-trees", help="tree characterizations up to an order")
    p.add_argument("n_max", type=int)

    p = sub.add_parser("check-props", help="parameter relations on one or many digraphs")
    p.add_argument("file", type=Path, nargs="?")
    p.add_argument(
        "--random",
        nargs=4,
        metavar=("COUNT", "N", "P", "SEED"),
        help="sweep COUNT seeded random digraphs on N vertices with arc probability P",
    )

    p = sub.add_parser("check-lemmas", help="structural checks on grid optima")
    p.add_argument("k", type=int)
    p.add_argument("n", type=int)
    return parser


def _emit(report: Report, on_record: OnRecord, record: Record) -> None:
    report.records.append(record)
    if on_record is not None:
        on_record(record)


def _witness_json(witness):
    if isinstance(witness, frozenset):
        return sorted(witness)
    return list(witness)


def _cmd_solve(args, report: Report, on_record: OnRecord) -> None:
    text = args.file.read_text()
    d = parse_digraph(text)
    parameter = Parameter(args.parameter)
    summary = {"file": str(args.file), "parameter": parameter.value}
    try:
        result = solve(d, parameter)
    except InfeasibleStructureError as exc:
        _emit(report, on_record, Record(
            check="solve", input=summary,
            value={"error": "infeasible-structure", "detail": str(exc)},
            passed=False,
        ))
        return
    variant = variant_of(parameter)
    if variant is None:
        ok = is_packing(d, result.witness) and len(result.witness) == result.value
    else:
        kind = result.witness if isinstance(result.witness, frozenset) else tuple(result.witness)
        measured = len(kind) if isinstance(kind, frozenset) else weight(kind)
        ok = validate(d, kind, variant) and measured == result.value
    _emit(report, on_record, Record(
        check="solve", input=summary,
        value={"value": result.value, "witness": _witness_json(result.witness)},
        passed=ok,
    ))


def _cmd_grid(args, report: Report, on_record: OnRecord) -> None:
    summary = {"k": args.k, "n": args.n}
    try:
        gv = total_italian_grid(args.k, args.n, want_witness=args.witness)
    except InfeasibleStructureError as exc:
        _emit(report, on_record, Record(
            check="grid", input=summary,
            value={"error": "infeasible-structure", "detail": str(exc)},
            passed=False,
        ))
        return
    value: dict = {"value": gv.value}
    ok = True
    if args.witness:
        assert gv.witness is not None
        d = cartesian_product(dipath(args.k), dipath(args.n))
        ok = validate(d, gv.witness, Variant.TOTAL_ITALIAN) and weight(gv.witness) == gv.value
        value["witness"] = [
            [gv.witness[s * args.n + t] for t in range(args.n)] for s in range(args.k)
        ]
    _emit(report, on_record, Record(check="grid", input=summary, value=value, passed=ok))


def _cmd_grid_sweep(args, report: Report, on_record: OnRecord) -> None:
    closed = {2: two_row_closed_form, 3: three_row_closed_form}.get(args.k)
    if args.csv:
        report.metadata["csv"] = True
        print("k,n,dp,closed_form,match")
    for n in range(args.n_min, args.n_max + 1):
        gv = total_italian_grid(args.k, n)
        value: dict = {"dp": gv.value}
        passed = True
        counterexample = None
        formula = ""
        match = ""
        if closed is not None:
            cf = closed(n)
            passed = gv.value == cf
            value["closed_form"] = cf
            value["match"] = passed
            formula, match = str(cf), str(passed).lower()
            if not passed:
                # certificate: an optimal labeling whose weight disproves
                # the closed form on this grid
                witness = total_italian_grid(args.k, n, want_witness=True).witness
                d = cartesian_product(dipath(args.k), dipath(n))
                counterexample = {
                    "digraph": format_digraph(d),
                    "labeling": list(witness or ()),
                }
        record = Record(
            check="grid-sweep",
            input={"k": args.k, "n": n},
            value=value,
            passed=passed,
            counterexample=counterexample,
        )
        report.records.append(record)
        if args.csv:
            print(f"{args.k},{n},{gv.value},{formula},{match}")
        elif on_record is not None:
            on_record(record)


def _cmd_formula(args, report: Report, on_record: OnRecord) -> None:
    closed = two_row_closed_form if args.family == "p2" else three_row_closed_form
    _emit(report, on_record, Record(
        check="formula",
        input={"family": args.family, "n": args.n},
        value=closed(args.n),
    ))


def _cmd_witness(args, report: Report, on_record: OnRecord) -> None:
    k = 2 if args.family == "p2" else 3
    labels = closed_form_witness(k, args.n)
    closed = two_row_closed_form if k == 2 else three_row_closed_form
    d = cartesian_product(dipath(k), dipath(args.n))
    target = closed(args.n)
    ok = validate(d, labels, Variant.TOTAL_ITALIAN) and weight(labels) == target
    _emit(report, on_record, Record(
        check="witness",
        input={"family": args.family, "n": args.n},
        value={
            "matrix": [[labels[s * args.n + t] for t in range(args.n)] for s in range(k)],
            "weight": weight(labels),
            "target": target,
        },
        passed=ok,
    ))


def _cmd_verify_trees(args, report: Report, on_record: OnRecord) -> None:
    for sub in (
        verify_trees_total_equality(args.n_max),
        verify_trees_triple_bound(args.n_max) if args.n_max >= 3 else Report(),
    ):
        for record in sub.records:
            _emit(report, on_record, record)


def _check_props_one(d, summary: dict, report: Report, on_record: OnRecord) -> None:
    if d.has_isolated_vertex():
        _emit(report, on_record, Record(
            check="parameter-relations", input=summary,
            value={"error": "infeasible-structure", "detail": "digraph has isolated vertices"},
            passed=False,
        ))
        return
    for record in check_parameter_relations(d).records:
        record.input = {**summary, **record.input}
        _emit(report, on_record, record)


def _cmd_check_props(args, report: Report, on_record: OnRecord) -> None:
    if (args.file is None) == (args.random is None):
        print(
            "didom check-props: provide a digraph file or --random COUNT N P SEED",
            file=sys.stderr,
        )
        raise SystemExit(2)
    if args.file is not None:
        d = parse_digraph(args.file.read_text())
        _check_props_one(d, {"file": str(args.file)}, report, on_record)
        return
    count, n, p, seed = args.random
    count, n, seed = int(count), int(n), int(seed)
    p = float(p)
    report.metadata.update({"count": count, "n": n, "p": p, "seed": seed})
    for offset in range(count):
        d = random_digraph(n, p, seed + offset)
        summary = {"n": n, "p": p, "seed": seed + offset}
        if d.has_isolated_vertex():
            _emit(report, on_record, Record(
                check="parameter-relations", input=summary,
                value={"isolated_vertices": len(d.isolated_vertices())},
                passed=None,
            ))
            continue
        _check_props_one(d, summary, report, on_record)


def _cmd_check_lemmas(args, report: Report, on_record: OnRecord) -> None:
    for record in check_grid_lemmas(args.k, args.n).records:
        _emit(report, on_record, record)


_HANDLERS = {
    "solve": _cmd_solve,
    "grid": _cmd_grid,
    "grid-sweep": _cmd_grid_sweep,
    "formula": _cmd_formula,
    "witness": _cmd_witness,
    "verify-trees": _cmd_verify_trees,
    "check-props": _cmd_check_props,
    "check-lemmas": _cmd_check_lemmas,
}


def run_batch(argv: Sequence[str], on_record: OnRecord = None) -> Report:
    """Run one subcommand, collecting (and optionally streaming) records.

    Raises ParseError / SizeLimitError / SystemExit(2) like the CLI; the
    caller maps those to exit codes.  Timing lands in the report's
    ``elapsed_seconds`` attribute only, never in serialized output.
    """
    from time import perf_counter

    from .grid import MAX_GRID_ROWS
    from .solver import LABELING_ORDER_CAP, SET_ORDER_CAP
    from .trees import TREE_ORDER_CAP

    args = build_parser().parse_args(list(argv))
    report = Report(
        metadata={
            "argv": list(argv),
            "caps": {
                "labeling_order": LABELING_ORDER_CAP,
                "set_order": SET_ORDER_CAP,
                "grid_rows": MAX_GRID_ROWS,
                "tree_order": TREE_ORDER_CAP,
            },
        }
    )
    started = perf_counter()
    _HANDLERS[args.command](args, report, on_record)
    report.elapsed_seconds = perf_counter() - started
    return report


def _print_record(record: Record) -> None:
    print(json.dumps(record.to_dict(), sort_keys=True, separators=(",", ":")))


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        report = run_batch(argv, on_record=_print_record)
    except ParseError as exc:
        print(f"didom: parse error: {exc}", file=sys.stderr)
        return 2
    except SizeLimitError as exc:
        print(f"didom: size limit exceeded: {exc}", file=sys.stderr)
        return 3
    except (FileNotFoundError, ValueError) as exc:
        print(f"didom: {exc}", file=sys.stderr)
        return 2
    failed = len(report.failures)
    if not report.metadata.get("csv"):
        summary = Record(
            check="summary",
            input={"argv": argv},
            value={
                "records": len(report.records),
                "failed": failed,
                "skipped": len(report.skipped),
            },
            passed=failed == 0,
        )
        _print_record(summary)
    return 0 if failed == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
