"""Digraph text interchange, seeded random digraphs, and the
parameter-relation checker used by the property sweeps.

Text format: a header line ``n m`` (order and size), followed by m arc
lines ``u v`` (0-based tail and head, whitespace-separated).  Lines
starting with ``#`` are comments; blank lines are ignored.
"""

from __future__ import annotations

from typing import Optional

from .digraph import Digraph, is_packing
from .errors import InfeasibleStructureError, ParseError
from .report import Record, Report
from .solver import Parameter, enumerate_optima, solve

_MASK64 = (1 << 64) - 1


def parse_digraph(text: str) -> Digraph:
    """Parse the text interchange format, reporting errors by line number."""
    entries = []  # (line number, tokens)
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        entries.append((lineno, line.split()))

    if not entries:
        raise ParseError("missing header line", 1)
    header_line, header = entries[0]
    if len(header) != 2:
        raise ParseError(f"header must be 'n m', got {' '.join(header)!r}", header_line)
    try:
        order, size = int(header[0]), int(header[1])
    except ValueError:
        raise ParseError(f"header must be two integers, got {' '.join(header)!r}", header_line)
    if order < 0 or size < 0:
        raise ParseError("order and size must be nonnegative", header_line)

    arcs: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, tokens in entries[1:]:
        if len(arcs) == size:
            raise ParseError(f"unexpected extra line after {size} arcs", lineno)
        if len(tokens) != 2:
            raise ParseError(f"arc line must be 'u v', got {' '.join(tokens)!r}", lineno)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ParseError(f"arc line must be two integers, got {' '.join(tokens)!r}", lineno)
        if not (0 <= u < order and 0 <= v < order):
            raise ParseError(f"arc ({u}, {v}) leaves the vertex range 0..{order - 1}", lineno)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno)
        if (u, v) in seen:
            raise ParseError(f"duplicate arc ({u}, {v})", lineno)
        seen.add((u, v))
        arcs.append((u, v))
    if len(arcs) != size:
        last = entries[-1][0] if entries else 1
        raise ParseError(f"header promises {size} arcs, found {len(arcs)}", last)
    return Digraph(order, arcs)


def format_digraph(d: Digraph) -> str:
    """Serialize to the text format with arcs sorted; parses back to an
    equal digraph."""
    lines = [f"{d.order} {d.size}"]
    lines.extend(f"{u} {v}" for u, v in sorted(d.arcs))
    return "\n".join(lines) + "\n"


def _splitmix64(state: int) -> tuple[int, int]:
    state = (state + 0x9E3779B97F4A7C15) & _MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return state, z ^ (z >> 31)


def random_digraph(n: int, p: float, seed: int) -> Digraph:
    """Digraph on n vertices with each ordered pair (u, v), u != v, made
    an arc independently with probability p.

    The generator is SplitMix64 over the pairs in row-major order, fixed
    here permanently: equal (n, p, seed) give bit-identical digraphs on
    any platform or rebuild.
    """
    if n < 1:
        raise ValueError("random digraph needs at least one vertex")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"arc probability must lie in [0, 1], got {p}")
    threshold = int(p * 2**64)
    state = seed & _MASK64
    arcs = []
    for u in range(n):
        for v in range(n):
            if u == v:
                continue
            state, draw = _splitmix64(state)
            if draw < threshold:
                arcs.append((u, v))
    return Digraph(n, arcs)


# ---------------------------------------------------------------------------
# parameter relations (forward implications only)
# ---------------------------------------------------------------------------

_CHAIN = (
    ("gamma <= gamma_i", Parameter.DOMINATION, Parameter.ITALIAN_DOMINATION),
    ("gamma_i <= gamma_r", Parameter.ITALIAN_DOMINATION, Parameter.ROMAN_DOMINATION),
    ("gamma_r <= gamma_tr", Parameter.ROMAN_DOMINATION, Parameter.TOTAL_ROMAN_DOMINATION),
    ("gamma_i <= gamma_ti", Parameter.ITALIAN_DOMINATION, Parameter.TOTAL_ITALIAN_DOMINATION),
    ("gamma_ti <= gamma_tr", Parameter.TOTAL_ITALIAN_DOMINATION, Parameter.TOTAL_ROMAN_DOMINATION),
    ("gamma_t <= gamma_ti", Parameter.TOTAL_DOMINATION, Parameter.TOTAL_ITALIAN_DOMINATION),
)


def check_parameter_relations(d: Digraph, *, max_order: Optional[int] = None) -> Report:
    """Evaluate the known relations between domination parameters on one
    digraph without isolated vertices.

    Records, in order: the inequality chain (including the triple bound
    against the domination number); if the total and total Italian
    numbers agree, no optimal total Italian labeling uses a 2; if some
    optimal total Italian labeling avoids 2s, the total 2-domination
    number agrees; the combination of those two; and if the total
    Italian number is triple the domination number, every minimum
    dominating set is a strong packing.  Converses are not asserted.
    """
    if d.has_isolated_vertex():
        raise InfeasibleStructureError(
            "parameter relations are only defined without isolated vertices"
        )
    values = {
        p.value: solve(d, p, max_order=max_order).value
        for p in (
            Parameter.DOMINATION,
            Parameter.TOTAL_DOMINATION,
            Parameter.ROMAN_DOMINATION,
            Parameter.ITALIAN_DOMINATION,
            Parameter.TOTAL_ROMAN_DOMINATION,
            Parameter.TOTAL_ITALIAN_DOMINATION,
            Parameter.TOTAL_TWO_DOMINATION,
        )
    }
    summary = {"order": d.order, "size": d.size}
    counterexample = {"digraph": format_digraph(d), "values": values}
    report = Report(metadata={"order": d.order, "size": d.size})

    chain_ok = all(values[lo.value] <= values[hi.value] for _, lo, hi in _CHAIN)
    chain_ok = chain_ok and values["gamma_tr"] <= 3 * values["gamma"]
    report.records.append(
        Record(
            check="inequality-chain",
            input=summary,
            value=values,
            passed=chain_ok,
            counterexample=None if chain_ok else counterexample,
        )
    )

    ti_optima = enumerate_optima(
        d, Parameter.TOTAL_ITALIAN_DOMINATION, max_order=max_order
    )
    totals_agree = values["gamma_t"] == values["gamma_ti"]
    no_twos = [f for f in ti_optima if 2 not in f]

    offender = next((f for f in ti_optima if 2 in f), None) if totals_agree else None
    ok = not totals_agree or len(no_twos) == len(ti_optima)
    report.records.append(
        Record(
            check="total-equality-forbids-twos",
            input=summary,
            value={"applicable": totals_agree, "optima": len(ti_optima)},
            passed=ok,
            counterexample=(
                None if ok else {**counterexample, "labeling": list(offender or ())}
            ),
        )
    )

    applicable = bool(no_twos)
    ok = not applicable or values["gamma_ti"] == values["gamma_2t"]
    report.records.append(
        Record(
            check="two-free-optimum-matches-total-2-domination",
            input=summary,
            value={"applicable": applicable},
            passed=ok,
            counterexample=None if ok else {**counterexample, "labeling": list(no_twos[0])},
        )
    )

    ok = not totals_agree or values["gamma_t"] == values["gamma_2t"]
    report.records.append(
        Record(
            check="total-equality-matches-total-2-domination",
            input=summary,
            value={"applicable": totals_agree},
            passed=ok,
            counterexample=None if ok else counterexample,
        )
    )

    triple = values["gamma_ti"] == 3 * values["gamma"]
    offender = None
    if triple:
        for members in enumerate_optima(d, Parameter.DOMINATION, max_order=max_order):
            if not is_packing(d, members, strong=True):
                offender = members
                break
    ok = offender is None
    report.records.append(
        Record(
            check="triple-equality-forces-strong-packing",
            input=summary,
            value={"applicable": triple},
            passed=ok,
            counterexample=(
                None if ok else {**counterexample, "members": sorted(offender)}
            ),
        )
    )
    return report
