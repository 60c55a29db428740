"""Exact computation of domination parameters by bounded exhaustive search.

Labeling parameters run a depth-first branch and bound over label vectors
in vertex order; set parameters sweep subsets by cardinality (increasing
for minimization, decreasing from an upper bound for the packing number).
Both are exact and refuse inputs above a configurable order cap rather
than approximate.

Witnesses and enumerations are deterministic: labelings are emitted in
lexicographic order of the label vector, vertex sets in lexicographic
order of their 0/1 membership vector.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Callable, FrozenSet, Optional, Tuple, Union

from .digraph import Digraph
from .errors import InfeasibleStructureError, SizeLimitError
from .labeling import Variant

#: Default order caps for exhaustive search.
LABELING_ORDER_CAP = 16
SET_ORDER_CAP = 20

Witness = Union[Tuple[int, ...], FrozenSet[int]]


class Parameter(enum.Enum):
    """Every parameter the solver computes; values are the CLI spellings."""

    DOMINATION = "gamma"
    TOTAL_DOMINATION = "gamma_t"
    ROMAN_DOMINATION = "gamma_r"
    ITALIAN_DOMINATION = "gamma_i"
    TOTAL_ROMAN_DOMINATION = "gamma_tr"
    TOTAL_ITALIAN_DOMINATION = "gamma_ti"
    TOTAL_TWO_DOMINATION = "gamma_2t"
    PACKING = "rho"


_LABELING_PARAMS = {
    # parameter -> (roman zero-condition?, totality required?)
    Parameter.ROMAN_DOMINATION: (True, False),
    Parameter.ITALIAN_DOMINATION: (False, False),
    Parameter.TOTAL_ROMAN_DOMINATION: (True, True),
    Parameter.TOTAL_ITALIAN_DOMINATION: (False, True),
}

_SET_PARAMS = (
    Parameter.DOMINATION,
    Parameter.TOTAL_DOMINATION,
    Parameter.TOTAL_TWO_DOMINATION,
    Parameter.PACKING,
)

_TOTAL_PARAMS = (
    Parameter.TOTAL_DOMINATION,
    Parameter.TOTAL_ROMAN_DOMINATION,
    Parameter.TOTAL_ITALIAN_DOMINATION,
    Parameter.TOTAL_TWO_DOMINATION,
)

_VARIANT_OF = {
    Parameter.DOMINATION: Variant.DOMINATING_SET,
    Parameter.TOTAL_DOMINATION: Variant.TOTAL_DOMINATING_SET,
    Parameter.ROMAN_DOMINATION: Variant.ROMAN,
    Parameter.ITALIAN_DOMINATION: Variant.ITALIAN,
    Parameter.TOTAL_ROMAN_DOMINATION: Variant.TOTAL_ROMAN,
    Parameter.TOTAL_ITALIAN_DOMINATION: Variant.TOTAL_ITALIAN,
    Parameter.TOTAL_TWO_DOMINATION: Variant.TOTAL_TWO_DOMINATING_SET,
}


def variant_of(parameter: Parameter) -> Optional[Variant]:
    """The validation variant matching a parameter (None for the packing
    number, which is checked with :func:`didom.digraph.is_packing`)."""
    return _VARIANT_OF.get(parameter)


@dataclass(frozen=True)
class SolveResult:
    value: int
    witness: Witness


def _guard(d: Digraph, parameter: Parameter, max_order: Optional[int]) -> None:
    if d.order < 1:
        raise ValueError("solver needs at least one vertex")
    if max_order is None:
        max_order = SET_ORDER_CAP if parameter in _SET_PARAMS else LABELING_ORDER_CAP
    if d.order > max_order:
        raise SizeLimitError(
            f"order {d.order} exceeds the exhaustive-search cap {max_order} "
            f"for {parameter.value}"
        )
    if parameter in _TOTAL_PARAMS and d.has_isolated_vertex():
        raise InfeasibleStructureError(
            f"{parameter.value} is undefined on digraphs with isolated vertices"
        )


# ---------------------------------------------------------------------------
# labeling parameters: DFS over label vectors with incremental pruning
# ---------------------------------------------------------------------------


def _labeling_context(d: Digraph, total: bool):
    """Precompute, per vertex index i, the conditions that become fully
    decided once vertices 0..i are labeled."""
    n = d.order
    in_nbrs = [d.in_neighbors(v) for v in range(n)]
    adj = [d.all_neighbors(v) for v in range(n)]
    zero_due: list[list[int]] = [[] for _ in range(n)]
    for u in range(n):
        zero_due[max(in_nbrs[u] + (u,))].append(u)
    total_due: list[list[int]] = [[] for _ in range(n)]
    if total:
        for u in range(n):
            total_due[max(adj[u] + (u,))].append(u)
    return in_nbrs, adj, zero_due, total_due


def _zero_supported(labels: list[int], nbrs: tuple[int, ...], roman: bool) -> bool:
    if roman:
        return any(labels[w] == 2 for w in nbrs)
    positives = 0
    for w in nbrs:
        lw = labels[w]
        if lw == 2:
            return True
        if lw:
            positives += 1
    return positives >= 2


def _labeling_minimum(d: Digraph, roman: bool, total: bool) -> SolveResult:
    """Branch and bound in lexicographic label order.

    The all-ones labeling is always feasible here, so the optimum is at
    most ``order``; starting the incumbent just above it guarantees the
    first optimum reached -- hence the lexicographically smallest -- is
    the one returned.
    """
    n = d.order
    in_nbrs, adj, zero_due, total_due = _labeling_context(d, total)
    labels = [0] * n
    best_value = n + 1
    best_labels: Optional[tuple[int, ...]] = None

    def consistent_at(i: int) -> bool:
        for u in zero_due[i]:
            if labels[u] == 0 and not _zero_supported(labels, in_nbrs[u], roman):
                return False
        if total:
            for u in total_due[i]:
                if labels[u] and not any(labels[w] for w in adj[u]):
                    return False
        return True

    def dfs(i: int, w: int) -> None:
        nonlocal best_value, best_labels
        if i == n:
            best_value = w
            best_labels = tuple(labels)
            return
        for val in (0, 1, 2):
            w2 = w + val
            if w2 >= best_value:
                break
            labels[i] = val
            if consistent_at(i):
                dfs(i + 1, w2)

    dfs(0, 0)
    assert best_labels is not None
    return SolveResult(best_value, best_labels)


def _labeling_optima(
    d: Digraph, roman: bool, total: bool, value: int
) -> list[tuple[int, ...]]:
    """All feasible labelings of the optimal weight, in lexicographic order.

    Every complete label vector surviving the incremental checks is a
    valid labeling, and no valid labeling weighs less than ``value``, so
    leaves reached with the budget exhausted are exactly the optima.
    """
    n = d.order
    in_nbrs, adj, zero_due, total_due = _labeling_context(d, total)
    labels = [0] * n
    found: list[tuple[int, ...]] = []

    def consistent_at(i: int) -> bool:
        for u in zero_due[i]:
            if labels[u] == 0 and not _zero_supported(labels, in_nbrs[u], roman):
                return False
        if total:
            for u in total_due[i]:
                if labels[u] and not any(labels[w] for w in adj[u]):
                    return False
        return True

    def dfs(i: int, w: int) -> None:
        if i == n:
            if w == value:
                found.append(tuple(labels))
            return
        for val in (0, 1, 2):
            w2 = w + val
            if w2 > value:
                break
            labels[i] = val
            if consistent_at(i):
                dfs(i + 1, w2)

    dfs(0, 0)
    return found


# ---------------------------------------------------------------------------
# set parameters: cardinality sweeps over bitmask-encoded subsets
# ---------------------------------------------------------------------------


def _masks(d: Digraph):
    n = d.order
    out_closed = [1 << v | sum(1 << w for w in d.out_neighbors(v)) for v in range(n)]
    in_open = [sum(1 << w for w in d.in_neighbors(v)) for v in range(n)]
    in_closed = [1 << v | in_open[v] for v in range(n)]
    adj = [sum(1 << w for w in d.all_neighbors(v)) for v in range(n)]
    return out_closed, in_open, in_closed, adj


def _set_checker(d: Digraph, parameter: Parameter) -> Callable[[tuple[int, ...]], bool]:
    n = d.order
    full = (1 << n) - 1
    out_closed, in_open, in_closed, adj = _masks(d)

    if parameter is Parameter.DOMINATION:

        def feasible(combo: tuple[int, ...]) -> bool:
            covered = 0
            for v in combo:
                covered |= out_closed[v]
            return covered == full

    elif parameter is Parameter.TOTAL_DOMINATION:

        def feasible(combo: tuple[int, ...]) -> bool:
            mask = 0
            covered = 0
            for v in combo:
                mask |= 1 << v
                covered |= out_closed[v]
            if covered != full:
                return False
            return all(adj[v] & mask for v in combo)

    elif parameter is Parameter.TOTAL_TWO_DOMINATION:

        def feasible(combo: tuple[int, ...]) -> bool:
            mask = 0
            for v in combo:
                mask |= 1 << v
            if not all(adj[v] & mask for v in combo):
                return False
            for u in range(n):
                if not (mask >> u) & 1 and (in_open[u] & mask).bit_count() < 2:
                    return False
            return True

    else:  # PACKING

        def feasible(combo: tuple[int, ...]) -> bool:
            covered = 0
            for v in combo:
                ball = in_closed[v]
                if covered & ball:
                    return False
                covered |= ball
            return True

    return feasible


def _subsets_membership_lex(n: int, k: int):
    """Size-k subsets ordered by their 0/1 membership vector.

    ``itertools.combinations`` emits sorted member tuples in lexicographic
    order, which is exactly the reverse of membership-vector order, so a
    reversed sweep gives membership-lexicographic ascending.
    """
    return reversed(list(itertools.combinations(range(n), k)))


def _packing_size_bound(d: Digraph) -> int:
    """Closed in-neighborhoods of packing members are pairwise disjoint,
    so the m smallest ones must fit inside V."""
    sizes = sorted(d.in_degree(v) + 1 for v in range(d.order))
    total = 0
    bound = 0
    for s in sizes:
        total += s
        if total > d.order:
            break
        bound += 1
    return bound


def _set_cardinalities(d: Digraph, parameter: Parameter) -> range:
    if parameter is Parameter.PACKING:
        return range(_packing_size_bound(d), -1, -1)
    return range(d.order + 1)


def _set_optimum(d: Digraph, parameter: Parameter) -> SolveResult:
    feasible = _set_checker(d, parameter)
    for k in _set_cardinalities(d, parameter):
        for combo in _subsets_membership_lex(d.order, k):
            if feasible(combo):
                return SolveResult(k, frozenset(combo))
    raise AssertionError("feasibility guard should have caught this digraph")


def _set_optima(d: Digraph, parameter: Parameter, value: int) -> list[frozenset[int]]:
    feasible = _set_checker(d, parameter)
    return [
        frozenset(combo)
        for combo in _subsets_membership_lex(d.order, value)
        if feasible(combo)
    ]


# ---------------------------------------------------------------------------
# public API
# ---------------------------------------------------------------------------


def solve(d: Digraph, parameter: Parameter, *, max_order: Optional[int] = None) -> SolveResult:
    """Exact optimum plus one optimal witness.

    Minimizes weight/cardinality for every parameter except the packing
    number, which is maximized.  The witness is the lexicographically
    first optimum (label vector for labeling parameters, membership
    vector for set parameters).
    """
    _guard(d, parameter, max_order)
    if parameter in _LABELING_PARAMS:
        roman, total = _LABELING_PARAMS[parameter]
        return _labeling_minimum(d, roman, total)
    return _set_optimum(d, parameter)


def enumerate_optima(
    d: Digraph, parameter: Parameter, *, max_order: Optional[int] = None
) -> list[Witness]:
    """Complete, duplicate-free, lexicographically ordered list of optima."""
    _guard(d, parameter, max_order)
    if parameter in _LABELING_PARAMS:
        roman, total = _LABELING_PARAMS[parameter]
        value = _labeling_minimum(d, roman, total).value
        return list(_labeling_optima(d, roman, total, value))
    value = _set_optimum(d, parameter).value
    return list(_set_optima(d, parameter, value))


def min_v0_optima(d: Digraph, *, max_order: Optional[int] = None) -> list[tuple[int, ...]]:
    """Optimal total Italian labelings with the fewest zero-labeled vertices.

    The grid structure checks quantify over exactly these optima.
    """
    optima = enumerate_optima(d, Parameter.TOTAL_ITALIAN_DOMINATION, max_order=max_order)
    fewest = min(sum(1 for lab in f if lab == 0) for f in optima)
    return [f for f in optima if sum(1 for lab in f if lab == 0) == fewest]
