"""Exhaustive generation of non-isomorphic rooted trees and the
machine verification of the two tree characterizations.

Rooted trees are compared under root-preserving isomorphism.  The
canonical form of a tree is the nested tuple of its children's canonical
forms, sorted; generation simply walks every parent vector with
``parent < child`` and deduplicates on that form, which is plenty fast
at the sizes an exhaustive parameter computation can handle anyway.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .digraph import Digraph, rooted_tree
from .errors import SizeLimitError
from .report import Record, Report
from .solver import Parameter, solve

TREE_ORDER_CAP = 10


@dataclass(frozen=True)
class RootedTreeCode:
    """Canonical parent vector: root first, children in canonical order."""

    parents: tuple[Optional[int], ...]

    @property
    def order(self) -> int:
        return len(self.parents)

    def digraph(self) -> Digraph:
        return rooted_tree(self.parents)


def _canonical_form(children: list[list[int]], v: int) -> tuple:
    return tuple(sorted(_canonical_form(children, c) for c in children[v]))


def _form_to_parents(form: tuple) -> tuple[Optional[int], ...]:
    parents: list[Optional[int]] = [None]

    def attach(subforms: tuple, parent: int) -> None:
        for sub in subforms:
            idx = len(parents)
            parents.append(parent)
            attach(sub, idx)

    attach(form, 0)
    return tuple(parents)


def enumerate_rooted_trees(
    n: int, *, max_order: int = TREE_ORDER_CAP
) -> list[RootedTreeCode]:
    """One representative per isomorphism class of rooted trees on n vertices.

    Deterministic: results are sorted by canonical form.
    """
    if n < 1:
        raise ValueError("trees need at least one vertex")
    if n > max_order:
        raise SizeLimitError(f"order {n} exceeds the tree enumeration cap {max_order}")
    forms: set[tuple] = set()
    for parent_choice in itertools.product(*(range(v) for v in range(1, n))):
        children: list[list[int]] = [[] for _ in range(n)]
        for v, p in enumerate(parent_choice, start=1):
            children[p].append(v)
        forms.add(_canonical_form(children, 0))
    return [RootedTreeCode(_form_to_parents(form)) for form in sorted(forms)]


def _is_out_star(d: Digraph) -> bool:
    # Root of a rooted tree is the unique in-degree-0 vertex.
    root = next(v for v in range(d.order) if d.in_degree(v) == 0)
    return d.out_degree(root) == d.order - 1


def verify_trees_total_equality(n_max: int, *, max_order: Optional[int] = None) -> Report:
    """Check that the total and total Italian domination numbers of a
    rooted tree agree exactly when the tree has two vertices.

    One record per order, with the tree census and any counterexample.
    """
    if n_max < 2:
        raise ValueError("verification starts at order 2")
    report = Report(metadata={"n_max": n_max})
    for n in range(2, n_max + 1):
        trees = enumerate_rooted_trees(n)
        agreeing = 0
        offender: Optional[RootedTreeCode] = None
        offender_values: Optional[dict] = None
        for code in trees:
            d = code.digraph()
            t = solve(d, Parameter.TOTAL_DOMINATION, max_order=max_order).value
            ti = solve(d, Parameter.TOTAL_ITALIAN_DOMINATION, max_order=max_order).value
            equal = t == ti
            if equal:
                agreeing += 1
            if equal != (n == 2) and offender is None:
                offender = code
                offender_values = {"gamma_t": t, "gamma_ti": ti}
        ok = agreeing == (len(trees) if n == 2 else 0)
        report.records.append(
            Record(
                check="total-equals-total-italian-only-at-order-2",
                input={"order": n},
                value={"trees": len(trees), "with_equality": agreeing},
                passed=ok,
                counterexample=(
                    None
                    if offender is None
                    else {"parents": list(offender.parents), **(offender_values or {})}
                ),
            )
        )
    return report


def verify_trees_triple_bound(n_max: int, *, max_order: Optional[int] = None) -> Report:
    """Check that a rooted tree's total Italian domination number equals
    three times its domination number exactly for out-stars."""
    if n_max < 3:
        raise ValueError("verification starts at order 3")
    report = Report(metadata={"n_max": n_max})
    for n in range(3, n_max + 1):
        trees = enumerate_rooted_trees(n)
        agreeing = 0
        offender: Optional[RootedTreeCode] = None
        offender_values: Optional[dict] = None
        for code in trees:
            d = code.digraph()
            g = solve(d, Parameter.DOMINATION, max_order=max_order).value
            ti = solve(d, Parameter.TOTAL_ITALIAN_DOMINATION, max_order=max_order).value
            equal = ti == 3 * g
            star = _is_out_star(d)
            if equal:
                agreeing += 1
            if equal != star and offender is None:
                offender = code
                offender_values = {"gamma": g, "gamma_ti": ti, "out_star": star}
        ok = offender is None and agreeing == 1  # exactly the out-star per order
        report.records.append(
            Record(
                check="total-italian-triples-domination-only-on-out-stars",
                input={"order": n},
                value={"trees": len(trees), "with_equality": agreeing},
                passed=ok,
                counterexample=(
                    None
                    if offender is None
                    else {"parents": list(offender.parents), **(offender_values or {})}
                ),
            )
        )
    return report
