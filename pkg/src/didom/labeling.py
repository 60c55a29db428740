"""Vertex labelings into {0, 1, 2} and validators for domination variants.

A labeling is a plain sequence of labels, one per vertex.  Vertex sets
are passed as ``set``/``frozenset`` instances; the two input kinds are
kept distinct so a list of small integers is never silently reinterpreted
as the wrong object.
"""

from __future__ import annotations

import enum
from typing import Iterable, Sequence, Union

from .digraph import Digraph
from .errors import InfeasibleStructureError

Labels = Sequence[int]


class Variant(enum.Enum):
    """The domination objects this package can recognize.

    The first two and the last one apply to vertex sets, the rest to
    labelings.
    """

    DOMINATING_SET = "dominating-set"
    TOTAL_DOMINATING_SET = "total-dominating-set"
    ROMAN = "roman"
    ITALIAN = "italian"
    TOTAL_ROMAN = "total-roman"
    TOTAL_ITALIAN = "total-italian"
    TOTAL_TWO_DOMINATING_SET = "total-2-dominating-set"


SET_VARIANTS = frozenset(
    {
        Variant.DOMINATING_SET,
        Variant.TOTAL_DOMINATING_SET,
        Variant.TOTAL_TWO_DOMINATING_SET,
    }
)

#: Variants defined only on digraphs without isolated vertices.
TOTAL_VARIANTS = frozenset(
    {
        Variant.TOTAL_DOMINATING_SET,
        Variant.TOTAL_ROMAN,
        Variant.TOTAL_ITALIAN,
        Variant.TOTAL_TWO_DOMINATING_SET,
    }
)


def weight(labels: Labels) -> int:
    """Total weight of a labeling (the sum of all labels)."""
    return sum(labels)


def restricted_weight(labels: Labels, members: Iterable[int]) -> int:
    """Sum of labels over the given vertex subset only."""
    return sum(labels[v] for v in set(members))


def level_set(labels: Labels, j: int) -> frozenset[int]:
    """Vertices carrying label ``j``; the three level sets partition V."""
    if j not in (0, 1, 2):
        raise ValueError(f"label must be 0, 1 or 2, got {j!r}")
    return frozenset(v for v, lab in enumerate(labels) if lab == j)


def _check_labels(d: Digraph, labels: object) -> Labels:
    if not isinstance(labels, (list, tuple)):
        raise ValueError(
            f"this variant expects a labeling (list/tuple), got {type(labels).__name__}"
        )
    if len(labels) != d.order:
        raise ValueError(f"labeling has length {len(labels)}, digraph order {d.order}")
    for v, lab in enumerate(labels):
        if lab not in (0, 1, 2):
            raise ValueError(f"label at vertex {v} must be 0, 1 or 2, got {lab!r}")
    return labels


def _check_members(d: Digraph, members: object) -> frozenset[int]:
    if not isinstance(members, (set, frozenset)):
        raise ValueError(
            f"this variant expects a vertex set (set/frozenset), got {type(members).__name__}"
        )
    for v in members:
        d._check_vertex(v)
    return frozenset(members)


def _no_isolated_in_induced(d: Digraph, members: frozenset[int]) -> bool:
    """No member is isolated in the induced subdigraph.

    Isolation inside an induced subdigraph means no in- or out-neighbor
    within it: adjacency counts arcs in both directions.
    """
    return all(any(w in members for w in d.all_neighbors(v)) for v in members)


def _zero_condition(d: Digraph, labels: Labels, v: int, roman: bool) -> bool:
    if roman:
        return any(labels[w] == 2 for w in d.in_neighbors(v))
    positives = 0
    for w in d.in_neighbors(v):
        if labels[w] == 2:
            return True
        if labels[w] == 1:
            positives += 1
    return positives >= 2


def validate(d: Digraph, x: Union[Labels, Iterable[int]], variant: Variant) -> bool:
    """Check ``x`` against the definition selected by ``variant``.

    Set variants:

    * ``DOMINATING_SET`` -- the closed out-neighborhood of the set covers V.
    * ``TOTAL_DOMINATING_SET`` -- dominating, and the induced subdigraph
      has no isolated vertex.
    * ``TOTAL_TWO_DOMINATING_SET`` -- the induced subdigraph has no
      isolated vertex and every outside vertex has at least two
      in-neighbors inside the set.

    Labeling variants (labels in {0, 1, 2}):

    * ``ROMAN`` -- every 0-vertex has an in-neighbor labeled 2.
    * ``ITALIAN`` -- every 0-vertex has an in-neighbor labeled 2 or two
      in-neighbors labeled at least 1.  (Two in-neighbors ``>= 1`` is
      equivalent to the textbook "two 1s or one 2": a 2 among them
      already satisfies the first branch.)
    * ``TOTAL_ROMAN`` / ``TOTAL_ITALIAN`` -- as above, and additionally
      the positive vertices induce a subdigraph without isolated
      vertices.

    Total variants raise :class:`InfeasibleStructureError` on digraphs
    with isolated vertices: no such object exists there, and returning
    ``False`` would poison search loops.
    """
    if variant in TOTAL_VARIANTS and d.has_isolated_vertex():
        raise InfeasibleStructureError(
            f"{variant.value} is undefined on digraphs with isolated vertices"
        )

    if variant in SET_VARIANTS:
        members = _check_members(d, x)
        if variant is Variant.DOMINATING_SET or variant is Variant.TOTAL_DOMINATING_SET:
            covered: set[int] = set()
            for v in members:
                covered.add(v)
                covered.update(d.out_neighbors(v))
            if len(covered) != d.order:
                return False
            if variant is Variant.DOMINATING_SET:
                return True
            return _no_isolated_in_induced(d, members)
        # total 2-dominating set
        if not _no_isolated_in_induced(d, members):
            return False
        for u in range(d.order):
            if u in members:
                continue
            if sum(1 for w in d.in_neighbors(u) if w in members) < 2:
                return False
        return True

    labels = _check_labels(d, x)
    roman = variant in (Variant.ROMAN, Variant.TOTAL_ROMAN)
    for v in range(d.order):
        if labels[v] == 0 and not _zero_condition(d, labels, v, roman):
            return False
    if variant in (Variant.TOTAL_ROMAN, Variant.TOTAL_ITALIAN):
        positives = frozenset(v for v in range(d.order) if labels[v] >= 1)
        return _no_isolated_in_induced(d, positives)
    return True
