"""Finite simple digraphs with dense neighborhood queries.

Vertices are the integers ``0 .. order-1`` and arcs are ordered pairs
``(tail, head)``.  In- and out-adjacency lists are built once at
construction, so neighborhood queries never scan the arc set.  Instances
are immutable after construction and can be shared freely between
concurrent tasks.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Optional, Sequence

NEIGHBORHOOD_MODES = ("in", "out", "in-closed", "out-closed", "open", "closed")


class Digraph:
    """Immutable finite simple digraph (no self-loops, no duplicate arcs)."""

    __slots__ = ("_order", "_arcs", "_out", "_in")

    def __init__(self, order: int, arcs: Iterable[tuple[int, int]] = ()):
        if order < 0:
            raise ValueError("order must be nonnegative")
        out: list[list[int]] = [[] for _ in range(order)]
        inn: list[list[int]] = [[] for _ in range(order)]
        seen: set[tuple[int, int]] = set()
        for arc in arcs:
            u, v = arc
            if not (0 <= u < order and 0 <= v < order):
                raise ValueError(f"arc {arc!r} leaves the vertex range 0..{order - 1}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if (u, v) in seen:
                raise ValueError(f"duplicate arc {arc!r}")
            seen.add((u, v))
            out[u].append(v)
            inn[v].append(u)
        self._order = order
        self._arcs = frozenset(seen)
        self._out = tuple(tuple(sorted(ws)) for ws in out)
        self._in = tuple(tuple(sorted(ws)) for ws in inn)

    @property
    def order(self) -> int:
        """Number of vertices."""
        return self._order

    @property
    def size(self) -> int:
        """Number of arcs."""
        return len(self._arcs)

    @property
    def arcs(self) -> frozenset[tuple[int, int]]:
        return self._arcs

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self._order):
            raise ValueError(f"vertex {v} not in 0..{self._order - 1}")

    def out_neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self._out[v]

    def in_neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self._in[v]

    def all_neighbors(self, v: int) -> tuple[int, ...]:
        """Vertices adjacent to v through an arc in either direction."""
        self._check_vertex(v)
        return tuple(sorted(set(self._in[v]) | set(self._out[v])))

    def in_degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self._in[v])

    def out_degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self._out[v])

    def neighborhood(self, v: int, mode: str) -> frozenset[int]:
        """One of the six standard neighborhoods of ``v``.

        ``mode`` selects: ``"in"`` / ``"out"`` the open in/out-neighborhood,
        ``"in-closed"`` / ``"out-closed"`` the same plus ``v`` itself,
        ``"open"`` the union of in- and out-neighbors, and ``"closed"``
        that union plus ``v``.
        """
        self._check_vertex(v)
        if mode == "in":
            return frozenset(self._in[v])
        if mode == "out":
            return frozenset(self._out[v])
        if mode == "in-closed":
            return frozenset(self._in[v]) | {v}
        if mode == "out-closed":
            return frozenset(self._out[v]) | {v}
        if mode == "open":
            return frozenset(self._in[v]) | frozenset(self._out[v])
        if mode == "closed":
            return frozenset(self._in[v]) | frozenset(self._out[v]) | {v}
        raise ValueError(f"unknown neighborhood mode {mode!r}")

    def isolated_vertices(self) -> tuple[int, ...]:
        """Vertices with no arc in either direction."""
        return tuple(
            v for v in range(self._order) if not self._in[v] and not self._out[v]
        )

    def has_isolated_vertex(self) -> bool:
        return any(not self._in[v] and not self._out[v] for v in range(self._order))

    def is_connected(self) -> bool:
        """Connectivity of the underlying (undirected) graph."""
        if self._order == 0:
            return True
        seen = {0}
        queue = deque([0])
        while queue:
            v = queue.popleft()
            for w in self._in[v] + self._out[v]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == self._order

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self._order == other._order and self._arcs == other._arcs

    def __hash__(self) -> int:
        return hash((self._order, self._arcs))

    def __repr__(self) -> str:
        return f"Digraph(order={self._order}, size={self.size})"


def dipath(n: int) -> Digraph:
    """Directed path on ``n`` vertices with arcs ``j -> j+1``."""
    if n < 1:
        raise ValueError("a dipath needs at least one vertex")
    return Digraph(n, [(j, j + 1) for j in range(n - 1)])


def out_star(n: int) -> Digraph:
    """Rooted star: vertex 0 with arcs to each of the ``n - 1`` leaves."""
    if n < 2:
        raise ValueError("an out-star needs at least two vertices")
    return Digraph(n, [(0, i) for i in range(1, n)])


def rooted_tree(parents: Sequence[Optional[int]]) -> Digraph:
    """Digraph with arcs ``parent -> child`` from a parent vector.

    Exactly one entry must be None (the root); every other entry is the
    index of that vertex's parent, and following parents must reach the
    root without cycles.
    """
    n = len(parents)
    roots = [v for v, p in enumerate(parents) if p is None]
    if len(roots) != 1:
        raise ValueError(f"expected exactly one root, found {len(roots)}")
    root = roots[0]
    arcs = []
    for v, p in enumerate(parents):
        if v == root:
            continue
        if p is None or not (0 <= p < n):
            raise ValueError(f"parent of vertex {v} out of range: {p!r}")
        arcs.append((p, v))
    for v in range(n):
        hops = 0
        cur: Optional[int] = v
        while cur != root:
            cur = parents[cur]  # type: ignore[index]
            hops += 1
            if hops > n:
                raise ValueError("parent vector contains a cycle")
    d = Digraph(n, arcs)
    if not is_rooted_tree(d):
        raise ValueError("parent vector does not describe a rooted tree")
    return d


def product_index(v: int, w: int, inner_order: int) -> int:
    """Row-major index of the product vertex ``(v, w)``.

    This encoding is part of the public contract: tests and the grid
    solver address cell ``(v, w)`` of ``cartesian_product(d1, d2)`` as
    ``v * d2.order + w``.
    """
    return v * inner_order + w


def product_coords(index: int, inner_order: int) -> tuple[int, int]:
    """Inverse of :func:`product_index`."""
    return divmod(index, inner_order)


def cartesian_product(d1: Digraph, d2: Digraph) -> Digraph:
    """Cartesian product: arcs move along one coordinate, the other fixed.

    Vertex ``(v, w)`` is encoded as ``product_index(v, w, d2.order)``.
    """
    n2 = d2.order
    arcs = []
    for (u, v) in d1.arcs:
        for w in range(n2):
            arcs.append((product_index(u, w, n2), product_index(v, w, n2)))
    for (w1, w2) in d2.arcs:
        for u in range(d1.order):
            arcs.append((product_index(u, w1, n2), product_index(u, w2, n2)))
    return Digraph(d1.order * n2, arcs)


def is_packing(d: Digraph, members: Iterable[int], strong: bool = False) -> bool:
    """Whether the vertex set is a packing of ``d``.

    A packing has pairwise disjoint closed in-neighborhoods; a strong
    packing has pairwise disjoint closed neighborhoods (both directions).
    """
    covered: set[int] = set()
    for v in sorted(set(members)):
        d._check_vertex(v)
        if strong:
            ball = d.neighborhood(v, "closed")
        else:
            ball = d.neighborhood(v, "in-closed")
        if covered & ball:
            return False
        covered |= ball
    return True


def is_rooted_tree(d: Digraph) -> bool:
    """True iff ``d`` is connected with one in-degree-0 vertex (the root)
    and in-degree exactly 1 everywhere else."""
    if d.order == 0:
        return False
    roots = 0
    for v in range(d.order):
        deg = d.in_degree(v)
        if deg == 0:
            roots += 1
        elif deg != 1:
            return False
    return roots == 1 and d.is_connected()
