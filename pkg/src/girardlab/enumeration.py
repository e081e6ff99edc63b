"""Enumeration of linear subdigraphs and closed colored walks.

A *linear subdigraph* is a nonempty set of vertex-disjoint directed cycles
(self-loops count) whose edges carry pairwise distinct colors across the
whole set.  A *closed colored walk* is rooted: it starts and ends at its
root, may revisit vertices freely, but never reuses a color, so its length
is at most the color count.  Walks with different roots or different step
sequences are distinct objects even when they traverse the same edges.

The empty walk and the empty subdigraph exist only as conventions inside
`closed_walk_sum` and `linear_subdigraph_sum` (both equal to 1 at size
zero); the enumerators never yield them.

Everything here is exhaustive enumeration meant for desk-scale graphs
(n, k up to about 5).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Iterator

from .digraph import ColoredDigraph
from .poly import Poly, poly_prod, poly_sum

__all__ = [
    "Edge",
    "Walk",
    "LinearSubdigraph",
    "EMPTY_SUBDIGRAPH",
    "make_subdigraph",
    "colored_cycles",
    "linear_subdigraphs",
    "closed_walks",
    "linear_subdigraph_sum",
    "closed_walk_sum",
]

# One colored edge: (tail, head, color).
Edge = tuple[int, int, int]


@dataclass(frozen=True)
class Walk:
    """A walk: a start vertex and a tuple of (next_vertex, color) steps.

    Closed walks end where they start.  The class itself does not force
    distinct colors; the enumerator below only produces color-distinct
    closed walks, and concatenation (see the involution module) also works
    on open segments.
    """

    start: int
    steps: tuple[tuple[int, int], ...]

    @property
    def length(self) -> int:
        return len(self.steps)

    @property
    def end(self) -> int:
        return self.steps[-1][0] if self.steps else self.start

    @property
    def is_closed(self) -> bool:
        return self.end == self.start

    @property
    def colors(self) -> frozenset[int]:
        return frozenset(c for _, c in self.steps)

    def vertex_seq(self) -> tuple[int, ...]:
        """All visited vertices in order, the start included at both ends
        when the walk is closed."""
        return (self.start,) + tuple(v for v, _ in self.steps)

    @property
    def is_simple(self) -> bool:
        """Closed and no vertex repeats except the root at the end."""
        if not self.is_closed or not self.steps:
            return False
        interior = self.vertex_seq()[:-1]
        return len(set(interior)) == len(interior)

    def edges(self) -> Iterator[Edge]:
        u = self.start
        for v, c in self.steps:
            yield (u, v, c)
            u = v

    def weight(self, g: ColoredDigraph) -> Poly:
        return poly_prod(g.weight(u, v, c) for u, v, c in self.edges())


def _canonical_cycle(edges: Iterable[Edge]) -> tuple[Edge, ...]:
    """Rotate a cycle's edge list so it starts at its smallest vertex."""
    seq = tuple(edges)
    tails = [e[0] for e in seq]
    pivot = tails.index(min(tails))
    return seq[pivot:] + seq[:pivot]


@dataclass(frozen=True)
class LinearSubdigraph:
    """Vertex-disjoint colored cycles, color-distinct across the whole set.

    Canonical form: each cycle starts at its smallest vertex and the
    cycles are sorted by that vertex, so equal subdigraphs are equal as
    objects.  The empty instance (no cycles) is a valid value used by the
    walk/subdigraph pairing, but is never enumerated.
    """

    cycles: tuple[tuple[Edge, ...], ...]

    @property
    def length(self) -> int:
        return sum(len(c) for c in self.cycles)

    @property
    def cycle_count(self) -> int:
        return len(self.cycles)

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(e[0] for cycle in self.cycles for e in cycle)

    @property
    def colors(self) -> frozenset[int]:
        return frozenset(e[2] for cycle in self.cycles for e in cycle)

    def cycle_containing(self, v: int) -> tuple[Edge, ...]:
        for cycle in self.cycles:
            if any(e[0] == v for e in cycle):
                return cycle
        raise ValueError(f"no cycle contains vertex {v}")

    def weight(self, g: ColoredDigraph) -> Poly:
        return poly_prod(
            g.weight(u, v, c) for cycle in self.cycles for u, v, c in cycle
        )


EMPTY_SUBDIGRAPH = LinearSubdigraph(())


def make_subdigraph(cycles: Iterable[Iterable[Edge]]) -> LinearSubdigraph:
    """Canonicalize and wrap a collection of cycles."""
    canon = sorted((_canonical_cycle(c) for c in cycles), key=lambda c: c[0][0])
    return LinearSubdigraph(tuple(canon))


def colored_cycles(g: ColoredDigraph) -> list[tuple[Edge, ...]]:
    """All simple directed cycles with injectively colored edges.

    Each cycle is canonical (starts at its smallest vertex); every
    injective assignment of colors to its edges appears once.
    """
    succ = {u: g.successors(u) for u in range(1, g.n + 1)}
    shapes: list[tuple[int, ...]] = []

    def grow(base: int, path: list[int], visited: set[int]) -> None:
        u = path[-1]
        for v in succ[u]:
            if v == base:
                shapes.append(tuple(path))
            elif v > base and v not in visited:
                visited.add(v)
                path.append(v)
                grow(base, path, visited)
                path.pop()
                visited.remove(v)

    for base in range(1, g.n + 1):
        grow(base, [base], {base})

    out: list[tuple[Edge, ...]] = []
    all_colors = range(1, g.colors + 1)
    for shape in shapes:
        t = len(shape)
        pairs = [(shape[i], shape[(i + 1) % t]) for i in range(t)]
        for assignment in permutations(all_colors, t):
            out.append(tuple((u, v, c) for (u, v), c in zip(pairs, assignment)))
    return out


def linear_subdigraphs(
    g: ColoredDigraph,
    length: int | None = None,
    colors: Iterable[int] | None = None,
) -> list[LinearSubdigraph]:
    """All (nonempty) linear subdigraphs, optionally filtered.

    `length` filters on total edge count, `colors` on the exact color set.
    """
    want_colors = frozenset(colors) if colors is not None else None
    pool = sorted(colored_cycles(g), key=lambda c: (c[0][0], c))
    out: list[LinearSubdigraph] = []

    def extend(
        start: int,
        chosen: list[tuple[Edge, ...]],
        used_v: set[int],
        used_c: set[int],
        total: int,
    ) -> None:
        if chosen:
            if (length is None or total == length) and (
                want_colors is None or used_c == want_colors
            ):
                out.append(LinearSubdigraph(tuple(chosen)))
        for idx in range(start, len(pool)):
            cycle = pool[idx]
            size = len(cycle)
            if length is not None and total + size > length:
                continue
            verts = {e[0] for e in cycle}
            if verts & used_v:
                continue
            cols = {e[2] for e in cycle}
            if cols & used_c:
                continue
            if want_colors is not None and not cols <= want_colors:
                continue
            chosen.append(cycle)
            extend(idx + 1, chosen, used_v | verts, used_c | cols, total + size)
            chosen.pop()

    extend(0, [], set(), set(), 0)
    return out


def closed_walks(
    g: ColoredDigraph,
    length: int | None = None,
    colors: Iterable[int] | None = None,
) -> list[Walk]:
    """All closed colored walks (length >= 1), optionally filtered.

    `length` filters on step count, `colors` on the exact color set.  The
    distinct-color rule caps every walk at k steps, so a length filter
    beyond k simply yields nothing.
    """
    want_colors = frozenset(colors) if colors is not None else None
    cap = g.colors if length is None else min(length, g.colors)
    succ = {u: g.successors(u) for u in range(1, g.n + 1)}
    out: list[Walk] = []

    def extend(
        root: int, current: int, steps: list[tuple[int, int]], used_c: set[int]
    ) -> None:
        if steps and current == root:
            if (length is None or len(steps) == length) and (
                want_colors is None or used_c == want_colors
            ):
                out.append(Walk(root, tuple(steps)))
        if len(steps) == cap:
            return
        for v in succ[current]:
            for c in range(1, g.colors + 1):
                if c in used_c:
                    continue
                if want_colors is not None and c not in want_colors:
                    continue
                steps.append((v, c))
                used_c.add(c)
                extend(root, v, steps, used_c)
                used_c.remove(c)
                steps.pop()

    for root in range(1, g.n + 1):
        extend(root, root, [], set())
    return out


def linear_subdigraph_sum(g: ColoredDigraph, p: int, colors: Iterable[int]) -> Poly:
    """ell(g, p, S): sum of (-1)^(cycle count) * weight over subdigraphs
    with p edges and color set exactly S.

    Conventions: 1 when p = 0 and S is empty (the empty subdigraph), 0
    whenever p != |S| (a subdigraph's edge and color counts agree).
    """
    s = frozenset(colors)
    if p == 0 and not s:
        return Poly.one()
    if p != len(s):
        return Poly.zero()
    return poly_sum(
        Poly.const(-1 if gamma.cycle_count % 2 else 1) * gamma.weight(g)
        for gamma in linear_subdigraphs(g, length=p, colors=s)
    )


def closed_walk_sum(g: ColoredDigraph, q: int, colors: Iterable[int]) -> Poly:
    """c(g, q, T): sum of weights over closed walks of length q with color
    set exactly T.

    Conventions: 1 when q = 0 and T is empty (the empty walk), 0 whenever
    q != |T| (a walk's length and color count agree).
    """
    t = frozenset(colors)
    if q == 0 and not t:
        return Poly.one()
    if q != len(t):
        return Poly.zero()
    return poly_sum(w.weight(g) for w in closed_walks(g, length=q, colors=t))
