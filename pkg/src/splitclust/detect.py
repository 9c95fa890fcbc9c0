"""Obstruction detection: bad triangles, bad star forests, lower bounds.

A bad triangle is two blue edges sharing a vertex plus a red edge closing
the cycle; it is the smallest erroneous cycle.  A bad star generalizes it:
a center joined blue to at least two leaves that are pairwise red.  A bad
star of l leaves costs at least l - 1 in any valid clustering, and the
stars of a vertex-disjoint forest add up, so forest weight bounds the
optimum from below.
"""

from __future__ import annotations

from dataclasses import dataclass
from collections.abc import Iterable

from .graphs import BLUE, RED, CorrelationGraph


@dataclass(frozen=True)
class BadStar:
    """Center blue-adjacent to every leaf; leaves pairwise red; >= 2 leaves."""

    center: int
    leaves: tuple[int, ...]

    def __post_init__(self):
        if len(self.leaves) < 2:
            raise ValueError("a bad star needs at least two leaves")
        if any(a >= b for a, b in zip(self.leaves, self.leaves[1:])):
            raise ValueError("leaves must be sorted and distinct")
        if self.center in self.leaves:
            raise ValueError("center cannot be a leaf")
        if self.center < 0 or self.leaves[0] < 0:
            raise ValueError("negative vertex id")

    @property
    def weight(self) -> int:
        return len(self.leaves) - 1

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset((self.center, *self.leaves))


@dataclass(frozen=True)
class BadStarForest:
    """Vertex-disjoint bad stars; weight is the sum of star weights."""

    stars: tuple[BadStar, ...]

    def __post_init__(self):
        seen: set[int] = set()
        for star in self.stars:
            if seen & star.vertices:
                raise ValueError("stars must be vertex-disjoint")
            seen |= star.vertices

    @property
    def weight(self) -> int:
        return sum(star.weight for star in self.stars)

    @property
    def vertices(self) -> frozenset[int]:
        out: set[int] = set()
        for star in self.stars:
            out |= star.vertices
        return frozenset(out)


def is_bad_star(g: CorrelationGraph, star: BadStar) -> bool:
    """Whether the star's color pattern holds in g."""
    leaves = star.leaves
    if star.center >= g.n or leaves[-1] >= g.n:
        return False
    if any(g.label(star.center, leaf) is not BLUE for leaf in leaves):
        return False
    return all(
        g.label(leaves[i], leaves[j]) is RED
        for i in range(len(leaves))
        for j in range(i + 1, len(leaves))
    )


def find_bad_triangle(
    g: CorrelationGraph, within: Iterable[int] | None = None
) -> tuple[int, int, int] | None:
    """Lexicographically smallest (u, v, w) with blue uv, blue vw, red uw, u < w.

    Returns None when the (restricted) graph has no bad triangle.
    """
    if within is None:
        pool = range(g.n)
        pool_set = None
    else:
        pool = sorted(set(within))
        for v in pool:
            if not 0 <= v < g.n:
                raise ValueError(f"vertex {v} out of range")
        pool_set = set(pool)
    for u in pool:
        for v in g.blue_neighbors(u):
            if pool_set is not None and v not in pool_set:
                continue
            for w in g.blue_neighbors(v):
                if w <= u or w == v:
                    continue
                if pool_set is not None and w not in pool_set:
                    continue
                if g.label(u, w) is RED:
                    return (u, v, w)
    return None


def maximal_bad_star_forest(g: CorrelationGraph) -> BadStarForest:
    """Greedy vertex-disjoint bad stars until no bad triangle survives.

    Repeatedly takes the smallest bad triangle among unused vertices as a
    star seed and extends it by scanning unused vertices in ascending
    order: a candidate x joins as a leaf when center-x is blue and x is
    red to every current leaf.  Deterministic; requires a complete graph
    so that forest weight is a valid lower bound and the leftover vertices
    induce a cluster graph.
    """
    if not g.complete:
        raise ValueError("bad star forests are defined on complete graphs")
    unused = set(range(g.n))
    stars: list[BadStar] = []
    while True:
        triangle = find_bad_triangle(g, unused)
        if triangle is None:
            break
        u, center, w = triangle
        leaves = [u, w]
        for x in sorted(unused):
            if x in (u, center, w):
                continue
            if g.label(center, x) is BLUE and all(
                g.label(x, leaf) is RED for leaf in leaves
            ):
                leaves.append(x)
        star = BadStar(center, tuple(sorted(leaves)))
        stars.append(star)
        unused -= star.vertices
    return BadStarForest(tuple(stars))


def lower_bound(g: CorrelationGraph) -> int:
    """Weight of the greedy bad star forest; never exceeds the optimum cost."""
    return maximal_bad_star_forest(g).weight
