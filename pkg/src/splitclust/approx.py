"""Factor-7 approximation for minimum-cost clustering of complete graphs.

The greedy bad star forest supplies a vertex set S (at most 3 times the
optimum in weight) whose removal leaves disjoint blue cliques.  Candidate
solutions keep one hub cluster around S: a guessed clique is merged into
the hub entirely, every other clique C contributes a minimum vertex cover
of its blue edges towards S, and each S vertex also gets a singleton so
red pairs inside S resolve.  The cheapest candidate costs at most 7 times
the optimum; when the cliques number at most one, the flat solution (one
cluster with everything plus S singletons) costs |S| <= 3 * optimum.
"""

from __future__ import annotations

from dataclasses import dataclass
from collections.abc import Hashable, Iterable
from typing import TypeVar

from .clustering import Clustering
from .detect import maximal_bad_star_forest
from .graphs import BLUE, CorrelationGraph, cluster_decomposition

V = TypeVar("V", bound=Hashable)


@dataclass(frozen=True)
class BipartiteGraph:
    """Two disjoint vertex sides and edges between them.  Order is kept."""

    left: tuple
    right: tuple
    edges: tuple[tuple, ...]

    def __post_init__(self):
        left, right = set(self.left), set(self.right)
        if len(left) != len(self.left) or len(right) != len(self.right):
            raise ValueError("duplicate vertex within a side")
        if left & right:
            raise ValueError("sides must be disjoint")
        for a, b in self.edges:
            if a not in left or b not in right:
                raise ValueError(f"edge ({a!r},{b!r}) must go left to right")


def bipartite_min_vertex_cover(b: BipartiteGraph) -> frozenset:
    """Minimum vertex cover via maximum matching and alternating reachability.

    Deterministic for a fixed input ordering.  The cover size equals the
    maximum matching size.
    """
    adj: dict = {l: [] for l in b.left}
    seen_edges = set()
    for l, r in b.edges:
        if (l, r) not in seen_edges:
            seen_edges.add((l, r))
            adj[l].append(r)
    match_left: dict = {}
    match_right: dict = {}

    def augment(l, visited: set) -> bool:
        for r in adj[l]:
            if r in visited:
                continue
            visited.add(r)
            if r not in match_right or augment(match_right[r], visited):
                match_left[l] = r
                match_right[r] = l
                return True
        return False

    for l in b.left:
        if adj[l]:
            augment(l, set())

    # alternating reachability from unmatched left vertices: non-matching
    # edges forward, matching edges back; cover = unreached left + reached right
    reach_left = {l for l in b.left if l not in match_left}
    reach_right: set = set()
    frontier = list(reach_left)
    while frontier:
        l = frontier.pop()
        for r in adj[l]:
            if match_left.get(l) == r or r in reach_right:
                continue
            reach_right.add(r)
            back = match_right.get(r)
            if back is not None and back not in reach_left:
                reach_left.add(back)
                frontier.append(back)
    cover = [l for l in b.left if l not in reach_left]
    cover += [r for r in b.right if r in reach_right]
    return frozenset(cover)


@dataclass(frozen=True)
class SimpleSolutionParts:
    """One assembled candidate: hub cluster around S plus per-clique clusters.

    ``covers`` pairs every non-guessed clique with its minimum vertex cover
    of the blue edges towards S.  ``guess`` is the clique merged into the
    hub, None when no clique is merged.  For degenerate inputs (no bad
    structure, or at most one clique outside S) there is a single candidate
    with no covers.
    """

    s_vertices: frozenset[int]
    cliques: tuple[frozenset[int], ...]
    guess: frozenset[int] | None
    covers: tuple[tuple[frozenset[int], frozenset[int]], ...]
    assembled: Clustering
    cost: int


def candidate_solutions(g: CorrelationGraph) -> tuple[SimpleSolutionParts, ...]:
    """All candidate solutions, one per guessed clique plus the no-guess one.

    Every candidate's clustering is valid for g.  ``approximate`` picks the
    first cheapest.
    """
    if not g.complete:
        raise ValueError("approximation is defined on complete graphs")
    if g.n == 0:
        raise ValueError("approximation needs at least one vertex")
    forest = maximal_bad_star_forest(g)
    s_sorted = sorted(forest.vertices)
    s_set = frozenset(s_sorted)
    if not s_sorted:
        cliques = cluster_decomposition(g)
        assert cliques is not None, "no bad structure means a cluster graph"
        return (
            SimpleSolutionParts(
                s_set, tuple(cliques), None, (), Clustering(cliques), 0
            ),
        )
    rest = [v for v in range(g.n) if v not in s_set]
    cliques = cluster_decomposition(g, rest)
    assert cliques is not None, "graph minus forest vertices must be a cluster graph"
    cliques = tuple(cliques)
    if len(cliques) <= 1:
        flat = [frozenset(range(g.n))] + [frozenset((s,)) for s in s_sorted]
        return (
            SimpleSolutionParts(
                s_set, cliques, None, (), Clustering(flat), len(s_sorted)
            ),
        )
    covers = {}
    for clique in cliques:
        members = sorted(clique)
        edges = tuple(
            (s, c) for s in s_sorted for c in members if g.label(s, c) is BLUE
        )
        covers[clique] = bipartite_min_vertex_cover(
            BipartiteGraph(tuple(s_sorted), tuple(members), edges)
        )
    out = []
    for guess in (*cliques, None):
        hub = set(s_sorted)
        if guess is not None:
            hub |= guess
        clusters = []
        total = len(s_sorted)
        for clique in cliques:
            if clique == guess:
                continue
            cover = covers[clique]
            hub |= cover & clique
            clusters.append(clique | (cover & s_set))
            total += len(cover)
        assembled = Clustering(
            [frozenset(hub), *clusters, *(frozenset((s,)) for s in s_sorted)]
        )
        cover_pairs = tuple(
            (clique, covers[clique]) for clique in cliques if clique != guess
        )
        out.append(
            SimpleSolutionParts(s_set, cliques, guess, cover_pairs, assembled, total)
        )
    return tuple(out)


def approximate(g: CorrelationGraph) -> Clustering:
    """Valid clustering of cost at most 7 times the optimum.  Deterministic."""
    candidates = candidate_solutions(g)
    best = min(candidates, key=lambda c: c.cost)
    return best.assembled
