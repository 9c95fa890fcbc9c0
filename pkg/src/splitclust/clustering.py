"""Overlapping clusterings and their equivalence with vertex splitting.

A clustering is an ordered list of vertex sets.  It is valid for a graph
when every vertex lies in some cluster, every blue pair shares a cluster,
and every red pair (u, v) is resolved: two distinct list positions i != j
with u in cluster i and v in cluster j.  The cost is the number of extra
memberships, sum over v of (#clusters containing v - 1).

Splitting a vertex v replaces it by two copies that jointly inherit v's
blue and red edges (each edge goes to at least one copy, possibly both).
A graph obtained by repeated splits clusters the original when it has no
erroneous cycle, i.e. no simple cycle with exactly one red edge.  Valid
clusterings of cost k and split sequences of length k translate into each
other; ``clustering_to_splits`` and ``splits_to_clustering`` realize both
directions.
"""

from __future__ import annotations

from dataclasses import dataclass
from collections.abc import Iterable

from .graphs import (
    BLUE,
    RED,
    CorrelationGraph,
    FormatError,
    blue_components,
    significant_lines,
)


class Clustering:
    """Ordered list of nonempty vertex sets.  Order matters for resolution."""

    __slots__ = ("clusters",)

    clusters: tuple[frozenset[int], ...]

    def __init__(self, clusters: Iterable[Iterable[int]]):
        clean = []
        for cluster in clusters:
            fs = frozenset(cluster)
            if not fs:
                raise ValueError("clusters must be nonempty")
            for v in fs:
                if not isinstance(v, int) or v < 0:
                    raise ValueError(f"not a vertex id: {v!r}")
            clean.append(fs)
        object.__setattr__(self, "clusters", tuple(clean))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Clustering is immutable")

    def __len__(self) -> int:
        return len(self.clusters)

    def __iter__(self):
        return iter(self.clusters)

    def __getitem__(self, i: int) -> frozenset[int]:
        return self.clusters[i]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Clustering):
            return NotImplemented
        return self.clusters == other.clusters

    def __hash__(self) -> int:
        return hash(self.clusters)

    def __repr__(self) -> str:
        body = ", ".join("{" + ",".join(map(str, sorted(c))) + "}" for c in self.clusters)
        return f"Clustering([{body}])"

    def membership(self, n: int) -> list[list[int]]:
        """For each vertex 0..n-1, the sorted list of cluster indices containing it."""
        idx: list[list[int]] = [[] for _ in range(n)]
        for i, cluster in enumerate(self.clusters):
            for v in cluster:
                if v >= n:
                    raise ValueError(f"cluster vertex {v} out of range for n={n}")
                idx[v].append(i)
        return idx


def cost(f: Clustering, n: int) -> int:
    """Total extra memberships: sum over vertices of (#clusters - 1)."""
    idx = f.membership(n)
    for v, where in enumerate(idx):
        if not where:
            raise ValueError(f"vertex {v} is in no cluster")
    return sum(len(where) - 1 for where in idx)


@dataclass(frozen=True)
class ValidationReport:
    """Violations of the clustering conditions; empty means valid."""

    uncovered_blue: tuple[tuple[int, int], ...]
    unresolved_red: tuple[tuple[int, int], ...]
    uncovered_vertices: tuple[int, ...]

    @property
    def ok(self) -> bool:
        return not (self.uncovered_blue or self.unresolved_red or self.uncovered_vertices)


def verify_clustering(g: CorrelationGraph, f: Clustering) -> ValidationReport:
    """Check the three validity conditions and report every violation."""
    idx = [set(w) for w in f.membership(g.n)]
    uncovered_vertices = tuple(v for v in range(g.n) if not idx[v])
    uncovered_blue = tuple(
        (u, v) for u, v in g.blue_edges() if not (idx[u] & idx[v])
    )
    unresolved = []
    for u, v in g.red_edges():
        # resolved iff some i in idx[u], j in idx[v] with i != j
        if not idx[u] or not idx[v]:
            unresolved.append((u, v))
        elif idx[u] == idx[v] and len(idx[u]) == 1:
            unresolved.append((u, v))
    return ValidationReport(uncovered_blue, tuple(unresolved), uncovered_vertices)


def parse_clustering(data: bytes | str) -> Clustering:
    """Parse the ``clu`` text format: header ``clustering <t>``, then t ``c`` lines."""
    lines = significant_lines(data)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise FormatError("empty document: missing clustering header") from None
    fields = header.split()
    if len(fields) != 2 or fields[0] != "clustering":
        raise FormatError(f"line {lineno}: expected 'clustering <t>'")
    try:
        t = int(fields[1])
    except ValueError:
        raise FormatError(f"line {lineno}: cluster count {fields[1]!r} is not an integer") from None
    if t < 0:
        raise FormatError(f"line {lineno}: negative cluster count {t}")
    clusters = []
    for lineno, line in lines:
        fields = line.split()
        if fields[0] != "c":
            raise FormatError(f"line {lineno}: expected 'c <v1> <v2> ...'")
        if len(fields) < 2:
            raise FormatError(f"line {lineno}: empty cluster")
        try:
            ids = [int(x) for x in fields[1:]]
        except ValueError:
            raise FormatError(f"line {lineno}: vertex ids must be integers") from None
        if any(v < 0 for v in ids):
            raise FormatError(f"line {lineno}: negative vertex id")
        if any(a >= b for a, b in zip(ids, ids[1:])):
            raise FormatError(f"line {lineno}: ids must be strictly increasing")
        clusters.append(ids)
    if len(clusters) != t:
        raise FormatError(f"header says {t} clusters, found {len(clusters)}")
    return Clustering(clusters)


def write_clustering(f: Clustering) -> bytes:
    """Serialize to canonical ``clu`` form: cluster order kept, ids ascending."""
    out = [f"clustering {len(f.clusters)}"]
    out.extend("c " + " ".join(map(str, sorted(c))) for c in f.clusters)
    return ("\n".join(out) + "\n").encode("utf-8")


class RealizedGraph:
    """Result of splitting vertices of a base graph.

    Descendant vertex d of the realized graph descends from original vertex
    ``ancestors[d]``.  Every original vertex keeps at least one descendant.
    """

    __slots__ = ("base", "ancestors", "original_n")

    def __init__(self, base: CorrelationGraph, ancestors: Iterable[int], original_n: int):
        ancestors = tuple(ancestors)
        if len(ancestors) != base.n:
            raise ValueError("one ancestor per descendant vertex required")
        if original_n < 0:
            raise ValueError("negative original vertex count")
        seen = set()
        for a in ancestors:
            if not 0 <= a < original_n:
                raise ValueError(f"ancestor {a} out of range for original n={original_n}")
            seen.add(a)
        if len(seen) != original_n:
            raise ValueError("every original vertex needs at least one descendant")
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "ancestors", ancestors)
        object.__setattr__(self, "original_n", original_n)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("RealizedGraph is immutable")

    @property
    def split_count(self) -> int:
        """Number of splits applied: extra descendants beyond the originals."""
        return self.base.n - self.original_n

    def descendants(self, v: int) -> list[int]:
        """Sorted descendant ids of original vertex v."""
        if not 0 <= v < self.original_n:
            raise ValueError(f"vertex {v} out of range")
        return [d for d, a in enumerate(self.ancestors) if a == v]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RealizedGraph):
            return NotImplemented
        return (
            self.base == other.base
            and self.ancestors == other.ancestors
            and self.original_n == other.original_n
        )

    def __hash__(self) -> int:
        return hash((self.base, self.ancestors, self.original_n))

    def __repr__(self) -> str:
        return (
            f"RealizedGraph({self.base.n} descendants of {self.original_n} vertices, "
            f"{self.split_count} splits)"
        )


class _DisjointSets:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> None:
        self.parent[self.find(x)] = self.find(y)


def has_erroneous_cycle(g: CorrelationGraph) -> bool:
    """Whether some simple cycle contains exactly one red edge.

    Equivalent test: some red pair lies within one blue component.
    """
    ds = _DisjointSets(g.n)
    for u, v in g.blue_edges():
        ds.union(u, v)
    return any(ds.find(u) == ds.find(v) for u, v in g.red_edges())


def clustering_to_splits(g: CorrelationGraph, f: Clustering) -> RealizedGraph:
    """Realize a valid clustering of cost k as k vertex splits.

    One descendant is created per membership (vertex v, cluster index i).
    Descendants sharing a cluster are blue; copies of the same vertex are
    red; remaining cross pairs keep the ancestors' red label (complete
    graphs: red, incomplete: red where the ancestors were red).  The result
    has no erroneous cycle and ``split_count == cost(f, g.n)``.
    """
    report = verify_clustering(g, f)
    if not report.ok:
        raise ValueError(f"clustering is not valid for the graph: {report}")
    idx = f.membership(g.n)
    descendants = [(v, i) for v in range(g.n) for i in idx[v]]
    which = {pair: d for d, pair in enumerate(descendants)}
    edges = []
    for d1 in range(len(descendants)):
        u, i = descendants[d1]
        for d2 in range(d1 + 1, len(descendants)):
            v, j = descendants[d2]
            if u == v:
                edges.append((d1, d2, RED))
            elif i == j:
                edges.append((d1, d2, BLUE))
            else:
                color = RED if g.complete else g.label(u, v)
                if color is RED:
                    edges.append((d1, d2, RED))
    base = CorrelationGraph(len(descendants), edges, complete=g.complete)
    return RealizedGraph(base, (v for v, _ in descendants), g.n)


def _resolved(membership: list[set[int]], u: int, v: int) -> bool:
    iu, iv = membership[u], membership[v]
    if not iu or not iv:
        return False
    return not (iu == iv and len(iu) == 1)


def splits_to_clustering(r: RealizedGraph) -> Clustering:
    """Read a clustering of the original graph off a split result.

    Requires the realized base graph to have no erroneous cycle.  Each blue
    component maps to the set of its members' ancestors; duplicate sets are
    merged.  Red ancestor pairs left unresolved by the merge gain a
    singleton cluster on the smaller split endpoint.  The cost never
    exceeds ``r.split_count``.
    """
    base = r.base
    if has_erroneous_cycle(base):
        raise ValueError("realized graph has an erroneous cycle")
    comps = blue_components(base)
    clusters: list[frozenset[int]] = []
    seen: set[frozenset[int]] = set()
    for comp in comps:
        anc = frozenset(r.ancestors[d] for d in comp)
        if anc not in seen:
            seen.add(anc)
            clusters.append(anc)
    # red pairs between descendants of distinct originals must stay resolved
    red_pairs = sorted(
        {
            tuple(sorted((r.ancestors[x], r.ancestors[y])))
            for x, y in base.red_edges()
            if r.ancestors[x] != r.ancestors[y]
        }
    )
    membership: list[set[int]] = [set() for _ in range(r.original_n)]
    for i, cluster in enumerate(clusters):
        for v in cluster:
            membership[v].add(i)
    counts = [0] * r.original_n
    for a in r.ancestors:
        counts[a] += 1
    for u, v in red_pairs:
        if _resolved(membership, u, v):
            continue
        # merging duplicates can only leave (u, v) unresolved when both
        # endpoints were split; give the smaller one a singleton cluster
        split_endpoints = [w for w in (u, v) if counts[w] >= 2]
        if not split_endpoints:
            raise AssertionError("unresolved red pair with no split endpoint")
        w = min(split_endpoints)
        membership[w].add(len(clusters))
        clusters.append(frozenset((w,)))
    return Clustering(clusters)
