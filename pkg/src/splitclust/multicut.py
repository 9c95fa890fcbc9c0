"""Multicut with vertex splitting, and reductions to and from clustering.

An instance is a plain graph plus terminal pairs and a split budget k.  A
split of vertex v partitions its neighborhood into parts, one new copy of
v per part (parts may be empty, which is how a copy with no edges
arises).  Splitting a vertex removes every terminal pair it appears in; a
solution is a set of splits after which all remaining terminal pairs are
disconnected.  Its cost is the number of extra copies.

Blue edges map to edges and red pairs to terminal pairs: a correlation
graph has a clustering of cost k exactly when the derived multicut
instance has a solution of cost k.  The translations below convert
solutions in both directions without raising the cost.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping

from .clustering import Clustering, RealizedGraph, splits_to_clustering, verify_clustering
from .graphs import (
    BLUE,
    RED,
    CorrelationGraph,
    FormatError,
    incomplete_graph,
    significant_lines,
)


def _pair(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class MulticutInstance:
    """Graph, terminal pairs, and split budget.  Immutable."""

    __slots__ = ("n", "edges", "terminals", "k", "_adj")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]],
        terminals: Iterable[tuple[int, int]],
        k: int,
    ):
        if n < 0:
            raise ValueError("negative vertex count")
        if k < 0:
            raise ValueError("negative split budget")
        edge_set = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop on vertex {u}")
            edge_set.add(_pair(u, v))
        term_set = set()
        for u, v in terminals:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"terminal pair ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"terminal pair ({u},{u}) is degenerate")
            term_set.add(_pair(u, v))
        if edge_set & term_set:
            raise ValueError("terminal pairs must not be edges")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(edge_set))
        object.__setattr__(self, "terminals", frozenset(term_set))
        object.__setattr__(self, "k", k)
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in edge_set:
            adj[u].append(v)
            adj[v].append(u)
        for row in adj:
            row.sort()
        object.__setattr__(self, "_adj", adj)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("MulticutInstance is immutable")

    def neighbors(self, v: int) -> list[int]:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range")
        return list(self._adj[v])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MulticutInstance):
            return NotImplemented
        return (
            self.n == other.n
            and self.edges == other.edges
            and self.terminals == other.terminals
            and self.k == other.k
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges, self.terminals, self.k))

    def __repr__(self) -> str:
        return (
            f"MulticutInstance(n={self.n}, {len(self.edges)} edges, "
            f"{len(self.terminals)} terminals, k={self.k})"
        )


class MulticutSolution:
    """Per-vertex neighborhood partitions; cost = extra copies created.

    Parts are normalized: nonempty parts first ordered by smallest member,
    empty parts last.  Every split has at least two parts.
    """

    __slots__ = ("splits",)

    splits: tuple[tuple[int, tuple[frozenset[int], ...]], ...]

    def __init__(self, splits: Mapping[int, Iterable[Iterable[int]]]):
        normalized = []
        for v in sorted(splits):
            if v < 0:
                raise ValueError(f"negative vertex id {v}")
            parts = [frozenset(p) for p in splits[v]]
            if len(parts) < 2:
                raise ValueError(f"split of {v} needs at least two parts")
            union: set[int] = set()
            total = 0
            for part in parts:
                union |= part
                total += len(part)
            if len(union) != total:
                raise ValueError(f"parts of {v} must be disjoint")
            parts.sort(key=lambda p: (not p and 1, min(p) if p else -1))
            normalized.append((v, tuple(parts)))
        object.__setattr__(self, "splits", tuple(normalized))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("MulticutSolution is immutable")

    @property
    def cost(self) -> int:
        return sum(len(parts) - 1 for _, parts in self.splits)

    @property
    def split_vertices(self) -> frozenset[int]:
        return frozenset(v for v, _ in self.splits)

    def parts_of(self, v: int) -> tuple[frozenset[int], ...] | None:
        for u, parts in self.splits:
            if u == v:
                return parts
        return None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MulticutSolution):
            return NotImplemented
        return self.splits == other.splits

    def __hash__(self) -> int:
        return hash(self.splits)

    def __repr__(self) -> str:
        return f"MulticutSolution({len(self.splits)} splits, cost {self.cost})"


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


def _split_layout(
    inst: MulticutInstance, sol: MulticutSolution
) -> tuple[list[int], dict[int, int], dict[tuple[int, int], int]]:
    """Descendant ids: ancestors list, unsplit vertex -> id, (v, part) -> id.

    Also checks each split partitions the neighborhood, raising ValueError
    otherwise.
    """
    split_parts = dict(sol.splits)
    for v, parts in sol.splits:
        if v >= inst.n:
            raise ValueError(f"split vertex {v} out of range")
        union: set[int] = set()
        for part in parts:
            union |= part
        if union != set(inst.neighbors(v)):
            raise ValueError(f"parts of {v} must cover exactly its neighborhood")
    ancestors: list[int] = []
    plain_id: dict[int, int] = {}
    part_id: dict[tuple[int, int], int] = {}
    for v in range(inst.n):
        if v in split_parts:
            for i in range(len(split_parts[v])):
                part_id[(v, i)] = len(ancestors)
                ancestors.append(v)
        else:
            plain_id[v] = len(ancestors)
            ancestors.append(v)
    return ancestors, plain_id, part_id


def _owner(
    sol_parts: dict[int, tuple[frozenset[int], ...]],
    plain_id: dict[int, int],
    part_id: dict[tuple[int, int], int],
    v: int,
    neighbor: int,
) -> int:
    """Descendant id of v's copy that keeps the edge to the neighbor."""
    if v in plain_id:
        return plain_id[v]
    for i, part in enumerate(sol_parts[v]):
        if neighbor in part:
            return part_id[(v, i)]
    raise AssertionError("neighborhood partition misses a neighbor")


def verify_multicut_solution(inst: MulticutInstance, sol: MulticutSolution) -> bool:
    """Whether all terminal pairs not removed by splits end up disconnected."""
    ancestors, plain_id, part_id = _split_layout(inst, sol)
    sol_parts = dict(sol.splits)
    ds = _DisjointSets(len(ancestors))
    for u, v in inst.edges:
        du = _owner(sol_parts, plain_id, part_id, u, v)
        dv = _owner(sol_parts, plain_id, part_id, v, u)
        ds.union(du, dv)
    for u, v in inst.terminals:
        if u in plain_id and v in plain_id:
            if ds.find(plain_id[u]) == ds.find(plain_id[v]):
                return False
    return True


def ccvs_to_mcvs(g: CorrelationGraph, k: int) -> MulticutInstance:
    """Blue pairs become edges, red pairs become terminal pairs."""
    return MulticutInstance(g.n, g.blue_edges(), g.red_edges(), k)


def mcvs_to_ccvs(inst: MulticutInstance) -> tuple[CorrelationGraph, int]:
    """Edges become blue pairs, terminal pairs red; the rest is neutral."""
    return incomplete_graph(inst.n, inst.edges, inst.terminals), inst.k


def clustering_to_multicut_solution(
    g: CorrelationGraph, f: Clustering
) -> MulticutSolution:
    """Split each multi-cluster vertex by which cluster keeps each neighbor.

    A blue neighbor u of v goes to the part of v's smallest cluster shared
    with u.  The solution verifies against ``ccvs_to_mcvs(g, k)`` and its
    cost equals ``cost(f, g.n)``.
    """
    report = verify_clustering(g, f)
    if not report.ok:
        raise ValueError(f"clustering is not valid for the graph: {report}")
    idx = [set(w) for w in f.membership(g.n)]
    splits: dict[int, list[set[int]]] = {}
    for v in range(g.n):
        if len(idx[v]) < 2:
            continue
        order = sorted(idx[v])
        position = {i: pos for pos, i in enumerate(order)}
        parts: list[set[int]] = [set() for _ in order]
        for u in g.blue_neighbors(v):
            shared = min(idx[v] & idx[u])
            parts[position[shared]].add(u)
        splits[v] = parts
    return MulticutSolution(splits)


def multicut_solution_to_clustering(
    inst: MulticutInstance, sol: MulticutSolution
) -> Clustering:
    """Read a clustering off a verified multicut solution, cost-nonincreasing.

    The split copies realize the instance's correlation graph with blue
    components free of terminals, so the component ancestor sets form a
    clustering; terminal pairs whose resolution was lost to a removed pair
    get a singleton on the smaller split endpoint.
    """
    if not verify_multicut_solution(inst, sol):
        raise ValueError("solution does not separate all terminal pairs")
    ancestors, plain_id, part_id = _split_layout(inst, sol)
    sol_parts = dict(sol.splits)
    edges = []
    for u, v in sorted(inst.edges):
        du = _owner(sol_parts, plain_id, part_id, u, v)
        dv = _owner(sol_parts, plain_id, part_id, v, u)
        edges.append((du, dv, BLUE))
    for u, v in sorted(inst.terminals):
        if u in plain_id and v in plain_id:
            edges.append((plain_id[u], plain_id[v], RED))
    base = CorrelationGraph(len(ancestors), edges, complete=False)
    f = splits_to_clustering(RealizedGraph(base, ancestors, inst.n))
    clusters = list(f.clusters)
    membership: list[set[int]] = [set() for _ in range(inst.n)]
    for i, cluster in enumerate(clusters):
        for v in cluster:
            membership[v].add(i)
    split_set = sol.split_vertices
    for u, v in sorted(inst.terminals):
        iu, iv = membership[u], membership[v]
        if iu and iv and not (iu == iv and len(iu) == 1):
            continue
        endpoints = [w for w in (u, v) if w in split_set]
        if not endpoints:
            raise AssertionError("unresolved terminal pair with no split endpoint")
        w = min(endpoints)
        membership[w].add(len(clusters))
        clusters.append(frozenset((w,)))
    return Clustering(clusters)


def parse_multicut_instance(data: bytes | str) -> MulticutInstance:
    """Parse the ``mcvs`` format: header, e lines, t lines."""
    lines = significant_lines(data)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise FormatError("empty document: missing mcvs header") from None
    fields = header.split()
    if len(fields) != 5 or fields[0] != "mcvs":
        raise FormatError(f"line {lineno}: expected 'mcvs <n> <m> <t> <k>'")
    try:
        n, m, t, k = (int(x) for x in fields[1:])
    except ValueError:
        raise FormatError(f"line {lineno}: header fields must be integers") from None
    if min(n, m, t, k) < 0:
        raise FormatError(f"line {lineno}: negative header field")
    edges = []
    terminals = []
    for lineno, line in lines:
        fields = line.split()
        if len(fields) != 3 or fields[0] not in ("e", "t"):
            raise FormatError(f"line {lineno}: expected 'e <u> <v>' or 't <u> <v>'")
        try:
            u, v = int(fields[1]), int(fields[2])
        except ValueError:
            raise FormatError(f"line {lineno}: vertex ids must be integers") from None
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"line {lineno}: vertex id out of range for n={n}")
        if u == v:
            raise FormatError(f"line {lineno}: self-loop on vertex {u}")
        (edges if fields[0] == "e" else terminals).append((u, v))
    distinct_edges = {_pair(u, v) for u, v in edges}
    if len(distinct_edges) != m:
        raise FormatError(f"header says {m} edges, found {len(distinct_edges)}")
    distinct_terminals = {_pair(u, v) for u, v in terminals}
    if len(distinct_terminals) != t:
        raise FormatError(f"header says {t} terminal pairs, found {len(distinct_terminals)}")
    try:
        return MulticutInstance(n, edges, terminals, k)
    except ValueError as exc:
        raise FormatError(f"inconsistent instance: {exc}") from None


def write_multicut_instance(inst: MulticutInstance) -> bytes:
    """Canonical ``mcvs`` form: sorted e lines, then sorted t lines."""
    out = [f"mcvs {inst.n} {len(inst.edges)} {len(inst.terminals)} {inst.k}"]
    out.extend(f"e {u} {v}" for u, v in sorted(inst.edges))
    out.extend(f"t {u} {v}" for u, v in sorted(inst.terminals))
    return ("\n".join(out) + "\n").encode("utf-8")


def parse_multicut_solution(data: bytes | str) -> tuple[int, MulticutSolution]:
    """Parse the ``mcsol`` format; returns (vertex count, solution)."""
    lines = significant_lines(data)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise FormatError("empty document: missing mcsol header") from None
    fields = header.split()
    if len(fields) != 2 or fields[0] != "mcsol":
        raise FormatError(f"line {lineno}: expected 'mcsol <n>'")
    try:
        n = int(fields[1])
    except ValueError:
        raise FormatError(f"line {lineno}: vertex count must be an integer") from None
    if n < 0:
        raise FormatError(f"line {lineno}: negative vertex count")
    splits: dict[int, list[list[int]]] = {}
    for lineno, line in lines:
        fields = line.split()
        if len(fields) < 3 or fields[0] != "s" or fields[2] != ":":
            raise FormatError(f"line {lineno}: expected 's <v> : <part> | <part> ...'")
        try:
            v = int(fields[1])
        except ValueError:
            raise FormatError(f"line {lineno}: vertex id must be an integer") from None
        if not 0 <= v < n:
            raise FormatError(f"line {lineno}: vertex id out of range for n={n}")
        if v in splits:
            raise FormatError(f"line {lineno}: duplicate split for vertex {v}")
        parts: list[list[str]] = [[]]
        for token in fields[3:]:
            if token == "|":
                parts.append([])
            else:
                parts[-1].append(token)
        if len(parts) < 2:
            raise FormatError(f"line {lineno}: a split needs at least two parts")
        try:
            ids = [[int(x) for x in part] for part in parts]
        except ValueError:
            raise FormatError(f"line {lineno}: vertex ids must be integers") from None
        for part in ids:
            if any(x < 0 or x >= n for x in part):
                raise FormatError(f"line {lineno}: part member out of range for n={n}")
            if any(a >= b for a, b in zip(part, part[1:])):
                raise FormatError(f"line {lineno}: part ids must be strictly increasing")
        splits[v] = ids
    try:
        return n, MulticutSolution(splits)
    except ValueError as exc:
        raise FormatError(f"inconsistent solution: {exc}") from None


def write_multicut_solution(n: int, sol: MulticutSolution) -> bytes:
    """Canonical ``mcsol`` form: one s line per split vertex, ascending."""
    out = [f"mcsol {n}"]
    for v, parts in sol.splits:
        rendered = " | ".join(" ".join(map(str, sorted(p))) for p in parts)
        out.append(f"s {v} : {rendered}".rstrip())
    return ("\n".join(out) + "\n").encode("utf-8")
