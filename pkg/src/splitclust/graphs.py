"""Correlation graphs: vertex pairs labeled blue (similar) or red (dissimilar).

A graph is either complete, meaning every pair carries a blue or red label,
or incomplete, meaning unlabeled pairs are neutral (no information).  The
text format is line oriented::

    ccg <n> complete|incomplete
    e <u> <v> b
    e <u> <v> r

Lines starting with ``#`` and blank lines are ignored.  Pairs not listed
default to red in complete graphs and neutral in incomplete ones.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable, Iterator

MAX_VERTICES = 100_000


class FormatError(ValueError):
    """A text document does not conform to its file format."""


class EdgeColor(enum.Enum):
    BLUE = "b"
    RED = "r"
    NEUTRAL = "n"


BLUE = EdgeColor.BLUE
RED = EdgeColor.RED
NEUTRAL = EdgeColor.NEUTRAL


def _pair(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class CorrelationGraph:
    """Immutable graph on vertices 0..n-1 with labeled unordered pairs.

    Only non-default labels are stored: blue pairs for complete graphs,
    blue and red pairs for incomplete ones.  Lookup of any pair is O(1).
    """

    __slots__ = ("n", "complete", "_labels", "_blue_adj")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int, EdgeColor]] = (),
        *,
        complete: bool,
    ):
        if not isinstance(n, int) or n < 0:
            raise ValueError(f"vertex count must be a non-negative int, got {n!r}")
        if n > MAX_VERTICES:
            raise ValueError(f"vertex count {n} exceeds the cap of {MAX_VERTICES}")
        default = RED if complete else NEUTRAL
        labels: dict[tuple[int, int], EdgeColor] = {}
        for u, v, color in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop on vertex {u}")
            if not isinstance(color, EdgeColor):
                raise ValueError(f"not an edge color: {color!r}")
            if color is NEUTRAL and complete:
                raise ValueError(
                    f"pair ({u},{v}) marked neutral in a complete graph"
                )
            key = _pair(u, v)
            seen = labels.get(key, None)
            if seen is not None and seen is not color:
                raise ValueError(f"conflicting colors for pair {key}")
            labels[key] = color
        # normalize: drop default-colored pairs so equality is structural
        object.__setattr__(
            self,
            "_labels",
            {k: c for k, c in labels.items() if c is not default},
        )
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "complete", complete)
        adj: list[list[int]] = [[] for _ in range(n)]
        for (u, v), c in self._labels.items():
            if c is BLUE:
                adj[u].append(v)
                adj[v].append(u)
        for row in adj:
            row.sort()
        object.__setattr__(self, "_blue_adj", adj)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("CorrelationGraph is immutable")

    def label(self, u: int, v: int) -> EdgeColor:
        """Color of the unordered pair (u, v)."""
        if not (0 <= u < self.n and 0 <= v < self.n) or u == v:
            raise ValueError(f"not a vertex pair of this graph: ({u},{v})")
        default = RED if self.complete else NEUTRAL
        return self._labels.get(_pair(u, v), default)

    def blue_neighbors(self, v: int) -> list[int]:
        """Sorted blue neighbors of v."""
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range")
        return list(self._blue_adj[v])

    def blue_edges(self) -> list[tuple[int, int]]:
        """All blue pairs, sorted."""
        return sorted(k for k, c in self._labels.items() if c is BLUE)

    def red_edges(self) -> list[tuple[int, int]]:
        """All red pairs, sorted.  O(n^2) for complete graphs."""
        if not self.complete:
            return sorted(k for k, c in self._labels.items() if c is RED)
        blue = {k for k, c in self._labels.items() if c is BLUE}
        return [
            (u, v)
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if (u, v) not in blue
        ]

    def colored_pairs(self) -> Iterator[tuple[int, int, EdgeColor]]:
        """All non-neutral pairs (u, v, color), sorted by (u, v)."""
        if self.complete:
            blue = {k for k, c in self._labels.items() if c is BLUE}
            for u in range(self.n):
                for v in range(u + 1, self.n):
                    yield u, v, (BLUE if (u, v) in blue else RED)
        else:
            for (u, v), c in sorted(self._labels.items()):
                yield u, v, c

    def count_colors(self) -> tuple[int, int]:
        """(blue pair count, red pair count)."""
        n_blue = sum(1 for c in self._labels.values() if c is BLUE)
        if self.complete:
            return n_blue, self.n * (self.n - 1) // 2 - n_blue
        return n_blue, sum(1 for c in self._labels.values() if c is RED)

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple["CorrelationGraph", tuple[int, ...]]:
        """Subgraph induced on the given vertices, re-indexed to 0..m-1.

        Returns the subgraph and the sorted tuple mapping new ids to old.
        """
        keep = sorted(set(vertices))
        for v in keep:
            if not 0 <= v < self.n:
                raise ValueError(f"vertex {v} out of range")
        index = {old: new for new, old in enumerate(keep)}
        edges = [
            (index[u], index[v], c)
            for (u, v), c in self._labels.items()
            if u in index and v in index
        ]
        return (
            CorrelationGraph(len(keep), edges, complete=self.complete),
            tuple(keep),
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CorrelationGraph):
            return NotImplemented
        return (
            self.n == other.n
            and self.complete == other.complete
            and self._labels == other._labels
        )

    def __hash__(self) -> int:
        return hash((self.n, self.complete, frozenset(self._labels.items())))

    def __repr__(self) -> str:
        kind = "complete" if self.complete else "incomplete"
        return f"CorrelationGraph(n={self.n}, {kind}, {len(self._labels)} stored pairs)"


def complete_graph(n: int, blue: Iterable[tuple[int, int]]) -> CorrelationGraph:
    """Complete graph with the given blue pairs; every other pair is red."""
    return CorrelationGraph(n, [(u, v, BLUE) for u, v in blue], complete=True)


def incomplete_graph(
    n: int,
    blue: Iterable[tuple[int, int]] = (),
    red: Iterable[tuple[int, int]] = (),
) -> CorrelationGraph:
    """Incomplete graph with the given blue and red pairs; the rest neutral."""
    edges = [(u, v, BLUE) for u, v in blue]
    edges += [(u, v, RED) for u, v in red]
    return CorrelationGraph(n, edges, complete=False)


def blue_components(
    g: CorrelationGraph, within: Iterable[int] | None = None
) -> list[list[int]]:
    """Connected components of the blue subgraph, optionally restricted.

    Components are ordered by smallest member; members are sorted.
    """
    if within is None:
        pool = range(g.n)
    else:
        pool = sorted(set(within))
        for v in pool:
            if not 0 <= v < g.n:
                raise ValueError(f"vertex {v} out of range")
    pool_set = set(pool)
    seen: set[int] = set()
    components: list[list[int]] = []
    for start in pool:
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        stack = [start]
        while stack:
            u = stack.pop()
            for w in g.blue_neighbors(u):
                if w in pool_set and w not in seen:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        comp.sort()
        components.append(comp)
    return components


def cluster_decomposition(
    g: CorrelationGraph, within: Iterable[int] | None = None
) -> list[frozenset[int]] | None:
    """Blue components as cliques, or None if some component is not a clique.

    A graph whose blue components are all blue cliques is a cluster graph;
    the decomposition lists the cliques ordered by smallest member.
    """
    comps = blue_components(g, within)
    out: list[frozenset[int]] = []
    for comp in comps:
        for i, u in enumerate(comp):
            for v in comp[i + 1 :]:
                if g.label(u, v) is not BLUE:
                    return None
        out.append(frozenset(comp))
    return out


def _decode(data: bytes | str) -> str:
    if isinstance(data, bytes):
        try:
            return data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise FormatError(f"not valid UTF-8: {exc}") from None
    return data


def significant_lines(data: bytes | str) -> Iterator[tuple[int, str]]:
    """(line number, stripped text) for lines that are not blank or comments."""
    for lineno, raw in enumerate(_decode(data).splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def parse_graph(data: bytes | str) -> CorrelationGraph:
    """Parse the ``ccg`` text format."""
    lines = significant_lines(data)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise FormatError("empty document: missing ccg header") from None
    fields = header.split()
    if len(fields) != 3 or fields[0] != "ccg":
        raise FormatError(f"line {lineno}: expected 'ccg <n> complete|incomplete'")
    try:
        n = int(fields[1])
    except ValueError:
        raise FormatError(f"line {lineno}: vertex count {fields[1]!r} is not an integer") from None
    if n < 0:
        raise FormatError(f"line {lineno}: negative vertex count {n}")
    if n > MAX_VERTICES:
        raise FormatError(f"line {lineno}: vertex count {n} exceeds the cap of {MAX_VERTICES}")
    if fields[2] not in ("complete", "incomplete"):
        raise FormatError(f"line {lineno}: unknown graph kind {fields[2]!r}")
    complete = fields[2] == "complete"
    edges: list[tuple[int, int, EdgeColor]] = []
    seen: dict[tuple[int, int], EdgeColor] = {}
    for lineno, line in lines:
        fields = line.split()
        if fields[0] != "e" or len(fields) != 4:
            raise FormatError(f"line {lineno}: expected 'e <u> <v> b|r'")
        try:
            u, v = int(fields[1]), int(fields[2])
        except ValueError:
            raise FormatError(f"line {lineno}: vertex ids must be integers") from None
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"line {lineno}: vertex id out of range for n={n}")
        if u == v:
            raise FormatError(f"line {lineno}: self-loop on vertex {u}")
        if fields[3] == "b":
            color = BLUE
        elif fields[3] == "r":
            color = RED
        else:
            raise FormatError(f"line {lineno}: unknown color {fields[3]!r}")
        key = _pair(u, v)
        prev = seen.get(key)
        if prev is not None and prev is not color:
            raise FormatError(f"line {lineno}: conflicting colors for pair {key}")
        seen[key] = color
        edges.append((u, v, color))
    return CorrelationGraph(n, edges, complete=complete)


def write_graph(g: CorrelationGraph) -> bytes:
    """Serialize to the canonical ``ccg`` form: sorted edges, u < v.

    Complete graphs list only blue pairs; incomplete graphs list blue and
    red pairs.  ``parse_graph(write_graph(g)) == g``.
    """
    kind = "complete" if g.complete else "incomplete"
    out = [f"ccg {g.n} {kind}"]
    if g.complete:
        listed = [(u, v, BLUE) for u, v in g.blue_edges()]
    else:
        listed = sorted(
            (u, v, c) for (u, v), c in g._labels.items()
        )
    out.extend(f"e {u} {v} {c.value}" for u, v, c in listed)
    return ("\n".join(out) + "\n").encode("utf-8")
