"""Undirected simple graphs over dense integer vertex ids.

Adjacency is kept as one Python int bitset per vertex, which makes
complementation and component extraction cheap even for a few thousand
vertices. Vertices optionally carry distinct string names for CLI
traceability; names survive induced subgraphs, unions and joins.
"""

from __future__ import annotations

from typing import Iterable, Iterator

VertexSet = tuple[int, ...]


class GraphFormatError(ValueError):
    """Raised on malformed edge-list input."""


class Graph:
    """Immutable undirected simple graph on vertices 0..n-1."""

    __slots__ = ("n", "names", "adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = (),
                 names: tuple[str, ...] | None = None):
        if n < 0:
            raise ValueError("negative vertex count")
        if names is not None:
            names = tuple(names)
            if len(names) != n:
                raise ValueError("name count does not match vertex count")
            if len(set(names)) != n:
                raise ValueError("vertex names must be distinct")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError("bad-vertex-id")
            if u == v:
                raise ValueError("self-loop")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.names = names
        self.adj = tuple(adj)

    @classmethod
    def _from_adj(cls, n: int, adj: Iterable[int],
                  names: tuple[str, ...] | None) -> "Graph":
        g = object.__new__(cls)
        g.n = n
        g.names = names
        g.adj = tuple(adj)
        return g

    # -- basic queries ----------------------------------------------------

    def vertex_names(self) -> tuple[str, ...]:
        if self.names is not None:
            return self.names
        return tuple(f"v{i}" for i in range(self.n))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edge_count(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as (u, v) with u < v, lexicographically sorted."""
        for u in range(self.n):
            rest = self.adj[u] >> (u + 1) << (u + 1)
            while rest:
                low = rest & -rest
                yield u, low.bit_length() - 1
                rest ^= low

    def name_to_id(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.vertex_names())}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.n == other.n and self.names == other.names
                and self.adj == other.adj)

    def __hash__(self) -> int:
        return hash((self.n, self.names, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count()})"


# -- bitset helpers (shared by the cotree decomposition) ------------------

def bits(mask: int) -> Iterator[int]:
    """Indices of set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def components_bits(adj: tuple[int, ...], sub: int) -> list[int]:
    """Connected components of the subgraph induced by bitset `sub`.

    Returned as bitsets, ordered by smallest member.
    """
    out = []
    remaining = sub
    while remaining:
        start = remaining & -remaining
        comp = 0
        frontier = start
        while frontier:
            comp |= frontier
            nxt = 0
            for v in bits(frontier):
                nxt |= adj[v]
            frontier = nxt & remaining & ~comp
        out.append(comp)
        remaining &= ~comp
    return out


def co_components_bits(adj: tuple[int, ...], sub: int) -> list[int]:
    """Components of the complement of the subgraph induced by `sub`."""
    out = []
    remaining = sub
    while remaining:
        start = remaining & -remaining
        comp = 0
        frontier = start
        while frontier:
            comp |= frontier
            nxt = 0
            for v in bits(frontier):
                nxt |= ~adj[v] & sub & ~(1 << v)
            frontier = nxt & remaining & ~comp
        out.append(comp)
        remaining &= ~comp
    return out


# -- elementary operations -------------------------------------------------

def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    adj = [full & ~g.adj[v] & ~(1 << v) for v in range(g.n)]
    return Graph._from_adj(g.n, adj, g.names)


def induced_subgraph(g: Graph, vs: Iterable[int]) -> Graph:
    """Subgraph on `vs`, vertex ids re-indexed densely, names preserved."""
    ids = sorted(set(vs))
    if not ids:
        raise ValueError("empty-induced-set")
    if ids[0] < 0 or ids[-1] >= g.n:
        raise ValueError("bad-vertex-id")
    pos = {v: i for i, v in enumerate(ids)}
    mask = 0
    for v in ids:
        mask |= 1 << v
    adj = [0] * len(ids)
    for v in ids:
        i = pos[v]
        for u in bits(g.adj[v] & mask):
            adj[i] |= 1 << pos[u]
    names = None
    if g.names is not None:
        names = tuple(g.names[v] for v in ids)
    return Graph._from_adj(len(ids), adj, names)


def connected_components(g: Graph) -> list[VertexSet]:
    """Partition into maximal connected sets, ordered by smallest member."""
    full = (1 << g.n) - 1
    return [tuple(bits(c)) for c in components_bits(g.adj, full)]


def _resolve_names(gs: list[Graph]) -> tuple[str, ...] | None:
    if all(g.names is None for g in gs):
        return None
    seen: set[str] = set()
    out = []
    for g in gs:
        for name in g.vertex_names():
            if name in seen:
                k = 2
                while f"{name}.{k}" in seen:
                    k += 1
                name = f"{name}.{k}"
            seen.add(name)
            out.append(name)
    return tuple(out)


def disjoint_union(gs: list[Graph]) -> Graph:
    """Vertex-disjoint union with ids shifted block by block."""
    if not gs:
        raise ValueError("empty graph list")
    n = sum(g.n for g in gs)
    adj = []
    offset = 0
    for g in gs:
        adj.extend(a << offset for a in g.adj)
        offset += g.n
    return Graph._from_adj(n, adj, _resolve_names(gs))


def join(gs: list[Graph]) -> Graph:
    """Disjoint union plus all edges between distinct constituents."""
    if not gs:
        raise ValueError("empty graph list")
    base = disjoint_union(gs)
    n = base.n
    full = (1 << n) - 1
    adj = list(base.adj)
    offset = 0
    for g in gs:
        block = ((1 << g.n) - 1) << offset
        outside = full & ~block
        for v in range(offset, offset + g.n):
            adj[v] |= outside
        offset += g.n
    return Graph._from_adj(n, adj, base.names)


# -- edge-list text format -------------------------------------------------

def write_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"]
    if g.names is not None:
        lines.append("names " + " ".join(g.names))
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def read_edge_list(text: str) -> Graph:
    n = None
    names: tuple[str, ...] | None = None
    edges = []
    lookup: dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if parts[0] != "n" or len(parts) != 2 or not parts[1].isdigit():
                raise GraphFormatError(f"line {lineno}: expected 'n <count>'")
            n = int(parts[1])
            lookup = {f"v{i}": i for i in range(n)}
            continue
        if parts[0] == "names" and not edges and names is None:
            if len(parts) != n + 1:
                raise GraphFormatError(f"line {lineno}: expected {n} names")
            names = tuple(parts[1:])
            if len(set(names)) != n:
                raise GraphFormatError(f"line {lineno}: duplicate names")
            lookup = {name: i for i, name in enumerate(names)}
            continue
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'u v'")
        try:
            uv = []
            for tok in parts:
                if tok in lookup:
                    uv.append(lookup[tok])
                else:
                    uv.append(int(tok))
            u, v = uv
            if not (0 <= u < n and 0 <= v < n) or u == v:
                raise ValueError
        except ValueError:
            raise GraphFormatError(f"line {lineno}: bad edge {line!r}") from None
        edges.append((u, v))
    if n is None:
        raise GraphFormatError("missing 'n <count>' header")
    return Graph(n, edges, names)
