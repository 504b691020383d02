"""Cotrees: recognition of cographs, normal forms, and Newick serialization.

A cotree is a rooted tree whose leaves are graph vertices and whose inner
nodes are labeled 0 (disjoint union) or 1 (join). Recognition follows the
recursive decomposition: a graph with more than one vertex is either
disconnected (0-node over its components) or has a disconnected complement
(1-node over the complement components); if neither holds it contains an
induced P4 and is not a cograph.

All traversals are iterative so deep caterpillar trees do not hit the
interpreter recursion limit.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, bits, components_bits, co_components_bits

LEAF = -1


@dataclass(frozen=True)
class P4Witness:
    """Four vertices inducing the path a-b-c-d."""

    a: int
    b: int
    c: int
    d: int

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)


class NotACographError(ValueError):
    def __init__(self, witness: P4Witness):
        super().__init__("not-a-cograph")
        self.witness = witness


class NewickError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at byte {offset}")
        self.offset = offset


class Cotree:
    """Arena-based rooted cotree.

    Node ids index the parallel arrays; `label[i]` is 0, 1 or LEAF,
    `vertex[i]` is the graph vertex id of a leaf (-1 for inner nodes).
    `names`, when present, maps vertex ids to display names.
    """

    __slots__ = ("label", "children", "vertex", "root", "names")

    def __init__(self, names: tuple[str, ...] | None = None):
        self.label: list[int] = []
        self.children: list[list[int]] = []
        self.vertex: list[int] = []
        self.root = -1
        self.names = names

    def add_leaf(self, v: int) -> int:
        self.label.append(LEAF)
        self.children.append([])
        self.vertex.append(v)
        return len(self.label) - 1

    def add_inner(self, label: int, kids: list[int]) -> int:
        if label not in (0, 1):
            raise ValueError("inner label must be 0 or 1")
        if len(kids) < 2:
            raise ValueError("inner node needs at least 2 children")
        self.label.append(label)
        self.children.append(list(kids))
        self.vertex.append(-1)
        return len(self.label) - 1

    def is_leaf(self, u: int) -> bool:
        return self.label[u] == LEAF

    def n_nodes(self) -> int:
        return len(self.label)

    def n_leaves(self) -> int:
        return sum(1 for l in self.label if l == LEAF)

    def postorder(self) -> list[int]:
        out = []
        stack = [(self.root, False)]
        while stack:
            u, done = stack.pop()
            if done:
                out.append(u)
                continue
            stack.append((u, True))
            for c in reversed(self.children[u]):
                stack.append((c, False))
        return out

    def leaf_masks(self) -> list[int]:
        """Per node, bitset of graph vertices below it."""
        masks = [0] * self.n_nodes()
        for u in self.postorder():
            if self.is_leaf(u):
                masks[u] = 1 << self.vertex[u]
            else:
                m = 0
                for c in self.children[u]:
                    m |= masks[c]
                masks[u] = m
        return masks

    def leaf_lists(self) -> list[list[int]]:
        """Per node, list of graph vertices below it (left to right)."""
        lists: list[list[int]] = [[] for _ in range(self.n_nodes())]
        for u in self.postorder():
            if self.is_leaf(u):
                lists[u] = [self.vertex[u]]
            else:
                acc: list[int] = []
                for c in self.children[u]:
                    acc.extend(lists[c])
                lists[u] = acc
        return lists

    def vertex_names(self, n: int | None = None) -> tuple[str, ...]:
        if self.names is not None:
            return self.names
        if n is None:
            n = self.n_leaves()
        return tuple(f"v{i}" for i in range(n))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Cotree):
            return NotImplemented
        return _signature(self, self.root) == _signature(other, other.root)

    def __hash__(self) -> int:
        return hash(_signature(self, self.root))

    def __repr__(self) -> str:
        return f"Cotree({newick_write(self)!r})"


BinaryCotree = Cotree


def is_binary(t: Cotree) -> bool:
    return all(l == LEAF or len(c) == 2
               for l, c in zip(t.label, t.children))


def _signature(t: Cotree, root: int) -> tuple:
    """Structural signature (label, children...) used for equality."""
    sig: dict[int, tuple] = {}
    for u in t.postorder():
        if t.is_leaf(u):
            sig[u] = ("leaf", t.vertex[u])
        else:
            sig[u] = (t.label[u],) + tuple(sig[c] for c in t.children[u])
    return sig[root]


# -- recognition -----------------------------------------------------------

def _find_p4_in(adj: tuple[int, ...], sub: int) -> P4Witness:
    """Explicit quadruple search inside a stalled (non-cograph) subset."""
    verts = list(bits(sub))
    for quad in combinations(verts, 4):
        qmask = 0
        for v in quad:
            qmask |= 1 << v
        degs = [(adj[v] & qmask).bit_count() for v in quad]
        if sorted(degs) != [1, 1, 2, 2]:
            continue
        if sum(degs) != 6:
            continue
        ends = [v for v, d in zip(quad, degs) if d == 1]
        a, d = ends
        b = next(iter(bits(adj[a] & qmask)))
        c = next(iter(bits(adj[d] & qmask)))
        if adj[b] >> c & 1:
            return P4Witness(a, b, c, d)
    raise AssertionError("stalled subgraph must contain an induced P4")


def build_cotree(g: Graph) -> Cotree | P4Witness:
    """Discriminating cotree of g, or a verified P4 witness.

    Children are ordered canonically by smallest contained vertex id, so
    the result is deterministic.
    """
    if g.n == 0:
        raise ValueError("empty-graph")
    t = Cotree(names=g.names)
    adj = g.adj
    full = (1 << g.n) - 1
    out: list[int] = []
    work: list[tuple[str, object]] = [("enter", full)]
    while work:
        tag, arg = work.pop()
        if tag == "exit":
            label, k = arg  # type: ignore[misc]
            kids = out[-k:]
            del out[-k:]
            out.append(t.add_inner(label, kids))
            continue
        sub: int = arg  # type: ignore[assignment]
        if sub & (sub - 1) == 0:
            out.append(t.add_leaf(sub.bit_length() - 1))
            continue
        parts = components_bits(adj, sub)
        if len(parts) > 1:
            label = 0
        else:
            parts = co_components_bits(adj, sub)
            if len(parts) == 1:
                return _find_p4_in(adj, sub)
            label = 1
        work.append(("exit", (label, len(parts))))
        for p in reversed(parts):
            work.append(("enter", p))
    t.root = out[0]
    return t


def realized_graph(t: Cotree) -> Graph:
    """Evaluate unions/joins bottom-up to recover the cograph."""
    n = t.n_leaves()
    seen = sorted(t.vertex[u] for u in range(t.n_nodes()) if t.is_leaf(u))
    if seen != list(range(n)):
        raise ValueError("leaf vertex ids must be a bijection onto 0..n-1")
    adj = [0] * n
    masks = t.leaf_masks()
    for u in t.postorder():
        if t.label[u] == 1:
            kids = t.children[u]
            for i, c in enumerate(kids):
                others = 0
                for j, c2 in enumerate(kids):
                    if j != i:
                        others |= masks[c2]
                for v in bits(masks[c]):
                    adj[v] |= others
    names = t.names
    if names is not None and len(names) != n:
        names = None
    return Graph._from_adj(n, adj, names)


def chromatic_number(t: Cotree) -> int:
    """Bottom-up: leaf 1, union max, join sum."""
    chi = [0] * t.n_nodes()
    for u in t.postorder():
        if t.is_leaf(u):
            chi[u] = 1
        elif t.label[u] == 0:
            chi[u] = max(chi[c] for c in t.children[u])
        else:
            chi[u] = sum(chi[c] for c in t.children[u])
    return chi[t.root]


def node_chromatic_numbers(t: Cotree) -> list[int]:
    """Chromatic number of the subgraph below each node."""
    chi = [0] * t.n_nodes()
    for u in t.postorder():
        if t.is_leaf(u):
            chi[u] = 1
        elif t.label[u] == 0:
            chi[u] = max(chi[c] for c in t.children[u])
        else:
            chi[u] = sum(chi[c] for c in t.children[u])
    return chi


# -- normal forms -----------------------------------------------------------

def is_discriminating(t: Cotree) -> bool:
    """True iff adjacent inner nodes carry distinct labels."""
    for u in range(t.n_nodes()):
        if t.is_leaf(u):
            continue
        for c in t.children[u]:
            if not t.is_leaf(c) and t.label[c] == t.label[u]:
                return False
    return True


def make_discriminating(t: Cotree) -> Cotree:
    """Contract every inner edge with equal labels; canonical child order."""
    out = Cotree(names=t.names)
    built: dict[int, int] = {}
    minvert: dict[int, int] = {}
    for u in t.postorder():
        if t.is_leaf(u):
            built[u] = out.add_leaf(t.vertex[u])
            minvert[u] = t.vertex[u]
            continue
        kids: list[int] = []
        for c in t.children[u]:
            if not t.is_leaf(c) and t.label[c] == t.label[u]:
                kids.extend(out.children[built[c]])
            else:
                kids.append(built[c])
        key = {k: (out.vertex[k] if out.label[k] == LEAF
                   else min(out.vertex[x] for x in _leaves_of(out, k)))
               for k in kids}
        kids.sort(key=lambda k: key[k])
        built[u] = out.add_inner(t.label[u], kids)
        minvert[u] = min(key.values())
    out.root = built[t.root]
    return _prune_unreachable(out)


def _leaves_of(t: Cotree, u: int) -> list[int]:
    out = []
    stack = [u]
    while stack:
        x = stack.pop()
        if t.is_leaf(x):
            out.append(x)
        else:
            stack.extend(t.children[x])
    return out


def _prune_unreachable(t: Cotree) -> Cotree:
    """Rebuild keeping only nodes reachable from the root."""
    out = Cotree(names=t.names)
    built: dict[int, int] = {}
    for u in t.postorder():
        if t.is_leaf(u):
            built[u] = out.add_leaf(t.vertex[u])
        else:
            built[u] = out.add_inner(t.label[u],
                                     [built[c] for c in t.children[u]])
    out.root = built[t.root]
    return out


def to_binary(t: Cotree, strategy: str = "left-comb") -> Cotree:
    """Refine every inner node with more than 2 children into a caterpillar.

    `left-comb` keeps child order; `chi-ascending` first sorts children of
    0-nodes by ascending chromatic number (stable, so canonical order breaks
    ties), which groups equal-chromatic children contiguously.
    """
    if strategy not in ("left-comb", "chi-ascending"):
        raise ValueError(f"unknown strategy {strategy!r}")
    chi = node_chromatic_numbers(t)
    out = Cotree(names=t.names)
    built: dict[int, int] = {}
    for u in t.postorder():
        if t.is_leaf(u):
            built[u] = out.add_leaf(t.vertex[u])
            continue
        kids = list(t.children[u])
        if strategy == "chi-ascending" and t.label[u] == 0:
            kids.sort(key=lambda c: chi[c])
        acc = built[kids[0]]
        for c in kids[1:]:
            acc = out.add_inner(t.label[u], [acc, built[c]])
        built[u] = acc
    out.root = built[t.root]
    return out


def align_to_graph(t: Cotree, g: Graph) -> Cotree:
    """Remap leaf vertex ids so they refer to g's ids, matching by name."""
    tnames = t.vertex_names(g.n)
    if sorted(tnames) != sorted(g.vertex_names()):
        raise ValueError("cotree-graph-mismatch")
    gid = g.name_to_id()
    out = Cotree(names=g.names)
    built: dict[int, int] = {}
    for u in t.postorder():
        if t.is_leaf(u):
            built[u] = out.add_leaf(gid[tnames[t.vertex[u]]])
        else:
            built[u] = out.add_inner(t.label[u],
                                     [built[c] for c in t.children[u]])
    out.root = built[t.root]
    return out


def realizes(t: Cotree, g: Graph) -> bool:
    if t.n_leaves() != g.n:
        return False
    try:
        return realized_graph(t).adj == g.adj
    except ValueError:
        return False


# -- Newick serialization ----------------------------------------------------

_RESERVED = set("(),;")


def newick_write(t: Cotree) -> str:
    names = t.vertex_names()
    text: dict[int, str] = {}
    for u in t.postorder():
        if t.is_leaf(u):
            text[u] = names[t.vertex[u]]
        else:
            inner = ",".join(text[c] for c in t.children[u])
            text[u] = f"({inner}){t.label[u]}"
    return text[t.root] + ";"


def newick_read(s: str) -> Cotree:
    """Parse a cotree; leaf ids are assigned in order of appearance."""
    t = Cotree()
    pos = 0
    n = len(s)
    leaf_names: list[str] = []

    def error(msg: str) -> NewickError:
        return NewickError(msg, pos)

    def skip_ws() -> None:
        nonlocal pos
        while pos < n and s[pos].isspace():
            pos += 1

    def parse_name() -> str:
        nonlocal pos
        start = pos
        while pos < n and s[pos] not in _RESERVED and not s[pos].isspace():
            pos += 1
        if pos == start:
            raise error("parse-error: expected leaf name")
        return s[start:pos]

    def parse_subtree() -> int:
        nonlocal pos
        skip_ws()
        if pos >= n:
            raise error("parse-error: unexpected end of input")
        if s[pos] != "(":
            name = parse_name()
            if name in leaf_names:
                raise error(f"parse-error: duplicate leaf name {name!r}")
            leaf_names.append(name)
            return t.add_leaf(len(leaf_names) - 1)
        pos += 1
        kids = [parse_subtree()]
        skip_ws()
        while pos < n and s[pos] == ",":
            pos += 1
            kids.append(parse_subtree())
            skip_ws()
        if pos >= n or s[pos] != ")":
            raise error("parse-error: expected ',' or ')'")
        pos += 1
        if len(kids) < 2:
            raise error("parse-error: inner node needs at least 2 children")
        if pos >= n or s[pos] in _RESERVED or s[pos].isspace():
            raise error("bad-label")
        label_txt = parse_name()
        if label_txt not in ("0", "1"):
            raise error("bad-label")
        return t.add_inner(int(label_txt), kids)

    root = parse_subtree()
    skip_ws()
    if pos >= n or s[pos] != ";":
        raise error("parse-error: expected ';'")
    pos += 1
    skip_ws()
    if pos != n:
        raise error("parse-error: trailing input")
    t.root = root
    t.names = tuple(leaf_names)
    return t
