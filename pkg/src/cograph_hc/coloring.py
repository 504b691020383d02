"""Colorings of cographs: greedy coloring and hc-axiom verification.

A coloring is a dict mapping every vertex id of its graph to a positive
integer color. Verification treats colors as opaque labels; only the set
relations between child color sets matter (disjoint at joins, nested at
unions).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, bits, components_bits, co_components_bits
from .cotree import (Cotree, NotACographError, _find_p4_in, is_binary,
                     realizes)

Coloring = dict[int, int]


@dataclass(frozen=True)
class Verdict:
    """Outcome of an hc verification; rejections carry a certificate."""

    accepted: bool
    node: int | None = None
    axiom: str | None = None  # "K2", "K3" or "proper"
    sets: tuple[frozenset[int], frozenset[int]] | None = None

    def __bool__(self) -> bool:
        return self.accepted


def color_set(c: Coloring) -> frozenset[int]:
    return frozenset(c.values())


def _check_domain(g: Graph, c: Coloring) -> None:
    if set(c) != set(range(g.n)):
        raise ValueError("coloring-domain-mismatch")
    if any(col < 1 for col in c.values()):
        raise ValueError("colors must be positive integers")


def is_proper(g: Graph, c: Coloring) -> bool:
    _check_domain(g, c)
    return all(c[u] != c[v] for u, v in g.edges())


def greedy_coloring(g: Graph, order: Sequence[int]) -> Coloring:
    """Color vertices in `order` with the first available color."""
    if sorted(order) != list(range(g.n)):
        raise ValueError("order is not a permutation of the vertices")
    c: Coloring = {}
    for v in order:
        used = 0
        for u in bits(g.adj[v]):
            if u in c:
                used |= 1 << c[u]
        col = 1
        while used >> col & 1:
            col += 1
        c[v] = col
    return c


def is_greedy(g: Graph, c: Coloring) -> bool:
    """Decide whether some vertex order produces c.

    Witness condition: the colors form {1..k} and every vertex with color j
    has a neighbor of every color 1..j-1.
    """
    _check_domain(g, c)
    if not is_proper(g, c):
        raise ValueError("not-proper")
    colors = set(c.values())
    if colors != set(range(1, len(colors) + 1)):
        return False
    for v in range(g.n):
        want = (1 << c[v]) - 2  # bits 1..c[v]-1
        seen = 0
        for u in bits(g.adj[v]):
            seen |= 1 << c[u]
        if seen & want != want:
            return False
    return True


# -- verification against a fixed binary cotree ------------------------------

def verify_hc(g: Graph, t: Cotree, c: Coloring,
              check_tree: bool = True) -> Verdict:
    """Check axioms K1-K3 bottom-up against a binary cotree of g.

    Joins require disjoint child color sets (K2); unions require one child
    color set to contain the other (K3). On rejection the deepest failing
    node is reported, ties broken leftmost.
    """
    _check_domain(g, c)
    if check_tree:
        if not is_binary(t):
            raise ValueError("cotree-not-binary")
        if not realizes(t, g):
            raise ValueError("cotree-graph-mismatch")
    label = t.label
    children = t.children
    vertex = t.vertex
    masks = [0] * t.n_nodes()
    failures: list[tuple[int, str, int, int]] = []
    for u in t.postorder():
        if label[u] == -1:
            masks[u] = 1 << c[vertex[u]]
            continue
        m1, m2 = (masks[ch] for ch in children[u])
        masks[u] = m1 | m2
        if label[u] == 1:
            if m1 & m2:
                failures.append((u, "K2", m1, m2))
        else:
            inter = m1 & m2
            if inter != m1 and inter != m2:
                failures.append((u, "K3", m1, m2))
    if not failures:
        return Verdict(True)
    # tie-break only when needed: deepest failing node, ties leftmost
    depth = [0] * t.n_nodes()
    preorder = [0] * t.n_nodes()
    stack = [t.root]
    i = 0
    while stack:
        u = stack.pop()
        preorder[u] = i
        i += 1
        for ch in reversed(children[u]):
            depth[ch] = depth[u] + 1
            stack.append(ch)
    node, axiom, m1, m2 = min(failures,
                              key=lambda f: (-depth[f[0]], preorder[f[0]]))
    return Verdict(False, node=node, axiom=axiom,
                   sets=(frozenset(bits(m1)), frozenset(bits(m2))))


# -- existential decision (over all binary cotrees) ---------------------------

def is_hc_coloring(g: Graph, c: Coloring) -> Verdict:
    """Decide whether c is an hc-coloring w.r.t. some binary cotree.

    Top-down: at a connected level the join split always satisfies K2 when
    the complement-component color sets are pairwise disjoint (equivalently,
    when c is proper there); at a disconnected level some component color
    set must contain all the others.
    """
    _check_domain(g, c)
    if g.n == 0:
        raise ValueError("empty-graph")
    adj = g.adj
    full = (1 << g.n) - 1
    work = [full]
    while work:
        sub = work.pop()
        if sub & (sub - 1) == 0:
            continue
        parts = components_bits(adj, sub)
        if len(parts) == 1:
            parts = co_components_bits(adj, sub)
            if len(parts) == 1:
                raise NotACographError(_find_p4_in(adj, sub))
            sets = [frozenset(c[v] for v in bits(p)) for p in parts]
            union: set[int] = set()
            for i, s in enumerate(sets):
                if union & s:
                    j = next(k for k in range(i) if sets[k] & s)
                    return Verdict(False, axiom="K2", sets=(sets[j], s))
                union |= s
        else:
            sets = [frozenset(c[v] for v in bits(p)) for p in parts]
            big = max(range(len(sets)), key=lambda i: len(sets[i]))
            for i, s in enumerate(sets):
                if not s <= sets[big]:
                    return Verdict(False, axiom="K3", sets=(s, sets[big]))
        work.extend(parts)
    return Verdict(True)


def is_recursively_minimal(g: Graph, c: Coloring) -> bool:
    """Recursively minimal colorings coincide with hc-colorings."""
    return is_hc_coloring(g, c).accepted


# -- coloring file format ------------------------------------------------------

def write_coloring(g: Graph, c: Coloring) -> str:
    _check_domain(g, c)
    names = g.vertex_names()
    return "".join(f"{names[v]}\t{c[v]}\n" for v in range(g.n))


def read_coloring(text: str, g: Graph) -> Coloring:
    lookup = g.name_to_id()
    c: Coloring = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'vertex<TAB>color'")
        vtok, ctok = parts
        if vtok in lookup:
            v = lookup[vtok]
        elif vtok.isdigit() and int(vtok) < g.n:
            v = int(vtok)
        else:
            raise ValueError(f"line {lineno}: unknown vertex {vtok!r}")
        if not ctok.isdigit() or int(ctok) < 1:
            raise ValueError(f"line {lineno}: bad color {ctok!r}")
        if v in c:
            raise ValueError(f"line {lineno}: vertex {vtok!r} colored twice")
        c[v] = int(ctok)
    _check_domain(g, c)
    return c
