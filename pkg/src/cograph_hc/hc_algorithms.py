"""Constructive recursively-minimal coloring and hc-coloring counting.

The coloring algorithms start from all-distinct colors and, walking the
cotree bottom-up, recolor every non-maximum group at each union node into
the color set of a group with maximum chromatic number via an injective
map. How that injection is picked is abstracted by `InjectionChooser` so
tiny instances can exhaust every choice.

Counts are arbitrary-precision. Per-node counts follow the
up-to-color-renaming convention (colorings identified when they induce the
same partition into color classes); labeled totals fix a chromatic-size
color set and count surjective colorings onto it.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Callable

from .graph import Graph, bits, components_bits
from .cotree import (Cotree, P4Witness, NotACographError, build_cotree,
                     is_binary, newick_write, node_chromatic_numbers,
                     realizes)
from .coloring import Coloring


class NotHcColoringError(ValueError):
    def __init__(self, certificate: tuple[frozenset[int], frozenset[int]]):
        super().__init__("not-hc")
        self.certificate = certificate


InjectionCallback = Callable[[tuple[int, ...], tuple[int, ...]], dict[int, int]]

_STRATEGIES = ("identity-prefix", "seeded-random", "exhaustive-callback")


@dataclass(frozen=True)
class InjectionChooser:
    """Picks the injective recoloring maps used at union nodes.

    identity-prefix maps the i-th smallest source color to the i-th
    smallest target color; seeded-random is reproducible for a fixed seed;
    exhaustive-callback delegates to `callback(source, target)` so tests
    can enumerate every possible choice.
    """

    strategy: str = "identity-prefix"
    seed: int = 0
    callback: InjectionCallback | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.strategy not in _STRATEGIES:
            raise ValueError(f"unknown chooser strategy {self.strategy!r}")
        if self.strategy == "exhaustive-callback" and self.callback is None:
            raise ValueError("exhaustive-callback needs a callback")

    def _choose(self, rng: random.Random, source: tuple[int, ...],
                target: tuple[int, ...]) -> dict[int, int]:
        if self.strategy == "identity-prefix":
            return dict(zip(source, target[: len(source)]))
        if self.strategy == "seeded-random":
            return dict(zip(source, rng.sample(target, len(source))))
        phi = self.callback(source, target)  # type: ignore[misc]
        if sorted(phi) != list(source):
            raise ValueError("callback domain mismatch")
        if len(set(phi.values())) != len(source) or not set(phi.values()) <= set(target):
            raise ValueError("callback must return an injection into the target")
        return phi


def _canonical_rename(sigma: list[int]) -> Coloring:
    """Rename colors to {1..k} in order of first appearance by vertex id."""
    rename: dict[int, int] = {}
    out: Coloring = {}
    for v, col in enumerate(sigma):
        if col not in rename:
            rename[col] = len(rename) + 1
        out[v] = rename[col]
    return out


def _recolor_bottom_up(g: Graph, t: Cotree,
                       chooser: InjectionChooser) -> Coloring:
    """Shared core: groups at a 0-node are the child subtrees of t."""
    rng = random.Random(chooser.seed)
    sigma = [v + 1 for v in range(g.n)]
    leaves = t.leaf_lists()
    chi = node_chromatic_numbers(t)
    for u in t.postorder():
        if t.label[u] != 0:
            continue
        kids = t.children[u]
        best = max(range(len(kids)), key=lambda i: chi[kids[i]])
        # max() keeps the first maximum: canonical tie-break
        target = tuple(sorted({sigma[x] for x in leaves[kids[best]]}))
        for i, k in enumerate(kids):
            if i == best:
                continue
            source = tuple(sorted({sigma[x] for x in leaves[k]}))
            phi = chooser._choose(rng, source, target)
            for x in leaves[k]:
                sigma[x] = phi[sigma[x]]
    return _canonical_rename(sigma)


def alg1_color(g: Graph,
               chooser: InjectionChooser = InjectionChooser()
               ) -> tuple[Coloring, Cotree]:
    """Recursively minimal coloring along the discriminating cotree."""
    t = build_cotree(g)
    if isinstance(t, P4Witness):
        raise NotACographError(t)
    return _recolor_bottom_up(g, t, chooser), t


def alg2_color(g: Graph, t: Cotree,
               chooser: InjectionChooser = InjectionChooser()) -> Coloring:
    """Recursively minimal coloring w.r.t. a user-supplied cotree of g."""
    if not realizes(t, g):
        raise ValueError("cotree-graph-mismatch")
    return _recolor_bottom_up(g, t, chooser)


# -- binary cotree reconstruction from an hc-colored cograph -------------------

def reconstruct_cotree(g: Graph, c: Coloring) -> Cotree:
    """Recover a binary cotree witnessing that c is an hc-coloring.

    Top-down: connected levels split off the complement component holding
    the smallest vertex id; disconnected levels split off a component with
    the fewest colors, whose color set must be contained in the rest's.
    """
    if set(c) != set(range(g.n)):
        raise ValueError("coloring-domain-mismatch")
    if g.n == 0:
        raise ValueError("empty-graph")
    from .graph import co_components_bits  # local to mirror build_cotree
    from .cotree import _find_p4_in

    t = Cotree(names=g.names)
    adj = g.adj
    full = (1 << g.n) - 1

    def cset(mask: int) -> frozenset[int]:
        return frozenset(c[v] for v in bits(mask))

    out: list[int] = []
    work: list[tuple[str, object]] = [("enter", full)]
    while work:
        tag, arg = work.pop()
        if tag == "exit":
            out.append(t.add_inner(arg, [out.pop(-2), out.pop()]))  # type: ignore[arg-type]
            continue
        sub: int = arg  # type: ignore[assignment]
        if sub & (sub - 1) == 0:
            out.append(t.add_leaf(sub.bit_length() - 1))
            continue
        parts = components_bits(adj, sub)
        if len(parts) == 1:
            cocs = co_components_bits(adj, sub)
            if len(cocs) == 1:
                raise NotACographError(_find_p4_in(adj, sub))
            first = cocs[0]
            rest = sub & ~first
            if cset(first) & cset(rest):
                raise NotHcColoringError((cset(first), cset(rest)))
            label = 1
        else:
            sets = [cset(p) for p in parts]
            i = min(range(len(parts)), key=lambda k: len(sets[k]))
            first = parts[i]
            rest = sub & ~first
            if not sets[i] <= cset(rest):
                raise NotHcColoringError((sets[i], cset(rest)))
            label = 0
        work.append(("exit", label))
        work.append(("enter", rest))
        work.append(("enter", first))
    t.root = out[0]
    return t


# -- counting -------------------------------------------------------------------

def g_injections(s1: int, s2: int) -> int:
    """Number of injective maps from an s1-set into an s2-set."""
    if s1 > s2:
        raise ValueError("injection-size-order")
    return math.perm(s2, s1)


@dataclass(frozen=True)
class NodeCount:
    path: str  # Newick serialization of the subtree
    partitions: int  # hc-colorings up to color renaming
    colors: int  # size of the color set used below this node


@dataclass(frozen=True)
class CountReport:
    per_node: tuple[NodeCount, ...]
    labeled_total: int

    def render(self) -> str:
        lines = [f"node {nc.path} N {nc.partitions} s {nc.colors}"
                 for nc in self.per_node]
        lines.append(f"labeled_total {self.labeled_total}")
        return "\n".join(lines) + "\n"

    @property
    def root_partitions(self) -> int:
        return self.per_node[-1].partitions


def _subtree_newicks(t: Cotree) -> list[str]:
    names = t.vertex_names()
    text = [""] * t.n_nodes()
    for u in t.postorder():
        if t.is_leaf(u):
            text[u] = names[t.vertex[u]]
        else:
            text[u] = "(" + ",".join(text[c] for c in t.children[u]) + ")" \
                + str(t.label[u])
    return text


def count_hc_wrt(t: Cotree) -> CountReport:
    """Count hc-colorings w.r.t. a fixed binary cotree.

    Per node, up to renaming: leaves count 1; joins multiply child counts
    (disjoint sets); unions additionally pick an injection of the smaller
    child color set into the larger. The labeled total fixes a color set
    of chromatic size, contributing a factorial at the root.
    """
    if not is_binary(t):
        raise ValueError("cotree-not-binary")
    paths = _subtree_newicks(t)
    count = [0] * t.n_nodes()
    size = [0] * t.n_nodes()
    per_node = []
    for u in t.postorder():
        if t.is_leaf(u):
            count[u], size[u] = 1, 1
        else:
            c1, c2 = t.children[u]
            if t.label[u] == 1:
                count[u] = count[c1] * count[c2]
                size[u] = size[c1] + size[c2]
            else:
                s1, s2 = sorted((size[c1], size[c2]))
                count[u] = count[c1] * count[c2] * g_injections(s1, s2)
                size[u] = s2
        per_node.append(NodeCount(paths[u], count[u], size[u]))
    root = t.root
    return CountReport(tuple(per_node),
                       count[root] * math.factorial(size[root]))


def count_hc_total(g: Graph) -> CountReport:
    """Total number of hc-colorings of g (over all binary cotrees).

    Computed on the discriminating cotree: at a join the color blocks of
    the children partition the color set; at a union every child picks any
    subset of the top-level color set for its own colors, and the child of
    maximum chromatic number always provides the containing set.
    """
    t = build_cotree(g)
    if isinstance(t, P4Witness):
        raise NotACographError(t)
    paths = _subtree_newicks(t)
    labeled = [0] * t.n_nodes()  # surjective colorings onto a fixed s-set
    size = [0] * t.n_nodes()
    per_node = []
    for u in t.postorder():
        if t.is_leaf(u):
            labeled[u], size[u] = 1, 1
        elif t.label[u] == 1:
            s = sum(size[c] for c in t.children[u])
            # multinomial allocation of color blocks to the children
            total = math.factorial(s)
            for c in t.children[u]:
                total //= math.factorial(size[c])
            for c in t.children[u]:
                total *= labeled[c]
            labeled[u], size[u] = total, s
        else:
            s = max(size[c] for c in t.children[u])
            total = 1
            for c in t.children[u]:
                total *= math.comb(s, size[c]) * labeled[c]
            labeled[u], size[u] = total, s
        per_node.append(NodeCount(paths[u],
                                  labeled[u] // math.factorial(size[u]),
                                  size[u]))
    return CountReport(tuple(per_node), labeled[t.root])
