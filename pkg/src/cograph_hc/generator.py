"""Instance sources: exhaustive small cographs and seeded random cographs.

Random instances are sampled as random cotrees, which guarantees cograph
membership by construction and hands back the ground-truth cotree. The
random stream is `random.Random(seed)` (Mersenne Twister) consumed in a
fixed preorder traversal, so identical parameters always reproduce the
identical (graph, cotree) pair.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterator

from .graph import Graph
from .cotree import Cotree, realized_graph


@dataclass(frozen=True)
class GenParams:
    """Parameters of the random cotree model.

    `balance` is the probability that an inner child flips its parent's
    label (1.0 yields a discriminating cotree); the root is a join with
    probability `balance` as well.
    """

    n: int
    seed: int = 0
    max_arity: int = 3
    balance: float = 0.5

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if self.max_arity < 2:
            raise ValueError("max_arity must be >= 2")
        if not 0.0 <= self.balance <= 1.0:
            raise ValueError("balance must be in [0, 1]")


def random_cograph(p: GenParams) -> tuple[Graph, Cotree]:
    """Sample a random cotree with n leaves and return its realized graph."""
    rng = random.Random(p.seed)
    t = Cotree()
    next_vertex = itertools.count()
    out: list[int] = []
    root_label = 1 if rng.random() < p.balance else 0
    # preorder descent with explicit stack; deep caterpillars stay safe
    work: list[tuple[str, object]] = [("enter", (p.n, root_label))]
    while work:
        tag, arg = work.pop()
        if tag == "exit":
            label, k = arg  # type: ignore[misc]
            kids = out[-k:]
            del out[-k:]
            out.append(t.add_inner(label, kids))
            continue
        count, label = arg  # type: ignore[misc]
        if count == 1:
            out.append(t.add_leaf(next(next_vertex)))
            continue
        k = rng.randint(2, min(p.max_arity, count))
        cuts = sorted(rng.sample(range(1, count), k - 1))
        sizes = [b - a for a, b in zip([0] + cuts, cuts + [count])]
        child_specs = []
        for size in sizes:
            child_label = label
            if size > 1 and rng.random() < p.balance:
                child_label = 1 - label
            child_specs.append((size, child_label))
        work.append(("exit", (label, k)))
        for spec in reversed(child_specs):
            work.append(("enter", spec))
    t.root = out[0]
    return realized_graph(t), t


def exhaustive_cographs(n: int) -> Iterator[Graph]:
    """Stream all labeled P4-free graphs on n vertices."""
    from .oracle import find_induced_p4

    if n < 1 or n > 7:
        raise ValueError("size-guard: exhaustive_cographs needs 1 <= n <= 7")
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for mask in range(1 << len(pairs)):
        adj = [0] * n
        m = mask
        while m:
            low = m & -m
            u, v = pairs[low.bit_length() - 1]
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            m ^= low
        g = Graph._from_adj(n, adj, None)
        if find_induced_p4(g) is None:
            yield g
