"""Shared helpers for the test suite."""

from __future__ import annotations

import random
from itertools import combinations

from chordal_lab.graphs import LabeledGraph


def grow_clique(rnd: random.Random, adj: dict[int, set[int]], start: int,
                keep_prob: float = 0.6) -> set[int]:
    """A random clique containing ``start``: greedily add common neighbors."""
    clique = {start}
    while True:
        common = None
        for v in clique:
            common = adj[v] - clique if common is None else common & adj[v]
        if not common or rnd.random() > keep_prob:
            return clique
        clique.add(rnd.choice(sorted(common)))


def random_chordal_graph(seed: int, n: int, first_label: int = 1) -> LabeledGraph:
    """A random connected chordal graph built by simplicial attachment."""
    rnd = random.Random(seed)
    labels = list(range(first_label, first_label + n))
    adj: dict[int, set[int]] = {labels[0]: set()}
    for v in labels[1:]:
        anchor = rnd.choice(sorted(adj))
        clique = grow_clique(rnd, adj, anchor)
        adj[v] = set(clique)
        for u in clique:
            adj[u].add(v)
    edges = [(u, v) for u in adj for v in adj[u] if u < v]
    return LabeledGraph(labels, edges)


def has_long_induced_cycle(n: int, adj_masks: list[int]) -> bool:
    """Direct detection of an induced cycle of length >= 4 (bitmask graphs).

    A vertex subset induces such a cycle iff it has size >= 4, every vertex
    has induced degree exactly 2, and the induced subgraph is connected.
    """
    verts = list(range(n))
    for size in range(4, n + 1):
        for sub in combinations(verts, size):
            mask = 0
            for v in sub:
                mask |= 1 << v
            degs_ok = True
            for v in sub:
                if (adj_masks[v] & mask).bit_count() != 2:
                    degs_ok = False
                    break
            if not degs_ok:
                continue
            seen = 1 << sub[0]
            frontier = seen
            while frontier:
                nxt = 0
                f = frontier
                while f:
                    v = (f & -f).bit_length() - 1
                    f &= f - 1
                    nxt |= adj_masks[v] & mask
                frontier = nxt & ~seen
                seen |= nxt
            if seen == mask:
                return True
    return False


def adjacency_masks_of(g: LabeledGraph) -> list[int]:
    """0-indexed adjacency bitmasks for a graph on {1..n}."""
    n = g.n
    masks = [0] * n
    for u, v in g.edges():
        masks[u - 1] |= 1 << (v - 1)
        masks[v - 1] |= 1 << (u - 1)
    return masks
