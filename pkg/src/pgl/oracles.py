"""Independent brute-force oracles and small-graph streams.

Everything here is deliberately naive and shares nothing with the
parameter module beyond the core graph type: alpha and omega come from
full subset enumeration, chi from trying every assignment of k colors
for growing k, and Berge recognition from enumerating odd vertex
subsets and testing for induced chordless cycles.  Size caps keep the
enumerations at desk scale; the PGL_MAX_N environment variable
overrides them.
"""

from __future__ import annotations

import os
import random
from itertools import combinations, product
from typing import Iterator

from .core import Graph, complement, induced_subgraph, make_graph
from .errors import TooLargeError
from .invariants import GraphParameters

ORACLE_MAX_N = 20
BERGE_MAX_N = 12
EXHAUSTIVE_MAX_N = 6
DEFAULT_SEED = 42


def size_cap(default: int) -> int:
    """Default cap, unless PGL_MAX_N overrides it."""
    env = os.environ.get("PGL_MAX_N")
    return int(env) if env else default


def oracle_parameters(G: Graph) -> GraphParameters:
    """alpha, omega by full subset enumeration; chi by trying all colorings
    with k colors for k = 0, 1, ... in increasing order."""
    n = G.n
    if n > size_cap(ORACLE_MAX_N):
        raise TooLargeError(f"subset enumeration capped at {size_cap(ORACLE_MAX_N)} vertices")
    nodes = G.nodes
    best_stable: tuple[int, ...] = ()
    best_clique: tuple[int, ...] = ()
    for r in range(1, n + 1):
        for S in combinations(nodes, r):
            pairs = list(combinations(S, 2))
            if len(S) > len(best_stable) and all(not G.adjacent(u, v) for u, v in pairs):
                best_stable = S
            if len(S) > len(best_clique) and all(G.adjacent(u, v) for u, v in pairs):
                best_clique = S
    index = G.index
    epairs = [(index[u], index[v]) for u, v in G.edges]
    chi = 0
    chi_witness: dict[int, int] = {}
    for k in range(0, n + 1):
        done = False
        for assign in product(range(k), repeat=n):
            if all(assign[i] != assign[j] for i, j in epairs):
                chi = k
                chi_witness = {nodes[i]: assign[i] for i in range(n)}
                done = True
                break
        if done or n == 0:
            break
    return GraphParameters(
        len(best_stable), len(best_clique), chi, best_clique, best_stable, chi_witness
    )


def _cycle_order(G: Graph, S: tuple[int, ...]) -> tuple[int, ...] | None:
    """Walk of the chordless cycle induced by S, or None.

    S induces a cycle exactly when every member has two neighbors
    inside S and one closed walk visits all of S.
    """
    nbrs: dict[int, list[int]] = {}
    for v in S:
        ns = [u for u in S if u != v and G.adjacent(u, v)]
        if len(ns) != 2:
            return None
        nbrs[v] = ns
    start = S[0]
    order = [start]
    prev, cur = start, min(nbrs[start])
    while cur != start:
        order.append(cur)
        a, b = nbrs[cur]
        prev, cur = cur, b if a == prev else a
    return tuple(order) if len(order) == len(S) else None


def _find_odd_induced_cycle(G: Graph) -> tuple[int, ...] | None:
    for length in range(5, G.n + 1, 2):
        for S in combinations(G.nodes, length):
            cycle = _cycle_order(G, S)
            if cycle is not None:
                return cycle
    return None


def find_odd_hole_or_antihole(G: Graph) -> tuple[str, tuple[int, ...]] | None:
    """Shortest odd induced cycle of length >= 5 in G, else in complement(G).

    Returns ("hole", cycle) or ("antihole", cycle); the antihole cycle
    is listed in complement order.  None when the graph is Berge.
    """
    if G.n > size_cap(BERGE_MAX_N):
        raise TooLargeError(f"hole search capped at {size_cap(BERGE_MAX_N)} vertices")
    hole = _find_odd_induced_cycle(G)
    if hole is not None:
        return "hole", hole
    antihole = _find_odd_induced_cycle(complement(G))
    if antihole is not None:
        return "antihole", antihole
    return None


def is_berge(G: Graph) -> bool:
    """True when neither G nor its complement has an odd hole."""
    return find_odd_hole_or_antihole(G) is None


def labeled_pairs(n: int) -> tuple[tuple[int, int], ...]:
    """Vertex pairs of {1..n} in lexicographic order; bit i of an edge
    bitmask refers to entry i."""
    return tuple(combinations(range(1, n + 1), 2))


def graph_from_mask(n: int, mask: int) -> Graph:
    pairs = labeled_pairs(n)
    return make_graph(range(1, n + 1), (pairs[i] for i in range(len(pairs)) if mask >> i & 1))


def enumerate_graphs(
    n: int,
    mode: str = "exhaustive",
    *,
    seed: int = DEFAULT_SEED,
    count: int = 1000,
    allow_large: bool = False,
) -> Iterator[Graph]:
    """Deterministic stream of labeled graphs on {1..n}.

    exhaustive: all 2^(n(n-1)/2) graphs in edge-bitmask order, capped
    unless allow_large or PGL_MAX_N raises the cap.  random: `count`
    draws of G(n, 1/2), each edge bitmask taken from the Mersenne
    Twister (random.Random(seed).getrandbits), reproducible bit for bit.
    """
    bits = n * (n - 1) // 2
    if mode == "exhaustive":
        if n > size_cap(EXHAUSTIVE_MAX_N) and not allow_large:
            raise TooLargeError(
                f"exhaustive enumeration capped at {size_cap(EXHAUSTIVE_MAX_N)} vertices"
            )
        for mask in range(1 << bits):
            yield graph_from_mask(n, mask)
    elif mode == "random":
        rng = random.Random(seed)
        for _ in range(count):
            yield graph_from_mask(n, rng.getrandbits(bits) if bits else 0)
    else:
        raise ValueError(f"mode must be 'exhaustive' or 'random', got {mode!r}")


def stream_size(n: int, mode: str, count: int = 1000) -> int:
    """Number of graphs enumerate_graphs will yield."""
    if mode == "exhaustive":
        return 1 << (n * (n - 1) // 2)
    if mode == "random":
        return count
    raise ValueError(f"mode must be 'exhaustive' or 'random', got {mode!r}")


def confirms_imperfection(G: Graph, S: tuple[int, ...]) -> bool:
    """Oracle check that the subgraph induced by S has chi above omega."""
    H = induced_subgraph(G, S)
    p = oracle_parameters(H)
    return p.chi > p.omega
