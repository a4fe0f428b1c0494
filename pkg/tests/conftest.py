"""Shared graph builders for the test suite."""

from __future__ import annotations

from pgl import Graph, make_graph


def cycle(n: int) -> Graph:
    return make_graph(range(1, n + 1), [(i, i % n + 1) for i in range(1, n + 1)])


def path(n: int) -> Graph:
    return make_graph(range(1, n + 1), [(i, i + 1) for i in range(1, n)])


def complete(n: int) -> Graph:
    return make_graph(range(1, n + 1), [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)])


def edgeless(n: int) -> Graph:
    return make_graph(range(1, n + 1))


def house() -> Graph:
    """Five-cycle 1..5 with the chord {2, 4}."""
    return make_graph(range(1, 6), [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1), (2, 4)])


def joined_double_pentagon() -> Graph:
    """Two five-cycles with every cross edge present."""
    inner = [(i, i % 5 + 1) for i in range(1, 6)]
    outer = [(u + 5, v + 5) for u, v in inner]
    cross = [(u, v + 5) for u in range(1, 6) for v in range(1, 6)]
    return make_graph(range(1, 11), inner + outer + cross)


def nice_but_imperfect() -> Graph:
    """Five-cycle plus a vertex adjacent to three consecutive cycle vertices.

    Its chromatic and clique numbers agree, yet the five-cycle survives
    as an induced subgraph.
    """
    return make_graph(range(1, 7), [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1), (2, 6), (3, 6), (4, 6)])
