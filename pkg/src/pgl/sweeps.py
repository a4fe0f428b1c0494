"""Theorem sweeps over small-graph streams.

Each property check maps a graph to None (holds) or a piece of evidence
text; a sweep runs selected checks over a deterministic stream and
collects counterexamples, which are data rather than errors.  The
stream can be partitioned across worker processes; each worker
re-enumerates its slice, so reports merge deterministically by stream
index.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import islice, product
from typing import Callable, Sequence

from .constructions import build_separated_graph, expand, replicate, verify_expansion, verify_replication
from .core import Graph, complement, make_graph, union_over, vertex_set
from .invariants import (
    graph_parameters,
    imperfection_witness,
    is_clique,
    is_nice,
    is_perfect,
    is_stable,
    stable_number,
)
from .iso import find_isomorphism, verify_iso_witness
from .oracles import confirms_imperfection, enumerate_graphs, is_berge, oracle_parameters, stream_size
from .pipeline import PerfectnessFailure, recheck_failure, verify_certificate, wpgt_certificate

EXPANSION_MAX_MULTIPLICITY = 3


@dataclass(frozen=True)
class Counterexample:
    index: int
    graph: Graph
    prop: str
    evidence: str


@dataclass
class SweepReport:
    properties: tuple[str, ...]
    n: int
    mode: str
    graphs_checked: int
    counterexamples: list[Counterexample] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.counterexamples


def _check_wpgt(G: Graph) -> str | None:
    if is_perfect(G) != is_perfect(complement(G)):
        return "perfection of graph and complement disagree"
    return None


def _check_berge(G: Graph) -> str | None:
    if is_perfect(G) != is_berge(G):
        return "definition-based perfection disagrees with Berge recognition"
    return None


def _check_duality(G: Graph) -> str | None:
    comp = complement(G)
    a = graph_parameters(G).alpha
    w = graph_parameters(comp).omega
    if a != w:
        return f"alpha={a} but complement omega={w}"
    return None


def _check_oracle_agreement(G: Graph) -> str | None:
    p = graph_parameters(G)
    q = oracle_parameters(G)
    if (p.alpha, p.omega, p.chi) != (q.alpha, q.omega, q.chi):
        return (
            f"parameters ({p.alpha},{p.omega},{p.chi}) "
            f"vs oracle ({q.alpha},{q.omega},{q.chi})"
        )
    return None


def _check_replication(G: Graph) -> str | None:
    perfect = is_perfect(G)
    for a in G.nodes:
        H, w = replicate(G, a)
        if not verify_replication(G, w, H):
            return f"replication witness rejected at vertex {a}"
        if perfect and not is_perfect(H):
            return f"replicating vertex {a} broke perfection"
    return None


def _check_expansion(G: Graph) -> str | None:
    if not is_perfect(G):
        return None
    for values in product(range(1, EXPANSION_MAX_MULTIPLICITY + 1), repeat=G.n):
        mult = dict(zip(G.nodes, values))
        H, w = expand(G, mult)
        if not verify_expansion(G, H, w.back):
            return f"expansion checker rejected multiplicities {values}"
        if not is_perfect(H):
            return f"expansion with multiplicities {values} broke perfection"
    return None


def _check_separation(G: Graph) -> str | None:
    if G.n == 0:
        return None
    sep = build_separated_graph(G)
    if vertex_set(sep.back[x] for x in sep.separated.nodes) != sep.base.nodes:
        return "backward image of separated nodes misses the base nodes"
    tags = {x: (sep.back[x], i) for i, part in enumerate(sep.disjoint_parts) for x in part}
    for i, x in enumerate(sep.separated.nodes):
        for y in sep.separated.nodes[i + 1 :]:
            ox, ix = tags[x]
            oy, iy = tags[y]
            if ox == oy:
                if sep.separated.adjacent(x, y) != (ix != iy):
                    return f"equal-origin copies {x},{y} break the tag rule"
            elif sep.base.adjacent(ox, oy) != sep.separated.adjacent(x, y):
                return f"distinct-origin adjacency mismatch at {x},{y}"
    if not verify_expansion(sep.base, sep.separated, sep.back):
        return "separated graph is not an expansion of the base"
    seen: set[int] = set()
    for part in sep.disjoint_parts:
        if seen & set(part):
            return "disjoint parts overlap"
        seen |= set(part)
    if union_over(sep.disjoint_parts) != sep.separated.nodes:
        return "disjoint parts do not cover the separated graph"
    alpha = stable_number(sep.separated)
    for part in sep.disjoint_parts:
        if not is_stable(sep.separated, part):
            return "a disjoint part is not stable in the separated graph"
        if len(part) != alpha:
            return "a disjoint part is not a maximum stable set of the separated graph"
    return None


def _check_pipeline(G: Graph) -> str | None:
    result = wpgt_certificate(G)
    if is_perfect(G):
        if isinstance(result, PerfectnessFailure):
            return "pipeline reported failure on a perfect graph"
        if result.alpha != stable_number(G):
            return f"cover has {result.alpha} parts, alpha is {stable_number(G)}"
        if not verify_certificate(G, result):
            return "certificate failed verification"
    else:
        if isinstance(result, PerfectnessFailure):
            if not recheck_failure(G, result):
                return "failure evidence did not re-check"
        else:
            S = imperfection_witness(G)
            if S is None or not confirms_imperfection(G, S):
                return "oracle did not confirm imperfection"
    return None


def _relabeled_twin(G: Graph) -> Graph:
    """Copy of G on fresh ids with the vertex order reversed."""
    shift = G.nodes[-1] + 1 if G.n else 0
    mapping = {v: shift + (G.n - 1 - i) for i, v in enumerate(G.nodes)}
    return make_graph(mapping.values(), [(mapping[u], mapping[v]) for u, v in G.edges])


def _check_iso(G: Graph) -> str | None:
    H = _relabeled_twin(G)
    w = find_isomorphism(G, H)
    if w is None:
        return "no witness found onto a relabeled copy"
    if not verify_iso_witness(w, G, H):
        return "witness failed verification"
    pg = graph_parameters(G)
    ph = graph_parameters(H)
    if (pg.alpha, pg.omega, pg.chi) != (ph.alpha, ph.omega, ph.chi):
        return "parameters not preserved by isomorphism"
    if is_nice(G) != is_nice(H) or is_perfect(G) != is_perfect(H):
        return "nice/perfect not preserved by isomorphism"
    if not is_clique(H, tuple(w.forward[v] for v in pg.max_clique_witness)):
        return "image of a maximum clique is not a clique"
    if not is_stable(H, tuple(w.forward[v] for v in pg.max_stable_witness)):
        return "image of a maximum stable set is not stable"
    return None


PROPERTIES: dict[str, Callable[[Graph], str | None]] = {
    "wpgt": _check_wpgt,
    "berge": _check_berge,
    "duality": _check_duality,
    "oracle-agreement": _check_oracle_agreement,
    "replication": _check_replication,
    "expansion": _check_expansion,
    "separation": _check_separation,
    "pipeline": _check_pipeline,
    "iso": _check_iso,
}


def _resolve(properties: str | Sequence[str]) -> tuple[str, ...]:
    names = (properties,) if isinstance(properties, str) else tuple(properties)
    for name in names:
        if name not in PROPERTIES:
            raise ValueError(f"unknown property {name!r}; known: {sorted(PROPERTIES)}")
    return names


def _run_slice(
    names: tuple[str, ...], n: int, mode: str, seed: int, count: int, start: int, stop: int
) -> list[tuple[int, int, tuple[tuple[int, int], ...], str, str]]:
    """Check one slice of the stream; returns raw counterexample tuples."""
    out = []
    stream = islice(
        enumerate_graphs(n, mode, seed=seed, count=count, allow_large=True), start, stop
    )
    for offset, G in enumerate(stream):
        for name in names:
            evidence = PROPERTIES[name](G)
            if evidence is not None:
                out.append((start + offset, G.n, G.edges, name, evidence))
    return out


def sweep(
    properties: str | Sequence[str],
    n: int,
    mode: str = "exhaustive",
    *,
    seed: int = 42,
    count: int = 1000,
    jobs: int = 1,
) -> SweepReport:
    """Run property checks over the graph stream and report counterexamples."""
    names = _resolve(properties)
    total = stream_size(n, mode, count)
    started = time.perf_counter()
    raw: list[tuple[int, int, tuple[tuple[int, int], ...], str, str]] = []
    if jobs <= 1 or total < 2 * jobs:
        raw = _run_slice(names, n, mode, seed, count, 0, total)
    else:
        bounds = [(total * k // jobs, total * (k + 1) // jobs) for k in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [
                pool.submit(_run_slice, names, n, mode, seed, count, lo, hi)
                for lo, hi in bounds
            ]
            for fut in futures:
                raw.extend(fut.result())
    raw.sort(key=lambda item: (item[0], item[3]))
    counterexamples = [
        Counterexample(idx, make_graph(range(1, gn + 1), edges), name, evidence)
        for idx, gn, edges, name, evidence in raw
    ]
    elapsed = time.perf_counter() - started
    return SweepReport(names, n, mode, total, counterexamples, elapsed)
