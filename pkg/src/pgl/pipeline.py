"""Certifying pipeline from perfect graphs to complement colorings.

The route: separate the maximum stable sets, find a maximum clique of
the separated graph, and demand it meets every disjoint part.  Success
projects back to a clique meeting every maximum stable set; repeating
peels off one clique per unit of the stable number, yielding a clique
cover of that exact size, which re-reads as an optimal coloring of the
complement.  The size test doubles as a perfectness probe, so
non-perfect inputs yield structured, re-checkable negative evidence
instead of an exception.
"""

from __future__ import annotations

from dataclasses import dataclass

from .constructions import build_separated_graph
from .core import Cover, Graph, VertexSet, complement, induced_subgraph, vertex_set
from .errors import EmptyGraphError
from .invariants import (
    check_cover,
    chromatic_number,
    clique_number,
    colors_used,
    cover_to_coloring,
    imperfection_witness,
    is_valid_coloring,
    max_clique_witness,
    stable_number,
)

CLIQUE_GAP = "clique-gap"
CHROMATIC_GAP = "chromatic-gap"


@dataclass(frozen=True)
class PerfectnessFailure:
    """Re-checkable evidence that a graph cannot be perfect.

    kind "clique-gap": the separated graph built on `subgraph` has
    maximum clique size `found`, short of the `required` disjoint
    parts.  kind "chromatic-gap": the subgraph induced by `subgraph`
    has chromatic number `found` above clique number `required`.
    """

    kind: str
    subgraph: VertexSet
    found: int
    required: int


@dataclass(frozen=True)
class WpgtCertificate:
    """Clique cover of size alpha plus an optimal complement coloring."""

    alpha: int
    clique_cover: Cover
    complement_coloring: dict[int, int]


def intersecting_clique(G: Graph) -> VertexSet | PerfectnessFailure:
    """A clique of G meeting every maximum stable set, or negative evidence.

    Builds the separated graph, takes its lexicographically least
    maximum clique, and requires one vertex per disjoint part; the
    backward projection of that clique is returned.
    """
    if G.n == 0:
        raise EmptyGraphError("intersecting clique requires a nonempty graph")
    sep = build_separated_graph(G)
    witness = max_clique_witness(sep.separated)
    required = len(sep.disjoint_parts)
    if len(witness) < required:
        return PerfectnessFailure(CLIQUE_GAP, G.nodes, len(witness), required)
    return vertex_set(sep.back[x] for x in witness)


def clique_cover_alpha(G: Graph) -> Cover | PerfectnessFailure:
    """Clique cover with exactly one part per unit of the stable number.

    Each round removes an intersecting clique, which lowers the stable
    number by one; failures from any round propagate unchanged.
    """
    parts: list[VertexSet] = []
    H = G
    while H.n:
        K = intersecting_clique(H)
        if isinstance(K, PerfectnessFailure):
            return K
        parts.append(K)
        removed = set(K)
        H = induced_subgraph(H, (v for v in H.nodes if v not in removed))
    return tuple(parts)


def wpgt_certificate(G: Graph) -> WpgtCertificate | PerfectnessFailure:
    """Certificate pairing a size-alpha clique cover of G with a coloring
    of the complement that uses exactly that many colors."""
    cover = clique_cover_alpha(G)
    if isinstance(cover, PerfectnessFailure):
        return cover
    coloring = cover_to_coloring(complement(G), cover)
    return WpgtCertificate(len(cover), cover, coloring)


def verify_certificate(G: Graph, cert: WpgtCertificate) -> bool:
    """Re-check every certificate invariant from scratch."""
    if len(cert.clique_cover) != cert.alpha:
        return False
    if not check_cover(G, cert.clique_cover, "clique"):
        return False
    if stable_number(G) != cert.alpha:
        return False
    comp = complement(G)
    if not is_valid_coloring(comp, cert.complement_coloring):
        return False
    if len(colors_used(comp, cert.complement_coloring)) != cert.alpha:
        return False
    return clique_number(comp) == cert.alpha


def imperfection_failure(G: Graph) -> PerfectnessFailure | None:
    """Definition-based negative evidence: a subgraph with chi above omega."""
    S = imperfection_witness(G)
    if S is None:
        return None
    H = induced_subgraph(G, S)
    return PerfectnessFailure(CHROMATIC_GAP, S, chromatic_number(H), clique_number(H))


def recheck_failure(G: Graph, failure: PerfectnessFailure) -> bool:
    """Reproduce recorded negative evidence against the graph it came from."""
    members = set(failure.subgraph)
    if not members <= set(G.nodes):
        return False
    H = induced_subgraph(G, failure.subgraph)
    if failure.kind == CLIQUE_GAP:
        if H.n == 0:
            return False
        sep = build_separated_graph(H)
        return (
            failure.found < failure.required
            and clique_number(sep.separated) == failure.found
            and len(sep.disjoint_parts) == failure.required
        )
    if failure.kind == CHROMATIC_GAP:
        return (
            failure.found > failure.required
            and chromatic_number(H) == failure.found
            and clique_number(H) == failure.required
        )
    return False
