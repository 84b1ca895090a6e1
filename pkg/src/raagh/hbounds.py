"""Bounds and exact values for the minimal second Betti number h.

For a right-angled Artin group presented by a graph G, h(G) is the smallest
b2 over closed oriented 4-manifolds with that fundamental group.  Everything
here combines four ingredients:

- trivial bounds    b2(G) <= h(G) <= 2 b2(G)
- cohomological     2 b2(G) - m2(G) <= h(G)
- exact families    no 4-cliques gives h = 2 b2; complete graphs reduce to
                    free abelian groups; the string/grid/hex catalog families
                    and a couple of individually certified graphs have proven
                    values
- decomposition     removing the r edges that lie in no 4-clique and then
                    splitting along cut vertices and components gives
                    h(G) = sum of piece values + 2 r

An ExactValue tagged conjectural-minimal is *not* a theorem: it is the
cohomological lower bound offered as the conjectured value when nothing in
the catalog certifies the graph.  Exact values from every other provenance
are theorem grade.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .form import AlphaVector
from .graphs import (FamilyCertificate, Graph, betti, biconnected_blocks,
                     canonical_key, classify_edges, enumerate_cliques,
                     generate_family, induced_subgraph, make_graph,
                     recognize_family, verify_certificate)
from .solver import (DEFAULT_CONFIG, CapExceeded, M2Result, SolverConfig,
                     compute_m2, m2_heuristic)

TRIVIAL_H4 = "trivial-h4"
FREE_ABELIAN = "free-abelian"
GRID_THEOREM = "grid-theorem"
STRING_THEOREM = "string-theorem"
HEX_THEOREM = "hex-theorem"
CLIQUE_STRING_5 = "clique-string-5"
CLIQUE_STRING_6 = "clique-string-6"
CLIQUE_STRING_7 = "clique-string-7"
DECOMPOSITION_AGGREGATE = "decomposition-aggregate"
CERTIFIED_EXAMPLE = "certified-example"
CONJECTURAL_MINIMAL = "conjectural-minimal"

THEOREM_GRADE = frozenset({
    TRIVIAL_H4, FREE_ABELIAN, GRID_THEOREM, STRING_THEOREM, HEX_THEOREM,
    CLIQUE_STRING_5, CLIQUE_STRING_6, CLIQUE_STRING_7,
    DECOMPOSITION_AGGREGATE, CERTIFIED_EXAMPLE,
})


@dataclass(frozen=True)
class ExactValue:
    value: int
    provenance: str

    @property
    def theorem_grade(self) -> bool:
        return self.provenance in THEOREM_GRADE


@dataclass(frozen=True)
class HReport:
    """Everything known about h for one graph.

    m2 is None only when the solver was skipped entirely; m2_mode records how
    the value was obtained ("exhaustive", "heuristic", or "assembled" from
    decomposition pieces).  Bounds always satisfy
    lower_trivial <= lower_cohomological <= upper, and any exact value lies
    inside them.
    """

    graph: Graph
    betti_numbers: tuple[int, ...]
    m2: M2Result | None
    m2_mode: str
    lower_trivial: int
    lower_cohomological: int
    upper: int
    exact: ExactValue | None
    decomposition: "DecompositionReport | None" = None

    @property
    def b2(self) -> int:
        return self.betti_numbers[2] if len(self.betti_numbers) > 2 else 0

    @property
    def b4(self) -> int:
        return self.betti_numbers[4] if len(self.betti_numbers) > 4 else 0

    def __post_init__(self):
        assert self.lower_trivial <= self.lower_cohomological <= self.upper
        if self.exact is not None:
            assert self.lower_trivial <= self.exact.value <= self.upper


@dataclass(frozen=True)
class DecompositionPiece:
    """One irreducible piece: its graph plus the parent vertices it uses."""

    vertices: tuple[int, ...]
    graph: Graph
    report: HReport


@dataclass(frozen=True)
class DecompositionReport:
    """Breakdown of a graph into free edges (in no 4-clique) and the
    components/blocks left after deleting them.  Piece b2 values plus the
    number of free edges always add back up to the parent b2."""

    free_edges: tuple[tuple[int, int], ...]
    pieces: tuple[DecompositionPiece, ...]
    aggregate_exact: ExactValue | None

    @property
    def r(self) -> int:
        return len(self.free_edges)


# --------------------------------------------------------------------------
# closed-form families
# --------------------------------------------------------------------------

_FREE_ABELIAN_OVERRIDES = {3: 6, 5: 14}


def h_free_abelian(n: int) -> int:
    """h for the free abelian group of rank n.

    The generic value is binom(n, 2) rounded up to even; ranks 3 and 5 are
    exceptional and sit strictly above that."""
    if n < 0:
        raise ValueError("rank must be non-negative")
    if n in _FREE_ABELIAN_OVERRIDES:
        return _FREE_ABELIAN_OVERRIDES[n]
    b2 = comb(n, 2)
    return b2 + (b2 & 1)


def h_family(cert: FamilyCertificate,
             config: SolverConfig = DEFAULT_CONFIG) -> ExactValue:
    """Proven h value for a catalog family member.

    Strings and complete graphs come from closed formulas.  Grids and hex
    triangles regenerate the graph and certify m2 exhaustively (the theorem
    pins h to the cohomological bound), so they may raise CapExceeded.
    """
    fam = cert.family
    if fam == "edgeless":
        return ExactValue(0, TRIVIAL_H4)
    if fam == "complete":
        return ExactValue(h_free_abelian(cert.n), FREE_ABELIAN)
    if fam == "clique-string":
        s, k = cert.clique_size, cert.count
        if s == 4:
            return ExactValue(5 * k + 1 + (1 if k % 2 == 0 else 0), GRID_THEOREM)
        if s == 5:
            return ExactValue(12 * k + 2, CLIQUE_STRING_5)
        if s == 6:
            return ExactValue(14 * k + 2, CLIQUE_STRING_6)
        if s == 7:
            return ExactValue(20 * k + 2, CLIQUE_STRING_7)
        raise ValueError(f"no certified value for clique size {s}")
    if fam == "face-string":
        k = cert.count
        if k == 1:
            return ExactValue(h_free_abelian(4), FREE_ABELIAN)
        return ExactValue(3 * k + 6 if k % 2 == 0 else 3 * k + 5, STRING_THEOREM)
    if fam in ("grid", "hex-triangle"):
        g = generate_family(cert)
        res = compute_m2(g, config)
        b2 = len(g.edges)
        provenance = GRID_THEOREM if fam == "grid" else HEX_THEOREM
        return ExactValue(2 * b2 - res.m2, provenance)
    raise ValueError(f"unknown family {fam!r}")


# --------------------------------------------------------------------------
# individually certified graphs
# --------------------------------------------------------------------------

def _certified_catalog():
    """Graphs with proven h values that sit in no parametrized family:
    K5 and K4 glued along an edge, and K8 minus a perfect matching."""
    k5_k4 = make_graph(7, set(combinations(range(5), 2))
                       | set(combinations((3, 4, 5, 6), 2)))
    matching = {(0, 1), (2, 3), (4, 5), (6, 7)}
    boxes = make_graph(8, [e for e in combinations(range(8), 2)
                           if e not in matching])
    return ((k5_k4, 18), (boxes, 26))


_certified_cache: tuple[frozenset, dict] | None = None


def certified_h(g: Graph) -> ExactValue | None:
    """Exact value if g is isomorphic to an individually certified graph."""
    global _certified_cache
    if _certified_cache is None:
        catalog = _certified_catalog()
        _certified_cache = (
            frozenset((example.n, len(example.edges)) for example, _ in catalog),
            {canonical_key(example): h for example, h in catalog},
        )
    counts, keys = _certified_cache
    if (g.n, len(g.edges)) not in counts:
        return None
    value = keys.get(canonical_key(g))
    return None if value is None else ExactValue(value, CERTIFIED_EXAMPLE)


# --------------------------------------------------------------------------
# single-piece analysis
# --------------------------------------------------------------------------

def _b(numbers: tuple[int, ...], k: int) -> int:
    return numbers[k] if k < len(numbers) else 0


def _resolve_certificate(g: Graph) -> FamilyCertificate | None:
    if g.certificate is not None and verify_certificate(g, g.certificate):
        return g.certificate
    return recognize_family(g)


def _piece_report(g: Graph, config: SolverConfig, heuristic: bool,
                  strict: bool) -> HReport:
    """Report for a graph treated as one piece (no decomposition inside)."""
    numbers = betti(g)
    b2, b4 = _b(numbers, 2), _b(numbers, 4)
    if b4 == 0:
        res = M2Result(0, AlphaVector(0, 0), b2, True)
        return HReport(g, numbers, res, "exhaustive", b2, 2 * b2, 2 * b2,
                       ExactValue(2 * b2, TRIVIAL_H4))

    mode = "heuristic" if heuristic else "exhaustive"
    if heuristic:
        res = m2_heuristic(g, config)
    else:
        try:
            res = compute_m2(g, config)
        except CapExceeded:
            if strict:
                raise
            res, mode = m2_heuristic(g, config), "heuristic"

    exact: ExactValue | None = None
    cert = _resolve_certificate(g)
    if cert is not None:
        try:
            exact = h_family(cert, config)
        except CapExceeded:
            exact = None
    if exact is None:
        exact = certified_h(g)
    if exact is None and res.exhaustive:
        exact = ExactValue(2 * b2 - res.m2, CONJECTURAL_MINIMAL)

    lower_coh = 2 * b2 - res.m2
    if exact is not None and exact.theorem_grade:
        # a heuristic that under-finds m2 would otherwise overstate the bound
        lower_coh = min(lower_coh, exact.value)
    return HReport(g, numbers, res, mode, b2, lower_coh, 2 * b2, exact)


# --------------------------------------------------------------------------
# decomposition
# --------------------------------------------------------------------------

def decompose_h(g: Graph, config: SolverConfig = DEFAULT_CONFIG,
                heuristic: bool = False, strict: bool = False) -> DecompositionReport:
    """Split g into free edges plus irreducible pieces and analyse each.

    Pieces are the biconnected blocks of the graph left after deleting every
    edge that lies in no 4-clique, together with one single-vertex piece per
    vertex isolated by the deletion.  Each piece keeps a map back to parent
    vertices; pieces are ordered by those maps.
    """
    _covered, free = classify_edges(g)
    covered_g = make_graph(g.n, _covered, labels=g.labels)

    piece_vertex_sets = list(biconnected_blocks(covered_g))
    piece_vertex_sets.extend((v,) for v in range(g.n)
                             if covered_g.adjacency[v] == 0)
    piece_vertex_sets.sort()

    pieces = []
    for vset in piece_vertex_sets:
        sub, vmap = induced_subgraph(covered_g, vset)
        report = _piece_report(sub, config, heuristic, strict)
        pieces.append(DecompositionPiece(vmap, sub, report))

    aggregate = None
    if all(p.report.exact is not None and p.report.exact.theorem_grade
           for p in pieces):
        total = sum(p.report.exact.value for p in pieces) + 2 * len(free)
        aggregate = ExactValue(total, DECOMPOSITION_AGGREGATE)
    return DecompositionReport(tuple(free), tuple(pieces), aggregate)


def _assemble_m2(g: Graph, decomp: DecompositionReport) -> tuple[M2Result, str]:
    """Parent m2 from piece results.

    Edges outside 4-cliques contribute zero rows to every substituted form
    and distinct pieces touch disjoint edge/clique sets, so ranks add.  Piece
    witnesses transplant bit-by-bit: vertex maps are increasing, hence
    preserve the lexicographic 4-clique order, and the combined witness is
    the canonically first maximizer whenever every piece's was.
    """
    parent_cliques = enumerate_cliques(g, 4)
    parent_pos = parent_cliques.position
    b2 = len(g.edges)
    total = 0
    witness = 0
    exhaustive = True
    for piece in decomp.pieces:
        res = piece.report.m2
        total += res.m2
        exhaustive = exhaustive and res.exhaustive
        piece_cliques = enumerate_cliques(piece.graph, 4).cliques
        for q, clique in enumerate(piece_cliques):
            if res.witness.bit(q):
                parent_clique = tuple(piece.vertices[v] for v in clique)
                witness |= 1 << parent_pos[parent_clique]
    alpha = AlphaVector(witness, len(parent_cliques))
    return M2Result(total, alpha, b2 - total, exhaustive), "assembled"


def compute_h(g: Graph, config: SolverConfig = DEFAULT_CONFIG,
              heuristic: bool = False, strict: bool = False) -> HReport:
    """Full analysis of one graph: bounds, m2, exact value when certified,
    and the decomposition whenever it is nontrivial."""
    numbers = betti(g)
    b2, b4 = _b(numbers, 2), _b(numbers, 4)
    if b4 == 0:
        return _piece_report(g, config, heuristic, strict)

    decomp = decompose_h(g, config, heuristic, strict)
    if not decomp.free_edges and len(decomp.pieces) == 1 \
            and decomp.pieces[0].graph.n == g.n:
        return _piece_report(g, config, heuristic, strict)

    res, mode = _assemble_m2(g, decomp)
    exact = decomp.aggregate_exact
    if exact is None and res.exhaustive:
        exact = ExactValue(2 * b2 - res.m2, CONJECTURAL_MINIMAL)

    lower_coh = 2 * b2 - res.m2
    if exact is not None and exact.theorem_grade:
        lower_coh = min(lower_coh, exact.value)
    return HReport(g, numbers, res, mode, b2, lower_coh, 2 * b2, exact,
                   decomposition=decomp)


# --------------------------------------------------------------------------
# convenience wrappers
# --------------------------------------------------------------------------

def lower_bound(g: Graph, config: SolverConfig = DEFAULT_CONFIG) -> tuple[int, int]:
    """(trivial, cohomological) lower bounds for h."""
    report = compute_h(g, config)
    return report.lower_trivial, report.lower_cohomological


def upper_bound(g: Graph) -> int:
    return 2 * len(g.edges)
