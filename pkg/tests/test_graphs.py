import math
import random
from itertools import combinations

import pytest

from raagh import (FamilyCertificate, ParseError, betti, canonical_key,
                   connected_components, disjoint_union, enumerate_cliques,
                   generate_family, is_isomorphic, make_graph,
                   maximal_cliques, parse_graph, recognize_family,
                   serialize_graph, to_dot, verify_certificate)
from raagh.graphs import (articulation_points, biconnected_blocks,
                          classify_edges, induced_subgraph)

from oracles import cliques_oracle, random_gnp


def join_graph():
    """Two 4-cliques glued along a shared triangle: 5 vertices, all pairs
    adjacent except the two degree-3 endpoints."""
    return make_graph(5, [(u, v) for u, v in combinations(range(5), 2)
                          if (u, v) != (0, 4)])


# --------------------------------------------------------------------------
# cliques and betti numbers
# --------------------------------------------------------------------------

@pytest.mark.parametrize("seed", range(12))
def test_clique_enumeration_matches_oracle(seed):
    rnd = random.Random(seed)
    n = rnd.randint(3, 9)
    g = make_graph(n, random_gnp(n, 0.5, seed * 7 + 1))
    for k in range(1, 6):
        got = list(enumerate_cliques(g, k).cliques)
        assert got == cliques_oracle(g, k)
        assert got == sorted(got)  # lexicographic


@pytest.mark.parametrize("n", range(1, 11))
def test_betti_complete_graph_is_binomial_row(n):
    g = make_graph(n, combinations(range(n), 2))
    assert betti(g) == tuple(math.comb(n, k) for k in range(n + 1))


def test_betti_of_join_graph():
    assert betti(join_graph()) == (1, 5, 9, 7, 2)


def test_betti_counts_components_in_degree_zero():
    g = disjoint_union(make_graph(3, [(0, 1), (1, 2)]),
                       make_graph(2, []))
    assert betti(g)[0] == 3
    assert betti(make_graph(0, ())) == (0,)


def test_betti_k5_with_pendant_triangle_fan():
    # K5 plus one extra vertex joined to three of its vertices
    edges = list(combinations(range(5), 2)) + [(2, 5), (3, 5), (4, 5)]
    assert betti(make_graph(6, edges)) == (1, 6, 13, 13, 6, 1)


def test_maximal_cliques_sorted_and_maximal():
    g = generate_family(FamilyCertificate.clique_string(5, 2))
    mc = maximal_cliques(g)
    assert mc == ((0, 1, 2, 3, 4), (3, 4, 5, 6, 7))
    assert all(c == tuple(sorted(c)) for c in mc)


# --------------------------------------------------------------------------
# generators
# --------------------------------------------------------------------------

@pytest.mark.parametrize("s,k", [(s, k) for s in (4, 5, 6, 7) for k in (1, 2, 3)])
def test_clique_string_counts(s, k):
    g = generate_family(FamilyCertificate.clique_string(s, k))
    assert g.n == (s - 2) * k + 2
    assert len(g.edges) == s * (s - 1) // 2 * k - (k - 1)
    assert len(enumerate_cliques(g, 4)) == math.comb(s, 4) * k


@pytest.mark.parametrize("k", range(1, 8))
def test_face_string_counts(k):
    g = generate_family(FamilyCertificate.face_string(k))
    assert g.n == k + 3
    assert len(g.edges) == 3 * k + 3
    assert len(enumerate_cliques(g, 4)) == k
    # every window of four consecutive vertices is a clique
    assert all(g.has_edge(i, j) == (abs(i - j) <= 3)
               for i in range(g.n) for j in range(i + 1, g.n))


def test_grid_generator_counts_and_validation():
    g = generate_family(FamilyCertificate.grid([(0, 0), (1, 0)]))
    assert g.n == 6 and len(g.edges) == 11
    assert len(enumerate_cliques(g, 4)) == 2
    with pytest.raises(ValueError, match="connected"):
        generate_family(FamilyCertificate.grid([(0, 0), (1, 1)]))
    with pytest.raises(ValueError):
        generate_family(FamilyCertificate.grid([]))


def test_grid_cells_are_canonicalized():
    a = FamilyCertificate.grid([(1, 0), (0, 0), (1, 0)])
    b = FamilyCertificate.grid([(0, 0), (1, 0)])
    assert a == b


def test_hex_triangle_counts():
    g = generate_family(FamilyCertificate.hex_triangle(2))
    assert g.n == 6 and len(g.edges) == 12
    assert len(enumerate_cliques(g, 4)) == 3
    g3 = generate_family(FamilyCertificate.hex_triangle(3))
    assert g3.n == 10 and len(g3.edges) == 27


def test_generators_reject_bad_parameters():
    for cert in (FamilyCertificate.clique_string(3, 2),
                 FamilyCertificate.clique_string(8, 1),
                 FamilyCertificate.clique_string(5, 0),
                 FamilyCertificate.face_string(0),
                 FamilyCertificate.hex_triangle(0)):
        with pytest.raises(ValueError):
            generate_family(cert)


# --------------------------------------------------------------------------
# recognition
# --------------------------------------------------------------------------

def _shuffled(g, seed):
    perm = list(range(g.n))
    random.Random(seed).shuffle(perm)
    return make_graph(g.n, [(perm[u], perm[v]) for u, v in g.edges])


def test_recognize_edgeless_and_complete():
    assert recognize_family(make_graph(4, ())) == FamilyCertificate.edgeless(4)
    k6 = make_graph(6, combinations(range(6), 2))
    assert recognize_family(k6) == FamilyCertificate.complete(6)


@pytest.mark.parametrize("s,k", [(4, 2), (4, 5), (5, 2), (5, 4), (6, 3), (7, 2)])
def test_recognize_clique_strings_up_to_relabeling(s, k):
    cert = FamilyCertificate.clique_string(s, k)
    g = generate_family(cert)
    assert recognize_family(g) == cert
    assert recognize_family(_shuffled(g, s * 31 + k)) == cert


@pytest.mark.parametrize("k", [3, 4, 5, 8, 12])
def test_recognize_face_strings_up_to_relabeling(k):
    cert = FamilyCertificate.face_string(k)
    g = generate_family(cert)
    assert recognize_family(g) == cert
    assert recognize_family(_shuffled(g, k)) == cert


def test_recognizer_leaves_small_ambiguous_graphs_alone():
    # the 5-vertex join graph doubles as the shortest face-string; it is
    # reported as unrecognized so nothing certifies it by formula
    assert recognize_family(join_graph()) is None
    assert recognize_family(generate_family(FamilyCertificate.face_string(2))) is None
    # a single clique block is already complete
    k4 = generate_family(FamilyCertificate.clique_string(4, 1))
    assert recognize_family(k4) == FamilyCertificate.complete(4)


def test_recognizer_rejects_near_misses():
    g = generate_family(FamilyCertificate.clique_string(4, 3))
    # same counts, but break the chain: move one end edge elsewhere
    edges = set(g.edges)
    edges.remove((6, 7))
    edges.add((0, 5))
    assert recognize_family(make_graph(g.n, edges)) is None


def test_recognizer_rejects_bent_clique_chains():
    # chains whose glue edges share a vertex have exactly the counts of a
    # clique-string but are not isomorphic to one
    tromino = generate_family(FamilyCertificate.grid([(0, 0), (1, 0), (1, 1)]))
    bare = make_graph(tromino.n, tromino.edges)  # strip the certificate
    assert recognize_family(bare) is None
    assert not verify_certificate(bare, FamilyCertificate.clique_string(4, 3))
    cliques = [set(range(5)), {3, 4, 5, 6, 7}, {4, 5, 8, 9, 10}]
    edges = set()
    for c in cliques:
        edges |= set(combinations(sorted(c), 2))
    bent = make_graph(11, edges)
    straight = generate_family(FamilyCertificate.clique_string(5, 3))
    assert (bent.n, len(bent.edges)) == (straight.n, len(straight.edges))
    assert recognize_family(bent) is None


def test_recognizer_skips_large_graphs():
    g = generate_family(FamilyCertificate.face_string(45))
    assert g.n > 40
    assert recognize_family(g) is None


# --------------------------------------------------------------------------
# certificates
# --------------------------------------------------------------------------

def test_verify_certificate_accepts_generated_families():
    for cert in (FamilyCertificate.edgeless(3),
                 FamilyCertificate.complete(5),
                 FamilyCertificate.clique_string(5, 3),
                 FamilyCertificate.face_string(2),
                 FamilyCertificate.grid([(0, 0), (1, 0), (1, 1)]),
                 FamilyCertificate.hex_triangle(2)):
        g = generate_family(cert)
        assert verify_certificate(g, cert)
        assert verify_certificate(_shuffled(g, 99), cert)


def test_verify_certificate_rejects_mismatches():
    g = generate_family(FamilyCertificate.clique_string(4, 2))
    assert not verify_certificate(g, FamilyCertificate.clique_string(4, 3))
    assert not verify_certificate(g, FamilyCertificate.face_string(3))
    assert not verify_certificate(g, FamilyCertificate.complete(6))
    # right counts, wrong structure
    h = generate_family(FamilyCertificate.face_string(3))
    edges = set(h.edges)
    edges.remove((0, 1))
    edges.add((0, 4))
    assert not verify_certificate(make_graph(h.n, edges),
                                  FamilyCertificate.face_string(3))


def test_certificate_dict_round_trip():
    for cert in (FamilyCertificate.clique_string(6, 2),
                 FamilyCertificate.grid([(0, 0), (0, 1)]),
                 FamilyCertificate.hex_triangle(3)):
        assert FamilyCertificate.from_dict(cert.to_dict()) == cert


# --------------------------------------------------------------------------
# parsing and serialization
# --------------------------------------------------------------------------

@pytest.mark.parametrize("fmt", ["edges", "csv", "json"])
def test_round_trip_preserves_structure(fmt):
    g = join_graph()
    h = parse_graph(serialize_graph(g, fmt), fmt)
    assert (h.n, h.edges) == (g.n, g.edges)


@pytest.mark.parametrize("fmt", ["edges", "json"])
def test_round_trip_preserves_certificate(fmt):
    g = generate_family(FamilyCertificate.clique_string(5, 2))
    h = parse_graph(serialize_graph(g, fmt), fmt)
    assert h.certificate == g.certificate


def test_edge_list_directives():
    g = parse_graph("# vertices: 4\n0 1\n2 3\n", "edges")
    assert g.n == 4 and g.edges == ((0, 1), (2, 3))
    text = '# certificate: {"family": "face-string", "count": 3}\n' \
           + "\n".join(f"{u} {v}" for u, v in
                       generate_family(FamilyCertificate.face_string(3)).edges)
    assert parse_graph(text, "edges").certificate == FamilyCertificate.face_string(3)


def test_edge_list_compacts_sparse_ids_and_keeps_labels():
    g = parse_graph("5 9\n9 12\n", "edges")
    assert g.n == 3 and g.edges == ((0, 1), (1, 2))
    assert g.labels == ("5", "9", "12")
    # labels survive serialization as a relabeled but isomorphic graph
    again = parse_graph(serialize_graph(g, "edges"), "edges")
    assert again.edges == g.edges


@pytest.mark.parametrize("text,fmt,fragment", [
    ("0 0\n", "edges", "self-loop"),
    ("0 1\n1 0\n", "edges", "duplicate"),
    ("0 1\n1\n", "edges", "expected 'u v'"),
    ("0 x\n", "edges", "not an integer"),
    ("# vertices: 3\n0 4\n", "edges", "out-of-range"),
    ("# vertices: no\n", "edges", "vertices directive"),
    ("0,1\n1,1\n", "csv", "diagonal"),
    ("0,1\n0,0\n", "csv", "asymmetric"),
    ("0,1,0\n1,0\n0,0,0\n", "csv", "entries"),
    ("0,2\n2,0\n", "csv", "not 0/1"),
    ("{", "json", "invalid JSON"),
    ("[]", "json", "object"),
    ('{"edges": []}', "json", "vertices"),
    ('{"vertices": 2, "edges": [[0, 0]]}', "json", "self-loop"),
    ('{"vertices": 2, "edges": [[0, 3]]}', "json", "out-of-range"),
    ('{"vertices": 2, "edges": [[0, 1], [1, 0]]}', "json", "duplicate"),
])
def test_parse_errors_are_specific(text, fmt, fragment):
    with pytest.raises(ParseError, match=fragment):
        parse_graph(text, fmt)


def test_parse_errors_carry_line_numbers():
    with pytest.raises(ParseError, match="line 3"):
        parse_graph("0 1\n1 2\n2 2\n", "edges")
    with pytest.raises(ParseError, match="line 2"):
        parse_graph("0,1\n1,1\n", "csv")


def test_dot_export_mentions_every_edge():
    g = make_graph(3, [(0, 1)])
    dot = to_dot(g)
    assert "0 -- 1;" in dot and dot.startswith("graph G {")
    assert "  2;" in dot  # isolated vertices still listed


# --------------------------------------------------------------------------
# connectivity helpers
# --------------------------------------------------------------------------

def test_components_and_induced_subgraphs():
    g = disjoint_union(make_graph(3, [(0, 1), (1, 2)]), make_graph(2, [(0, 1)]))
    comps = connected_components(g)
    assert [vmap for _, vmap in comps] == [(0, 1, 2), (3, 4)]
    sub, vmap = induced_subgraph(g, [4, 3])
    assert sub.edges == ((0, 1),) and vmap == (3, 4)


def test_articulation_points_and_blocks():
    path = make_graph(4, [(0, 1), (1, 2), (2, 3)])
    assert articulation_points(path) == (1, 2)
    assert sorted(biconnected_blocks(path)) == [(0, 1), (1, 2), (2, 3)]
    wedge = make_graph(7, list(combinations(range(4), 2))
                       + list(combinations((3, 4, 5, 6), 2)))
    assert articulation_points(wedge) == (3,)
    assert sorted(biconnected_blocks(wedge)) == [(0, 1, 2, 3), (3, 4, 5, 6)]


def test_classify_edges_splits_by_4_clique_membership():
    g = join_graph()
    covered, free = classify_edges(g)
    assert len(covered) == 9 and free == ()
    tri = make_graph(3, [(0, 1), (0, 2), (1, 2)])
    covered, free = classify_edges(tri)
    assert covered == () and len(free) == 3


# --------------------------------------------------------------------------
# canonical form
# --------------------------------------------------------------------------

def test_canonical_key_detects_isomorphism():
    g = generate_family(FamilyCertificate.clique_string(4, 3))
    assert canonical_key(g) == canonical_key(_shuffled(g, 5))
    assert is_isomorphic(g, _shuffled(g, 17))


def test_canonical_key_separates_non_isomorphic_graphs():
    a = make_graph(4, [(0, 1), (1, 2), (2, 3)])        # path
    b = make_graph(4, [(0, 1), (0, 2), (0, 3)])        # star
    assert canonical_key(a) != canonical_key(b)
    assert not is_isomorphic(a, b)
