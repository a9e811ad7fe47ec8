import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gsgkit.errors import DomainError, ParameterError, SizeError
from gsgkit.graph import (FAMILIES, MAX_NODES, FamilySpec, Graph, build_family,
                          circulant, clique_expansion, cocktail_party, comet,
                          complete_bipartite, complete_multipartite, cycle,
                          generalized_petersen, girth, graph_props, is_connected,
                          k_cover, line_graph, moebius_ladder, named, path, platonic,
                          prism, regular_degree, tensor_product)


def to_nx(g: Graph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return G


def iso(g: Graph, H: nx.Graph) -> bool:
    return nx.is_isomorphic(to_nx(g), H)


# --- Graph container ---------------------------------------------------------

def test_graph_is_immutable_and_validated():
    g = cycle(4)
    with pytest.raises(ValueError):
        g.adjacency[0, 1] = False
    with pytest.raises(ParameterError):
        Graph([[0, 1], [0, 0]])
    with pytest.raises(ParameterError):
        Graph([[1]])
    with pytest.raises(ParameterError):
        Graph(np.zeros((0, 0)))
    with pytest.raises(ParameterError):
        Graph.from_edges(3, [(0, 3)])
    with pytest.raises(ParameterError):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(ParameterError):
        Graph([[0, 1], [1, 0]], labels=["a"])


def test_graph_size_cap():
    with pytest.raises(SizeError):
        Graph.from_edges(MAX_NODES + 1, [])


def test_edges_lexicographic_and_equality():
    g = Graph.from_edges(4, [(3, 2), (1, 0), (2, 0)])
    assert g.edges() == [(0, 1), (0, 2), (2, 3)]
    assert g == Graph.from_edges(4, [(0, 1), (0, 2), (2, 3)])
    assert hash(g) == hash(Graph.from_edges(4, [(0, 1), (0, 2), (2, 3)]))
    assert g.m == 3 and list(g.degrees) == [2, 1, 2, 1]
    assert list(g.neighbors(0)) == [1, 2]
    lap = g.laplacian_matrix()
    assert np.allclose(lap.sum(axis=1), 0)


# --- family specs ------------------------------------------------------------

def test_family_spec_validation_and_str():
    spec = FamilySpec.of("comet", r=1, q=17)
    assert str(spec) == "comet(q=17; r=1)"
    assert spec == FamilySpec("comet", {"q": 17, "r": 1})
    assert hash(spec) == hash(FamilySpec("comet", {"q": 17, "r": 1}))
    assert str(FamilySpec.of("circulant", n=8, conn=[1, 4])) == "circulant(conn=1,4; n=8)"
    with pytest.raises(ParameterError):
        FamilySpec.of("nope", n=3)
    with pytest.raises(ParameterError):
        FamilySpec.of("cycle")
    with pytest.raises(ParameterError):
        FamilySpec.of("cycle", n=5, k=2)


@pytest.mark.parametrize("spec, expected", [
    (FamilySpec.of("cycle", n=7), nx.cycle_graph(7)),
    (FamilySpec.of("path", n=6), nx.path_graph(6)),
    (FamilySpec.of("complete", n=6), nx.complete_graph(6)),
    (FamilySpec.of("complete_bipartite", a=2, b=5), nx.complete_bipartite_graph(2, 5)),
    (FamilySpec.of("complete_multipartite", n=9, c=3), nx.complete_multipartite_graph(3, 3, 3)),
    (FamilySpec.of("star", q=6), nx.star_graph(6)),
    (FamilySpec.of("circulant", n=10, conn=(1, 3)), nx.circulant_graph(10, [1, 3])),
    (FamilySpec.of("moebius_ladder", n=10), nx.circulant_graph(10, [1, 5])),
    (FamilySpec.of("prism", n=10), nx.circular_ladder_graph(5)),
    (FamilySpec.of("generalized_petersen", n=5, k=2), nx.petersen_graph()),
    (FamilySpec.of("named", name="Heawood"), nx.heawood_graph()),
    (FamilySpec.of("platonic", name="dodecahedron"), nx.dodecahedral_graph()),
    (FamilySpec.of("platonic", name="icosahedron"), nx.icosahedral_graph()),
    (FamilySpec.of("platonic", name="octahedron"), nx.octahedral_graph()),
    (FamilySpec.of("platonic", name="cube"), nx.cubical_graph()),
    (FamilySpec.of("platonic", name="tetrahedron"), nx.tetrahedral_graph()),
    (FamilySpec.of("line_complete_bipartite", a=3, b=4),
     nx.line_graph(nx.complete_bipartite_graph(3, 4))),
])
def test_build_family_matches_networkx(spec, expected):
    assert iso(build_family(spec), expected)


def test_every_family_buildable():
    samples = {
        "cycle": dict(n=5), "path": dict(n=3), "complete": dict(n=3),
        "complete_bipartite": dict(a=1, b=2), "complete_multipartite": dict(n=4, c=2),
        "cocktail_party": dict(n=2), "star": dict(q=3), "comet": dict(q=3, r=2),
        "circulant": dict(n=6, conn=(1,)), "moebius_ladder": dict(n=6), "prism": dict(n=6),
        "generalized_petersen": dict(n=5, k=1), "platonic": dict(name="cube"),
        "named": dict(name="mcgee"), "c5_expansion": dict(k=2), "k_cover_c3": dict(k=2),
        "k_cover_c5": dict(k=2), "line_complete_bipartite": dict(a=2, b=2),
    }
    assert set(samples) == set(FAMILIES)
    for fam, params in samples.items():
        assert build_family(FamilySpec(fam, params)).n >= 2


def test_mcgee_is_the_3_7_cage():
    g = named("mcgee")
    assert g.n == 24 and regular_degree(g) == 3 and girth(g) == 7
    assert girth(named("heawood")) == 6 and girth(named("petersen")) == 5


def test_comet_layout_and_degrees():
    g = comet(4, 3)
    assert g.n == 8 and g.m == 7
    assert sorted(g.degrees.tolist(), reverse=True) == [4, 2, 2, 2, 1, 1, 1, 1]
    assert nx.is_tree(to_nx(g))
    g = comet(8, 1)
    assert g.n == 10 and sorted(g.degrees.tolist(), reverse=True) == [8, 2] + [1] * 8


def test_cocktail_party_structure():
    g = cocktail_party(4)
    assert iso(g, nx.complement(nx.Graph([(i, i + 4) for i in range(4)])))
    assert regular_degree(g) == 6


def test_constructor_errors():
    for bad in (lambda: cycle(2), lambda: path(0), lambda: complete_multipartite(7, 3),
                lambda: moebius_ladder(5), lambda: prism(4),
                lambda: generalized_petersen(6, 3), lambda: platonic("sphere"),
                lambda: named("foo"), lambda: circulant(6, (6,)), lambda: circulant(6, ()),
                lambda: k_cover(4, 2), lambda: clique_expansion(cycle(5), 0)):
        with pytest.raises(ParameterError):
            bad()
    with pytest.raises(DomainError):
        line_graph(Graph.from_edges(3, []))
    with pytest.raises(SizeError):
        clique_expansion(cycle(5), 5000)


# --- operators -----------------------------------------------------------------

def test_tensor_product_matches_networkx():
    g, h = cycle(5), path(3)
    assert iso(tensor_product(g, h), nx.tensor_product(nx.cycle_graph(5), nx.path_graph(3)))


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_clique_expansion_forms(k):
    g = clique_expansion(cycle(5), k)
    assert regular_degree(g) == 2 * k and g.n == 5 * k
    h = clique_expansion(cycle(5), k, cliques=True)
    assert regular_degree(h) == 3 * k - 1
    # copies of a node form a k-clique only in the clique form
    assert not g.adjacency[:k, :k].any()
    assert h.adjacency[:k, :k].sum() == k * (k - 1)


@pytest.mark.parametrize("base", [3, 5])
@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_k_cover_structure(base, k):
    g = k_cover(base, k)
    assert g.n == base * k * k
    if k >= 2:
        assert regular_degree(g) == 3 * k - 1
        assert is_connected(g)


def test_k_cover_small_cases():
    assert k_cover(3, 1) == cycle(3)
    assert k_cover(5, 1) == cycle(5)
    assert iso(k_cover(3, 2), nx.icosahedral_graph())


@settings(max_examples=40, deadline=None)
@given(st.integers(3, 9), st.data())
def test_line_graph_matches_networkx(n, data):
    mask = data.draw(st.lists(st.booleans(), min_size=n * (n - 1) // 2,
                              max_size=n * (n - 1) // 2))
    iu = np.triu_indices(n, 1)
    edges = [(int(u), int(v)) for u, v, keep in zip(*iu, mask) if keep]
    if not edges:
        return
    g = Graph.from_edges(n, edges)
    assert iso(line_graph(g), nx.line_graph(to_nx(g)))


# --- properties ------------------------------------------------------------------

@settings(max_examples=60, deadline=None)
@given(st.integers(1, 10), st.data())
def test_graph_props_match_networkx(n, data):
    bits = data.draw(st.lists(st.booleans(), min_size=n * (n - 1) // 2,
                              max_size=n * (n - 1) // 2))
    iu = np.triu_indices(n, 1)
    g = Graph.from_edges(n, [(int(u), int(v)) for u, v, b in zip(*iu, bits) if b])
    G = to_nx(g)
    p = graph_props(g)
    assert p.m == G.number_of_edges()
    assert p.is_connected == nx.is_connected(G)
    assert p.components == nx.number_connected_components(G)
    assert p.is_bipartite == nx.is_bipartite(G)
    assert sorted(p.degree_sequence) == sorted(d for _, d in G.degree())
    degs = {d for _, d in G.degree()}
    assert p.is_regular == (len(degs) == 1)
    if p.is_regular:
        assert p.degree == degs.pop()
    expected_girth = nx.girth(G)
    assert girth(g) == (None if expected_girth == float("inf") else expected_girth)


def test_regular_degree_rejects_irregular():
    with pytest.raises(DomainError):
        regular_degree(path(4))
    assert complete_bipartite(3, 3).m == 9
