import itertools
import math

import networkx as nx
import numpy as np
import pytest

from conftest import assert_identity
from gsgkit.analysis import PHI
from gsgkit.errors import ParameterError, SizeError
from gsgkit.graph import FamilySpec, Graph, build_family, cycle, named
from gsgkit.io import emit_graph6, write_graph_file
from gsgkit.search import (ScanRecord, enumerate_connected_graphs, enumerate_free_trees,
                           exact_golden_instances, fibonacci_line_graph_study,
                           free_tree_level_sequences, parse_range, rank_records,
                           scan_family, scan_files, scan_graphs, scan_specs, scan_trees,
                           tree_from_levels)
from gsgkit.spectra import spectral_ratios

# free trees on n = 1.. nodes
FREE_TREES = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741, 19320]


def to_nx(g):
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return G


def prufer_classes(n):
    """Brute-force oracle: all labelled trees via Pruefer codes, reduced to
    isomorphism classes."""
    buckets: dict[str, list] = {}
    for code in itertools.product(range(n), repeat=n - 2):
        T = nx.from_prufer_sequence(list(code))
        bucket = buckets.setdefault(nx.weisfeiler_lehman_graph_hash(T), [])
        if not any(nx.is_isomorphic(T, U) for U in bucket):
            bucket.append(T)
    return [T for bucket in buckets.values() for T in bucket]


# --- trees ---------------------------------------------------------------------------

@pytest.mark.parametrize("n", range(2, 17))
def test_free_tree_counts(n):
    assert sum(1 for _ in free_tree_level_sequences(n)) == FREE_TREES[n - 1]


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_free_trees_match_pruefer_brute_force(n):
    ours = [to_nx(g) for g in enumerate_free_trees(n, n)]
    assert len(ours) == len(prufer_classes(n))


@pytest.mark.parametrize("n", [8, 9, 10])
def test_free_trees_are_distinct_trees(n):
    buckets: dict[str, list] = {}
    for g in enumerate_free_trees(n, n):
        T = to_nx(g)
        assert nx.is_tree(T) and T.number_of_nodes() == n
        bucket = buckets.setdefault(nx.weisfeiler_lehman_graph_hash(T), [])
        assert not any(nx.is_isomorphic(T, U) for U in bucket)
        bucket.append(T)


def test_tree_basics():
    (only,) = list(enumerate_free_trees(2, 2))
    assert only.n == 2 and only.m == 1
    assert tree_from_levels([0, 1, 2, 1]).m == 3
    assert sum(1 for _ in enumerate_free_trees(2, 10)) == 200
    with pytest.raises(SizeError):
        list(enumerate_free_trees(2, 17))
    with pytest.raises(ParameterError):
        list(enumerate_free_trees(5, 4))


def test_no_tree_up_to_10_golden_and_comet_minimum():
    recs = scan_trees(2, 10, tol=1e-6)
    assert not any(r.is_golden for r in recs)
    best = recs[0]
    levels = [int(c) for c in best.spec.split("levels=")[1].rstrip(")")]
    assert nx.is_isomorphic(to_nx(tree_from_levels(levels)),
                            to_nx(build_family(FamilySpec.of("comet", q=8, r=1))))
    for r in recs:
        if r.w1 is not None and r.w2 is not None:
            assert abs(r.w2 - (1 + 1 / r.w1)) < 1e-9


# --- small connected graphs ------------------------------------------------------------

@pytest.mark.parametrize("n, labeled, classes", [
    (1, 1, 1), (2, 1, 1), (3, 4, 2), (4, 38, 6), (5, 728, 21), (6, 26704, 112),
])
def test_connected_graph_counts(n, labeled, classes):
    assert sum(1 for _ in enumerate_connected_graphs(n)) == labeled
    assert sum(1 for _ in enumerate_connected_graphs(n, dedup=True)) == classes


def test_dedup_classes_are_pairwise_non_isomorphic():
    reps = [to_nx(g) for g in enumerate_connected_graphs(5, dedup=True)]
    assert all(nx.is_connected(G) for G in reps)
    for G, H in itertools.combinations(reps, 2):
        assert not nx.is_isomorphic(G, H)


def test_enumeration_limits():
    with pytest.raises(SizeError):
        list(enumerate_connected_graphs(8))
    with pytest.raises(SizeError):
        list(enumerate_connected_graphs(7, dedup=True))


def test_exact_golden_instances_small_graphs():
    graphs = [g for n in range(1, 7) for g in enumerate_connected_graphs(n, dedup=True)]
    found = exact_golden_instances(graphs)
    assert len(found) == 1 and nx.is_isomorphic(to_nx(found[0]), nx.cycle_graph(5))


# --- scans ------------------------------------------------------------------------------

def test_parse_range_grammar():
    assert parse_range("q=3..6 r=1") == {"q": [3, 4, 5, 6], "r": [1]}
    assert parse_range("n=4..12:2") == {"n": [4, 6, 8, 10, 12]}
    assert parse_range("k=1,3;n=7") == {"k": [1, 3], "n": [7]}
    assert parse_range("n=8 conn=1/4,2") == {"n": [8], "conn": [(1, 4), (2,)]}
    assert parse_range("name=cube,icosahedron") == {"name": ["cube", "icosahedron"]}
    for bad in ("", "q", "q=a", "n=1..5:0"):
        with pytest.raises(ParameterError):
            parse_range(bad)


def test_ranking_order_and_ties():
    recs = [ScanRecord("b", 5, 4, 1.0, 2.0, 1.0, 0.3, False),
            ScanRecord("a", 5, 4, 1.0, 2.0, 1.0, 0.3, False),
            ScanRecord("z", 3, 3, None, None, 0.0, None, False),
            ScanRecord("c", 4, 4, 1.0, 2.0, 1.0, 0.3, False),
            ScanRecord("d", 9, 9, 1.0, 2.0, 1.0, 0.1, False)]
    ranked = rank_records(recs)
    assert [r.spec for r in ranked] == ["d", "c", "a", "b", "z"]
    assert [r.rank for r in ranked] == [1, 2, 3, 4, 5]


def test_scan_is_deterministic_and_worker_independent():
    specs = [FamilySpec.of("comet", q=q, r=1) for q in range(3, 15)]
    serial = scan_specs(specs, workers=None)
    parallel = scan_specs(specs, workers=2)
    assert serial == parallel == scan_specs(list(reversed(specs)))
    for r in serial:
        assert r.is_golden == (r.deviation <= 0.05)


def test_scan_family_grid_and_empty():
    recs = scan_family("circulant", {"n": [8], "conn": [(1, 4), (1, 2), (1, 3)]})
    assert len(recs) == 3
    assert scan_family("cycle", []) == []


def test_moebius_ratios_diverge():
    recs = {r.n: r for r in scan_family("moebius_ladder", {"n": range(6, 41, 2)})}
    assert recs[8].w1 == pytest.approx(1 + math.sqrt(2) / 2)
    assert recs[40].deviation > recs[20].deviation > recs[12].deviation


@pytest.fixture(scope="module")
def cubic10():
    """The 19 connected cubic graphs on 10 nodes, sampled from random
    3-regular graphs and reduced to isomorphism classes."""
    reps = []
    buckets = {}
    for seed in range(5000):
        G = nx.random_regular_graph(3, 10, seed=seed)
        if not nx.is_connected(G):
            continue
        bucket = buckets.setdefault(nx.weisfeiler_lehman_graph_hash(G, iterations=4), [])
        if not any(nx.is_isomorphic(G, H) for H in bucket):
            bucket.append(G)
            reps.append(G)
        if len(reps) == 19:
            break
    assert len(reps) == 19
    return reps


def test_cubic_corpus_scan_finds_petersen(tmp_path, cubic10):
    path = tmp_path / "cubic10.g6"
    lines = [emit_graph6(Graph(nx.to_numpy_array(G, nodelist=range(10)) > 0)) for G in cubic10]
    path.write_bytes(b"\n".join(lines) + b"\n")
    res = scan_files([path])
    assert len(res.records) == 19 and not res.errors
    best = res.records[0]
    assert best.w1 == pytest.approx(1.5) and best.w2 == pytest.approx(5 / 3)
    line = int(best.spec.rsplit(":", 1)[1])
    assert nx.is_isomorphic(cubic10[line - 1], nx.petersen_graph())


def test_scan_files_error_reporting(tmp_path):
    good = tmp_path / "c5.edges"
    write_graph_file(cycle(5), good)
    bad = tmp_path / "bad.edges"
    bad.write_text("a b\nc\n")
    mixed = tmp_path / "mixed.g6"
    mixed.write_bytes(emit_graph6(named("petersen")) + b"\nD~\n" + b"@\n")
    empty = tmp_path / "empty.adj"
    empty.write_text("\n")
    res = scan_files([good, bad, mixed, empty, tmp_path / "missing.g6"])
    labels = [r.spec for r in res.records]
    assert len(labels) == 2
    assert res.records[0].deviation <= 1e-9
    msgs = dict(res.errors)
    assert "line 2" in msgs[str(bad)]
    assert any("expected 2 body bytes" in m for m in msgs.values())
    assert any("single-node" in m for m in msgs.values())
    assert str(tmp_path / "missing.g6") in msgs
    assert len(res.warnings) == 1


def test_scan_graphs_identity():
    recs = scan_graphs([(f"c{n}", cycle(n)) for n in range(3, 30)], rank=False)
    assert [r.spec for r in recs][:2] == ["c3", "c4"]
    for r in recs:
        if r.w1 and r.w2:
            assert abs(r.w2 - (1 + 1 / r.w1)) < 1e-9


# --- Fibonacci / Lucas line graphs ------------------------------------------------------

def test_fibonacci_line_graph_study():
    rows = fibonacci_line_graph_study(12)
    assert [r.k for r in rows] == list(range(2, 13))
    by_k = {r.k: r for r in rows}
    assert (by_k[3].a, by_k[3].b) == (3, 2)
    assert by_k[3].w1 == pytest.approx(1.5) and by_k[3].w2 == pytest.approx(5 / 3)
    # L(K_{2,1}) = K_2 has no bulk; from b = 2 on, numeric w1 is exactly a/b
    assert by_k[2].w1 == 0.0
    for r in rows[1:]:
        assert r.w1 == pytest.approx(r.a / r.b, rel=1e-9)
        assert r.w1 == pytest.approx(r.predicted_w1, rel=1e-9)
    assert by_k[6].w1 == pytest.approx(13 / 8)
    assert abs(by_k[12].w1 - PHI) < 1e-4
    assert by_k[12].method == "cartesian" and by_k[3].method == "dense"


def test_fibonacci_study_dense_and_cartesian_agree():
    dense = fibonacci_line_graph_study(7, dense_limit=10 ** 6)
    cart = fibonacci_line_graph_study(7, dense_limit=0)
    for d, c in zip(dense, cart):
        assert d.w1 == pytest.approx(c.w1, abs=1e-9)
        assert d.w2 == pytest.approx(c.w2, abs=1e-9)


def test_lucas_study_and_errors():
    rows = fibonacci_line_graph_study(5, k_min=3, sequence="lucas")
    r = rows[0]
    assert (r.a, r.b) == (7, 4)
    assert r.w1 == pytest.approx(7 / 4)
    assert_identity(spectral_ratios(np.array([r.a + r.b - 2, r.a - 2, -2.0])))
    with pytest.raises(SizeError):
        fibonacci_line_graph_study(13)
    with pytest.raises(ParameterError):
        fibonacci_line_graph_study(5, sequence="pell")
