import random

import pytest
from hypothesis import given, settings, strategies as st

from oracles.graphs import bounds_empty_face, classes, lambda_cycles, naive_graphs
from samples import bigon, naive_to_raw, one_boundary, single_loop, triangle
from sutkit.errors import DanglingReference, NoScharlemannCycle, NotAGabaiGraph, PreconditionError, StructureError
from sutkit.fatgraph import canonical_code, isomorphic, mirror
from sutkit.fatgraph.canonical import canonical_code_raw, graph_from_raw, raw_from_graph
from sutkit.fatgraph.cycles import Cycle, cycle_sides, find_lambda_cycles, find_scharlemann_cycle, is_great, is_scharlemann, scharlemann_search
from sutkit.fatgraph.graph import DISC, FatGraph, Vertex, admissible, edge_labels, planar_pieces
from sutkit.harness.enumerate import enumerate_gabai_graphs, enumerate_raw

SMALL = [(1, 2, 0), (1, 3, 1), (2, 2, 0), (2, 3, 0), (2, 3, 2), (3, 2, 0), (3, 3, 1)]
# classes of the brute-force oracle, counted by hand-run isomorphism testing
NAIVE_CLASSES = {(1, 2, 0): 2, (1, 3, 1): 3, (2, 2, 0): 2, (2, 3, 0): 9, (2, 3, 2): 15, (3, 2, 0): 2, (3, 3, 1): 33}


def _enumerated(n, mu, b):
    return {c for c, r in enumerate_raw(n, mu, min(b, mu - 1)) if len(r.signs) == n and len(r.boundary) == b}


# ---------------------------------------------------------------- structure


def test_bigon_faces_and_euler():
    emb = bigon().embedding
    assert (emb.nv, emb.nfaces, emb.euler()) == (2, 2, 2)
    assert admissible(bigon()).ok


def test_non_planar_rotation_reported():
    g = FatGraph(DISC, 4, (Vertex(1),), (((1, 1), (1, 3)), ((1, 2), (1, 4))), (), True, 0, (1, 1))
    rep = admissible(g)
    assert "embedding" in rep.axioms()


def test_observation_one_violation():
    g = FatGraph(DISC, 2, (Vertex(1), Vertex(2)), (((1, 1), (2, 1)), ((1, 2), (2, 2))), (), True, 0, (1, 1))
    assert "Observation 1" in admissible(g).axioms()


def test_gabai_checks():
    g = FatGraph(DISC, 2, (Vertex(1),), (), (((1, 1), 1), ((1, 2), 2)), True)
    assert "Gabai bound" in admissible(g).axioms()
    g = FatGraph(DISC, 2, (Vertex(1), Vertex(2, -1)), (((1, 1), (2, 2)), ((1, 2), (2, 1))), (), True, 0, (1, 1))
    assert "Gabai signs" in admissible(g).axioms()


@pytest.mark.parametrize(
    "edges, err",
    [
        ((((1, 1), (1, 1)),), StructureError),
        ((((1, 1), (1, 2)), ((1, 2), (1, 1))), StructureError),
        ((((1, 1), (9, 2)),), DanglingReference),
        ((((1, 1), (1, 5)),), StructureError),
        ((), StructureError),
    ],
)
def test_malformed_rotation_data_raises(edges, err):
    g = FatGraph(DISC, 2, (Vertex(1),), edges, (), True, 0, (1, 1))
    with pytest.raises(err):
        g.embedding


def test_bad_fields_rejected():
    with pytest.raises(StructureError):
        FatGraph("torus", 2)
    with pytest.raises(StructureError):
        FatGraph(DISC, 0)
    with pytest.raises(StructureError):
        Vertex(1, 2)


def test_edge_labels():
    g = one_boundary()
    assert edge_labels(g, 0) == (2, 3)
    assert edge_labels(g, 1) == (1, "∂")
    assert edge_labels(g, (1, 3)) == (3, 2)
    with pytest.raises(DanglingReference):
        edge_labels(g, 5)


def test_planar_pieces_counts_each_piece():
    from samples import sphere_graph

    two_loops = sphere_graph(2, [(1, 1, 1), (2, 1, 1)], (((1, 1), (1, 2)), ((2, 1), (2, 2))))
    assert planar_pieces(two_loops)
    crossed = sphere_graph(4, [(1, 1, 1)], (((1, 1), (1, 3)), ((1, 2), (1, 4))))
    assert not planar_pieces(crossed)


# ---------------------------------------------------------------- cycles


def test_bigon_cycles_follow_the_definition():
    g = bigon()
    (c1,) = find_lambda_cycles(g, 1)
    assert c1.vertices == (1, 2) and is_scharlemann(g, c1)
    # label 2 also closes up: both edges leave their tails from slot 2 read the other way
    (c2,) = find_lambda_cycles(g, 2)
    assert c2.length == 2 and is_scharlemann(g, c2)


def test_single_loop_cycle():
    g = single_loop()
    c = find_scharlemann_cycle(g)
    assert c.length == 1 and str(c) == "lambda_1 cycle of length 1: v[1|2] -> v"


def test_triangle_cycle_of_length_three():
    g = triangle()
    c = find_scharlemann_cycle(g)
    assert c.length == 3 and c.tail_label == 4
    assert is_great(g, c) and is_scharlemann(g, c)
    assert str(c) == "lambda_4 cycle of length 3: 1[4|3] -> 3[4|3] -> 2[4|3] -> 1"


def test_search_refuses_non_gabai():
    g = FatGraph(DISC, 2, (Vertex(1), Vertex(2)), (((1, 1), (2, 1)), ((1, 2), (2, 2))), (), True, 0, (1, 1))
    with pytest.raises(NotAGabaiGraph):
        scharlemann_search(g)
    with pytest.raises(NotAGabaiGraph):
        scharlemann_search(FatGraph(DISC, 2, bigon().vertices, bigon().interior_edges, (), False, 0, (1, 1)))


def test_no_scharlemann_cycle_carries_graph():
    exc = NoScharlemannCycle("x", graph=bigon(), trail=[1])
    assert exc.graph == bigon() and exc.trail == [1]


def test_bad_cycles_rejected():
    g = bigon()
    with pytest.raises(PreconditionError):
        cycle_sides(g, Cycle(((1, 1, 2, 1),), 1))
    with pytest.raises(PreconditionError):
        cycle_sides(g, Cycle((), 1))


@pytest.mark.parametrize("n, mu, b", SMALL + [(3, 3, 0), (2, 4, 0), (2, 4, 2), (3, 4, 0)])
def test_cycles_match_brute_force(n, mu, b):
    for ng in naive_graphs(n, mu, b):
        g = graph_from_raw(naive_to_raw(ng), gabai=True)
        for i in range(1, mu + 1):
            found = {}
            for c in find_lambda_cycles(g, i):
                vs = [v - 1 for v in c.vertices]
                k = vs.index(min(vs))
                found[tuple(vs[k:] + vs[:k])] = c
            assert set(found) == lambda_cycles(ng, i)
            for seq, c in found.items():
                assert is_scharlemann(g, c) == bounds_empty_face(ng, seq, i)


# ---------------------------------------------------------------- canonical forms and enumeration


@pytest.mark.parametrize("n, mu, b", SMALL)
def test_enumeration_matches_brute_force(n, mu, b):
    naive = {canonical_code_raw(naive_to_raw(g)) for g in naive_graphs(n, mu, b)}
    assert naive == _enumerated(n, mu, b)


@pytest.mark.parametrize("n, mu, b", [(1, 2, 0), (1, 3, 1), (2, 3, 0), (2, 3, 2)])
def test_brute_force_class_counts(n, mu, b):
    assert len(classes(n, mu, b)) == NAIVE_CLASSES[(n, mu, b)] == len(_enumerated(n, mu, b))


def test_golden_family_counts():
    counts = {}
    for mu in (2, 3, 4):
        for g in enumerate_gabai_graphs(4, mu, mu - 1):
            counts[(mu, len(g.vertices))] = counts.get((mu, len(g.vertices)), 0) + 1
    assert [counts[(2, n)] for n in range(1, 5)] == [2, 2, 2, 2]
    assert [counts[(3, n)] for n in range(1, 5)] == [3, 24, 33, 425]
    assert [counts[(4, n)] for n in range(1, 5)] == [10, 98, 1306, 22254]


def test_enumeration_bounds_checked():
    with pytest.raises(PreconditionError):
        enumerate_raw(2, 3, 3)


def test_shards_partition_the_family():
    whole = [canonical_code(g) for g in enumerate_gabai_graphs(3, 3, 2)]
    parts = [canonical_code(g) for k in range(3) for g in enumerate_gabai_graphs(3, 3, 2, (k, 3))]
    assert sorted(whole) == sorted(parts) and len(set(whole)) == len(whole)


def _relabel(g, perm, shift):
    ids = {v.id: perm[i] for i, v in enumerate(g.vertices)}
    vs = tuple(Vertex(ids[v.id], v.sign) for v in sorted(g.vertices, key=lambda v: ids[v.id]))
    edges = tuple(((ids[a], s), (ids[b], t)) for (a, s), (b, t) in reversed(g.interior_edges))
    b = len(g.boundary_edges)
    bnd = tuple(((ids[a], s), (p + shift) % max(b, 1) + 10) for (a, s), p in g.boundary_edges)
    face = (ids[g.boundary_face[0]], g.boundary_face[1]) if g.boundary_face else None
    return FatGraph(g.ambient, g.mu, vs, edges, bnd, g.gabai, 0, face)


FAMILY = list(enumerate_gabai_graphs(3, 3, 2)) + list(enumerate_gabai_graphs(3, 4, 3))


@given(st.integers(0, len(FAMILY) - 1), st.randoms(use_true_random=False), st.integers(0, 5))
def test_code_invariant_under_relabelling(k, rnd, shift):
    g = FAMILY[k]
    perm = [f"x{i}" for i in range(len(g.vertices))]
    rnd.shuffle(perm)
    h = _relabel(g, perm, shift)
    assert admissible(h).ok
    assert canonical_code(h) == canonical_code(g)
    assert isomorphic(g, h)


@given(st.integers(0, len(FAMILY) - 1))
def test_mirror_is_an_involution_and_isomorphic(k):
    g = FAMILY[k]
    m = mirror(g)
    assert all(v.sign == -1 for v in m.vertices)
    assert admissible(m).ok
    assert canonical_code(m) == canonical_code(g)
    assert canonical_code_raw(raw_from_graph(mirror(m)), reflect=False) == canonical_code_raw(raw_from_graph(g), reflect=False)


@given(st.integers(0, len(FAMILY) - 1))
def test_enumerated_graphs_are_admissible_and_planar(k):
    g = FAMILY[k]
    emb = g.embedding
    assert admissible(g).ok and emb.euler() == 2
    assert all(a[1] != b[1] for a, b in g.interior_edges)
    assert len(g.boundary_edges) < g.mu


@given(st.integers(0, len(FAMILY) - 1))
def test_search_output_is_a_scharlemann_cycle(k):
    g = FAMILY[k]
    res = scharlemann_search(g)
    assert is_scharlemann(g, res.cycle)
    assert res.cycle in find_lambda_cycles(g, res.cycle.tail_label)
    assert res.trail[-1] == res.cycle


def test_distinct_codes_for_distinct_classes():
    codes = [canonical_code(g) for g in FAMILY]
    assert len(set(codes)) == len(codes)
    rng = random.Random(3)
    for _ in range(50):
        g, h = rng.sample(FAMILY, 2)
        assert not isomorphic(g, h)


def _bigon_with_guest(face_dart):
    g = bigon()
    guest = Vertex(3, 1, None, 0, face_dart)
    return FatGraph(DISC, 2, g.vertices + (guest,), g.interior_edges, (), False, 0, g.boundary_face)


def test_vertex_inside_the_bigon_spoils_the_cycle():
    outer = bigon().embedding.face_of[bigon().embedding.dart(1, 1)]
    inner_dart = next((v, s) for v in (1, 2) for s in (1, 2) if bigon().embedding.face_of[bigon().embedding.dart(v, s)] != outer)
    (c,) = find_lambda_cycles(bigon(), 1)
    assert not is_scharlemann(_bigon_with_guest(inner_dart), c)
    assert is_scharlemann(_bigon_with_guest((1, 1)), c)


def test_enumeration_small_cases():
    assert list(enumerate_gabai_graphs(0, 2, 1)) == []
    one = list(enumerate_gabai_graphs(1, 2, 0))
    assert len(one) == 2 and canonical_code(single_loop()) in {canonical_code(g) for g in one}
    assert canonical_code(bigon()) in {canonical_code(g) for g in enumerate_gabai_graphs(2, 2, 1)}
    assert canonical_code(triangle()) in {canonical_code(g) for g in enumerate_gabai_graphs(3, 4, 0)}
