import pytest

from samples import sphere_graph
from sutkit.errors import DanglingReference, PreconditionError
from sutkit.fatgraph import (
    ESSENTIAL,
    INESSENTIAL,
    boundary_fullness,
    check_regions,
    classify_loop,
    complete_graph_structure,
    fullness,
    gabai_witness_search,
)
from sutkit.fatgraph.graph import SPHERE, FatGraph, Vertex, admissible


def _nested():
    """Vertex 1 carries a loop with vertex 2 on one side and vertex 3 on the other."""
    vs = (Vertex(1, 1, 1, 4), Vertex(2, 1, 1, 1), Vertex(3, 1, 1, 1))
    edges = (((1, 1), (1, 3)), ((1, 2), (2, 1)), ((1, 4), (3, 1)))
    return FatGraph(SPHERE, 2, vs, edges, (), suture_circles=1, boundary_face=(1, 1))


def _double_edge():
    vs = (Vertex(1, 1, 1, 2), Vertex(2, -1, 1, 2))
    edges = (((1, 1), (2, 1)), ((1, 2), (2, 2)))
    return FatGraph(SPHERE, 2, vs, edges, (), suture_circles=1, boundary_face=(1, 1))


def test_loop_classification():
    assert classify_loop(_nested(), 0) == ESSENTIAL
    lone = FatGraph(SPHERE, 2, (Vertex(1, 1, 1, 2),), (((1, 1), (1, 2)),), suture_circles=1, boundary_face=(1, 1))
    assert classify_loop(lone, 0) == INESSENTIAL
    assert classify_loop(lone, (1, 2)) == INESSENTIAL
    with pytest.raises(PreconditionError):
        classify_loop(_nested(), 1)
    with pytest.raises(DanglingReference):
        classify_loop(_nested(), 7)


def test_loop_whose_far_side_only_holds_the_suture_is_inessential():
    g = sphere_graph(2, [(1, 1, 1, 4), (2, 1, 1, 1)], (((1, 1), (1, 3)), ((1, 2), (2, 1))), (((1, 4), 1),))
    assert admissible(g).ok
    assert classify_loop(g, 0) == INESSENTIAL


def test_fullness_ignores_loops():
    g = _nested()
    assert fullness(g, 1) == (2, True)
    assert fullness(g, 2) == (1, False)
    with pytest.raises(DanglingReference):
        fullness(g, 9)


def test_boundary_fullness_counts_each_side():
    g = sphere_graph(1, [(1, 1, 1, 1), (2, -1, -1, 1)], (), (((1, 1), 1), ((2, 1), 1)))
    assert boundary_fullness(g, 1) == (1, True)
    assert boundary_fullness(g, -1) == (1, True)
    assert gabai_witness_search(g) is None
    assert gabai_witness_search(g, mu=2).case == 1


def test_region_check_flags_edges_changing_region():
    g = sphere_graph(1, [(1, 1, 1, 2), (2, 1, -1, 2)], (((1, 1), (2, 1)),), (((1, 2), 1), ((2, 2), 1)))
    rep = check_regions(g)
    assert rep.axioms() == {"region"} and len(rep.violations) == 1
    bare = FatGraph(SPHERE, 1, (Vertex(1, 1, None, 0),), suture_circles=1, boundary_face=None)
    assert "region" in check_regions(bare).axioms()


def test_witness_cases():
    w = gabai_witness_search(_nested())
    assert (w.case, w.kind, w.target, w.rho, w.pre_slide) == (1, "vertex", 2, 1, False)
    w = gabai_witness_search(_double_edge())
    assert (w.case, w.kind, w.target, w.rho, w.pre_slide) == (3, "suture", "R+", 0, True)
    assert str(w) == "case 3: suture 'R+' with rho=0 (pre-slide)"


def test_complete_graph_structure():
    res = complete_graph_structure(_nested())
    assert not res.holds and res.witness == ("suture", 1)
    g = sphere_graph(1, [(1, 1, 1, 1), (2, -1, -1, 1)], (), (((1, 1), 1), ((2, 1), 1)))
    res = complete_graph_structure(g)
    assert res.holds and res.kuratowski_ok and res.counts == {1: 1, -1: 1}


def test_disc_graphs_refused():
    from samples import bigon

    with pytest.raises(PreconditionError):
        gabai_witness_search(bigon())
    with pytest.raises(PreconditionError):
        classify_loop(bigon(), 0)
