"""Small hand-built graphs shared by several test modules."""
from sutkit.fatgraph.canonical import RawGraph
from sutkit.fatgraph.graph import DISC, SPHERE, FatGraph, Vertex


def bigon():
    return FatGraph(
        DISC, 2, (Vertex(1), Vertex(2)), (((1, 1), (2, 2)), ((1, 2), (2, 1))), (), True, 0, (1, 1)
    )


def single_loop():
    return FatGraph(DISC, 2, (Vertex("v"),), ((("v", 1), ("v", 2)),), (), True, 0, ("v", 1))


def triangle():
    """Three vertices joined pairwise, with a loop at each; mu = 4."""
    edges = (
        ((1, 1), (1, 2)),
        ((1, 3), (2, 4)),
        ((1, 4), (3, 3)),
        ((2, 1), (2, 2)),
        ((2, 3), (3, 4)),
        ((3, 1), (3, 2)),
    )
    return FatGraph(DISC, 4, (Vertex(1), Vertex(2), Vertex(3)), edges, (), True, 0, (1, 2))


def one_boundary(mu=3):
    """One vertex, one boundary edge at slot 1 and a loop on the rest (mu = 3)."""
    return FatGraph(DISC, mu, (Vertex(1),), (((1, 2), (1, 3)),), (((1, 1), 1),), True)


def naive_to_raw(g):
    part = [[None] * g.mu for _ in range(g.n)]
    for v in range(g.n):
        for s in range(1, g.mu + 1):
            h = g.alpha[(v, s)]
            part[v][s - 1] = (-1, h[1]) if h[0] == "b" else h
    boundary = tuple(g.alpha[("b", k, "in")] for k in range(g.b))
    return RawGraph(DISC, g.mu, (1,) * g.n, tuple(map(tuple, part)), boundary, None if g.b else g.outer)


def sphere_graph(mu, vertices, edges, boundary=()):
    return FatGraph(SPHERE, mu, tuple(Vertex(*v) for v in vertices), edges, boundary, suture_circles=1)
