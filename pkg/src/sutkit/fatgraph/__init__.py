"""Fat-vertex intersection graphs and the cycles they carry."""
from .cycles import (
    Cycle,
    cycle_sides,
    find_lambda_cycles,
    find_scharlemann_cycle,
    is_great,
    is_scharlemann,
    scharlemann_search,
    scharlemann_side,
)
from .graph import BOUNDARY, DISC, SPHERE, FatGraph, Vertex, admissible, edge_labels
from .canonical import canonical_code, isomorphic, mirror
from .sphere import (
    ESSENTIAL,
    INESSENTIAL,
    GabaiWitness,
    boundary_fullness,
    check_regions,
    classify_loop,
    complete_graph_structure,
    fullness,
    gabai_witness_search,
)
