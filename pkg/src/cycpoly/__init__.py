"""Cycle polytopes and cycle ideals of binary matroids."""

from .errors import *  # noqa: F401,F403
from .matroid import (
    BinaryMatroid,
    CircuitMatroid,
    CycleSet,
    Matroid,
    are_isomorphic,
    circuits,
    cocircuits,
    coparallel_classes,
    cycles,
    d,
    direct_sum,
    dual,
    from_circuits,
    from_gf2_matrix,
    is_binary,
    uniform,
)
from .minors import (
    MinorStep,
    MinorWitness,
    check_binary_matroidal_retract,
    contract,
    delete,
    find_minor,
    g_series_minor_search,
    minor_free,
)
from .polytope import CyclePolytope, cycle_polytope, dimension
from .toric import GeneratorReport, is_zero_ideal, markov_basis, minimal_generators, mu

__version__ = "0.1.0"
