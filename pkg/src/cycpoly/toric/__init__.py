"""Toric cycle ideals."""

from .groebner import BinomialGB, Packing, groebner_basis
from .ideal import (
    NEG_INF,
    Binomial,
    GeneratorReport,
    fiber_generators,
    in_kernel,
    is_saturated,
    is_zero_ideal,
    lattice_kernel,
    markov_basis,
    minimal_generators,
    minimal_subset,
    mu_comparisons,
    mu,
    report_for_cycles,
    saturation_generators,
    verify_no_linear_forms,
)
