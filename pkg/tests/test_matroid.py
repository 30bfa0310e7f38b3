import random

import pytest
from hypothesis import given

from cycpoly.errors import AxiomViolation, EmptyCircuitList, FreeMatroid
from cycpoly.fixtures import FANO_ROWS, fano, fano_dual
from cycpoly.matroid import (
    BinaryMatroid,
    are_isomorphic,
    circuit_presentation,
    circuits,
    cocircuits,
    coloops,
    components,
    coparallel_classes,
    cycles,
    d,
    direct_sum,
    dual,
    from_circuits,
    from_gf2_matrix,
    is_binary,
    is_connected,
    is_cycle,
    loops,
    permute,
    same_circuits,
    uniform,
)
from conftest import binary_matroid_strategy
from oracles import brute_circuits, brute_cocircuits, brute_cycles

# the seven lines, as listed in the source example
FANO_LINES = [{"1", "2", "6"}, {"1", "3", "5"}, {"2", "3", "4"}, {"2", "5", "7"},
              {"3", "6", "7"}, {"1", "4", "7"}, {"4", "5", "6"}]


def label_sets(M):
    return {frozenset(c) for c in M.label_circuits()}


def test_fano_three_element_circuits_are_the_lines():
    three = {c for c in label_sets(fano()) if len(c) == 3}
    assert three == {frozenset(x) for x in FANO_LINES}


def test_fano_counts():
    F = fano()
    assert len(circuits(F)) == 14
    assert len(cycles(F).cycles) == 16
    assert d(F) == 7 and is_connected(F)
    assert loops(F) == 0 and coloops(F) == 0


def test_fano_dual_circuits_are_line_complements():
    expected = {frozenset(set("1234567") - line) for line in FANO_LINES}
    assert label_sets(fano_dual()) == expected
    assert len(cycles(fano_dual()).cycles) == 8
    assert d(fano_dual()) == 7


def test_circuits_match_subset_enumeration():
    F = fano()
    assert [tuple(i for i in range(7) if c >> i & 1) for c in circuits(F)] == brute_circuits(FANO_ROWS)
    assert list(cycles(F).cycles) == brute_cycles(FANO_ROWS)
    assert sorted(cocircuits(F)) == sorted(brute_cocircuits(FANO_ROWS))


def test_uniform_u24():
    U = uniform(2, 4)
    assert len(circuits(U)) == 4 and not is_binary(U)
    assert {len(c) for c in label_sets(dual(U))} == {3}
    assert len(cycles(U).cycles) == 5


def test_circuit_presentation_of_fano_is_binary():
    P = circuit_presentation(fano())
    assert is_binary(P) and same_circuits(P, fano())


def test_from_circuits_rejects_bad_families():
    with pytest.raises(AxiomViolation):
        from_circuits([["a", "b"], ["a", "b", "c"]], ["a", "b", "c"])
    with pytest.raises(AxiomViolation):
        from_circuits([["a", "b"], ["b", "c"]], ["a", "b", "c"])
    with pytest.raises(EmptyCircuitList):
        from_circuits([], ["a"])


def test_free_matrix_rejected():
    with pytest.raises(FreeMatroid):
        from_gf2_matrix(["10", "01"], ["a", "b"])


def test_loops_and_coloops():
    M = from_gf2_matrix(["1100", "0010"], ["a", "b", "c", "z"])
    assert M.to_labels(loops(M)) == ("z",)
    assert M.to_labels(coloops(M)) == ("c",)
    assert d(M) == 2  # {a, b} and the loop z


def test_direct_sum_relabels_and_disconnects():
    S = direct_sum(fano(), fano())
    assert S.n == 14 and "1#2" in S.labels
    assert len(components(S)) == 2 and not is_connected(S)
    assert len(circuits(S)) == 28


def test_isomorphism_under_permutation():
    rng = random.Random(7)
    perm = list(range(7))
    rng.shuffle(perm)
    F = fano()
    G = permute(F, perm)
    iso = are_isomorphic(F, G)
    assert iso is not None
    assert are_isomorphic(F, fano_dual()) is None


@given(binary_matroid_strategy())
def test_circuits_against_enumeration(M):
    assert [tuple(i for i in range(M.n) if c >> i & 1) for c in circuits(M)] == brute_circuits(M.matrix_strings(), M.n)


@given(binary_matroid_strategy())
def test_cycles_are_kernel_vectors(M):
    cyc = cycles(M).cycles
    assert list(cyc) == brute_cycles(M.matrix_strings(), M.n)
    assert all(is_cycle(M, c) for c in cyc)


@given(binary_matroid_strategy())
def test_dual_is_involution_and_binary(M):
    if M.rank == 0:
        return
    D = dual(M)
    assert isinstance(D, BinaryMatroid)
    if D.rank:
        assert same_circuits(dual(D), M)
    assert sorted(cocircuits(M)) == sorted(brute_cocircuits(M.matrix_strings()))


@given(binary_matroid_strategy())
def test_coparallel_classes_partition_non_coloops(M):
    classes = coparallel_classes(M)
    union = 0
    for c in classes:
        assert union & c == 0
        union |= c
    assert union == M.full & ~coloops(M)


@given(binary_matroid_strategy())
def test_circuit_presentation_round_trip(M):
    P = circuit_presentation(M)
    assert is_binary(P)
    assert list(cycles(P).cycles) == list(cycles(M).cycles)
