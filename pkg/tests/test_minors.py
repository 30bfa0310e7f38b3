import pytest
from hypothesis import given

from cycpoly.errors import NotACircuit, NotApplicable, PairingFails
from cycpoly.fixtures import fano, fano_dual
from cycpoly.graphs import complete_graph, cycle_matroid
from cycpoly.matroid import are_isomorphic, circuits, coloops, dual, is_binary, circuit_presentation, uniform
from cycpoly.minors import (
    COLOOP,
    DELETE,
    RETRACT,
    SERIES,
    MinorStep,
    apply_step,
    check_binary_matroidal_retract,
    contract,
    delete,
    duality_identities_check,
    enumerate_binary_matroidal_retracts,
    find_minor,
    g_series_minor_search,
    minor_free,
    minor_search,
    replay,
    retract_violation,
    series_contractions_available,
)
from cycpoly.verify import prop_contraction_dichotomy
from conftest import binary_matroid_strategy


def labelled(M):
    return {frozenset(c) for c in M.label_circuits()}


def test_fano_retract_example():
    F = fano()
    assert check_binary_matroidal_retract(F, ['4', '5', '3'], ['1', '2', '6'])
    assert labelled(delete(F, ['1', '2', '6'])) == {frozenset("3457")}
    assert labelled(contract(F, ['1', '2', '6'])) == {frozenset(p) for p in ["35", "47", "34", "57", "45", "37"]}


def test_retract_failures_are_typed():
    F = fano()
    assert isinstance(retract_violation(F, ['4', '5', '3'], ['1', '2', '7']), NotACircuit)
    assert isinstance(retract_violation(F, ['3', '4', '5'], ['1', '2', '6']), PairingFails)
    with pytest.raises(NotACircuit):
        check_binary_matroidal_retract(F, ['4', '5', '3'], ['1', '2', '7'], strict=True)


def test_fano_has_retracts_of_every_line():
    found = enumerate_binary_matroidal_retracts(fano())
    assert len(found) == 28
    assert {frozenset(Ep) for _, Ep in found} == {frozenset(c) for c in labelled(fano()) if len(c) == 3}


def test_deleting_an_element_keeps_four_triangles():
    assert sum(1 for c in labelled(delete(fano(), "7")) if len(c) == 3) == 4


def test_series_and_coloop_steps_check_applicability():
    C4 = cycle_matroid(complete_graph(3))
    with pytest.raises(NotApplicable):
        apply_step(fano(), MinorStep(SERIES, ("1",)))
    with pytest.raises(NotApplicable):
        apply_step(C4, MinorStep(COLOOP, ("e0",)))
    assert apply_step(C4, MinorStep(SERIES, ("e0",))).n == 2


def test_duality_identities_on_fano():
    assert duality_identities_check(fano(), ["7"])
    assert duality_identities_check(fano(), ["1", "2"])


def test_general_minor_of_fano_dual():
    K4 = cycle_matroid(complete_graph(4))
    w = find_minor(fano_dual(), K4, "general")
    assert w is not None
    assert are_isomorphic(replay(fano_dual(), w.steps), K4) is not None


def test_fano_dual_is_k4_g_series_free():
    assert g_series_minor_search(fano_dual(), cycle_matroid(complete_graph(4))) is None
    assert minor_free(fano_dual(), cycle_matroid(complete_graph(4)), "g-series")


def test_g_series_search_uses_retract():
    F = fano()
    target = contract(F, ['1', '2', '6'])
    w = g_series_minor_search(F, target)
    assert w is not None
    assert are_isomorphic(replay(F, w.steps), target) is not None


def test_u24_minor_detects_non_binary():
    U = uniform(2, 4)
    assert not minor_free(U, U)
    assert minor_free(fano(), U)


@given(binary_matroid_strategy(max_elements=7, max_nullity=3))
def test_minors_of_binary_are_binary(M):
    for i in range(M.n):
        for op in (delete, contract):
            try:
                N = op(M, [M.labels[i]])
            except Exception:
                continue
            assert is_binary(circuit_presentation(N))


@given(binary_matroid_strategy())
def test_contraction_dichotomy(M):
    assert prop_contraction_dichotomy(M)


@given(binary_matroid_strategy())
def test_circuit_element_contraction(M):
    for C in circuits(M):
        if bin(C).count("1") < 2:
            continue
        i = (C & -C).bit_length() - 1
        Me = contract(M, [M.labels[i]])
        assert frozenset(M.to_labels(C & ~(1 << i))) in labelled(Me)


@given(binary_matroid_strategy(max_elements=6, max_nullity=3))
def test_series_minors_are_g_series_minors(M):
    # any series minor reached in one step is reachable by the g-series search
    for i in range(M.n):
        try:
            N = delete(M, [M.labels[i]])
        except Exception:
            continue
        assert minor_search(M, N, "series") is not None
        assert minor_search(M, N, "g-series") is not None
