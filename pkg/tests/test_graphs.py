import pytest
from hypothesis import assume, given, strategies as st

from cycpoly.errors import Disconnected, FreeResult, NotANeighborhoodMinor, NotTwoConnected, ParseError
from cycpoly.fixtures import GRAPHS, k4_minus_edge, theta6
from cycpoly.graphs import (
    Multigraph,
    NeighborhoodMinorSpec,
    cographic_matroid,
    complete_graph,
    cut_sets,
    cycle_graph,
    cycle_matroid,
    edge_contract,
    edge_delete,
    eulerian_subgraphs,
    format_graph,
    is_neighborhood_minor,
    is_series_parallel,
    is_two_connected,
    neighborhood_minor_witness,
    parse_graph,
)
from cycpoly.matroid import dual, same_circuits
from cycpoly.minors import contract, delete, replay
from cycpoly.toric import mu
from oracles import all_cuts, even_subgraphs


@st.composite
def multigraphs(draw, max_vertices=5, max_edges=10, simple=False):
    nv = draw(st.integers(2, max_vertices))
    pairs = [(u, v) for u in range(nv) for v in range(u + 1, nv)]
    if simple:
        chosen = draw(st.lists(st.sampled_from(pairs), unique=True, min_size=1, max_size=min(max_edges, len(pairs))))
    else:
        ends = st.tuples(st.integers(0, nv - 1), st.integers(0, nv - 1))
        chosen = draw(st.lists(ends, min_size=1, max_size=max_edges))
    return Multigraph.from_pairs(nv, chosen)


def _pairs(G):
    return [(u, v) for u, v, _ in G.edges]


@given(multigraphs())
def test_cycles_are_even_subgraphs(G):
    try:
        C = eulerian_subgraphs(G)
    except FreeResult:
        assert even_subgraphs(G.nv, _pairs(G)) == [0]
        return
    assert list(C.cycles) == even_subgraphs(G.nv, _pairs(G))


@given(multigraphs())
def test_cuts_match_oracle(G):
    assume(G.is_connected())
    assert list(cut_sets(G).cycles) == all_cuts(G.nv, _pairs(G))


def test_cut_sets_of_disconnected_graph_rejected():
    G = Multigraph.from_pairs(4, [(0, 1), (2, 3)])
    with pytest.raises(Disconnected):
        cut_sets(G)
    with pytest.raises(Disconnected):
        cographic_matroid(G)


def test_k4_circuits():
    M = cycle_matroid(complete_graph(4))
    sizes = sorted(len(c) for c in M.label_circuits())
    assert sizes == [3, 3, 3, 3, 4, 4, 4]


def test_forest_is_free():
    with pytest.raises(FreeResult):
        cycle_matroid(Multigraph.from_pairs(3, [(0, 1), (1, 2)]))


def test_graph_round_trip():
    for make in GRAPHS.values():
        G = make()
        assert parse_graph(format_graph(G)) == G


@pytest.mark.parametrize("text", ["", "graph x\n", "graph 2\n0 1\n", "graph 2\n0 z a\n", "graph 2\n0 5 a\n"])
def test_bad_graph_files(text):
    with pytest.raises(ParseError):
        parse_graph(text)


@given(multigraphs(max_vertices=4, max_edges=7), st.data())
def test_deletion_and_contraction_commute_with_matroids(G, data):
    lab = data.draw(st.sampled_from(G.labels))
    try:
        M = cycle_matroid(G)
    except FreeResult:
        return
    for gop, mop in ((edge_delete, delete), (edge_contract, contract)):
        try:
            expected = mop(M, [lab])
        except FreeResult:
            continue
        try:
            got = cycle_matroid(gop(G, lab))
        except FreeResult:
            continue
        assert same_circuits(got, expected)


def test_k4_neighborhood_witness():
    G = complete_graph(4)
    spec = NeighborhoodMinorSpec.make({0, 1, 2}, {3}, 0)
    w = neighborhood_minor_witness(G, spec)
    end = replay(dual(cycle_matroid(G)), w.steps)
    assert same_circuits(end, dual(cycle_matroid(G.induced({0, 1, 2}))))


def test_wheel_is_not_a_neighborhood_minor_for_bad_centre():
    # rim 0..4, hub 5; keeping the rim with v = 0 fails since hub touches all rim vertices
    G = Multigraph.from_pairs(6, [(i, (i + 1) % 5) for i in range(5)] + [(i, 5) for i in range(5)])
    spec = NeighborhoodMinorSpec.make(range(5), {5}, 0)
    assert not is_neighborhood_minor(G, spec)
    with pytest.raises(NotANeighborhoodMinor):
        neighborhood_minor_witness(G, spec)


@given(multigraphs(max_vertices=6, max_edges=10, simple=True), st.data())
def test_random_neighborhood_witnesses_replay(G, data):
    k = data.draw(st.integers(1, G.nv - 1))
    W = set(data.draw(st.permutations(range(G.nv)))[:k])
    v = data.draw(st.sampled_from(sorted(W)))
    spec = NeighborhoodMinorSpec.make(W, set(range(G.nv)) - W, v)
    assume(is_neighborhood_minor(G, spec))
    try:
        start = dual(cycle_matroid(G))
        target = dual(cycle_matroid(G.induced(W)))
    except FreeResult:
        return
    w = neighborhood_minor_witness(G, spec)
    assert same_circuits(replay(start, w.steps), target)


def test_two_connectivity():
    assert is_two_connected(cycle_graph(4))
    assert not is_two_connected(Multigraph.from_pairs(3, [(0, 1), (1, 2)]))
    with pytest.raises(NotTwoConnected):
        is_series_parallel(Multigraph.from_pairs(3, [(0, 1), (1, 2)]))


@pytest.mark.parametrize("G,expected", [
    (cycle_graph(4), True),
    (cycle_graph(5), True),
    (k4_minus_edge(), True),
    (theta6(), True),
    (complete_graph(4), False),
])
def test_series_parallel(G, expected):
    assert is_series_parallel(G) is expected


@pytest.mark.parametrize("G", [cycle_graph(4), k4_minus_edge(), theta6()])
def test_series_parallel_cut_ideal_is_quadratic(G):
    rep = mu(cographic_matroid(G))
    assert rep.mu <= 2
