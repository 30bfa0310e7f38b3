from hypothesis import given, strategies as st

from cycpoly.gf2 import gf2_kernel_basis, gf2_matvec, gf2_rank, gf2_rref, rows_from_strings, rows_to_strings, span_elements
from oracles import gf2_rank_lists

rows_st = st.integers(1, 9).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.integers(0, 2**n - 1), min_size=0, max_size=7))
)


def test_string_roundtrip():
    rows, n = rows_from_strings(["1000111", "0101011"])
    assert n == 7 and rows[0] == 0b1110001
    assert rows_to_strings(rows, 7) == ["1000111", "0101011"]


def test_rref_pivots_are_leftmost():
    reduced, rank, pivots = gf2_rref([0b110, 0b011], 3)
    assert rank == 2 and pivots == [0, 1]
    assert all((reduced[i] >> p) & 1 for i, p in enumerate(pivots))


@given(rows_st)
def test_rank_matches_reference(data):
    n, rows = data
    dense = [[(r >> j) & 1 for j in range(n)] for r in rows]
    assert gf2_rank(rows, n) == (gf2_rank_lists(dense) if rows else 0)


@given(rows_st)
def test_kernel_is_kernel_and_complete(data):
    n, rows = data
    basis = gf2_kernel_basis(rows, n)
    assert len(basis) == n - gf2_rank(rows, n)
    span = span_elements(basis)
    assert len(set(span)) == 2 ** len(basis)
    for x in range(2**n):
        assert (gf2_matvec(rows, x) == 0) == (x in set(span))
