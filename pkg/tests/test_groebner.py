import random

import sympy
from hypothesis import given, strategies as st

from cycpoly.intlin import integer_kernel, lll_reduce, rank, solve_rational
from cycpoly.toric.groebner import BinomialGB, Packing, groebner_basis


def _binomial_strategy(n):
    exps = st.lists(st.integers(0, 2), min_size=n, max_size=n)
    return st.lists(st.tuples(exps, exps), min_size=1, max_size=3).map(
        lambda pairs: [(u, v) for u, v in pairs if sum(u) == sum(v) and u != v]
    )


def _as_sympy(pk, gb, xs):
    def mono(e):
        return sympy.Mul(*[x**k for x, k in zip(xs, e)])

    return {sympy.expand(mono(pk.unpack(a)) - mono(pk.unpack(b))) for a, b in gb}


@given(_binomial_strategy(4), st.permutations(range(4)))
def test_reduced_basis_matches_sympy(gens, order):
    if not gens:
        return
    xs = sympy.symbols("x0:4")
    pk, gb = groebner_basis(gens, list(order))
    ordered = [xs[i] for i in order]
    mono = lambda e: sympy.Mul(*[x**k for x, k in zip(xs, e)])
    ref = sympy.groebner([mono(u) - mono(v) for u, v in gens], *ordered, order="grevlex")
    assert _as_sympy(pk, gb, xs) == {sympy.expand(g) for g in ref.exprs}


def test_packing_operations():
    pk = Packing([0, 1, 2])
    a, b = pk.pack((2, 0, 1)), pk.pack((1, 3, 0))
    assert pk.unpack(pk.lcm(a, b)) == (2, 3, 1)
    assert pk.divides(pk.pack((1, 0, 1)), a) and not pk.divides(b, a)
    assert pk.degree(a) == 3 and not pk.coprime(a, b)
    assert pk.coprime(pk.pack((1, 0, 0)), pk.pack((0, 0, 4)))


def test_grevlex_is_reverse_integer_order():
    pk = Packing([0, 1, 2])
    # x0*x2 > x1^2 under grevlex with x0 > x1 > x2? smallest variable x2 decides
    assert pk.pack((0, 2, 0)) < pk.pack((1, 0, 1))


def test_truncated_basis_decides_membership():
    pk = Packing(range(4))
    gb = BinomialGB(pk)
    assert gb.add(pk.pack((1, 0, 0, 1)), pk.pack((0, 1, 1, 0)))
    gb.run(2)
    assert not gb.add(pk.pack((0, 1, 1, 0)), pk.pack((1, 0, 0, 1)))


@given(st.lists(st.lists(st.integers(-3, 3), min_size=5, max_size=5), min_size=1, max_size=3))
def test_integer_kernel(A):
    basis = integer_kernel(A, 5)
    assert len(basis) == 5 - rank(A)
    for v in basis:
        assert all(sum(a * x for a, x in zip(row, v)) == 0 for row in A)
    if basis:
        assert rank(basis) == len(basis)


def test_integer_kernel_is_saturated_lattice():
    # x + 2y = 0 has kernel generated by (2, -1), not a multiple of it
    assert integer_kernel([[1, 2]], 2) == [[2, -1]]


def test_lll_preserves_lattice_volume():
    B = [[1, 1, 1], [-1, 0, 2], [3, 5, 6]]
    R = lll_reduce(B)
    det = lambda M: sympy.Matrix(M).det()
    assert abs(det(R)) == abs(det(B))


def test_solve_rational():
    x = solve_rational([[1, 1], [1, -1]], [3, 1])
    assert x == [2, 1]
    assert solve_rational([[1, 1], [1, 1]], [1, 2]) is None
