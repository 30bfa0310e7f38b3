"""Cycle ideals: lattice, Markov bases, minimal generator degrees.

Variables ``x_C`` are indexed by position in the canonical cycle order of a
:class:`~cycpoly.matroid.CycleSet` (so ``x_0`` is the empty cycle).  The
monomial map sends ``x_C`` to ``y^C z``; its kernel is spanned by the integer
lattice of the matrix whose columns are ``(chi_C, 1)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from math import comb
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .. import caps
from ..errors import CapExceeded, PropertyViolation
from ..intlin import integer_kernel, rank as int_rank
from ..matroid import CycleSet, Matroid, cycles, d as series_class_count
from ..minors import COLOOP, CONTRACT, DELETE, RETRACT, SERIES, MinorStep, apply_step
from .groebner import BinomialGB, Packing, groebner_basis, orient

NEG_INF = -math.inf

Exponents = Tuple[int, ...]


@dataclass(frozen=True)
class Binomial:
    """``x^lhs - x^rhs``; homogeneous, reduced, lhs grevlex-larger."""

    lhs: Exponents
    rhs: Exponents

    @property
    def degree(self) -> int:
        return sum(self.lhs)

    @classmethod
    def make(cls, u: Sequence[int], v: Sequence[int]) -> "Binomial":
        common = [min(a, b) for a, b in zip(u, v)]
        u = tuple(a - c for a, c in zip(u, common))
        v = tuple(b - c for b, c in zip(v, common))
        if sum(u) != sum(v):
            raise ValueError("binomial is not homogeneous")
        if u == v:
            raise ValueError("zero binomial")
        return cls(u, v) if _grevlex_gt(u, v) else cls(v, u)

    def move(self) -> Tuple[int, ...]:
        return tuple(a - b for a, b in zip(self.lhs, self.rhs))

    def to_dict(self) -> dict:
        return {
            "lhs": {str(i): e for i, e in enumerate(self.lhs) if e},
            "rhs": {str(i): e for i, e in enumerate(self.rhs) if e},
        }


def _grevlex_gt(u: Sequence[int], v: Sequence[int]) -> bool:
    du, dv = sum(u), sum(v)
    if du != dv:
        return du > dv
    for a, b in zip(reversed(u), reversed(v)):
        if a != b:
            return a < b
    return False


def weighted_sum(C: CycleSet, exps: Sequence[int]) -> Tuple[int, ...]:
    """Image of ``x^exps`` under the monomial map, as ``(sum chi, degree)``."""
    n = len(C.labels)
    out = [0] * (n + 1)
    for k, e in enumerate(exps):
        if e:
            c = C.cycles[k]
            for i in range(n):
                if (c >> i) & 1:
                    out[i] += e
            out[n] += e
    return tuple(out)


def in_kernel(C: CycleSet, b: Binomial) -> bool:
    return weighted_sum(C, b.lhs) == weighted_sum(C, b.rhs)


# ------------------------------------------------------------------- lattice


def _design_matrix(C: CycleSet) -> List[List[int]]:
    n = len(C.labels)
    rows = [[(c >> i) & 1 for c in C.cycles] for i in range(n)]
    rows.append([1] * len(C.cycles))
    return rows


def lattice_kernel(C: CycleSet) -> List[List[int]]:
    """Z-basis of the kernel lattice of the ``(|E|+1) x |Cyc|`` design matrix."""
    return integer_kernel(_design_matrix(C), len(C.cycles))


def expected_height(C: CycleSet, d: int) -> int:
    return len(C.cycles) - d - 1


# ------------------------------------------------------------ saturation route


def _split(v: Sequence[int]) -> Tuple[Exponents, Exponents]:
    return tuple(max(x, 0) for x in v), tuple(max(-x, 0) for x in v)


def saturation_generators(C: CycleSet) -> List[Binomial]:
    """Generators of the cycle ideal by saturating the lattice-basis ideal.

    Saturating by one variable uses a grevlex basis in which that variable
    is smallest, then divides every element by its largest power.  One pass
    over all variables yields the saturation by their product; passes repeat
    until one divides nothing.
    """
    N = len(C.cycles)
    basis = lattice_kernel(C)
    if not basis:
        return []
    gens = [_split(v) for v in basis]
    changed = True
    while changed:
        changed = False
        for var in range(N):
            order = [v for v in range(N) if v != var] + [var]
            pk, gb = groebner_basis(gens, order)
            top = 8 * (N - 1)
            nxt = []
            for lead, trail in gb:
                k = min(lead >> top, trail >> top)
                if k:
                    changed = True
                    lead -= k << top
                    trail -= k << top
                nxt.append((pk.unpack(lead), pk.unpack(trail)))
            gens = nxt
    out = {Binomial.make(u, v) for u, v in gens}
    return sorted(out, key=_binomial_key)


def _binomial_key(b: Binomial):
    return (b.degree, tuple(-x for x in reversed(b.lhs)), tuple(-x for x in reversed(b.rhs)))


# ----------------------------------------------------------------- fiber route


@dataclass
class FiberRun:
    """Outcome of a fiber enumeration."""

    generators: List[Binomial]
    histogram: Dict[int, int]
    max_degree: int
    certified: bool
    lattice_rank: int


def _fiber_moves(C: CycleSet, degree: int, codes: List[int]) -> List[Binomial]:
    N = len(codes)
    fibers: Dict[int, List[Tuple[int, ...]]] = {}
    for combo in combinations_with_replacement(range(N), degree):
        key = 0
        for i in combo:
            key += codes[i]
        fibers.setdefault(key, []).append(combo)
    moves = []
    for key in sorted(fibers):
        monos = fibers[key]
        if len(monos) < 2:
            continue
        parent = list(range(len(monos)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        first_with: Dict[int, int] = {}
        for k, mono in enumerate(monos):
            for var in set(mono):
                j = first_with.setdefault(var, k)
                if j != k:
                    ra, rb = find(j), find(k)
                    if ra != rb:
                        parent[max(ra, rb)] = min(ra, rb)
        reps = sorted({find(k) for k in range(len(monos))})
        if len(reps) == 1:
            continue
        base = _exps(monos[reps[0]], N)
        for r in reps[1:]:
            moves.append(Binomial.make(base, _exps(monos[r], N)))
    return sorted(moves, key=_binomial_key)


def _exps(combo: Sequence[int], N: int) -> Exponents:
    out = [0] * N
    for i in combo:
        out[i] += 1
    return tuple(out)


def is_saturated(binomials: Sequence[Binomial], N: int) -> bool:
    """Whether the ideal generated by ``binomials`` equals its saturation.

    For each variable, a grevlex basis with that variable smallest must have
    no leading term divisible by it.
    """
    gens = [(b.lhs, b.rhs) for b in binomials]
    top = 8 * (N - 1)
    for var in range(N):
        order = [v for v in range(N) if v != var] + [var]
        _, gb = groebner_basis(gens, order)
        if any(lead >> top for lead, _ in gb):
            return False
    return True


def fiber_generators(C: CycleSet, degree_cap: int = caps.DEFAULT_DEGREE_CAP, d: Optional[int] = None) -> FiberRun:
    """Minimal generators degree by degree from connected components of fibers.

    In degree ``D`` two monomials of one fiber are joined by the ideal
    generated in lower degrees iff they are linked by a chain of monomials in
    that fiber sharing a variable; each extra component needs one new
    generator.
    """
    N = len(C.cycles)
    n = len(C.labels)
    if d is None:
        raise ValueError("fiber_generators needs the coparallel class count d")
    target_rank = N - d - 1
    total = sum(comb(N + k - 1, k) for k in range(2, degree_cap + 1))
    if total > caps.MAX_FIBER_MONOMIALS:
        raise CapExceeded(f"{total} monomials up to degree {degree_cap} exceed the fiber cap")
    base = degree_cap + 1
    codes = [sum(base ** i for i in range(n) if (c >> i) & 1) for c in C.cycles]
    gens: List[Binomial] = []
    histogram: Dict[int, int] = {}
    lattice_rank = 0
    quiet = 0
    certified = target_rank == 0
    last = 1
    for D in range(2, degree_cap + 1):
        if certified:
            break
        last = D
        new = _fiber_moves(C, D, codes)
        if new:
            histogram[D] = len(new)
            gens.extend(new)
            lattice_rank = int_rank([b.move() for b in gens])
            quiet = 0
        else:
            quiet += 1
        if lattice_rank == target_rank and (quiet >= 2 or D == degree_cap):
            certified = is_saturated(gens, N)
    return FiberRun(gens, histogram, last, certified, lattice_rank)


# --------------------------------------------------------- minimal generators


@dataclass
class GeneratorReport:
    zero_ideal: bool
    mu: float
    degree_histogram: Dict[int, int]
    height: int
    num_cycles: int
    d: int
    method: str
    degree_cap_hit: bool = False
    generators: List[Binomial] = field(default_factory=list, repr=False)

    def to_dict(self) -> dict:
        return {
            "zero_ideal": self.zero_ideal,
            "mu": None if self.mu == NEG_INF else int(self.mu),
            "degree_histogram": {str(k): v for k, v in sorted(self.degree_histogram.items())},
            "height": self.height,
            "num_cycles": self.num_cycles,
            "d": self.d,
            "method": self.method,
            "degree_cap_hit": self.degree_cap_hit,
        }


def minimal_subset(gens: Sequence[Binomial]) -> List[Binomial]:
    """Greedy minimal generating subset, degree-ascending.

    A binomial is kept iff its grevlex normal form modulo a truncated Gröbner
    basis of the already-kept binomials is nonzero.
    """
    if not gens:
        return []
    N = len(gens[0].lhs)
    ordered = sorted(set(gens), key=_binomial_key)
    pk = Packing(range(N))
    gb = BinomialGB(pk)
    kept = []
    for b in ordered:
        deg = b.degree
        gb.run(deg)
        if gb.add(pk.pack(b.lhs), pk.pack(b.rhs)):
            kept.append(b)
    return kept


def minimal_generators(gens: Sequence[Binomial], C: Optional[CycleSet] = None, d: Optional[int] = None,
                       method: str = "given") -> GeneratorReport:
    kept = minimal_subset(gens)
    hist: Dict[int, int] = {}
    for b in kept:
        hist[b.degree] = hist.get(b.degree, 0) + 1
    mu = max(hist) if hist else NEG_INF
    num = len(C.cycles) if C is not None else 0
    dd = d if d is not None else 0
    return GeneratorReport(
        zero_ideal=not kept,
        mu=mu,
        degree_histogram=hist,
        height=num - dd - 1 if C is not None else 0,
        num_cycles=num,
        d=dd,
        method=method,
        generators=kept,
    )


def markov_basis(C: CycleSet, method: str = "saturation", degree_cap: int = caps.DEFAULT_DEGREE_CAP,
                 d: Optional[int] = None) -> Tuple[List[Binomial], bool]:
    """Generating binomials of the cycle ideal and whether the degree cap was hit."""
    if degree_cap < 2:
        raise ValueError("degree_cap must be at least 2")
    if method == "saturation":
        return saturation_generators(C), False
    if method == "fiber":
        if d is None:
            d = affine_rank(C)
        run = fiber_generators(C, degree_cap, d)
        return run.generators, not run.certified
    raise ValueError(f"unknown method {method!r}")


def affine_rank(C: CycleSet) -> int:
    """Affine dimension of the cycle vectors; equals d(M) for a matroid."""
    return int_rank([list(v) for v in C.vectors()[1:]])


def report_for_cycles(C: CycleSet, d: Optional[int] = None, method: str = "saturation",
                      degree_cap: int = caps.DEFAULT_DEGREE_CAP) -> GeneratorReport:
    if d is None:
        d = affine_rank(C)
    gens, cap_hit = markov_basis(C, method, degree_cap, d)
    rep = minimal_generators(gens, C, d, method)
    rep.degree_cap_hit = cap_hit
    if cap_hit:
        # exact regardless of the cap: the ideal is zero iff its height is
        rep.zero_ideal = rep.height == 0
    if not cap_hit and rep.zero_ideal != (rep.height == 0):
        raise PropertyViolation("zero ideal flag disagrees with the height formula")
    return rep


def mu(M: Matroid, method: str = "saturation", degree_cap: int = caps.DEFAULT_DEGREE_CAP) -> GeneratorReport:
    """Top degree of a minimal generating set of the cycle ideal of ``M``."""
    return report_for_cycles(cycles(M), series_class_count(M), method, degree_cap)


def is_zero_ideal(M: Matroid) -> bool:
    return series_class_count(M) == len(cycles(M)) - 1


def verify_no_linear_forms(gens: Sequence[Binomial]) -> bool:
    return all(b.degree != 1 for b in gens)


_GUARANTEED = {
    DELETE: "<=",
    SERIES: "=",
    COLOOP: "=",
    RETRACT: "<=",
    CONTRACT: "none",
}


def mu_comparisons(M: Matroid, steps: Sequence[MinorStep], method: str = "saturation",
                   mu_of: Optional[Callable[[Matroid], float]] = None) -> List[dict]:
    """Compute mu along a step chain and check the guaranteed relations.

    Deletions and binary retracts cannot raise mu; series and coloop
    contractions preserve it.  Plain contractions carry no guarantee.
    ``mu_of`` may supply a cached evaluator.
    """
    if mu_of is None:
        mu_of = lambda N: mu(N, method).mu
    cur = M
    prev = mu_of(cur)
    chain = [{"matroid": 0, "mu": prev, "relation": "start"}]
    for k, step in enumerate(steps, 1):
        cur = apply_step(cur, step)
        val = mu_of(cur)
        rel = _GUARANTEED[step.kind]
        if rel == "<=" and not val <= prev:
            raise PropertyViolation(f"step {k} ({step.kind}) raised mu from {prev} to {val}")
        if rel == "=" and val != prev:
            raise PropertyViolation(f"step {k} ({step.kind}) changed mu from {prev} to {val}")
        chain.append({"matroid": k, "mu": val, "relation": rel, "step": step.to_dict()})
        prev = val
    return chain
