"""Cycle polytopes as 0/1 vertex sets, and affine maps between them."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from scipy.optimize import linprog

from . import caps
from .errors import CapExceeded, FreeResult, NotApplicable, PropertyViolation
from .intlin import rank as int_rank, solve_rational
from .matroid import Matroid, bits, coloops, cocircuits, cycles, d, popcount
from .minors import COLOOP, DELETE, SERIES, MinorStep, apply_step, contract, delete

Vector = Tuple[int, ...]


@dataclass(frozen=True)
class CyclePolytope:
    labels: Tuple[str, ...]
    vertices: Tuple[Vector, ...]

    @property
    def ambient_dim(self) -> int:
        return len(self.labels)

    def vertex_set(self) -> frozenset:
        return frozenset(self.vertices)

    def to_dict(self) -> dict:
        return {
            "labels": list(self.labels),
            "vertices": [list(v) for v in self.vertices],
            "dimension": dimension(self),
        }


@dataclass(frozen=True)
class AffineMap:
    """``x -> matrix @ x + offset``; entries are ints or Fractions."""

    matrix: Tuple[Tuple, ...]
    offset: Tuple

    def __call__(self, x: Sequence) -> Tuple:
        return tuple(sum(a * b for a, b in zip(row, x)) + c for row, c in zip(self.matrix, self.offset))

    def compose(self, inner: "AffineMap") -> "AffineMap":
        """``self`` after ``inner``."""
        cols = len(inner.matrix[0]) if inner.matrix else 0
        mat = tuple(
            tuple(sum(row[k] * inner.matrix[k][j] for k in range(len(row))) for j in range(cols))
            for row in self.matrix
        )
        off = tuple(sum(a * b for a, b in zip(row, inner.offset)) + c for row, c in zip(self.matrix, self.offset))
        return AffineMap(mat, off)

    def to_dict(self) -> dict:
        def enc(x):
            x = Fraction(x)
            return int(x) if x.denominator == 1 else str(x)

        return {"matrix": [[enc(a) for a in row] for row in self.matrix], "offset": [enc(c) for c in self.offset]}


def _vec(mask: int, n: int) -> Vector:
    return tuple((mask >> i) & 1 for i in range(n))


def cycle_polytope(M: Matroid) -> CyclePolytope:
    C = cycles(M)
    return CyclePolytope(tuple(M.labels), tuple(_vec(c, M.n) for c in C.cycles))


def dimension(P: CyclePolytope) -> int:
    """Affine dimension; the zero vector is always a vertex, so this is a plain rank."""
    base = P.vertices[0]
    return int_rank([[a - b for a, b in zip(v, base)] for v in P.vertices[1:]])


def checked_dimension(M: Matroid) -> int:
    dim = dimension(cycle_polytope(M))
    if dim != d(M):
        raise PropertyViolation(f"polytope dimension {dim} differs from d(M) = {d(M)}")
    return dim


# ------------------------------------------------------- coordinate maps


def _coordinate_map(target: Sequence[str], source: Sequence[str], copy: Dict[str, str]) -> AffineMap:
    """Map ``R^source -> R^target``: ``x_t = x_{copy[t]}`` or 0 if unmapped."""
    col = {lab: j for j, lab in enumerate(source)}
    mat = []
    for t in target:
        row = [0] * len(source)
        s = copy.get(t)
        if s is not None:
            row[col[s]] = 1
        mat.append(tuple(row))
    return AffineMap(tuple(mat), (0,) * len(target))


def _check_bijection(phi: AffineMap, src: Sequence[Vector], dst: Sequence[Vector]) -> bool:
    image = [phi(v) for v in src]
    return len(set(image)) == len(image) and set(image) == set(dst)


def face_of_deletion(M: Matroid, e) -> Tuple[CyclePolytope, AffineMap]:
    """``P(M\\e)`` and its inclusion onto the face ``x_e = 0`` of ``P(M)``."""
    e = e if isinstance(e, str) else str(e)
    Md = delete(M, [e])  # raises FreeResult
    P = cycle_polytope(M)
    Q = cycle_polytope(Md)
    phi = _coordinate_map(M.labels, Md.labels, {lab: lab for lab in Md.labels})
    i = M.index[e]
    face = [v for v in P.vertices if v[i] == 0]
    if not _check_bijection(phi, Q.vertices, face):
        raise PropertyViolation(f"deletion of {e} does not match the face x_{e} = 0")
    return Q, phi


def iso_of_series_or_coloop_contraction(M: Matroid, e) -> AffineMap:
    """Vertex bijection ``P(M/e) -> P(M)`` for a series element or coloop ``e``."""
    e = e if isinstance(e, str) else str(e)
    i = M.index[e]
    x = 1 << i
    copy = {lab: lab for lab in M.labels if lab != e}
    if coloops(M) & x:
        pass
    else:
        partner = next((c ^ x for c in cocircuits(M) if popcount(c) == 2 and c & x), None)
        if partner is None:
            raise NotApplicable(f"{e} is neither a coloop nor in a 2-cocircuit")
        copy[e] = M.labels[bits(partner)[0]]
    Mc = contract(M, [e])
    phi = _coordinate_map(M.labels, Mc.labels, copy)
    if not _check_bijection(phi, cycle_polytope(Mc).vertices, cycle_polytope(M).vertices):
        raise PropertyViolation(f"contraction of {e} is not a vertex bijection")
    return phi


def series_minor_face_map(M: Matroid, steps: Sequence[MinorStep]) -> AffineMap:
    """Compose the per-step maps of a series-minor chain into ``R^E(M)``.

    The image of ``P(M')`` is checked to be the face of ``P(M)`` on which all
    deleted coordinates vanish.
    """
    cur = M
    maps: List[AffineMap] = []
    deleted = 0
    for step in steps:
        if step.kind == DELETE:
            nxt = apply_step(cur, step)
            maps.append(_coordinate_map(cur.labels, nxt.labels, {lab: lab for lab in nxt.labels}))
            deleted |= M.mask(step.elements)
        elif step.kind in (SERIES, COLOOP):
            apply_step(cur, step)  # applicability check
            maps.append(iso_of_series_or_coloop_contraction(cur, step.elements[0]))
            nxt = contract(cur, list(step.elements))
        else:
            raise NotApplicable(f"{step.kind} is not a series-minor step")
        cur = nxt
    phi = _coordinate_map(M.labels, M.labels, {lab: lab for lab in M.labels})
    for m in maps:
        phi = phi.compose(m)
    face = [v for v in cycle_polytope(M).vertices if not any(v[i] for i in bits(deleted))]
    if not _check_bijection(phi, cycle_polytope(cur).vertices, face):
        raise PropertyViolation("composite map does not land on the expected face")
    return phi


# ------------------------------------------------------------- faces


def faces(P: CyclePolytope, max_vertices: int = 12) -> List[Tuple[Vector, ...]]:
    """All nonempty faces, as vertex tuples, by an LP test per vertex subset.

    ``S`` is a face iff some ``c`` has ``c.v = b`` on ``S`` and ``c.v <= b - 1``
    off ``S``.
    """
    V = list(P.vertices)
    if len(V) > max_vertices:
        raise CapExceeded(f"{len(V)} vertices exceed the face enumeration cap {max_vertices}")
    n = P.ambient_dim
    out = []
    for k in range(1, len(V) + 1):
        for S in combinations(range(len(V)), k):
            if k == len(V) or _is_face(V, set(S), n):
                out.append(tuple(V[i] for i in S))
    return out


def _is_face(V: List[Vector], S: set, n: int) -> bool:
    # variables: c (n), b (1); free
    A_eq = [list(V[i]) + [-1] for i in S]
    A_ub = [list(V[i]) + [-1] for i in range(len(V)) if i not in S]
    res = linprog(
        np.zeros(n + 1),
        A_ub=np.array(A_ub, dtype=float),
        b_ub=-np.ones(len(A_ub)),
        A_eq=np.array(A_eq, dtype=float),
        b_eq=np.zeros(len(A_eq)),
        bounds=[(None, None)] * (n + 1),
        method="highs",
    )
    return res.status == 0


# ---------------------------------------------------- affine isomorphism


def _affine_basis(V: List[Vector]) -> List[int]:
    chosen = [0]
    diffs: List[List[int]] = []
    for i in range(1, len(V)):
        cand = [a - b for a, b in zip(V[i], V[0])]
        if int_rank(diffs + [cand]) > len(diffs):
            diffs.append(cand)
            chosen.append(i)
    return chosen


def _barycentric(V: List[Vector], basis: List[int]) -> List[List[Fraction]]:
    """Affine coordinates of every vertex with respect to ``basis``."""
    k = len(basis)
    n = len(V[0])
    A = [[Fraction(V[b][r]) for b in basis] for r in range(n)] + [[Fraction(1)] * k]
    out = []
    for v in V:
        lam = solve_rational(A, [Fraction(x) for x in v] + [Fraction(1)])
        assert lam is not None
        out.append(lam)
    return out


def affine_vertex_bijection(P: CyclePolytope, Q: Sequence[Vector] | CyclePolytope,
                            budget: int = caps.AFFINE_SEARCH_BUDGET) -> Optional[AffineMap]:
    """An affine map sending the vertices of ``P`` bijectively onto those of ``Q``.

    Vertices of ``P`` are written in affine coordinates over an affine basis;
    the search assigns basis vertices to target vertices and prunes as soon
    as a vertex whose coordinates are supported on the assigned part lands
    outside ``Q``.  Exhaustive unless ``budget`` assignments are exceeded.
    """
    VP = list(P.vertices)
    VQ = list(Q.vertices if isinstance(Q, CyclePolytope) else Q)
    if len(VP) != len(VQ):
        return None
    basis = _affine_basis(VP)
    if len(_affine_basis(VQ)) != len(basis):
        return None
    lam = _barycentric(VP, basis)
    k = len(basis)
    # vertices grouped by the last basis position their coordinates use
    by_level: List[List[int]] = [[] for _ in range(k)]
    for i, l in enumerate(lam):
        top = max(j for j in range(k) if l[j] != 0)
        by_level[top].append(i)
    targets = set(VQ)
    m = len(VQ[0]) if VQ else 0
    counter = [0]
    assign: List[int] = []

    def image(i):
        acc = [Fraction(0)] * m
        for j, q in enumerate(assign):
            c = lam[i][j]
            if c:
                for r in range(m):
                    acc[r] += c * VQ[q][r]
        return acc

    def extend(level: int, used: set) -> bool:
        if level == k:
            return True
        for q in range(len(VQ)):
            if q in used:
                continue
            counter[0] += 1
            if counter[0] > budget:
                raise CapExceeded(f"affine search exceeded budget {budget}")
            assign.append(q)
            ok = True
            seen = set(used) | {q}
            for i in by_level[level]:
                if i in basis:
                    continue
                img = image(i)
                if any(x.denominator != 1 for x in img):
                    ok = False
                    break
                t = tuple(int(x) for x in img)
                if t not in targets:
                    ok = False
                    break
                ti = VQ.index(t)
                if ti in seen:
                    ok = False
                    break
                seen.add(ti)
            if ok and extend(level + 1, seen):
                return True
            assign.pop()
        return False

    if not extend(0, set()):
        return None
    phi = _map_from_basis(VP, VQ, basis, assign)
    if not _check_bijection(phi, VP, VQ):
        raise PropertyViolation("affine search returned a non-bijective map")
    return phi


def _map_from_basis(VP, VQ, basis, assign) -> AffineMap:
    """Affine map with ``VP[basis[j]] -> VQ[assign[j]]``."""
    p0 = [Fraction(x) for x in VP[basis[0]]]
    q0 = [Fraction(x) for x in VQ[assign[0]]]
    n, m = len(p0), len(q0)
    D = [[Fraction(VP[b][r]) - p0[r] for b in basis[1:]] for r in range(n)]  # n x k'
    E = [[Fraction(VQ[a][r]) - q0[r] for a in assign[1:]] for r in range(m)]
    kk = len(basis) - 1
    if kk == 0:
        mat = [[Fraction(0)] * n for _ in range(m)]
    else:
        # left inverse of D supported on kk independent coordinates
        rows: List[int] = []
        for r in range(n):
            if int_rank([[int(x) for x in D[i]] for i in rows + [r]]) > len(rows):
                rows.append(r)
            if len(rows) == kk:
                break
        Dinv = _invert([D[r] for r in rows])
        L = [[Fraction(0)] * n for _ in range(kk)]
        for i in range(kk):
            for a, r in enumerate(rows):
                L[i][r] = Dinv[i][a]
        mat = [[sum(E[s][i] * L[i][r] for i in range(kk)) for r in range(n)] for s in range(m)]
    off = [q0[s] - sum(mat[s][r] * p0[r] for r in range(n)) for s in range(m)]
    norm = lambda x: int(x) if x.denominator == 1 else x
    return AffineMap(tuple(tuple(norm(x) for x in row) for row in mat), tuple(norm(x) for x in off))


def _invert(G: List[List[Fraction]]) -> List[List[Fraction]]:
    k = len(G)
    aug = [row[:] + [Fraction(int(i == j)) for j in range(k)] for i, row in enumerate(G)]
    for col in range(k):
        p = next(i for i in range(col, k) if aug[i][col] != 0)
        aug[col], aug[p] = aug[p], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for i in range(k):
            if i != col and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[col])]
    return [row[k:] for row in aug]


def isomorphic_faces(P: CyclePolytope, Q: CyclePolytope) -> List[Tuple[Vector, ...]]:
    """Faces of ``P`` affinely isomorphic to ``Q`` (exhaustive at small size)."""
    hits = []
    for F in faces(P):
        if len(F) != len(Q.vertices):
            continue
        sub = CyclePolytope(P.labels, F)
        if affine_vertex_bijection(sub, Q) is not None:
            hits.append(F)
    return hits
