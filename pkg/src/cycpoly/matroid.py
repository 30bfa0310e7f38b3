"""Binary and circuit-presented matroids.

Subsets of the ground set are ``int`` bitsets aligned with ``labels``: bit
``i`` stands for ``labels[i]``.  Circuit and cycle lists are always sorted by
``(popcount, value)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from . import caps
from .errors import (
    AxiomViolation,
    CapExceeded,
    EmptyCircuitList,
    FreeMatroid,
    FreeResult,
)
from .gf2 import gf2_kernel_basis, gf2_matvec, gf2_rref, span_elements


def popcount(x: int) -> int:
    return bin(x).count("1")


def set_key(x: int) -> Tuple[int, int]:
    return (popcount(x), x)


def bits(x: int) -> List[int]:
    out = []
    while x:
        low = x & -x
        out.append(low.bit_length() - 1)
        x ^= low
    return out


def _minimal_sets(candidates: Iterable[int]) -> List[int]:
    """Inclusion-minimal nonempty members, canonically sorted."""
    accepted: List[int] = []
    for c in sorted(set(candidates), key=set_key):
        if c == 0:
            continue
        if any(a & c == a for a in accepted):
            continue
        accepted.append(c)
    return accepted


def _check_labels(labels: Sequence[str]) -> Tuple[str, ...]:
    labels = tuple(str(x) for x in labels)
    if not labels:
        raise FreeMatroid("empty ground set")
    if len(set(labels)) != len(labels):
        raise ValueError(f"duplicate labels in {labels}")
    if len(labels) > caps.MAX_GROUND:
        raise CapExceeded(f"ground set larger than {caps.MAX_GROUND}")
    return labels


@dataclass(frozen=True)
class CycleSet:
    """All cycles of a matroid (including the empty one)."""

    labels: Tuple[str, ...]
    cycles: Tuple[int, ...]

    def __len__(self) -> int:
        return len(self.cycles)

    def __iter__(self):
        return iter(self.cycles)

    def vectors(self) -> List[Tuple[int, ...]]:
        n = len(self.labels)
        return [tuple((c >> i) & 1 for i in range(n)) for c in self.cycles]

    def as_label_sets(self) -> List[Tuple[str, ...]]:
        return [tuple(self.labels[i] for i in bits(c)) for c in self.cycles]


class Matroid:
    """Common behaviour of the two presentations.

    Subclasses provide ``labels`` and ``circuits``.
    """

    labels: Tuple[str, ...]

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def index(self) -> Dict[str, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    def mask(self, labels: Iterable) -> int:
        """Bitset of the given labels."""
        m = 0
        for lab in labels:
            try:
                m |= 1 << self.index[str(lab)]
            except KeyError:
                raise KeyError(f"label {lab!r} not in ground set") from None
        return m

    def to_labels(self, mask: int) -> Tuple[str, ...]:
        return tuple(self.labels[i] for i in bits(mask))

    def label_circuits(self) -> List[frozenset]:
        return [frozenset(self.to_labels(c)) for c in self.circuits]

    @cached_property
    def circuit_set(self) -> frozenset:
        return frozenset(self.circuits)

    def is_independent(self, mask: int) -> bool:
        return all(c & mask != c for c in self.circuits)

    def rank_of(self, mask: int) -> int:
        chosen = 0
        for i in bits(mask):
            if self.is_independent(chosen | (1 << i)):
                chosen |= 1 << i
        return popcount(chosen)

    @property
    def rank(self) -> int:
        return self.rank_of(self.full)

    def __repr__(self) -> str:
        return f"{type(self).__name__}(n={self.n}, labels={' '.join(self.labels)})"


@dataclass(frozen=True, eq=False, repr=False)
class BinaryMatroid(Matroid):
    """Vector matroid of a GF(2) matrix; ``rows`` are reduced and nonzero."""

    labels: Tuple[str, ...]
    rows: Tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) >= len(self.labels):
            raise FreeMatroid("representation has trivial kernel")

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def nullity(self) -> int:
        return self.n - len(self.rows)

    @cached_property
    def kernel_basis(self) -> List[int]:
        return gf2_kernel_basis(self.rows, self.n)

    def _span(self) -> List[int]:
        k = self.nullity
        if k > caps.MAX_KERNEL_DIM or (1 << k) > caps.max_cycles():
            raise CapExceeded(f"kernel dimension {k} exceeds enumeration cap")
        return span_elements(self.kernel_basis)

    @cached_property
    def circuits(self) -> Tuple[int, ...]:
        return tuple(_minimal_sets(self._span()))

    @cached_property
    def cycle_masks(self) -> Tuple[int, ...]:
        return tuple(sorted(self._span(), key=set_key))

    def is_independent(self, mask: int) -> bool:
        cols = [sum(((r >> i) & 1) << k for k, r in enumerate(self.rows)) for i in bits(mask)]
        return gf2_rref(cols, len(self.rows))[1] == len(cols)

    def matrix_strings(self) -> List[str]:
        return ["".join("1" if (r >> j) & 1 else "0" for j in range(self.n)) for r in self.rows]


@dataclass(frozen=True, eq=False, repr=False)
class CircuitMatroid(Matroid):
    """Matroid given by an explicit, canonically sorted circuit list."""

    labels: Tuple[str, ...]
    circuits: Tuple[int, ...]

    def __post_init__(self):
        if not self.circuits:
            raise EmptyCircuitList("no circuits: free matroid")

    @cached_property
    def cycle_masks(self) -> Tuple[int, ...]:
        found = {0}
        circuits = self.circuits
        limit = caps.max_cycles()

        def grow(start: int, used: int) -> None:
            for k in range(start, len(circuits)):
                c = circuits[k]
                if c & used:
                    continue
                u = used | c
                if u not in found:
                    found.add(u)
                    if len(found) > limit:
                        raise CapExceeded("cycle enumeration cap exceeded")
                grow(k + 1, u)

        grow(0, 0)
        return tuple(sorted(found, key=set_key))


# ---------------------------------------------------------------- construction


def from_gf2_matrix(rows: Sequence, labels: Sequence[str], ncols: Optional[int] = None) -> BinaryMatroid:
    """Vector matroid of a GF(2) matrix.

    ``rows`` may be ints (bit ``j`` = column ``j``) or 0/1 strings/sequences.
    """
    labels = _check_labels(labels)
    int_rows = []
    for r in rows:
        if isinstance(r, int):
            int_rows.append(r)
        else:
            v = 0
            for j, ch in enumerate(r):
                if str(ch) == "1":
                    v |= 1 << j
                elif str(ch) != "0":
                    raise ValueError(f"invalid GF(2) entry {ch!r}")
            if len(r) != len(labels):
                raise ValueError("column count differs from label count")
            int_rows.append(v)
    n = len(labels) if ncols is None else ncols
    if n != len(labels):
        raise ValueError("column count differs from label count")
    if any(r >> n for r in int_rows):
        raise ValueError("row has entries beyond the last column")
    reduced, rank, _ = gf2_rref(int_rows, n)
    if rank >= n:
        raise FreeMatroid("rank equals column count: no circuits")
    return BinaryMatroid(labels, tuple(reduced[:rank]))


def _validate_circuits(circuits: Sequence[int], labels: Tuple[str, ...]) -> None:
    cs = list(circuits)
    for a, b in combinations(cs, 2):
        if a & b == a or a & b == b:
            raise AxiomViolation(f"not an antichain: {_fmt(a, labels)} and {_fmt(b, labels)}")
    cset = set(cs)
    for a, b in combinations(cs, 2):
        common = a & b
        union = a | b
        for e in bits(common):
            target = union & ~(1 << e)
            if not any(c & target == c for c in cset):
                raise AxiomViolation(
                    f"elimination fails for {_fmt(a, labels)}, {_fmt(b, labels)} at {labels[e]}"
                )


def _fmt(mask: int, labels: Sequence[str]) -> str:
    return "{" + ",".join(labels[i] for i in bits(mask)) + "}"


def from_circuits(circuits: Iterable[Iterable], ground: Sequence[str]) -> CircuitMatroid:
    """Validate a circuit family and build the matroid it defines."""
    labels = _check_labels(ground)
    index = {lab: i for i, lab in enumerate(labels)}
    masks = []
    for c in circuits:
        m = 0
        for lab in c:
            m |= 1 << index[str(lab)]
        if m == 0:
            raise AxiomViolation("the empty set cannot be a circuit")
        masks.append(m)
    masks = sorted(set(masks), key=set_key)
    if not masks:
        raise EmptyCircuitList("no circuits given: free matroid")
    _validate_circuits(masks, labels)
    return CircuitMatroid(labels, tuple(masks))


def circuit_presentation(M: Matroid) -> CircuitMatroid:
    if isinstance(M, CircuitMatroid):
        return M
    return CircuitMatroid(M.labels, tuple(M.circuits))


def uniform(r: int, n: int, labels: Optional[Sequence[str]] = None) -> CircuitMatroid:
    """``U_{r,n}``: circuits are the ``(r+1)``-subsets."""
    labels = tuple(labels) if labels else tuple(str(i) for i in range(1, n + 1))
    return from_circuits(combinations(labels, r + 1), labels)


# -------------------------------------------------------------------- queries


def circuits(M: Matroid) -> List[int]:
    return list(M.circuits)


def cycles(M: Matroid) -> CycleSet:
    return CycleSet(M.labels, M.cycle_masks)


def dual(M: Matroid) -> Matroid:
    """Dual matroid on the same labels."""
    if isinstance(M, BinaryMatroid):
        return _binary_dual(M)
    return _circuit_dual(M)


def _binary_dual(M: BinaryMatroid) -> BinaryMatroid:
    rows, rank, pivots = gf2_rref(M.rows, M.n)
    if rank == 0:
        raise FreeResult("dual of an all-loop matroid is free")
    pivot_set = set(pivots)
    dual_rows = []
    for j in range(M.n):
        if j in pivot_set:
            continue
        v = 1 << j
        for i, p in enumerate(pivots):
            if (rows[i] >> j) & 1:
                v |= 1 << p
        dual_rows.append(v)
    reduced, r, _ = gf2_rref(dual_rows, M.n)
    return BinaryMatroid(M.labels, tuple(reduced[:r]))


def _circuit_dual(M: Matroid) -> CircuitMatroid:
    n = M.n
    if n > caps.MAX_CIRCUIT_DUAL_GROUND:
        raise CapExceeded(f"circuit-presented dual limited to {caps.MAX_CIRCUIT_DUAL_GROUND} elements")
    full = M.full
    r = M.rank
    if r == 0:
        raise FreeResult("dual of an all-loop matroid is free")
    # X is dependent in M* iff E - X does not span M
    found: List[int] = []
    for size in range(1, n + 1):
        for combo in combinations(range(n), size):
            x = sum(1 << i for i in combo)
            if any(c & x == c for c in found):
                continue
            if M.rank_of(full & ~x) < r:
                found.append(x)
    return CircuitMatroid(M.labels, tuple(sorted(found, key=set_key)))


def cocircuits(M: Matroid) -> List[int]:
    """Circuits of the dual; empty when every element is a loop."""
    if M.rank == 0:
        return []
    return list(dual(M).circuits)


def loops(M: Matroid) -> int:
    return sum(c for c in M.circuits if popcount(c) == 1)


def coloops(M: Matroid) -> int:
    covered = 0
    for c in M.circuits:
        covered |= c
    return M.full & ~covered


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def _classes_from_pairs(n: int, excluded: int, pairs: Iterable[int]) -> List[int]:
    uf = _UnionFind(n)
    for p in pairs:
        a, b = bits(p)
        uf.union(a, b)
    groups: Dict[int, int] = {}
    for i in range(n):
        if (excluded >> i) & 1:
            continue
        root = uf.find(i)
        groups[root] = groups.get(root, 0) | (1 << i)
    return sorted(groups.values(), key=lambda m: (m & -m))


def coparallel_classes(M: Matroid) -> List[int]:
    """Series classes: the partition of non-coloops by 2-cocircuits."""
    co = cocircuits(M)
    return _classes_from_pairs(M.n, coloops(M), [c for c in co if popcount(c) == 2])


def parallel_classes(M: Matroid) -> List[int]:
    return _classes_from_pairs(M.n, loops(M), [c for c in M.circuits if popcount(c) == 2])


def d(M: Matroid) -> int:
    """Number of coparallel classes; equals the dimension of the cycle polytope."""
    return len(coparallel_classes(M))


def components(M: Matroid) -> List[int]:
    uf = _UnionFind(M.n)
    for c in M.circuits:
        b = bits(c)
        for x in b[1:]:
            uf.union(b[0], x)
    groups: Dict[int, int] = {}
    for i in range(M.n):
        r = uf.find(i)
        groups[r] = groups.get(r, 0) | (1 << i)
    return sorted(groups.values(), key=lambda m: (m & -m))


def is_connected(M: Matroid) -> bool:
    return len(components(M)) == 1


def direct_sum(M1: Matroid, M2: Matroid) -> Matroid:
    """1-sum; clashing labels of the second summand get the suffix ``#2``."""
    taken = set(M1.labels)
    labels2 = []
    for lab in M2.labels:
        new = lab
        while new in taken:
            new = new + "#2"
        taken.add(new)
        labels2.append(new)
    labels = M1.labels + tuple(labels2)
    shift = M1.n
    if isinstance(M1, BinaryMatroid) and isinstance(M2, BinaryMatroid):
        rows = tuple(M1.rows) + tuple(r << shift for r in M2.rows)
        return from_gf2_matrix(list(rows), labels)
    cs = list(M1.circuits) + [c << shift for c in M2.circuits]
    return CircuitMatroid(_check_labels(labels), tuple(sorted(cs, key=set_key)))


def is_cycle(M: Matroid, x: int) -> bool:
    """Whether ``x`` is a disjoint union of circuits."""
    if x == 0:
        return True
    if isinstance(M, BinaryMatroid):
        return gf2_matvec(M.rows, x) == 0
    return _is_disjoint_union(x, M.circuits)


def _is_disjoint_union(x: int, circuit_list: Sequence[int]) -> bool:
    if x == 0:
        return True
    low = x & -x
    for c in circuit_list:
        if c & low and c & x == c:
            if _is_disjoint_union(x & ~c, circuit_list):
                return True
    return False


def is_binary(M: Matroid) -> bool:
    """Symmetric differences of distinct circuits are disjoint unions of circuits."""
    cs = M.circuits
    for a, b in combinations(cs, 2):
        if not _is_disjoint_union(a ^ b, cs):
            return False
    return True


# ---------------------------------------------------------------- isomorphism


def element_signatures(M: Matroid) -> List[Tuple[int, ...]]:
    sig: List[List[int]] = [[] for _ in range(M.n)]
    for c in M.circuits:
        size = popcount(c)
        for i in bits(c):
            sig[i].append(size)
    return [tuple(sorted(s)) for s in sig]


def invariant(M: Matroid) -> tuple:
    """Isomorphism invariant used for pruning and bucketing."""
    return (
        M.n,
        tuple(sorted(popcount(c) for c in M.circuits)),
        tuple(sorted(element_signatures(M))),
    )


def are_isomorphic(M: Matroid, N: Matroid) -> Optional[Dict[str, str]]:
    """A label bijection carrying circuits of ``M`` onto circuits of ``N``, or None."""
    if M.n > caps.MAX_ISO_GROUND:
        raise CapExceeded("isomorphism search cap exceeded")
    if invariant(M) != invariant(N):
        return None
    n = M.n
    sig_m = element_signatures(M)
    sig_n = element_signatures(N)
    circ_m = [[c for c in M.circuits if (c >> i) & 1] for i in range(n)]
    circ_n = [[c for c in N.circuits if (c >> i) & 1] for i in range(n)]
    set_n = N.circuit_set
    set_m = M.circuit_set

    # most constrained first: rare signatures, then many circuits
    counts: Dict[tuple, int] = {}
    for s in sig_m:
        counts[s] = counts.get(s, 0) + 1
    order = sorted(range(n), key=lambda i: (counts[sig_m[i]], -len(sig_m[i]), i))
    fwd = [-1] * n
    used = [False] * n

    def image(mask: int) -> int:
        out = 0
        for i in bits(mask):
            out |= 1 << fwd[i]
        return out

    def preimage_ok(j: int, dom: int, img: int) -> bool:
        inv = {fwd[i]: i for i in bits(dom)}
        for c in circ_n[j]:
            if c & img == c:
                pre = 0
                for t in bits(c):
                    pre |= 1 << inv[t]
                if pre not in set_m:
                    return False
        return True

    def search(k: int, dom: int, img: int) -> bool:
        if k == n:
            return True
        i = order[k]
        for j in range(n):
            if used[j] or sig_n[j] != sig_m[i]:
                continue
            fwd[i] = j
            nd = dom | (1 << i)
            ni = img | (1 << j)
            ok = True
            for c in circ_m[i]:
                if c & nd == c and image(c) not in set_n:
                    ok = False
                    break
            if ok and preimage_ok(j, nd, ni):
                used[j] = True
                if search(k + 1, nd, ni):
                    return True
                used[j] = False
            fwd[i] = -1
        return False

    if not search(0, 0, 0):
        return None
    return {M.labels[i]: N.labels[fwd[i]] for i in range(n)}


def relabel(M: Matroid, mapping: Dict[str, str]) -> Matroid:
    """Same matroid with labels renamed (positions unchanged)."""
    labels = tuple(mapping.get(lab, lab) for lab in M.labels)
    if isinstance(M, BinaryMatroid):
        return BinaryMatroid(_check_labels(labels), M.rows)
    return CircuitMatroid(_check_labels(labels), M.circuits)


def permute(M: Matroid, perm: Sequence[int]) -> Matroid:
    """Reorder the ground set: new position ``k`` holds old element ``perm[k]``."""
    labels = tuple(M.labels[p] for p in perm)

    def move(mask: int) -> int:
        out = 0
        for k, p in enumerate(perm):
            if (mask >> p) & 1:
                out |= 1 << k
        return out

    if isinstance(M, BinaryMatroid):
        return from_gf2_matrix([move(r) for r in M.rows], labels)
    return CircuitMatroid(labels, tuple(sorted((move(c) for c in M.circuits), key=set_key)))


def same_circuits(M: Matroid, N: Matroid) -> bool:
    """Equal circuit families as label sets."""
    return set(M.label_circuits()) == set(N.label_circuits()) and set(M.labels) == set(N.labels)
