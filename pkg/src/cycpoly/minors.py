"""Deletion, contraction and the minor searches built from them.

Step kinds, in the fixed order used by every search:
``delete < series-contract < coloop-contract < binary-retract``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from . import caps
from .errors import (
    CapExceeded,
    FreeMatroid,
    FreeResult,
    NotACircuit,
    NotApplicable,
    PairingFails,
)
from .matroid import (
    BinaryMatroid,
    CircuitMatroid,
    Matroid,
    are_isomorphic,
    bits,
    coloops,
    cocircuits,
    dual,
    from_gf2_matrix,
    invariant,
    popcount,
    same_circuits,
    set_key,
    _minimal_sets,
)

ElementsLike = Union[int, Iterable]

DELETE = "delete"
CONTRACT = "contract"
SERIES = "series-contract"
COLOOP = "coloop-contract"
RETRACT = "binary-retract"

KIND_STEPS = {
    "general": (DELETE, CONTRACT),
    "minor": (DELETE, CONTRACT),
    "series": (DELETE, SERIES),
    "g-series": (DELETE, SERIES, COLOOP, RETRACT),
}


def _as_mask(M: Matroid, X: ElementsLike) -> int:
    if isinstance(X, int):
        if X >> M.n:
            raise ValueError("element set outside the ground set")
        return X
    if isinstance(X, str):
        X = [X]
    return M.mask(X)


def _compress(mask: int, keep: Sequence[int]) -> int:
    out = 0
    for k, pos in enumerate(keep):
        if (mask >> pos) & 1:
            out |= 1 << k
    return out


def delete(M: Matroid, X: ElementsLike) -> Matroid:
    """``M \\ X``; raises FreeResult if no circuit avoids ``X``."""
    x = _as_mask(M, X)
    keep = [i for i in range(M.n) if not (x >> i) & 1]
    labels = [M.labels[i] for i in keep]
    if not labels:
        raise FreeResult("deletion leaves the empty matroid")
    if isinstance(M, BinaryMatroid):
        try:
            return from_gf2_matrix([_compress(r, keep) for r in M.rows], labels)
        except FreeMatroid as exc:
            raise FreeResult(str(exc)) from None
    cs = [_compress(c, keep) for c in M.circuits if not c & x]
    if not cs:
        raise FreeResult("no circuit avoids the deleted set")
    return CircuitMatroid(tuple(labels), tuple(sorted(cs, key=set_key)))


def contract(M: Matroid, T: ElementsLike) -> Matroid:
    """``M / T``; loops inside ``T`` are deleted."""
    t = _as_mask(M, T)
    keep = [i for i in range(M.n) if not (t >> i) & 1]
    labels = [M.labels[i] for i in keep]
    if not labels:
        raise FreeResult("contraction leaves the empty matroid")
    if isinstance(M, BinaryMatroid):
        rows = list(M.rows)
        for e in bits(t):
            bit = 1 << e
            pivot = next((k for k, r in enumerate(rows) if r & bit), None)
            if pivot is None:
                continue  # loop
            prow = rows.pop(pivot)
            rows = [r ^ prow if r & bit else r for r in rows]
        try:
            return from_gf2_matrix([_compress(r, keep) for r in rows], labels)
        except FreeMatroid as exc:
            raise FreeResult(str(exc)) from None
    cs = _minimal_sets(_compress(c & ~t, keep) for c in M.circuits)
    if not cs:
        raise FreeResult("contraction is free")
    return CircuitMatroid(tuple(labels), tuple(cs))


def duality_identities_check(M: Matroid, T: ElementsLike) -> bool:
    """``M*/T = (M\\T)*`` and ``M*\\T = (M/T)*`` as labelled circuit families."""
    t = _as_mask(M, T)
    Md = dual(M)
    lhs1 = contract(Md, t)
    rhs1 = dual(delete(M, t))
    lhs2 = delete(Md, t)
    rhs2 = dual(contract(M, t))
    return same_circuits(lhs1, rhs1) and same_circuits(lhs2, rhs2)


def series_contractions_available(M: Matroid) -> int:
    """Elements lying in some 2-cocircuit."""
    try:
        co = cocircuits(M)
    except FreeResult:
        return 0
    out = 0
    for c in co:
        if popcount(c) == 2:
            out |= c
    return out


# ------------------------------------------------------ binary matroidal retracts


def _ordered_indices(M: Matroid, seq) -> List[int]:
    if isinstance(seq, str):
        seq = [s for s in seq.replace(",", " ").split()]
    return [M.index[str(x)] for x in seq]


def retract_violation(M: Matroid, E, Eprime) -> Optional[Exception]:
    """None if ``M/E'`` is a binary matroidal retract for this pairing.

    Otherwise the exception describing which condition fails.  The pairing
    pairs ``E[j]`` with ``E'[j]``.  Condition (b) is evaluated in its
    symmetric form: a circuit meeting ``E'`` in a proper index set ``I``
    meets ``E`` in ``I`` or its complement, and vice versa.
    """
    e_idx = _ordered_indices(M, E)
    ep_idx = _ordered_indices(M, Eprime)
    s = len(e_idx)
    if s == 0 or s != len(ep_idx):
        raise ValueError("E and E' must be nonempty and of equal size")
    if len(set(e_idx) | set(ep_idx)) != 2 * s:
        raise ValueError("E and E' must be disjoint sets without repeats")
    ep_mask = sum(1 << i for i in ep_idx)
    if ep_mask not in M.circuit_set:
        return NotACircuit(f"{M.to_labels(ep_mask)} is not a circuit")
    full = (1 << s) - 1
    for c in M.circuits:
        a = sum(1 << j for j, i in enumerate(ep_idx) if (c >> i) & 1)
        b = sum(1 << j for j, i in enumerate(e_idx) if (c >> i) & 1)
        if a != full and b not in (a, full ^ a):
            return PairingFails(f"circuit {M.to_labels(c)} violates the pairing")
        if b != full and a not in (b, full ^ b):
            return PairingFails(f"circuit {M.to_labels(c)} violates the pairing")
    return None


def check_binary_matroidal_retract(M: Matroid, E, Eprime, strict: bool = False) -> bool:
    """Whether ``M/E'`` is a binary matroidal retract of ``M`` via ``E``.

    With ``strict`` the failing condition is raised as NotACircuit or
    PairingFails instead of returning False.
    """
    problem = retract_violation(M, E, Eprime)
    if problem is not None and strict:
        raise problem
    return problem is None


def enumerate_binary_matroidal_retracts(
    M: Matroid, max_circuit: int = caps.RETRACT_MAX_CIRCUIT, budget: int = 1_000_000
) -> List[Tuple[Tuple[str, ...], Tuple[str, ...]]]:
    """All ``(E, E')`` with ``E'`` a circuit in sorted order and ``E`` ordered.

    Pairings are listed up to simultaneous reordering of both sides.
    """
    out = []
    checks = 0
    for c in M.circuits:
        s = popcount(c)
        if s > max_circuit:
            continue
        ep = bits(c)
        rest = [i for i in range(M.n) if not (c >> i) & 1]
        for chosen in combinations(rest, s):
            for order in permutations(chosen):
                checks += 1
                if checks > budget:
                    raise CapExceeded("retract enumeration budget exceeded")
                E = tuple(M.labels[i] for i in order)
                Ep = tuple(M.labels[i] for i in ep)
                if retract_violation(M, E, Ep) is None:
                    out.append((E, Ep))
    return out


# ---------------------------------------------------------------- minor steps


@dataclass(frozen=True)
class MinorStep:
    kind: str
    elements: Tuple[str, ...]
    E: Tuple[str, ...] = ()

    def to_dict(self) -> dict:
        out = {"kind": self.kind, "elements": list(self.elements)}
        if self.kind == RETRACT:
            out["E"] = list(self.E)
            out["Eprime"] = list(self.elements)
        return out


@dataclass
class MinorWitness:
    steps: List[MinorStep]
    final_iso: Dict[str, str] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "steps": [s.to_dict() for s in self.steps],
            "final_iso": dict(sorted(self.final_iso.items())),
        }


def apply_step(M: Matroid, step: MinorStep) -> Matroid:
    """Apply one step after checking its applicability condition."""
    x = M.mask(step.elements)
    if step.kind == DELETE:
        return delete(M, x)
    if step.kind == CONTRACT:
        return contract(M, x)
    if step.kind == SERIES:
        if popcount(x) != 1 or not x & series_contractions_available(M):
            raise NotApplicable(f"{step.elements} is not in a 2-cocircuit")
        return contract(M, x)
    if step.kind == COLOOP:
        if popcount(x) != 1 or not x & coloops(M):
            raise NotApplicable(f"{step.elements} is not a coloop")
        return contract(M, x)
    if step.kind == RETRACT:
        check_binary_matroidal_retract(M, step.E, step.elements, strict=True)
        return contract(M, x)
    raise ValueError(f"unknown step kind {step.kind!r}")


def replay(M: Matroid, steps: Sequence[MinorStep]) -> Matroid:
    for step in steps:
        M = apply_step(M, step)
    return M


def _successors(M: Matroid, kinds: Sequence[str], retract_max: int):
    n = M.n
    if DELETE in kinds:
        for i in range(n):
            yield MinorStep(DELETE, (M.labels[i],))
    if CONTRACT in kinds:
        for i in range(n):
            yield MinorStep(CONTRACT, (M.labels[i],))
    if SERIES in kinds:
        for i in bits(series_contractions_available(M)):
            yield MinorStep(SERIES, (M.labels[i],))
    if COLOOP in kinds:
        for i in bits(coloops(M)):
            yield MinorStep(COLOOP, (M.labels[i],))
    if RETRACT in kinds and isinstance(M, BinaryMatroid):
        for E, Ep in enumerate_binary_matroidal_retracts(M, retract_max):
            yield MinorStep(RETRACT, Ep, E)


class _ClassIndex:
    """Isomorphism classes bucketed by invariant."""

    def __init__(self):
        self.buckets: Dict[tuple, List[int]] = {}
        self.items: List[Matroid] = []

    def find_or_add(self, M: Matroid) -> Tuple[int, bool]:
        key = invariant(M)
        bucket = self.buckets.setdefault(key, [])
        for k in bucket:
            if are_isomorphic(M, self.items[k]) is not None:
                return k, False
        self.items.append(M)
        bucket.append(len(self.items) - 1)
        return len(self.items) - 1, True


def minor_search(
    M: Matroid,
    N: Matroid,
    kind: str = "g-series",
    frontier: int = caps.SEARCH_FRONTIER,
    retract_max: int = caps.RETRACT_MAX_CIRCUIT,
) -> Optional[MinorWitness]:
    """Breadth-first search for a minor of ``M`` of the given kind isomorphic to ``N``."""
    kinds = KIND_STEPS[kind]
    target = N.n
    if M.n < target:
        return None
    index = _ClassIndex()
    root, _ = index.find_or_add(M)
    parent: Dict[int, Tuple[int, MinorStep]] = {}
    queue = deque([root])
    while queue:
        k = queue.popleft()
        cur = index.items[k]
        if cur.n == target:
            iso = are_isomorphic(cur, N)
            if iso is not None:
                steps = []
                while k in parent:
                    k, step = parent[k]
                    steps.append(step)
                return MinorWitness(steps[::-1], iso)
            continue
        for step in _successors(cur, kinds, retract_max):
            try:
                nxt = apply_step(cur, step)
            except FreeResult:
                continue
            if nxt.n < target:
                continue
            j, new = index.find_or_add(nxt)
            if new:
                if len(index.items) > frontier:
                    raise CapExceeded(f"minor search exceeded {frontier} classes")
                parent[j] = (k, step)
                queue.append(j)
    return None


def g_series_minor_search(M: Matroid, N: Matroid, **kw) -> Optional[MinorWitness]:
    return minor_search(M, N, "g-series", **kw)


def general_minor_search(M: Matroid, N: Matroid) -> Optional[MinorWitness]:
    """Exhaustive search over all ``M / T \\ D`` with ``|T| + |D| = |E(M)| - |E(N)|``."""
    drop = M.n - N.n
    if drop < 0:
        return None
    key = invariant(N)
    for X in combinations(range(M.n), drop):
        xs = list(X)
        for r in range(len(xs) + 1):
            for T in combinations(xs, r):
                t = sum(1 << i for i in T)
                dmask = sum(1 << i for i in xs) & ~t
                try:
                    minor = delete(contract(M, t), M.to_labels(dmask)) if dmask else contract(M, t) if t else M
                except FreeResult:
                    continue
                if invariant(minor) != key:
                    continue
                iso = are_isomorphic(minor, N)
                if iso is not None:
                    steps = []
                    if t:
                        steps.append(MinorStep(CONTRACT, M.to_labels(t)))
                    if dmask:
                        steps.append(MinorStep(DELETE, M.to_labels(dmask)))
                    return MinorWitness(steps, iso)
    return None


def find_minor(M: Matroid, N: Matroid, kind: str = "general") -> Optional[MinorWitness]:
    if kind in ("general", "minor"):
        return general_minor_search(M, N)
    if kind in ("series", "g-series"):
        return minor_search(M, N, kind)
    raise ValueError(f"unknown minor kind {kind!r}")


def minor_free(M: Matroid, N: Matroid, kind: str = "general") -> bool:
    """True iff ``M`` has no minor of the given kind isomorphic to ``N``."""
    return find_minor(M, N, kind) is None
