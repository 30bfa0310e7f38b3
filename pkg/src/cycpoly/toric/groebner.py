"""Buchberger's algorithm for pure-difference binomial ideals.

Every polynomial handled here is ``x^u - x^v`` with ``u, v`` of equal total
degree, so a binomial is stored structurally as a pair of packed monomials
and no coefficient arithmetic is ever needed.

Monomials are packed one byte per variable into a Python int, with the
variable that is smallest in the term order in the most significant byte.
For two monomials of equal degree the graded reverse-lexicographic order is
then the reverse of integer order, and divisibility, lcm and degree are a
handful of big-int operations.
"""

from __future__ import annotations

import heapq
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

FIELD_MAX = 127


class Packing:
    """Byte packing for a fixed variable order.

    ``order[k]`` is the variable stored in byte ``k``; the last entry is the
    smallest variable under grevlex.
    """

    def __init__(self, order: Sequence[int]):
        self.order = list(order)
        self.n = len(self.order)
        self.position = {v: k for k, v in enumerate(self.order)}
        self.guard = int.from_bytes(bytes([0x80]) * self.n, "little")
        self.low = int.from_bytes(bytes([0x01]) * self.n, "little")

    def pack(self, exps: Sequence[int]) -> int:
        buf = bytearray(self.n)
        for v, e in enumerate(exps):
            if e:
                if e > FIELD_MAX:
                    raise OverflowError("exponent too large for byte packing")
                buf[self.position[v]] = e
        return int.from_bytes(bytes(buf), "little")

    def unpack(self, m: int) -> Tuple[int, ...]:
        raw = m.to_bytes(self.n, "little")
        out = [0] * self.n
        for k, v in enumerate(self.order):
            out[v] = raw[k]
        return tuple(out)

    def degree(self, m: int) -> int:
        return sum(m.to_bytes(self.n, "little"))

    def divides(self, a: int, b: int) -> bool:
        g = self.guard
        return ((b | g) - a) & g == g

    def lcm(self, a: int, b: int) -> int:
        ge = ((a | self.guard) - b) & self.guard  # guard set where a_i >= b_i
        sel = (ge >> 7) * 0xFF
        return (a & sel) | (b & ~sel)

    def support(self, a: int) -> int:
        return ((a | self.guard) - self.low) & self.guard

    def coprime(self, a: int, b: int) -> bool:
        return self.support(a) & self.support(b) == 0

    def check(self, m: int) -> int:
        if m & self.guard:
            raise OverflowError("exponent overflow in packed monomial")
        return m


def orient(pk: Packing, p: int, q: int) -> Tuple[int, int]:
    """Return ``(lead, trail)`` under grevlex."""
    dp, dq = pk.degree(p), pk.degree(q)
    if dp != dq:
        raise ValueError("binomials must be homogeneous")
    return (p, q) if p < q else (q, p)


class BinomialGB:
    """Incremental Gröbner basis with Gebauer-Möller pair management.

    ``add`` inserts a generator after reducing it; ``run(max_degree)``
    processes every pending S-pair whose lcm has degree at most
    ``max_degree``.  After ``run(d)`` the active set is a ``d``-truncated
    Gröbner basis of the ideal generated so far.
    """

    def __init__(self, packing: Packing):
        self.pk = packing
        self.polys: List[Tuple[int, int]] = []
        self.active: List[int] = []
        self.pairs: Dict[Tuple[int, int], int] = {}
        self.heap: List[Tuple[int, int, int, int]] = []
        self.reductions = 0

    # -- reduction

    def normal_form(self, m: int) -> int:
        pk = self.pk
        g = pk.guard
        leads = [self.polys[i] for i in self.active]
        changed = True
        while changed:
            changed = False
            for lead, trail in leads:
                if ((m | g) - lead) & g == g:
                    m = m - lead + trail
                    self.reductions += 1
                    changed = True
                    break
        return m

    def reduce(self, p: int, q: int) -> Optional[Tuple[int, int]]:
        a = self.normal_form(p)
        b = self.normal_form(q)
        if a == b:
            return None
        return (a, b) if a < b else (b, a)

    # -- pair bookkeeping

    def _insert(self, h: Tuple[int, int]) -> None:
        pk = self.pk
        hi = len(self.polys)
        self.polys.append(h)
        lead_h = h[0]
        cands = []
        for g in self.active:
            lg = self.polys[g][0]
            cands.append((g, pk.lcm(lead_h, lg), pk.coprime(lead_h, lg)))
        # Gebauer-Möller: drop pairs (h, g) whose lcm is a proper multiple of another
        kept = []
        for k, (g, L, cop) in enumerate(cands):
            dominated = False
            for k2, (g2, L2, _) in enumerate(cands):
                if k2 == k:
                    continue
                if pk.divides(L2, L) and (L2 != L or k2 < k):
                    if L2 != L or not cop:
                        dominated = True
                        break
            if not dominated:
                kept.append((g, L, cop))
        # drop old pairs made redundant by h
        dead = []
        for (i, j), L in self.pairs.items():
            if pk.divides(lead_h, L):
                if pk.lcm(self.polys[i][0], lead_h) != L and pk.lcm(self.polys[j][0], lead_h) != L:
                    dead.append((i, j))
        for key in dead:
            del self.pairs[key]
        for g, L, cop in kept:
            if cop:
                continue
            self.pairs[(g, hi)] = L
            heapq.heappush(self.heap, (pk.degree(L), -L, g, hi))
        self.active = [g for g in self.active if not pk.divides(lead_h, self.polys[g][0])]
        self.active.append(hi)

    def add(self, p: int, q: int) -> bool:
        """Reduce ``x^p - x^q`` and insert it; False if it reduced to zero."""
        r = self.reduce(p, q)
        if r is None:
            return False
        self._insert(r)
        return True

    def run(self, max_degree: Optional[int] = None) -> None:
        pk = self.pk
        heap = self.heap
        while heap:
            deg, negL, i, j = heap[0]
            if max_degree is not None and deg > max_degree:
                return
            heapq.heappop(heap)
            if self.pairs.pop((i, j), None) is None:
                continue
            L = -negL
            (a1, b1), (a2, b2) = self.polys[i], self.polys[j]
            s1 = pk.check(L - a1 + b1)
            s2 = pk.check(L - a2 + b2)
            r = self.reduce(s1, s2)
            if r is not None:
                self._insert(r)

    # -- output

    def reduced_basis(self) -> List[Tuple[int, int]]:
        """Interreduced basis of the active set (fully reduced tails)."""
        pk = self.pk
        leads = [self.polys[i] for i in self.active]
        minimal = []
        for k, (lead, trail) in enumerate(leads):
            if any(pk.divides(l2, lead) and (l2 != lead or k2 < k) for k2, (l2, _) in enumerate(leads) if k2 != k):
                continue
            minimal.append((lead, trail))
        out = []
        for lead, trail in minimal:
            out.append((lead, self.normal_form(trail)))
        return sorted(out, key=lambda b: (pk.degree(b[0]), -b[0], -b[1]))


def groebner_basis(
    binomials: Iterable[Tuple[Sequence[int], Sequence[int]]],
    order: Sequence[int],
    max_degree: Optional[int] = None,
) -> Tuple[Packing, List[Tuple[int, int]]]:
    """Reduced grevlex Gröbner basis; ``order[-1]`` is the smallest variable."""
    pk = Packing(order)
    gb = BinomialGB(pk)
    # homogeneous input: feed generators degree by degree
    items = []
    for u, v in binomials:
        p, q = pk.pack(u), pk.pack(v)
        if p == q:
            continue
        lead, trail = orient(pk, p, q)
        items.append((pk.degree(lead), lead, trail))
    items.sort(key=lambda t: (t[0], -t[1]))
    for deg, lead, trail in items:
        gb.run(deg - 1 if max_degree is None else min(deg - 1, max_degree))
        gb.add(lead, trail)
    gb.run(max_degree)
    return pk, gb.reduced_basis()
