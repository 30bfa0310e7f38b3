"""GF(2) linear algebra on int bitsets.

A matrix is a list of rows; each row is an ``int`` whose bit ``j`` is the
entry in column ``j``.  Column 0 is the least significant bit.
"""

from __future__ import annotations

from typing import Iterable, List, Sequence, Tuple


def rows_from_strings(lines: Iterable[str]) -> Tuple[List[int], int]:
    """Parse rows such as ``"0110"`` (first character is column 0)."""
    rows = []
    ncols = None
    for line in lines:
        line = line.strip()
        if ncols is None:
            ncols = len(line)
        elif len(line) != ncols:
            raise ValueError("ragged GF(2) matrix")
        value = 0
        for j, ch in enumerate(line):
            if ch == "1":
                value |= 1 << j
            elif ch != "0":
                raise ValueError(f"invalid GF(2) entry {ch!r}")
        rows.append(value)
    return rows, ncols or 0


def rows_to_strings(rows: Sequence[int], ncols: int) -> List[str]:
    return ["".join("1" if (r >> j) & 1 else "0" for j in range(ncols)) for r in rows]


def gf2_rref(rows: Sequence[int], ncols: int) -> Tuple[List[int], int, List[int]]:
    """Reduced row echelon form over GF(2) with the leftmost-pivot rule.

    Returns ``(reduced, rank, pivots)``; ``reduced`` keeps the original row
    count, with zero rows moved to the bottom.
    """
    work = list(rows)
    pivots: List[int] = []
    r = 0
    for col in range(ncols):
        bit = 1 << col
        pivot = None
        for i in range(r, len(work)):
            if work[i] & bit:
                pivot = i
                break
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        for i in range(len(work)):
            if i != r and work[i] & bit:
                work[i] ^= work[r]
        pivots.append(col)
        r += 1
        if r == len(work):
            break
    return work, r, pivots


def gf2_rank(rows: Sequence[int], ncols: int) -> int:
    return gf2_rref(rows, ncols)[1]


def gf2_kernel_basis(rows: Sequence[int], ncols: int) -> List[int]:
    """Basis of the right kernel ``{x : A x = 0 (mod 2)}``, one vector per free column."""
    reduced, rank, pivots = gf2_rref(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        v = 1 << f
        for i, p in enumerate(pivots):
            if (reduced[i] >> f) & 1:
                v |= 1 << p
        basis.append(v)
    return basis


def gf2_matvec(rows: Sequence[int], x: int) -> int:
    """Return ``A x`` as a bitset over the rows."""
    out = 0
    for i, r in enumerate(rows):
        if bin(r & x).count("1") & 1:
            out |= 1 << i
    return out


def span_elements(basis: Sequence[int]) -> List[int]:
    """All ``2**len(basis)`` elements of the span, in Gray-code order."""
    out = [0]
    current = 0
    for i in range(1, 1 << len(basis)):
        # bit flipped between Gray codes i-1 and i
        current ^= basis[(i & -i).bit_length() - 1]
        out.append(current)
    return out
