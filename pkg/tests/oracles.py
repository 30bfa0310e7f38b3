"""Slow reference computations used to freeze expected values.

None of these reuse the package's algorithms: circuits come from subset
enumeration with a separate GF(2) rank, and generator counts come from the
graded pieces of the toric ideal rather than from fibre connectivity.
"""

from itertools import combinations, combinations_with_replacement


def gf2_rank_lists(vectors):
    rows = [list(v) for v in vectors]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c] % 2), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][c] % 2:
                rows[i] = [(a + b) % 2 for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def columns(matrix_strings, n=None):
    n = len(matrix_strings[0]) if n is None else n
    return [[int(row[j]) for row in matrix_strings] for j in range(n)]


def brute_circuits(matrix_strings, n=None):
    """Minimal dependent column sets, as sorted index tuples."""
    cols = columns(matrix_strings, n)
    n = len(cols)
    found = []
    for k in range(1, n + 1):
        for S in combinations(range(n), k):
            if any(set(c) <= set(S) for c in found):
                continue
            if not matrix_strings or gf2_rank_lists([cols[i] for i in S]) < k:
                found.append(S)
    return sorted(found, key=lambda s: (len(s), sum(1 << i for i in s)))


def brute_cycles(matrix_strings, n=None):
    cols = columns(matrix_strings, n)
    n, m = len(cols), len(matrix_strings)
    out = []
    for mask in range(1 << n):
        if all(sum(cols[j][r] for j in range(n) if mask >> j & 1) % 2 == 0 for r in range(m)):
            out.append(mask)
    return sorted(out, key=lambda x: (bin(x).count("1"), x))


def brute_cocircuits(matrix_strings):
    """Minimal nonempty supports in the GF(2) row space."""
    rows = [int(r[::-1], 2) for r in matrix_strings]
    space = {0}
    for r in rows:
        space |= {s ^ r for s in space}
    nz = sorted((s for s in space if s), key=lambda x: (bin(x).count("1"), x))
    out = []
    for s in nz:
        if not any(c & s == c for c in out):
            out.append(s)
    return out


def generator_counts(vectors, max_degree):
    """Minimal generator count per degree of the toric ideal of the columns (v, 1).

    In degree D the ideal is spanned by differences of monomials with equal
    image; the part generated in lower degree is spanned by variable
    multiples of the degree D-1 differences.  Both spans are spanned by
    vectors ``e_a - e_b``, so their dimensions are counts of monomials minus
    counts of connected classes.
    """
    N = len(vectors)

    def image(mono):
        acc = [0] * len(vectors[0])
        for i in mono:
            acc = [a + b for a, b in zip(acc, vectors[i])]
        return tuple(acc)

    counts = {}
    prev_fibres = None
    for D in range(1, max_degree + 1):
        monos = list(combinations_with_replacement(range(N), D))
        fibres = {}
        for m in monos:
            fibres.setdefault(image(m), []).append(m)
        idx = {m: k for k, m in enumerate(monos)}
        parent = list(range(len(monos)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        if prev_fibres is not None:
            for fib in prev_fibres.values():
                base = fib[0]
                for other in fib[1:]:
                    for i in range(N):
                        a = idx[tuple(sorted(base + (i,)))]
                        b = idx[tuple(sorted(other + (i,)))]
                        ra, rb = find(a), find(b)
                        if ra != rb:
                            parent[ra] = rb
        components = len({find(k) for k in range(len(monos))})
        new = components - len(fibres)
        if new:
            counts[D] = new
        prev_fibres = fibres
    return counts


def even_subgraphs(nv, edges):
    out = []
    for mask in range(1 << len(edges)):
        deg = [0] * nv
        for j, (u, v) in enumerate(edges):
            if mask >> j & 1:
                deg[u] += 1
                deg[v] += 1
        if all(x % 2 == 0 for x in deg):
            out.append(mask)
    return sorted(out, key=lambda x: (bin(x).count("1"), x))


def all_cuts(nv, edges):
    out = set()
    for A in range(1 << nv):
        out.add(sum(1 << j for j, (u, v) in enumerate(edges) if (A >> u & 1) != (A >> v & 1)))
    return sorted(out, key=lambda x: (bin(x).count("1"), x))
