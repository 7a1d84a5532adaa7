"""Pure-Python enumeration kernels.

Same signatures and results as the compiled ``_ckernels`` module; used when
the extension is unavailable or ``MECARD_PURE_PYTHON`` is set.
"""

from itertools import combinations

from .errors import BudgetExceeded


def commuting_orbits(conj, commute, elems, n, budget):
    """Number of conjugation orbits on pairwise-commuting n-tuples from ``elems``.

    ``conj[g][x]`` is g x g^-1 and ``commute[x][y]`` is nonzero iff xy = yx.
    Orbits are found by explicit partition: every tuple is marked as its
    orbit is swept, so no counting formula is involved.
    """
    base = len(elems)
    total = base**n
    if total > budget:
        raise BudgetExceeded(f"{base}^{n} tuples exceeds budget {budget}")
    order = len(conj)
    pos = [-1] * order
    for i, x in enumerate(elems):
        pos[x] = i
    visited = bytearray(total)
    orbits = 0
    tup = [0] * n

    def sweep():
        nonlocal orbits
        code = 0
        for x in tup:
            code = code * base + pos[x]
        if visited[code]:
            return
        orbits += 1
        for row in conj:
            c = 0
            for x in tup:
                c = c * base + pos[row[x]]
            visited[c] = 1

    def extend(depth):
        if depth == n:
            sweep()
            return
        for x in elems:
            row = commute[x]
            ok = True
            for j in range(depth):
                if not row[tup[j]]:
                    ok = False
                    break
            if ok:
                tup[depth] = x
                extend(depth + 1)

    extend(0)
    return orbits


def _rank_mod_p(rows, n, p):
    rows = [r[:] for r in rows]
    rank = 0
    for col in range(n):
        piv = None
        for i in range(rank, n):
            if rows[i][col] % p:
                piv = i
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][col], p - 2, p)
        prow = [(v * inv) % p for v in rows[rank]]
        rows[rank] = prow
        for i in range(n):
            if i != rank and rows[i][col] % p:
                f = rows[i][col]
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], prow)]
        rank += 1
    return rank


def skew_rank_histogram(n, p, budget):
    """hist[r] = number of n x n skew-symmetric matrices over F_p of rank r."""
    pairs = list(combinations(range(n), 2))
    total = p ** len(pairs)
    if total > budget:
        raise BudgetExceeded(f"{total} matrices exceeds budget {budget}")
    hist = [0] * (n + 1)
    digits = [0] * len(pairs)
    for _ in range(total):
        mat = [[0] * n for _ in range(n)]
        for (i, j), v in zip(pairs, digits):
            mat[i][j] = v
            mat[j][i] = (-v) % p
        hist[_rank_mod_p(mat, n, p)] += 1
        for t in range(len(digits)):
            digits[t] += 1
            if digits[t] < p:
                break
            digits[t] = 0
    return hist


def _wedge_tables(n):
    """Sign of e_S ^ e_T for disjoint bitmasks S, T (0 if they overlap)."""

    def sign(s, t):
        if s & t:
            return 0
        inv = 0
        for i in range(n):
            if s >> i & 1:
                inv += (t & ((1 << i) - 1)).bit_count()
        return -1 if inv & 1 else 1

    return sign


def wedge_zero_count(d, m, n, p, budget):
    """Count omega in Lambda^d(F_p^n) with omega^m = 0 by direct wedge powers."""
    basis = [sum(1 << i for i in c) for c in combinations(range(n), d)]
    total = p ** len(basis)
    if total > budget:
        raise BudgetExceeded(f"{total} forms exceeds budget {budget}")
    if m == 0:
        return 0
    sign = _wedge_tables(n)
    # precompute products e_S ^ e_T for S in Lambda^d and T in Lambda^{kd}
    cache = {}

    def mult(s, t):
        key = (s, t)
        if key not in cache:
            cache[key] = sign(s, t)
        return cache[key]

    count = 0
    digits = [0] * len(basis)
    for _ in range(total):
        omega = {b: v for b, v in zip(basis, digits) if v}
        power = omega
        for _k in range(m - 1):
            if not power:
                break
            nxt = {}
            for s, a in omega.items():
                for t, b in power.items():
                    sg = mult(s, t)
                    if sg:
                        u = s | t
                        nxt[u] = (nxt.get(u, 0) + sg * a * b) % p
            power = {u: v for u, v in nxt.items() if v}
        if not power:
            count += 1
        for t in range(len(digits)):
            digits[t] += 1
            if digits[t] < p:
                break
            digits[t] = 0
    return count
