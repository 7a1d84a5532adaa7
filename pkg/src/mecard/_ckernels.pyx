# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels; see ``_pykernels`` for the reference versions."""

import numpy as np
cimport numpy as cnp
from libc.stdlib cimport malloc, calloc, free
from libc.string cimport memset

from .errors import BudgetExceeded

cnp.import_array()


def commuting_orbits(conj, commute, elems, int n, long long budget):
    cdef Py_ssize_t base = len(elems)
    cdef long long total = 1
    cdef int i
    for i in range(n):
        total *= base
        if total > budget:
            raise BudgetExceeded(f"{base}^{n} tuples exceeds budget {budget}")
    if total > budget:
        raise BudgetExceeded(f"{base}^{n} tuples exceeds budget {budget}")

    cdef int[:, ::1] cj = np.ascontiguousarray(conj, dtype=np.int32)
    cdef unsigned char[:, ::1] cm = np.ascontiguousarray(commute, dtype=np.uint8)
    cdef int[::1] el = np.ascontiguousarray(elems, dtype=np.int32)
    cdef int order = cj.shape[0]
    cdef int[::1] pos = np.full(order, -1, dtype=np.int32)
    for i in range(base):
        pos[el[i]] = i

    cdef unsigned char *visited = <unsigned char *>calloc(total, 1)
    cdef int *idx = <int *>malloc((n + 1) * sizeof(int))
    cdef int *tup = <int *>malloc((n + 1) * sizeof(int))
    if visited == NULL or idx == NULL or tup == NULL:
        free(visited); free(idx); free(tup)
        raise MemoryError()

    cdef long long orbits = 0
    cdef long long code, c
    cdef int depth, j, g, x, ok
    try:
        if n == 0:
            return 1
        depth = 0
        idx[0] = -1
        while depth >= 0:
            idx[depth] += 1
            if idx[depth] >= base:
                depth -= 1
                continue
            x = el[idx[depth]]
            ok = 1
            for j in range(depth):
                if not cm[x, tup[j]]:
                    ok = 0
                    break
            if not ok:
                continue
            tup[depth] = x
            if depth + 1 < n:
                depth += 1
                idx[depth] = -1
                continue
            code = 0
            for j in range(n):
                code = code * base + pos[tup[j]]
            if visited[code]:
                continue
            orbits += 1
            for g in range(order):
                c = 0
                for j in range(n):
                    c = c * base + pos[cj[g, tup[j]]]
                visited[c] = 1
        return orbits
    finally:
        free(visited); free(idx); free(tup)


cdef int _rank_mod_p(int *mat, int n, int p):
    cdef int rank = 0, col, i, piv, k, inv, f, t
    for col in range(n):
        piv = -1
        for i in range(rank, n):
            if mat[i * n + col] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != rank:
            for k in range(n):
                t = mat[rank * n + k]
                mat[rank * n + k] = mat[piv * n + k]
                mat[piv * n + k] = t
        # inverse by Fermat; p is small
        inv = 1
        f = mat[rank * n + col]
        t = p - 2
        while t > 0:
            if t & 1:
                inv = (inv * f) % p
            f = (f * f) % p
            t >>= 1
        for k in range(n):
            mat[rank * n + k] = (mat[rank * n + k] * inv) % p
        for i in range(n):
            if i != rank and mat[i * n + col] != 0:
                f = mat[i * n + col]
                for k in range(n):
                    mat[i * n + k] = ((mat[i * n + k] - f * mat[rank * n + k]) % p + p) % p
        rank += 1
    return rank


def skew_rank_histogram(int n, int p, long long budget):
    cdef int npairs = n * (n - 1) // 2
    cdef long long total = 1
    cdef int i, j, t
    for i in range(npairs):
        total *= p
        if total > budget:
            raise BudgetExceeded(f"{p}^{npairs} matrices exceeds budget {budget}")
    hist = [0] * (n + 1)
    if n == 0:
        hist[0] = 1
        return hist
    cdef long long[::1] h = np.zeros(n + 1, dtype=np.int64)
    cdef int *digits = <int *>calloc(npairs + 1, sizeof(int))
    cdef int *pi = <int *>malloc((npairs + 1) * sizeof(int))
    cdef int *pj = <int *>malloc((npairs + 1) * sizeof(int))
    cdef int *mat = <int *>malloc(n * n * sizeof(int))
    cdef long long it
    t = 0
    for i in range(n):
        for j in range(i + 1, n):
            pi[t] = i
            pj[t] = j
            t += 1
    try:
        for it in range(total):
            memset(mat, 0, n * n * sizeof(int))
            for t in range(npairs):
                mat[pi[t] * n + pj[t]] = digits[t]
                mat[pj[t] * n + pi[t]] = (p - digits[t]) % p
            h[_rank_mod_p(mat, n, p)] += 1
            for t in range(npairs):
                digits[t] += 1
                if digits[t] < p:
                    break
                digits[t] = 0
    finally:
        free(digits); free(pi); free(pj); free(mat)
    return [int(v) for v in h]


cdef int _sign(unsigned int s, unsigned int t, int n):
    cdef int inv = 0, i
    cdef unsigned int below
    if s & t:
        return 0
    for i in range(n):
        if (s >> i) & 1:
            below = t & ((<unsigned int>1 << i) - 1)
            while below:
                below &= below - 1
                inv += 1
    return -1 if (inv & 1) else 1


def wedge_zero_count(int d, int m, int n, int p, long long budget):
    from itertools import combinations
    basis_list = [sum(1 << i for i in c) for c in combinations(range(n), d)]
    cdef int nb = len(basis_list)
    cdef long long total = 1
    cdef int i, j, k, t
    for i in range(nb):
        total *= p
        if total > budget:
            raise BudgetExceeded(f"{p}^{nb} forms exceeds budget {budget}")
    if m == 0:
        return 0
    if n > 30:
        raise BudgetExceeded("n too large for bitmask kernel")
    cdef int full = 1 << n
    cdef unsigned int[::1] basis = np.asarray(basis_list, dtype=np.uint32)
    # dense coefficient vectors indexed by subset bitmask
    cdef long long[::1] power = np.zeros(full, dtype=np.int64)
    cdef long long[::1] nxt = np.zeros(full, dtype=np.int64)
    cdef int[::1] digits = np.zeros(max(nb, 1), dtype=np.int32)
    # support list of the current power, to keep the inner loop sparse
    cdef int[::1] supp = np.zeros(full, dtype=np.int32)
    cdef int[::1] supp2 = np.zeros(full, dtype=np.int32)
    cdef unsigned char[::1] inlist = np.zeros(full, dtype=np.uint8)
    cdef int nsupp, nsupp2, a, sg
    cdef unsigned int s, u, tt
    cdef long long count = 0, it, coef
    for it in range(total):
        nsupp = 0
        for i in range(nb):
            if digits[i]:
                power[basis[i]] = digits[i]
                supp[nsupp] = basis[i]
                nsupp += 1
        for k in range(m - 1):
            if nsupp == 0:
                break
            nsupp2 = 0
            for i in range(nb):
                a = digits[i]
                if not a:
                    continue
                s = basis[i]
                for j in range(nsupp):
                    tt = supp[j]
                    sg = _sign(s, tt, n)
                    if sg == 0:
                        continue
                    u = s | tt
                    if not inlist[u]:
                        inlist[u] = 1
                        supp2[nsupp2] = u
                        nsupp2 += 1
                    nxt[u] = (nxt[u] + sg * a * power[tt]) % p
            for j in range(nsupp):
                power[supp[j]] = 0
            nsupp = 0
            for j in range(nsupp2):
                u = supp2[j]
                coef = ((nxt[u] % p) + p) % p
                nxt[u] = 0
                inlist[u] = 0
                if coef:
                    power[u] = coef
                    supp[nsupp] = u
                    nsupp += 1
        if nsupp == 0:
            count += 1
        for j in range(nsupp):
            power[supp[j]] = 0
        for t in range(nb):
            digits[t] += 1
            if digits[t] < p:
                break
            digits[t] = 0
    return count
