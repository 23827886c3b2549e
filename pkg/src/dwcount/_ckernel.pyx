# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled accumulation kernel; see ``_kernel_py`` for the contract.

Coefficients are int64.  Callers must check the coefficient bound first
(``kernel.coefficient_bound``) and fall back to the Python kernel when it
does not fit.
"""
from libc.stdlib cimport malloc, calloc, free
from libc.string cimport memset


ctypedef long long i64


def accumulate_dw(i64 m, i64 l, pairs):
    cdef i64 N = m * m
    cdef Py_ssize_t r = len(pairs)
    cdef Py_ssize_t j, t, u, nz, ncur, nnxt
    cdef i64 h, s, z, e, c, k, lin, t1, t2
    cdef bint ok
    cdef i64 *aN = <i64 *> malloc((r + 1) * sizeof(i64))
    cdef i64 *bN = <i64 *> malloc((r + 1) * sizeof(i64))
    cdef i64 *am = <i64 *> malloc((r + 1) * sizeof(i64))
    cdef i64 *nsol = <i64 *> malloc((r + 1) * sizeof(i64))
    cdef i64 *sol = <i64 *> malloc((r * m + 1) * sizeof(i64))
    cdef i64 *quad = <i64 *> malloc((r * m + 1) * sizeof(i64))
    cdef i64 *exps = <i64 *> malloc((m + 1) * sizeof(i64))
    cdef i64 *total = <i64 *> calloc(N, sizeof(i64))
    cdef i64 *cur = <i64 *> calloc(N, sizeof(i64))
    cdef i64 *nxt = <i64 *> calloc(N, sizeof(i64))
    cdef i64 *cidx = <i64 *> malloc(N * sizeof(i64))
    cdef i64 *nidx = <i64 *> malloc(N * sizeof(i64))
    cdef i64 *tmp
    if not (aN and bN and am and nsol and sol and quad and exps and total
            and cur and nxt and cidx and nidx):
        free(aN); free(bN); free(am); free(nsol); free(sol); free(quad)
        free(exps); free(total); free(cur); free(nxt); free(cidx); free(nidx)
        raise MemoryError()
    try:
        l = l % m
        if l < 0:
            l += m
        for j in range(r):
            a, b = pairs[j]
            aN[j] = a % N
            bN[j] = b % N
            am[j] = a % m
        for h in range(m):
            ok = True
            for j in range(r):
                nz = 0
                for z in range(m):
                    if (am[j] * z) % m == h:
                        sol[j * m + nz] = z
                        t1 = (l * aN[j]) % N
                        t1 = (t1 * bN[j]) % N
                        t1 = (t1 * z) % N
                        quad[j * m + nz] = (t1 * z) % N
                        nz += 1
                nsol[j] = nz
                if nz == 0:
                    ok = False
                    break
            if not ok:
                continue
            for s in range(m):
                lin = (2 * l * h + m * s) % N
                # cur and nxt are all-zero here; only supports are touched
                cur[0] = 1
                cidx[0] = 0
                ncur = 1
                for j in range(r):
                    for t in range(nsol[j]):
                        z = sol[j * m + t]
                        t2 = (((lin * bN[j]) % N) * z) % N
                        exps[t] = (quad[j * m + t] - t2 + N) % N
                    nnxt = 0
                    for u in range(ncur):
                        e = cidx[u]
                        c = cur[e]
                        cur[e] = 0
                        for t in range(nsol[j]):
                            k = e + exps[t]
                            if k >= N:
                                k -= N
                            if nxt[k] == 0:
                                nidx[nnxt] = k
                                nnxt += 1
                            nxt[k] += c
                    tmp = cur; cur = nxt; nxt = tmp
                    tmp = cidx; cidx = nidx; nidx = tmp
                    ncur = nnxt
                for u in range(ncur):
                    e = cidx[u]
                    total[e] += cur[e]
                    cur[e] = 0
        return [total[e] for e in range(N)]
    finally:
        free(aN); free(bN); free(am); free(nsol); free(sol); free(quad)
        free(exps); free(total); free(cur); free(nxt); free(cidx); free(nidx)


def twist_sums(vectors, i64 m, ks, i64 sign):
    cdef i64 N = m * m
    cdef Py_ssize_t L = len(vectors)
    cdef Py_ssize_t nk = len(ks)
    cdef Py_ssize_t l, e, ki
    cdef i64 k, shift, idx
    cdef i64 *vec = <i64 *> malloc((L * N + 1) * sizeof(i64))
    cdef i64 *acc = <i64 *> malloc((N + 1) * sizeof(i64))
    if not (vec and acc):
        free(vec); free(acc)
        raise MemoryError()
    try:
        for l in range(L):
            v = vectors[l]
            for e in range(N):
                vec[l * N + e] = v[e]
        out = []
        for ki in range(nk):
            k = ks[ki]
            memset(acc, 0, N * sizeof(i64))
            for l in range(L):
                shift = (((sign * m) % N) * (k % N) % N) * (l % N) % N
                if shift < 0:
                    shift += N
                for e in range(N):
                    idx = e + shift
                    if idx >= N:
                        idx -= N
                    acc[idx] += vec[l * N + e]
            out.append([acc[e] for e in range(N)])
        return out
    finally:
        free(vec); free(acc)
