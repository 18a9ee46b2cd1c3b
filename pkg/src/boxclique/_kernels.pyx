# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled kernels; same signatures and results as :mod:`boxclique._pure`."""
from libc.stdlib cimport malloc, calloc, free
from libc.string cimport memcpy, memset
from libc.stdint cimport uint64_t

cdef extern from *:
    int popcount64 "__builtin_popcountll"(unsigned long long) nogil
    int ctz64 "__builtin_ctzll"(unsigned long long) nogil


# ---------------------------------------------------------------------------
# profile enumeration

cdef struct ProfState:
    int n
    int nfam
    int cap
    int* fam_start
    int* fam_list
    int* load
    int* k


cdef int _prof_rec(ProfState* S, int i, int rem, list out) except -1:
    cdef int c, f, t, full
    if rem == 0:
        out.append(tuple([S.k[t] for t in range(S.n)]))
        return 0
    if i == S.n:
        return 0
    _prof_rec(S, i + 1, rem, out)
    c = 0
    while c < rem:
        full = 0
        for t in range(S.fam_start[i], S.fam_start[i + 1]):
            if S.load[S.fam_list[t]] >= S.cap:
                full = 1
                break
        if full:
            break
        for t in range(S.fam_start[i], S.fam_start[i + 1]):
            S.load[S.fam_list[t]] += 1
        S.k[i] += 1
        c += 1
        _prof_rec(S, i + 1, rem - c, out)
    for t in range(S.fam_start[i], S.fam_start[i + 1]):
        S.load[S.fam_list[t]] -= c
    S.k[i] -= c
    return 0


def enumerate_profiles(fam_of_var, lower, int nfam, int cap, int total):
    cdef ProfState S
    cdef int n = len(lower)
    cdef int i, t, f, base = 0, m = 0
    for fams in fam_of_var:
        m += len(fams)
    S.n = n
    S.nfam = nfam
    S.cap = cap
    S.fam_start = <int*>malloc((n + 1) * sizeof(int))
    S.fam_list = <int*>malloc((m + 1) * sizeof(int))
    S.load = <int*>calloc(nfam + 1, sizeof(int))
    S.k = <int*>malloc((n + 1) * sizeof(int))
    out = []
    try:
        t = 0
        for i in range(n):
            S.fam_start[i] = t
            for f in fam_of_var[i]:
                S.fam_list[t] = f
                S.load[f] += lower[i]
                t += 1
            S.k[i] = lower[i]
            base += lower[i]
        S.fam_start[n] = t
        for f in range(nfam):
            if S.load[f] > cap:
                return []
        if base > total:
            return []
        _prof_rec(&S, 0, total - base, out)
    finally:
        free(S.fam_start)
        free(S.fam_list)
        free(S.load)
        free(S.k)
    return out


# ---------------------------------------------------------------------------
# three-axis assignment

cdef struct Solver:
    int n
    int npairs
    int W
    int limit
    int nsol
    unsigned char* xadj
    uint64_t* amask
    uint64_t* ymask
    uint64_t* zmask
    uint64_t* kill
    int* pair_y
    int* pair_z
    int* cy
    int* cz
    int* prev_same
    int* val
    uint64_t* dom


cdef int _solve_rec(Solver* S, int depth, list out) except -1:
    cdef int n = S.n, W = S.W
    cdef uint64_t* cur = S.dom + depth * n * W
    cdef uint64_t* nxt = cur + n * W
    cdef int i, j, w, c, best = -1, bc = 1 << 30, a, yi, zi, ok, t, aw
    cdef uint64_t word, m, nz
    if depth == n:
        out.append(tuple([S.val[t] for t in range(n)]))
        S.nsol += 1
        return 1 if (S.limit > 0 and S.nsol >= S.limit) else 0
    for i in range(n):
        if S.val[i] < 0:
            c = 0
            for w in range(W):
                c += popcount64(cur[i * W + w])
            if c < bc:
                bc = c
                best = i
    if bc == 0:
        return 0
    i = best
    for w in range(W):
        word = cur[i * W + w]
        while word:
            a = w * 64 + ctz64(word)
            word &= word - 1
            yi = S.pair_y[a]
            zi = S.pair_z[a]
            S.cy[yi] -= 1
            S.cz[zi] -= 1
            for t in range(W):
                S.kill[t] = 0
            if S.cy[yi] == 0:
                for t in range(W):
                    S.kill[t] |= S.ymask[yi * W + t]
            if S.cz[zi] == 0:
                for t in range(W):
                    S.kill[t] |= S.zmask[zi * W + t]
            memcpy(nxt, cur, n * W * sizeof(uint64_t))
            ok = 1
            aw = a >> 6
            for j in range(n):
                if S.val[j] >= 0 or j == i:
                    continue
                nz = 0
                for t in range(W):
                    m = nxt[j * W + t] & ~S.kill[t]
                    if not S.xadj[i * n + j]:
                        m &= S.amask[a * W + t]
                    if S.prev_same[j] == i:
                        if t < aw:
                            m = 0
                        elif t == aw:
                            m &= (<uint64_t>0xFFFFFFFFFFFFFFFF << (a & 63)) << 1
                    elif S.prev_same[i] == j:
                        if t > aw:
                            m = 0
                        elif t == aw:
                            m &= (<uint64_t>1 << (a & 63)) - 1
                    nxt[j * W + t] = m
                    nz |= m
                if not nz:
                    ok = 0
                    break
            if ok:
                S.val[i] = a
                if _solve_rec(S, depth + 1, out):
                    return 1
                S.val[i] = -1
            S.cy[yi] += 1
            S.cz[zi] += 1
    return 0


def solve_triple(xadj, pair_adj, pair_y, pair_z, ycount, zcount, prev_same, int limit):
    cdef Solver S
    cdef int n = len(xadj), npairs = len(pair_y)
    cdef int W = (npairs + 63) // 64
    cdef int ny = len(ycount), nz = len(zcount)
    cdef int i, j, a, b, w
    if W == 0:
        W = 1
    S.n = n
    S.npairs = npairs
    S.W = W
    S.limit = limit
    S.nsol = 0
    S.xadj = <unsigned char*>calloc(n * n + 1, 1)
    S.amask = <uint64_t*>calloc(npairs * W + 1, sizeof(uint64_t))
    S.ymask = <uint64_t*>calloc(ny * W + 1, sizeof(uint64_t))
    S.zmask = <uint64_t*>calloc(nz * W + 1, sizeof(uint64_t))
    S.kill = <uint64_t*>calloc(W, sizeof(uint64_t))
    S.pair_y = <int*>malloc((npairs + 1) * sizeof(int))
    S.pair_z = <int*>malloc((npairs + 1) * sizeof(int))
    S.cy = <int*>malloc((ny + 1) * sizeof(int))
    S.cz = <int*>malloc((nz + 1) * sizeof(int))
    S.prev_same = <int*>malloc((n + 1) * sizeof(int))
    S.val = <int*>malloc((n + 1) * sizeof(int))
    S.dom = <uint64_t*>calloc((n + 1) * n * W + 1, sizeof(uint64_t))
    out = []
    try:
        for i in range(n):
            row = xadj[i]
            for j in range(n):
                S.xadj[i * n + j] = 1 if row[j] else 0
            S.prev_same[i] = prev_same[i]
            S.val[i] = -1
        for a in range(npairs):
            row = pair_adj[a]
            for b in range(npairs):
                if row[b]:
                    S.amask[a * W + (b >> 6)] |= (<uint64_t>1) << (b & 63)
            S.pair_y[a] = pair_y[a]
            S.pair_z[a] = pair_z[a]
            S.ymask[S.pair_y[a] * W + (a >> 6)] |= (<uint64_t>1) << (a & 63)
            S.zmask[S.pair_z[a] * W + (a >> 6)] |= (<uint64_t>1) << (a & 63)
            for i in range(n):
                S.dom[i * W + (a >> 6)] |= (<uint64_t>1) << (a & 63)
        for i in range(ny):
            S.cy[i] = ycount[i]
        for i in range(nz):
            S.cz[i] = zcount[i]
        if n:
            _solve_rec(&S, 0, out)
        else:
            out.append(())
    finally:
        free(S.xadj)
        free(S.amask)
        free(S.ymask)
        free(S.zmask)
        free(S.kill)
        free(S.pair_y)
        free(S.pair_z)
        free(S.cy)
        free(S.cz)
        free(S.prev_same)
        free(S.val)
        free(S.dom)
    return out


# ---------------------------------------------------------------------------
# flat quadruple candidates

def flat_search(adj, cyc1, cyc2, rest, labelings, perms, int q_lo=0, int q_hi=-1):
    cdef int N = len(adj)
    cdef int nq = len(cyc1)
    cdef int r = len(rest[0]) if nq else 0
    cdef int nl = len(labelings), npm = len(perms)
    cdef unsigned char* A = <unsigned char*>calloc(N * N + 1, 1)
    cdef int* C1 = <int*>malloc((nq * 5 + 1) * sizeof(int))
    cdef int* C2 = <int*>malloc((nq * 5 + 1) * sizeof(int))
    cdef int* R = <int*>malloc((nq * r + 1) * sizeof(int))
    cdef int* L = <int*>malloc((nl * 5 + 1) * sizeof(int))
    cdef int* P = <int*>malloc((npm * r + 1) * sizeof(int))
    cdef int mx[8]
    cdef int my[8]
    cdef int mna[8][8]
    cdef int bx[2][16][5]
    cdef int by[2][16][5]
    cdef int bm[2][16][5]
    cdef int lid[2][16]
    cdef int nopt[2]
    cdef int q, qb, pi, k, a, b, c, side, li, p, x, y, good, mk, i, j, o1, o2, ok
    cdef int* cyc
    if nl > 16 or r > 8:
        raise ValueError("flat_search supports at most 16 labelings and 8 remainder terms")
    out = []
    try:
        for i in range(N):
            row = adj[i]
            for j in range(N):
                A[i * N + j] = 1 if row[j] else 0
        for q in range(nq):
            for p in range(5):
                C1[q * 5 + p] = cyc1[q][p]
                C2[q * 5 + p] = cyc2[q][p]
            for k in range(r):
                R[q * r + k] = rest[q][k]
        for li in range(nl):
            for p in range(5):
                L[li * 5 + p] = labelings[li][p]
        for pi in range(npm):
            for k in range(r):
                P[pi * r + k] = perms[pi][k]
        if q_hi < 0 or q_hi > nq:
            q_hi = nq
        for q in range(q_lo, q_hi):
            for qb in range(nq):
                for pi in range(npm):
                    for k in range(r):
                        mx[k] = R[q * r + k]
                        my[k] = R[qb * r + P[pi * r + k]]
                    for a in range(r):
                        for b in range(r):
                            mna[a][b] = (not A[mx[a] * N + mx[b]]) and (not A[my[a] * N + my[b]])
                    good = 1
                    for a in range(r):
                        for b in range(a + 1, r):
                            for c in range(b + 1, r):
                                if mna[a][b] and mna[a][c] and mna[b][c]:
                                    good = 0
                    if not good:
                        continue
                    for side in range(2):
                        cyc = C1 if side == 0 else C2
                        nopt[side] = 0
                        for li in range(nl):
                            good = 1
                            o1 = nopt[side]
                            for p in range(5):
                                x = cyc[q * 5 + L[li * 5 + p]]
                                y = cyc[qb * 5 + p]
                                mk = 0
                                for k in range(r):
                                    if (not A[x * N + mx[k]]) and (not A[y * N + my[k]]):
                                        mk |= 1 << k
                                for a in range(r):
                                    if (mk >> a) & 1:
                                        for c in range(a + 1, r):
                                            if (mk >> c) & 1 and mna[a][c]:
                                                good = 0
                                bx[side][o1][p] = x
                                by[side][o1][p] = y
                                bm[side][o1][p] = mk
                            if good:
                                lid[side][o1] = li
                                nopt[side] += 1
                    for o1 in range(nopt[0]):
                        for o2 in range(nopt[1]):
                            ok = 1
                            for x in range(5):
                                if not bm[0][o1][x]:
                                    continue
                                for y in range(5):
                                    if (bm[0][o1][x] & bm[1][o2][y]) and \
                                            (not A[bx[0][o1][x] * N + bx[1][o2][y]]) and \
                                            (not A[by[0][o1][x] * N + by[1][o2][y]]):
                                        ok = 0
                                        break
                                if not ok:
                                    break
                            if ok:
                                out.append((q, qb, pi, lid[0][o1], lid[1][o2]))
    finally:
        free(A)
        free(C1)
        free(C2)
        free(R)
        free(L)
        free(P)
    return out
