"""Pure-Python reference kernels.

The compiled module ``_kernels`` implements the same three functions with the
same signatures and results; :mod:`boxclique.kernels` picks one at import.
All inputs are plain integer lists indexing a fixed vertex list.
"""
from __future__ import annotations


def enumerate_profiles(fam_of_var, lower, nfam, cap, total):
    """All integer vectors k >= lower with sum k = total and every family mass <= cap.

    ``fam_of_var[i]`` lists the families containing variable i.  Vectors are
    produced in a deterministic depth-first order.
    """
    n = len(lower)
    load = [0] * nfam
    for i in range(n):
        for f in fam_of_var[i]:
            load[f] += lower[i]
    if any(x > cap for x in load):
        return []
    base = sum(lower)
    if base > total:
        return []
    k = list(lower)
    out = []

    def rec(i, rem):
        if rem == 0:
            out.append(tuple(k))
            return
        if i == n:
            return
        rec(i + 1, rem)
        fams = fam_of_var[i]
        c = 0
        while c < rem:
            if any(load[f] >= cap for f in fams):
                break
            for f in fams:
                load[f] += 1
            k[i] += 1
            c += 1
            rec(i + 1, rem - c)
        for f in fams:
            load[f] -= c
        k[i] -= c

    rec(0, total - base)
    return out


def solve_triple(xadj, pair_adj, pair_y, pair_z, ycount, zcount, prev_same, limit):
    """Assign a (y, z) pair to every position of the first profile.

    ``xadj[i][j]`` tells whether the first coordinates of positions i, j touch;
    ``pair_adj[a][b]`` whether pairs a, b touch on the second or third axis.
    Pair a uses value ``pair_y[a]`` (``pair_z[a]``) whose multiplicity budget is
    ``ycount`` (``zcount``).  Positions with ``prev_same[i] >= 0`` repeat the first
    coordinate of that earlier position and must receive a larger pair index.
    Returns up to ``limit`` solutions (all when ``limit <= 0``) as tuples of
    pair indices per position.
    """
    n = len(xadj)
    npairs = len(pair_y)
    full = (1 << npairs) - 1
    amask = [0] * npairs
    for a in range(npairs):
        m = 0
        row = pair_adj[a]
        for b in range(npairs):
            if row[b]:
                m |= 1 << b
        amask[a] = m
    ymask = [0] * len(ycount)
    zmask = [0] * len(zcount)
    for a in range(npairs):
        ymask[pair_y[a]] |= 1 << a
        zmask[pair_z[a]] |= 1 << a
    cy = list(ycount)
    cz = list(zcount)
    val = [-1] * n
    out = []

    def rec(dom, assigned):
        if assigned == n:
            out.append(tuple(val))
            return 0 < limit <= len(out)
        best, bc = -1, npairs + 1
        for i in range(n):
            if val[i] < 0:
                c = bin(dom[i]).count("1")
                if c < bc:
                    best, bc = i, c
        if bc == 0:
            return False
        i = best
        d = dom[i]
        while d:
            low = d & -d
            a = low.bit_length() - 1
            d ^= low
            yi, zi = pair_y[a], pair_z[a]
            cy[yi] -= 1
            cz[zi] -= 1
            kill = 0
            if cy[yi] == 0:
                kill |= ymask[yi]
            if cz[zi] == 0:
                kill |= zmask[zi]
            nd = list(dom)
            ok = True
            row = xadj[i]
            for j in range(n):
                if val[j] >= 0 or j == i:
                    continue
                m = nd[j] & ~kill
                if not row[j]:
                    m &= amask[a]
                if prev_same[j] == i:
                    m &= ~((1 << (a + 1)) - 1)
                elif prev_same[i] == j:
                    m &= (1 << a) - 1
                if not m:
                    ok = False
                    break
                nd[j] = m
            if ok:
                val[i] = a
                if rec(nd, assigned + 1):
                    return True
                val[i] = -1
            cy[yi] += 1
            cz[zi] += 1
        return False

    rec([full] * n, 0)
    return out


def flat_search(adj, cyc1, cyc2, rest, labelings, perms, q_lo=0, q_hi=-1):
    """Candidates for the flat quadruples built from pairs of decompositions.

    For decompositions q (axis one) and qb (axis two), a labeling l pairs
    position p of the cycle of qb with position l[p] of the cycle of q; a
    permutation pi pairs rest[q][k] with rest[qb][pi[k]].  A candidate
    (q, qb, pi, l1, l2) is kept when the resulting 2-D combination has no
    three pairwise non-adjacent members (copies count as non-adjacent).
    Only first indices q in ``[q_lo, q_hi)`` are scanned (``q_hi < 0``: all).
    """
    nq = len(cyc1)
    r = len(rest[0]) if nq else 0
    out = []

    def na(b, c):
        return not adj[b[0]][c[0]] and not adj[b[1]][c[1]]

    if q_hi < 0 or q_hi > nq:
        q_hi = nq
    for q in range(q_lo, q_hi):
        for qb in range(nq):
            for pi_idx, pi in enumerate(perms):
                m = [(rest[q][k], rest[qb][pi[k]]) for k in range(r)]
                mna = [[na(m[a], m[b]) for b in range(r)] for a in range(r)]
                if r >= 3 and any(mna[a][b] and mna[a][c] and mna[b][c]
                                  for a in range(r) for b in range(a + 1, r) for c in range(b + 1, r)):
                    continue
                side = []
                for cyc in (cyc1, cyc2):
                    opts = []
                    for li, lab in enumerate(labelings):
                        boxes = [(cyc[q][lab[p]], cyc[qb][p]) for p in range(5)]
                        masks = []
                        good = True
                        for b in boxes:
                            mk = 0
                            for k in range(r):
                                if na(b, m[k]):
                                    mk |= 1 << k
                            for a in range(r):
                                if mk >> a & 1:
                                    for c in range(a + 1, r):
                                        if mk >> c & 1 and mna[a][c]:
                                            good = False
                            masks.append(mk)
                        if good:
                            opts.append((li, boxes, masks))
                    side.append(opts)
                for l1, b1, m1 in side[0]:
                    for l2, b2, m2 in side[1]:
                        ok = True
                        for x in range(5):
                            for y in range(5):
                                if m1[x] & m2[y] and na(b1[x], b2[y]):
                                    ok = False
                                    break
                            if not ok:
                                break
                        if ok:
                            out.append((q, qb, pi_idx, l1, l2))
    return out
