"""Hot numeric kernels: edge-colouring search and oddness branch-and-bound.

Both kernels are written as iterative array code so that numba can compile
them.  Set SNARKLAB_NUMBA=0 to run the identical code paths uncompiled
(pure numpy/Python); benchmarks/bench_kernels.py compares the two.

Colours are the three nonzero elements of the Klein four-group encoded as
1, 2, 3 with xor as the group operation (1^2=3 etc.), so "proper at a
degree-3 vertex" is exactly "the three incident colours xor to zero".
"""

from __future__ import annotations

import os

import numpy as np

USE_NUMBA = os.environ.get("SNARKLAB_NUMBA", "1") != "0"

if USE_NUMBA:
    try:
        from numba import njit
    except ImportError:  # pragma: no cover
        USE_NUMBA = False

if not USE_NUMBA:

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]

        def deco(f):
            return f

        return deco


_POP3 = np.array([0, 1, 1, 2, 1, 2, 2, 3], dtype=np.int8)


@njit(cache=True)
def colour_search(n, m, eu, ev, inc, deg, fixed):
    """Proper 3-edge-colouring search with unit propagation.

    eu/ev: edge endpoints; inc: (n,3) incident edge ids padded with -1;
    deg: vertex degrees; fixed: per-edge preset colour (0 = free).

    Propagation is the Parity Lemma applied to the 3-cut around each
    degree-3 vertex: two coloured edges force the third to their xor.
    Returns an int8 array out[0..m]: out[0] is 1 if colourable (out[1:]
    then holds the colours) and 0 otherwise.
    """
    out = np.zeros(m + 1, dtype=np.int8)
    col = np.zeros(m, dtype=np.int8)
    used = np.zeros(n, dtype=np.int8)  # bitmask of colours present at v
    ncol = np.zeros(n, dtype=np.int16)
    trail = np.empty(m, dtype=np.int32)
    tlen = 0
    pop3 = np.array([0, 1, 1, 2, 1, 2, 2, 3], dtype=np.int8)
    bit_to_col = np.array([0, 1, 2, 0, 3, 0, 0, 0], dtype=np.int8)

    # propagation queue
    qe = np.empty(4 * m + 4, dtype=np.int32)
    qc = np.empty(4 * m + 4, dtype=np.int8)

    # decision stack
    dedge = np.empty(m + 1, dtype=np.int32)
    dmask = np.empty(m + 1, dtype=np.int8)  # colours not yet tried
    dtrail = np.empty(m + 1, dtype=np.int32)
    dtop = 0

    # seed queue with fixed colours
    qhead = 0
    qtail = 0
    for e in range(m):
        if fixed[e] != 0:
            qe[qtail] = e
            qc[qtail] = fixed[e]
            qtail += 1

    while True:
        # ---- propagate ----
        conflict = False
        while qhead < qtail:
            e = qe[qhead]
            c = qc[qhead]
            qhead += 1
            if col[e] != 0:
                if col[e] != c:
                    conflict = True
                    break
                continue
            b = 1 << (c - 1)
            if (used[eu[e]] | used[ev[e]]) & b:
                conflict = True
                break
            col[e] = c
            trail[tlen] = e
            tlen += 1
            for side in range(2):
                v = eu[e] if side == 0 else ev[e]
                used[v] |= b
                ncol[v] += 1
                if deg[v] == 3 and ncol[v] == 2:
                    fc = bit_to_col[7 & ~used[v]]
                    for k in range(3):
                        f = inc[v, k]
                        if f >= 0 and col[f] == 0:
                            qe[qtail] = f
                            qc[qtail] = fc
                            qtail += 1
            if conflict:
                break

        if not conflict:
            # ---- choose branching edge (fewest available colours) ----
            beste = -1
            bestc = 4
            for e in range(m):
                if col[e] == 0:
                    av = 7 & ~(used[eu[e]] | used[ev[e]])
                    p = pop3[av]
                    if p < bestc:
                        bestc = p
                        beste = e
                        if p == 0:
                            break
            if beste == -1:
                out[0] = 1
                for e in range(m):
                    out[1 + e] = col[e]
                return out
            if bestc > 0:
                av = 7 & ~(used[eu[beste]] | used[ev[beste]])
                b = av & (-av)  # lowest available colour bit
                dedge[dtop] = beste
                dmask[dtop] = av & ~b
                dtrail[dtop] = tlen
                dtop += 1
                qhead = 0
                qtail = 1
                qe[0] = beste
                qc[0] = bit_to_col[b]
                continue
            conflict = True

        # ---- backtrack ----
        while True:
            if dtop == 0:
                out[0] = 0
                return out
            dtop -= 1
            # undo trail
            back = dtrail[dtop]
            while tlen > back:
                tlen -= 1
                e = trail[tlen]
                b = 1 << (col[e] - 1)
                col[e] = 0
                used[eu[e]] &= ~b
                used[ev[e]] &= ~b
                ncol[eu[e]] -= 1
                ncol[ev[e]] -= 1
            av = dmask[dtop]
            if av != 0:
                b = av & (-av)
                e = dedge[dtop]
                dmask[dtop] = av & ~b
                dtrail[dtop] = tlen
                dtop += 1
                qhead = 0
                qtail = 1
                qe[0] = e
                qc[0] = bit_to_col[b]
                break


@njit(cache=True)
def min_odd_circuits(n, m, eu, ev, inc, best_init, stop_at):
    """Minimum number of odd circuits over all 2-factors, by branch-and-bound
    over perfect matchings.

    Branches on the lowest-id unmatched vertex; forced moves (a vertex with
    two decided 2-factor edges must be matched by its third edge) are
    propagated.  A branch is pruned as soon as the circuits already sealed
    contain best-so-far many odd ones.  Returns int32 array out[0..m]:
    out[0] = minimum odd count (or best_init if no perfect matching exists),
    out[1:] = edge states of a witness matching (1 = matching, 2 = factor).

    stop_at >= 0 makes the search return as soon as a 2-factor with at most
    stop_at odd circuits is found (used for oddness bracketing).
    """
    out = np.zeros(m + 1, dtype=np.int32)
    estate = np.zeros(m, dtype=np.int8)
    matched = np.zeros(n, dtype=np.int8)
    nfac = np.zeros(n, dtype=np.int8)
    par = np.empty(n, dtype=np.int32)
    comp_edges = np.zeros(n, dtype=np.int32)
    for v in range(n):
        par[v] = v
    best = best_init
    closed_odd = 0

    # trail: type 0 match-edge, 1 matched-vertex, 2 union(child,parent),
    #        3 closed-circuit(root, odd), 4 factor-edge
    ttype = np.empty(6 * m + 16, dtype=np.int8)
    ta = np.empty(6 * m + 16, dtype=np.int32)
    tb = np.empty(6 * m + 16, dtype=np.int32)
    tlen = 0

    # forced-match queue
    # forced matches may enqueue duplicates before they are filtered at pop,
    # so size by edges, not vertices
    qm = np.empty(2 * m + 8, dtype=np.int32)

    # decision stack
    dedges = np.empty((n + 1, 3), dtype=np.int32)
    dcount = np.empty(n + 1, dtype=np.int32)
    dpos = np.empty(n + 1, dtype=np.int32)
    dtrail = np.empty(n + 1, dtype=np.int32)
    dtop = 0

    have_witness = False
    descend = True

    while True:
        if descend:
            # find lowest unmatched vertex
            u = -1
            for v in range(n):
                if matched[v] == 0:
                    u = v
                    break
            if u == -1:
                # complete perfect matching
                if closed_odd < best or not have_witness:
                    best = closed_odd
                    have_witness = True
                    for e in range(m):
                        out[1 + e] = estate[e]
                if stop_at >= 0 and best <= stop_at:
                    out[0] = best
                    return out
                descend = False
                continue
            cnt = 0
            for k in range(3):
                e = inc[u, k]
                if e >= 0 and estate[e] == 0:
                    w = ev[e] if eu[e] == u else eu[e]
                    if matched[w] == 0:
                        dedges[dtop, cnt] = e
                        cnt += 1
            dcount[dtop] = cnt
            dpos[dtop] = 0
            dtrail[dtop] = tlen
            dtop += 1

        # try next candidate at the top decision
        if dtop == 0:
            out[0] = best
            return out
        lvl = dtop - 1
        # undo to this level's checkpoint
        back = dtrail[lvl]
        while tlen > back:
            tlen -= 1
            t = ttype[tlen]
            if t == 0:
                estate[ta[tlen]] = 0
            elif t == 1:
                matched[ta[tlen]] = 0
            elif t == 2:
                c = ta[tlen]
                p = tb[tlen]
                par[c] = c
                comp_edges[p] -= comp_edges[c] + 1
            elif t == 3:
                comp_edges[ta[tlen]] -= 1
                closed_odd -= tb[tlen]
            else:
                e = ta[tlen]
                estate[e] = 0
                nfac[eu[e]] -= 1
                nfac[ev[e]] -= 1

        if dpos[lvl] >= dcount[lvl]:
            dtop -= 1
            descend = False
            continue
        e0 = dedges[lvl, dpos[lvl]]
        dpos[lvl] += 1

        # apply matching edge e0 plus all forced consequences
        ok = True
        qh = 0
        qt = 0
        qm[qt] = e0
        qt += 1
        while qh < qt and ok:
            e = qm[qh]
            qh += 1
            if estate[e] == 1:
                continue
            if estate[e] == 2:
                ok = False
                break
            u1 = eu[e]
            v1 = ev[e]
            if matched[u1] or matched[v1]:
                ok = False
                break
            estate[e] = 1
            ttype[tlen] = 0
            ta[tlen] = e
            tlen += 1
            for side in range(2):
                x = u1 if side == 0 else v1
                matched[x] = 1
                ttype[tlen] = 1
                ta[tlen] = x
                tlen += 1
            for side in range(2):
                x = u1 if side == 0 else v1
                for k in range(3):
                    f = inc[x, k]
                    if f < 0 or f == e or estate[f] != 0:
                        continue
                    # f becomes a 2-factor edge
                    estate[f] = 2
                    a = eu[f]
                    b = ev[f]
                    nfac[a] += 1
                    nfac[b] += 1
                    ttype[tlen] = 4
                    ta[tlen] = f
                    tlen += 1
                    ra = a
                    while par[ra] != ra:
                        ra = par[ra]
                    rb = b
                    while par[rb] != rb:
                        rb = par[rb]
                    if ra == rb:
                        odd = (comp_edges[ra] + 1) & 1
                        comp_edges[ra] += 1
                        closed_odd += odd
                        ttype[tlen] = 3
                        ta[tlen] = ra
                        tb[tlen] = odd
                        tlen += 1
                        if closed_odd >= best and have_witness:
                            ok = False
                            break
                    else:
                        par[rb] = ra
                        comp_edges[ra] += comp_edges[rb] + 1
                        ttype[tlen] = 2
                        ta[tlen] = rb
                        tb[tlen] = ra
                        tlen += 1
                    # forced matchings at the endpoints of f
                    for side2 in range(2):
                        y = a if side2 == 0 else b
                        if matched[y] == 0:
                            if nfac[y] == 3:
                                ok = False
                                break
                            if nfac[y] == 2:
                                rem = -1
                                for k2 in range(3):
                                    h = inc[y, k2]
                                    if h >= 0 and estate[h] == 0:
                                        rem = h
                                if rem == -1:
                                    ok = False
                                    break
                                qm[qt] = rem
                                qt += 1
                    if not ok:
                        break
                if not ok:
                    break

        if ok:
            descend = True
        # on failure, loop back: trail is rewound at the top of the loop

    # unreachable
    return out
