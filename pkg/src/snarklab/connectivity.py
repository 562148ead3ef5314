"""Edge connectivity and cyclic connectivity with checkable certificates.

Cyclic connectivity is computed by minimising unit-capacity max-flow over
pairs of vertex-disjoint chordless circuits, seeded by the cut around a
shortest circuit; a brute-force cut enumerator is kept as the oracle for
agreement tests on small graphs.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass

from .multigraph import Circuit, GraphError, MultiGraph, enumerate_circuits, girth
from .multigraph import AcyclicError


@dataclass(frozen=True)
class CyclicCutCertificate:
    cut: frozenset  # edge ids
    side_a: frozenset  # vertex ids
    side_b: frozenset
    witness_a: Circuit
    witness_b: Circuit


@dataclass(frozen=True)
class ZetaResult:
    """kind is 'exact' (zeta set, certificate present), 'at_least'
    (zeta is a lower bound: no cycle-separating cut below it was found up
    to the cap), or 'no_cut' (no cycle-separating cut exists at all)."""

    kind: str
    zeta: int | None = None
    certificate: CyclicCutCertificate | None = None

    def describe(self):
        if self.kind == "exact":
            return str(self.zeta)
        if self.kind == "at_least":
            return f">={self.zeta}"
        return "no cycle-separating cut"


# -- max flow -------------------------------------------------------------------


def _maxflow(g, source_set, sink_set, limit):
    """Unit-capacity max flow between two disjoint vertex sets, stopped at
    ``limit``.  Returns (value, cut_edges, reachable) where cut_edges and
    reachable describe a minimum cut when value < limit (else None, None)."""
    flow = {}  # eid -> -1/0/1 relative to stored (u, v) orientation
    inc = {v: g.incident(v) for v in g.vertices}
    value = 0
    while value < limit:
        parent = {}
        queue = deque()
        for s in sorted(source_set):
            parent[s] = (None, None)
            queue.append(s)
        reached = None
        while queue and reached is None:
            v = queue.popleft()
            for eid, w in inc[v]:
                if w in parent:
                    continue
                u0, _ = g.endpoints(eid)
                f = flow.get(eid, 0)
                cap = 1 - f if v == u0 else 1 + f
                if cap <= 0:
                    continue
                parent[w] = (v, eid)
                if w in sink_set:
                    reached = w
                    break
                queue.append(w)
        if reached is None:
            cut = []
            for eid, (u, v) in g.edges.items():
                if (u in parent) != (v in parent):
                    cut.append(eid)
            return value, sorted(cut), frozenset(parent)
        v = reached
        while True:
            p, eid = parent[v]
            if p is None:
                break
            u0, _ = g.endpoints(eid)
            flow[eid] = flow.get(eid, 0) + (1 if p == u0 else -1)
            v = p
        value += 1
    return value, None, None


def edge_connectivity(g):
    """Standard minimum edge cut size via max-flow from a fixed source."""
    if g.n() <= 1:
        return 0
    if not g.is_connected():
        return 0
    verts = sorted(g.vertices)
    s = verts[0]
    best = min(g.degree(v) for v in verts)
    for t in verts[1:]:
        val, _, _ = _maxflow(g, {s}, {t}, best)
        if val < best:
            best = val
    return best


# -- cyclic connectivity ---------------------------------------------------------


def _has_circuit_component(g, vertices, removed_edges):
    """Components of g[vertices] minus removed_edges that contain a circuit."""
    adj = {v: [] for v in vertices}
    vset = set(vertices)
    for eid, (u, v) in g.edges.items():
        if eid in removed_edges:
            continue
        if u in vset and v in vset:
            adj[u].append(v)
            adj[v].append(u)
    seen = set()
    count = 0
    for s in vertices:
        if s in seen:
            continue
        comp = {s}
        queue = deque([s])
        deg_sum = 0
        while queue:
            v = queue.popleft()
            deg_sum += len(adj[v])
            for w in adj[v]:
                if w not in comp:
                    comp.add(w)
                    queue.append(w)
        seen |= comp
        if deg_sum // 2 >= len(comp):  # edges >= vertices => contains a circuit
            count += 1
    return count


def is_cycle_separating(g, cut_edges):
    """True iff removing cut_edges leaves >= 2 components each containing a
    circuit."""
    return _has_circuit_component(g, sorted(g.vertices), set(cut_edges)) >= 2


def cyclic_connectivity_bruteforce(g, k_cap=4):
    """Oracle: smallest c <= k_cap such that some c-edge subset is cycle
    separating; None if there is none up to the cap."""
    eids = sorted(g.edges)
    for c in range(k_cap + 1):
        for cut in itertools.combinations(eids, c):
            if is_cycle_separating(g, cut):
                return c
    return None


def _chordless_circuits(g, max_len):
    out = []
    for c in enumerate_circuits(g, max_len):
        vs = c.vertices
        if len(vs) <= 3:
            out.append(c)
            continue
        k = len(vs)
        chord = False
        on = set(vs)
        pos = {v: i for i, v in enumerate(vs)}
        for i, v in enumerate(vs):
            for w in g.neighbours(v):
                if w in on:
                    d = abs(pos[w] - i)
                    if d not in (1, k - 1) and d != 0:
                        chord = True
                        break
            if chord:
                break
        if not chord:
            out.append(c)
    return out


def _certificate(g, cut, reachable, c1, c2):
    side_a = frozenset(reachable)
    side_b = frozenset(g.vertices) - side_a
    wa, wb = (c1, c2) if c1.vertices[0] in side_a else (c2, c1)
    return CyclicCutCertificate(frozenset(cut), side_a, side_b, wa, wb)


def cyclic_connectivity(g, k_cap=7):
    """Cyclic connectivity zeta(g) with a certificate, exact when <= k_cap.

    Upper bound seeded by the cut around a shortest circuit when that cut is
    cycle separating; then minimised over max-flows between contracted pairs
    of vertex-disjoint chordless circuits of length <= bound+1.
    """
    if not g.is_connected():
        raise GraphError("cyclic connectivity needs a connected graph")
    try:
        gir = girth(g)
    except AcyclicError:
        return ZetaResult("no_cut")

    # cut around a shortest circuit as the initial upper bound
    upper = k_cap + 1
    shortest = enumerate_circuits(g, gir)[0]
    cset = shortest.vertex_set()
    gcut = [e for e, (u, v) in g.edges.items() if (u in cset) != (v in cset)]
    pairs = []
    if is_cycle_separating(g, gcut):
        upper = min(upper, len(gcut))
        pairs.append((shortest, _circuit_in(g, set(g.vertices) - cset, gcut)))

    cap = min(upper, k_cap + 1) + 1
    circuits = _chordless_circuits(g, cap)
    for i, c1 in enumerate(circuits):
        s1 = c1.vertex_set()
        for c2 in circuits[i + 1 :]:
            if not (s1 & c2.vertex_set()):
                pairs.append((c1, c2))

    best_val = None
    best = None  # (cut, reachable, c1, c2)
    for c1, c2 in pairs:
        lim = best_val if best_val is not None else k_cap + 1
        val, cut, reach = _maxflow(g, c1.vertex_set(), c2.vertex_set(), lim)
        if cut is not None and (best_val is None or val < best_val):
            best_val = val
            best = (cut, reach, c1, c2)

    if best is None:
        # no pair of disjoint short circuits found: either no cycle-separating
        # cut at all, or zeta exceeds the cap
        if g.n() <= 20 and _no_two_disjoint_circuits(g):
            return ZetaResult("no_cut")
        return ZetaResult("at_least", k_cap + 1)

    cut, reach, c1, c2 = best
    if best_val <= k_cap:
        return ZetaResult("exact", best_val, _certificate(g, cut, reach, c1, c2))
    return ZetaResult("at_least", k_cap + 1)


def _circuit_in(g, vertices, removed_edges):
    """Some circuit lying entirely inside the induced subgraph on
    ``vertices`` avoiding removed_edges (shortest found)."""
    vset = set(vertices)
    keep = {
        e: p
        for e, p in g.edges.items()
        if e not in removed_edges and p[0] in vset and p[1] in vset
    }
    sub = MultiGraph(vset, keep)
    gl = girth(sub)
    return enumerate_circuits(sub, gl)[0]


def _no_two_disjoint_circuits(g):
    """Exhaustive check that g has no two vertex-disjoint circuits (only
    sensible for small graphs)."""
    if g.n() > 20:
        raise GraphError("disjoint-circuit check not supported for large graphs")
    circs = enumerate_circuits(g, g.n())
    for i, c1 in enumerate(circs):
        s1 = c1.vertex_set()
        for c2 in circs[i + 1 :]:
            if not (s1 & c2.vertex_set()):
                return False
    return True


def is_cyclically_k_connected(g, k):
    """Decision: no cycle-separating cut of size < k.  Returns (bool,
    certificate-or-None); the certificate is a counterexample cut when
    False.  Graphs with no cycle-separating cut are True by convention."""
    if not 2 <= k <= 8:
        raise GraphError("k out of supported range")
    res = cyclic_connectivity(g, k_cap=k - 1)
    if res.kind == "exact":
        return False, res.certificate
    return True, None


def validate_cut_certificate(g, cert):
    """Independent re-validation of a CyclicCutCertificate."""
    if cert.side_a | cert.side_b != g.vertices or cert.side_a & cert.side_b:
        return False
    for eid, (u, v) in g.edges.items():
        crosses = (u in cert.side_a) != (v in cert.side_a)
        if crosses != (eid in cert.cut):
            return False
    for side, wit in ((cert.side_a, cert.witness_a), (cert.side_b, cert.witness_b)):
        vs = wit.vertices
        if not set(vs) <= side:
            return False
        k = len(vs)
        if k == 2:
            if g.multiplicity(vs[0], vs[1]) < 2:
                return False
        else:
            for i in range(k):
                if g.multiplicity(vs[i], vs[(i + 1) % k]) < 1:
                    return False
    return True
