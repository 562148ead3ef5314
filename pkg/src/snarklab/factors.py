"""Perfect matchings, 2-factors, oddness, special edges, and counting bounds.

Oddness is computed by branch-and-bound over perfect matchings (the hot
kernel in ``_kernels``); an independent no-pruning enumerator is kept here
for oracle agreement tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ._kernels import min_odd_circuits
from .colouring import GraphArrays
from .multigraph import Circuit, GraphError


@dataclass(frozen=True)
class TwoFactor:
    """Spanning 2-regular subgraph with its circuit decomposition."""

    edges: frozenset
    circuits: tuple  # of (Circuit, edge-id tuple)

    @property
    def odd_count(self):
        return sum(1 for c, _ in self.circuits if c.is_odd())

    def p_counts(self):
        """Map circuit length -> number of circuits of that length."""
        out = {}
        for c, _ in self.circuits:
            out[len(c)] = out.get(len(c), 0) + 1
        return out

    def circuit_vertex_sets(self):
        return [c.vertex_set() for c, _ in self.circuits]


@dataclass(frozen=True)
class OddnessCertificate:
    omega: int
    two_factor: TwoFactor


@dataclass(frozen=True)
class OddnessUndefined:
    """Oddness is only defined for bridgeless cubic graphs."""

    bridge: int

    def __str__(self):
        return f"undefined: bridge (edge {self.bridge})"


def decompose_two_factor(g, factor_edges):
    """Decompose an edge set in which every vertex has degree 2 into its
    circuits; returns a TwoFactor."""
    adj = {v: [] for v in g.vertices}
    for e in sorted(factor_edges):
        u, v = g.endpoints(e)
        adj[u].append((e, v))
        adj[v].append((e, u))
    for v, lst in adj.items():
        if len(lst) != 2:
            raise GraphError(f"vertex {v} has degree {len(lst)} in the factor")
    seen = set()
    circuits = []
    for s in sorted(g.vertices):
        if s in seen:
            continue
        verts = [s]
        eids = []
        e, w = adj[s][0]
        eids.append(e)
        prev_edge = e
        v = w
        while v != s:
            verts.append(v)
            seen.add(v)
            e1, w1 = adj[v][0]
            if e1 == prev_edge:
                e1, w1 = adj[v][1]
            eids.append(e1)
            prev_edge = e1
            v = w1
        seen.add(s)
        circuits.append((Circuit(tuple(verts)), tuple(eids)))
    return TwoFactor(frozenset(factor_edges), tuple(circuits))


def complement_two_factor(g, matching):
    """The 2-factor complementary to a perfect matching of a cubic graph."""
    return decompose_two_factor(g, set(g.edges) - set(matching))


def enumerate_perfect_matchings(g):
    """Stream of perfect matchings (frozensets of edge ids), each exactly
    once, in deterministic order: branch on the lowest-id uncovered vertex,
    edges in id order."""
    verts = sorted(g.vertices)
    inc = {v: g.incident(v) for v in verts}

    def rec(covered, chosen):
        u = next((v for v in verts if v not in covered), None)
        if u is None:
            yield frozenset(chosen)
            return
        for eid, w in inc[u]:
            if w not in covered:
                covered.add(u)
                covered.add(w)
                chosen.append(eid)
                yield from rec(covered, chosen)
                chosen.pop()
                covered.discard(u)
                covered.discard(w)

    yield from rec(set(), [])


def enumerate_two_factors(g):
    for pm in enumerate_perfect_matchings(g):
        yield complement_two_factor(g, pm)


# -- oddness --------------------------------------------------------------------


def _kernel_arrays(g):
    arr = GraphArrays(g)
    return arr


def oddness(g, stop_at=-1, upper_init=None):
    """Oddness certificate of a bridgeless cubic graph.

    Returns OddnessCertificate, or OddnessUndefined naming a bridge.
    With stop_at >= 0 the search stops once a 2-factor with at most stop_at
    odd circuits is found (upper-bound bracketing; the certificate then
    witnesses omega <= stop_at rather than the exact minimum).
    """
    if not g.is_cubic():
        raise GraphError("oddness is defined for cubic graphs")
    br = g.bridges()
    if br:
        return OddnessUndefined(br[0])
    arr = _kernel_arrays(g)
    best_init = arr.n + 1 if upper_init is None else upper_init
    out = min_odd_circuits(arr.n, arr.m, arr.eu, arr.ev, arr.inc, best_init, stop_at)
    omega = int(out[0])
    if omega >= best_init:
        raise GraphError("no perfect matching found in a bridgeless cubic graph")
    factor = {arr.edge_ids[e] for e in range(arr.m) if out[1 + e] == 2}
    tf = decompose_two_factor(g, factor)
    return OddnessCertificate(omega, tf)


def oddness_no_pruning(g):
    """Independent oracle: exhaustive minimum over all perfect matchings."""
    best = None
    best_tf = None
    for tf in enumerate_two_factors(g):
        k = tf.odd_count
        if best is None or k < best:
            best, best_tf = k, tf
    if best is None:
        raise GraphError("graph has no perfect matching")
    return OddnessCertificate(best, best_tf)


# -- selected-circuit / selected-edge optima -------------------------------------


def min_selected_5circuits(g, circuits):
    """Minimum over all 2-factors of the number of members of ``circuits``
    occurring as circuits of the 2-factor.  Members are compared by vertex
    set (adequate for 5-circuits in max-degree-3 graphs)."""
    wanted = {frozenset(c.vertices) for c in circuits}
    for c in circuits:
        if len(c) != 5:
            raise GraphError("all selected circuits must be 5-circuits")
    best = None
    best_tf = None
    for tf in enumerate_two_factors(g):
        k = sum(1 for vs in tf.circuit_vertex_sets() if vs in wanted)
        if best is None or k < best:
            best, best_tf = k, tf
            if best == 0:
                break
    if best is None:
        raise GraphError("graph has no 2-factor")
    return best, best_tf


def max_selected_edges(g, selected):
    """Maximum over all 2-factors of |F intersect selected|."""
    selected = set(selected)
    best = None
    best_tf = None
    for tf in enumerate_two_factors(g):
        k = len(tf.edges & selected)
        if best is None or k > best:
            best, best_tf = k, tf
            if best == len(selected):
                break
    if best is None:
        raise GraphError("graph has no 2-factor")
    return best, best_tf


def special_edges(g):
    """Edges that belong to no odd circuit of any 2-factor."""
    on_odd = set()
    for tf in enumerate_two_factors(g):
        for c, eids in tf.circuits:
            if c.is_odd():
                on_odd.update(eids)
    return set(g.edges) - on_odd


# -- bounds ---------------------------------------------------------------------


def oddness_upper_bound(n, q):
    """Exact rational upper bound (3n + q)/21 on the oddness of a girth->=4
    snark of order n with q 5-circuits."""
    return Fraction(3 * n + q, 21)


@dataclass(frozen=True)
class RatioReport:
    ratio: Fraction
    bound: Fraction
    connectivity_class: str
    ok: bool
    exempt: bool = False


def ratio_bound_check(g, omega=None, zeta=None):
    """Check the order/oddness ratio bound appropriate to the graph's cyclic
    connectivity.  The Petersen graph is exempt."""
    from .canonical import canonical_form
    from .connectivity import cyclic_connectivity
    from .constructions import petersen

    if canonical_form(g) == canonical_form(petersen()):
        return RatioReport(Fraction(5), Fraction(0), "petersen", True, exempt=True)
    if omega is None:
        cert = oddness(g)
        if isinstance(cert, OddnessUndefined):
            raise GraphError(str(cert))
        omega = cert.omega
    if zeta is None:
        zr = cyclic_connectivity(g)
        zeta = zr.zeta if zr.zeta is not None else 10**9
    if zeta >= 5:
        bound, cls = Fraction(35, 6), "cyclically 5-connected"
    elif zeta >= 3:
        bound, cls = Fraction(105, 19), "cyclically 3-connected"
    else:
        bound, cls = Fraction(525, 97), "general"
    ratio = Fraction(g.n(), omega)
    return RatioReport(ratio, bound, cls, ratio >= bound)
