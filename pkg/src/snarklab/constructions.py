"""Building blocks and snark families: Petersen networks, flower snarks,
order-28 oddness-4 snarks, ring and chain families, and the general
superposition engine with projection maps.

Every family builder verifies that its output is a snark (cubic,
2-connected, uncolourable) before returning it; pass verify=False to skip
the colourability check on very large instances.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .canonical import canonical_form
from .colouring import boundary_colourings, is_colourable, resistance
from .connectivity import edge_connectivity, is_cyclically_k_connected
from .factors import OddnessUndefined, oddness
from .multigraph import (
    GraphError,
    MultiGraph,
    Network,
    disjoint_union,
    enumerate_circuits,
    girth,
    junction,
    split_off,
    subdivide,
)


class ConstructionError(GraphError):
    pass


# -- base graphs ------------------------------------------------------------------


def petersen():
    """The Petersen graph: outer 5-cycle 0-4, spokes, inner pentagram 5-9."""
    edges = (
        [(i, (i + 1) % 5) for i in range(5)]
        + [(i, i + 5) for i in range(5)]
        + [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    )
    return MultiGraph.from_edge_list(edges)


def flower_snark(k):
    """Isaacs flower snark J_k (k odd >= 3): hubs h_i joined to an outer
    k-cycle x_i and an inner 2k-cycle y_0..y_{k-1} z_0..z_{k-1}."""
    if k < 3 or k % 2 == 0:
        raise ConstructionError("flower snark requires odd k >= 3")
    # vertex layout: h_i = i, x_i = k+i, y_i = 2k+i, z_i = 3k+i
    edges = []
    for i in range(k):
        edges += [(i, k + i), (i, 2 * k + i), (i, 3 * k + i)]
        edges.append((k + i, k + (i + 1) % k))
    for i in range(k - 1):
        edges.append((2 * k + i, 2 * k + i + 1))
    edges.append((2 * k + k - 1, 3 * k))
    for i in range(k - 1):
        edges.append((3 * k + i, 3 * k + i + 1))
    edges.append((3 * k + k - 1, 2 * k))
    return MultiGraph.from_edge_list(edges)


def complete_graph(n):
    return MultiGraph.from_edge_list(list(itertools.combinations(range(n), 2)))


def k33():
    return MultiGraph.from_edge_list([(i, 3 + j) for i in range(3) for j in range(3)])


# -- snark verification -------------------------------------------------------------


def assert_snark(g, verify_colouring=True, what="construction"):
    """Raise unless g is cubic, 2-connected and (optionally) uncolourable."""
    if not g.is_cubic():
        raise ConstructionError(f"{what}: not cubic")
    if not g.is_2_connected():
        raise ConstructionError(f"{what}: not 2-connected")
    if verify_colouring and is_colourable(g):
        raise ConstructionError(f"{what}: 3-edge-colourable, not a snark")
    return g


# -- Petersen networks (section-5 blocks) ---------------------------------------------


def _edge_distance(g, e1, e2):
    """Minimum endpoint-to-endpoint distance between two edges."""
    from collections import deque

    u1, v1 = g.endpoints(e1)
    dist = {u1: 0, v1: 0}
    queue = deque([u1, v1])
    while queue:
        v = queue.popleft()
        for w in g.neighbours(v):
            if w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)
    return min(dist[x] for x in g.endpoints(e2))


def build_P2(edge=0):
    """2-pole from the Petersen graph: subdivide an edge, split off the new
    vertex.  Ten nonterminal vertices; uncolourable."""
    p = petersen()
    g, w, _, _ = subdivide(p, edge)
    net = split_off(g, w)
    return Network(net.graph, net.terminals, (("pair", net.terminals),))


def build_P3(vertex=0):
    """3-pole from the Petersen graph: split off a vertex.  Nine nonterminal
    vertices; uncolourable."""
    net = split_off(petersen(), vertex)
    return Network(net.graph, net.terminals, (("triple", net.terminals),))


def build_P4v(edge=0):
    """4-pole: delete a Petersen edge and split off both ends.  Two terminal
    pairs, each forced monochromatic; eight nonterminal vertices."""
    p = petersen()
    u, v = p.endpoints(edge)
    g = MultiGraph(p.vertices, {e: pr for e, pr in p.edges.items() if e != edge})
    n1 = split_off(g, u)
    n2 = split_off(n1.graph, v)
    terms = n1.terminals + n2.terminals
    return Network(
        n2.graph, terms, (("pair1", n1.terminals), ("pair2", n2.terminals))
    )


def build_P4e(edges=(0, 2)):
    """4-pole: subdivide two Petersen edges at distance 1 and split off the
    new vertices.  Two terminal pairs, each forced bichromatic; ten
    nonterminal vertices."""
    p = petersen()
    e1, e2 = edges
    if _edge_distance(p, e1, e2) != 1:
        raise ConstructionError("the two edges must be at distance 1")
    g, w1, _, _ = subdivide(p, e1)
    g, w2, _, _ = subdivide(g, e2)
    n1 = split_off(g, w1)
    n2 = split_off(n1.graph, w2)
    terms = n1.terminals + n2.terminals
    return Network(
        n2.graph, terms, (("pair1", n1.terminals), ("pair2", n2.terminals))
    )


def build_P5vvv(path=(0, 1, 2)):
    """5-pole: delete two adjacent Petersen edges (a path a-b-c) and split
    off the two degree-2 ends; b itself becomes the single terminal.  Seven
    nonterminal vertices."""
    p = petersen()
    a, b, c = path
    dead = [e for e, pr in p.edges.items() if pr in ((min(a, b), max(a, b)), (min(b, c), max(b, c)))]
    if len(dead) != 2:
        raise ConstructionError("path vertices must span two edges")
    g = MultiGraph(p.vertices, {e: pr for e, pr in p.edges.items() if e not in dead})
    n1 = split_off(g, a)
    n2 = split_off(n1.graph, c)
    terms = n1.terminals + n2.terminals + (b,)
    return Network(
        n2.graph,
        terms,
        (("pairA", n1.terminals), ("pairC", n2.terminals), ("single", (b,))),
    )


def build_P5ev(vertex=0, edge=None):
    """5-pole: split off a Petersen vertex (triple) and a subdivision vertex
    of an edge at distance two from it (pair).  Nine nonterminal vertices."""
    p = petersen()
    if edge is None:
        edge = next(
            e
            for e in sorted(p.edges)
            if min(_vertex_edge_distance(p, vertex, e), 99) == 2
        )
    if _vertex_edge_distance(p, vertex, edge) != 2:
        raise ConstructionError("edge must be at distance 2 from the vertex")
    n1 = split_off(p, vertex)
    g, w, _, _ = subdivide(n1.graph, edge)
    n2 = split_off(g, w)
    terms = n2.terminals + n1.terminals
    return Network(
        n2.graph, terms, (("pair", n2.terminals), ("triple", n1.terminals))
    )


def _vertex_edge_distance(g, v, e):
    from collections import deque

    dist = {v: 0}
    queue = deque([v])
    while queue:
        x = queue.popleft()
        for w in g.neighbours(x):
            if w not in dist:
                dist[w] = dist[x] + 1
                queue.append(w)
    return min(dist[x] for x in g.endpoints(e))


P_NETWORK_BUILDERS = {
    "P2": build_P2,
    "P3": build_P3,
    "P4v": build_P4v,
    "P4e": build_P4e,
    "P5vvv": build_P5vvv,
    "P5ev": build_P5ev,
}

P_NONTERMINAL_COUNTS = {
    "P2": 10,
    "P3": 9,
    "P4v": 8,
    "P4e": 10,
    "P5vvv": 7,
    "P5ev": 9,
}


# -- network composition helpers ------------------------------------------------------


def merge_networks(nets):
    """Disjoint union of several networks.

    Returns (graph, per_net_terminals) where per_net_terminals[i] is the
    tuple of net i's terminals relabelled into the union.
    """
    g = nets[0].graph
    per = [list(nets[0].terminals)]
    for net in nets[1:]:
        g, vmap, _ = disjoint_union(g, net.graph)
        per.append([vmap[t] for t in net.terminals])
    return g, per


def _junction_seq(g, alive, pairs):
    """Apply a sequence of same-graph junctions; pairs is a list of
    (t1, t2).  Returns (graph-or-network, remaining terminal list)."""
    alive = list(alive)
    cur = Network(g, tuple(alive))
    for t1, t2 in pairs:
        cur = junction(cur, t1, None, t2)
        alive.remove(t1)
        alive.remove(t2)
        if not isinstance(cur, Network):
            return cur, []
        cur = Network(cur.graph, tuple(alive))
    return cur.graph, alive


def join_pair_to_pair(p1, p2, flip=False):
    """Terminal pairs (a1,b1), (a2,b2) -> junction list, optionally flipped."""
    a1, b1 = p1
    a2, b2 = p2
    if flip:
        a2, b2 = b2, a2
    return [(a1, a2), (b1, b2)]


# -- N1, N2 and the ring family -------------------------------------------------------


def build_N1():
    """Uncolourable 4-pole: one pair of P4e joined to one pair of P4v.
    18 nonterminal vertices; terminals form two pairs."""
    pe = build_P4e()
    pv = build_P4v()
    g, (te, tv) = merge_networks([pe, pv])
    g, alive = _junction_seq(g, te + tv, join_pair_to_pair(te[:2], tv[:2]))
    return Network(g, tuple(alive), (("pair1", tuple(alive[:2])), ("pair2", tuple(alive[2:]))))


def build_N2():
    """Uncolourable 4-pole from one P4e and two P4v copies; 26 nonterminal
    vertices; uncolourable even after removing any nonterminal vertex."""
    pe = build_P4e()
    pv1 = build_P4v()
    pv2 = build_P4v()
    g, (te, t1, t2) = merge_networks([pe, pv1, pv2])
    juncs = join_pair_to_pair(te[:2], t1[:2]) + join_pair_to_pair(te[2:], t2[:2])
    g, alive = _junction_seq(g, te + t1 + t2, juncs)
    return Network(g, tuple(alive), (("pair1", tuple(alive[:2])), ("pair2", tuple(alive[2:]))))


def ring_join(blocks, verify=True):
    """Join 4-poles (two terminal pairs each) into a ring: pair2 of each
    block to pair1 of its successor.  Orientation of each joint is chosen
    as the lexicographically least combination giving a bridgeless cubic
    graph."""
    if not blocks:
        raise ConstructionError("ring_join needs at least one block")
    for b in blocks:
        if b.connector_sizes() != (2, 2):
            raise ConstructionError("ring blocks must have two terminal pairs")
    g0, per = merge_networks(blocks)
    r = len(blocks)
    pair1 = [tuple(per[i][:2]) for i in range(r)]
    pair2 = [tuple(per[i][2:]) for i in range(r)]
    alive0 = [t for ts in per for t in ts]
    for flips in itertools.product((False, True), repeat=r):
        juncs = []
        for j in range(r):
            juncs += join_pair_to_pair(pair2[j], pair1[(j + 1) % r], flips[j])
        try:
            g, rest = _junction_seq(g0, alive0, juncs)
        except GraphError:
            continue
        if rest:
            raise ConstructionError("ring_join left terminals unjoined")
        if g.is_cubic() and g.is_2_connected():
            return assert_snark(g, verify, "ring_join") if verify else g
    raise ConstructionError("no bridgeless orientation found for ring_join")


def snark44(verify=True):
    """The cyclically 4-connected order-44 snark: ring of one N2 and one N1."""
    return ring_join([build_N2(), build_N1()], verify=verify)


# -- order-28 oddness-4 snarks and the R family ----------------------------------------


def _attach_new_vertex(g, terminals):
    """Replace three terminals by a fresh degree-3 vertex joined to their
    attachment points."""
    w = max(g.vertices) + 1
    ne = max(g.edges) + 1
    edges = dict(g.edges)
    verts = set(g.vertices) | {w}
    for i, t in enumerate(terminals):
        (eid, x) = g.incident(t)[0]
        del edges[eid]
        edges[ne + i] = (min(w, x), max(w, x))
        verts.discard(t)
    return MultiGraph(verts, edges)


def _pairings(items):
    """All perfect pairings of an even list, deterministically ordered."""
    items = list(items)
    if not items:
        yield []
        return
    first = items[0]
    for i in range(1, len(items)):
        rest = items[1:i] + items[i + 1 :]
        for tail in _pairings(rest):
            yield [(first, items[i])] + tail


def build_H_candidates(progress=None):
    """All snarks of order 28 and oddness 4 formed from three disjoint P3
    copies plus one extra vertex: 3 of the 9 terminals attach to the new
    vertex, the remaining 6 are paired by junctions.  Deduplicated by
    canonical form."""
    nets = [build_P3(), build_P3(), build_P3()]
    g0, per = merge_networks(nets)
    terms = [t for ts in per for t in ts]
    seen = {}
    count = 0
    for centre in itertools.combinations(terms, 3):
        rest = [t for t in terms if t not in centre]
        g1 = _attach_new_vertex(g0, centre)
        for pairing in _pairings(rest):
            count += 1
            if progress and count % 100 == 0:
                progress(count)
            try:
                g, leftover = _junction_seq(g1, rest, pairing)
            except GraphError:
                continue
            if leftover or not g.is_cubic() or not g.is_2_connected():
                continue
            key = canonical_form(g)
            if key in seen:
                continue
            cert = oddness(g)
            if isinstance(cert, OddnessUndefined) or cert.omega != 4:
                continue
            seen[key] = g
    return list(seen.values())


_H_CACHE = {}


def build_H(which=1):
    """H1 (cyclic connectivity 2) or H2 (cyclic connectivity 3): the two
    order-28 oddness-4 snarks, located inside the candidate search."""
    if which not in (1, 2):
        raise ConstructionError("which must be 1 or 2")
    if not _H_CACHE:
        cands = build_H_candidates()
        for g in cands:
            ec = edge_connectivity(g)
            if ec == 2 and 1 not in _H_CACHE:
                _H_CACHE[1] = g
            elif ec == 3 and 2 not in _H_CACHE:
                _H_CACHE[2] = g
        if set(_H_CACHE) != {1, 2}:
            raise ConstructionError("order-28 search did not find both snarks")
    return _H_CACHE[which]


def insert_into_edge(g, eid, net):
    """Insert a 2-terminal network into edge eid: the edge is replaced by a
    path through the network (one junction at each end)."""
    if len(net.terminals) != 2:
        raise ConstructionError("insert_into_edge needs a 2-pole")
    merged, vmap, _ = disjoint_union(g, net.graph)
    t1, t2 = (vmap[t] for t in net.terminals)
    u, w = merged.endpoints(eid)
    (e1, x1) = merged.incident(t1)[0]
    (e2, x2) = merged.incident(t2)[0]
    _, ne = _next_edge_id(merged)
    edges = {e: p for e, p in merged.edges.items() if e not in (eid, e1, e2)}
    edges[ne] = (min(u, x1), max(u, x1))
    edges[ne + 1] = (min(w, x2), max(w, x2))
    verts = set(merged.vertices) - {t1, t2}
    return MultiGraph(verts, edges)


def _next_edge_id(g):
    return max(g.vertices, default=-1) + 1, max(g.edges, default=-1) + 1


def gv_extension(g, v):
    """Insert a copy of P2 into each of the three edges at v: +30 vertices;
    on snark input the oddness increases by exactly 4."""
    out = g
    for eid in [e for e, _ in g.incident(v)]:
        out = insert_into_edge(out, eid, build_P2())
    return out


def triangle_expansion(g, v):
    """Expand vertex v into a triangle: each of its three edges is picked up
    by one triangle vertex.  Inverse of a triangle contraction; +2 vertices."""
    inc = g.incident(v)
    if len(inc) != 3:
        raise ConstructionError(f"vertex {v} must have degree 3")
    nv, ne = _next_edge_id(g)
    tri = (nv, nv + 1, nv + 2)
    edges = {}
    for e, p in g.edges.items():
        if v not in p:
            edges[e] = p
    for i, (e, other) in enumerate(inc):
        edges[ne + i] = (min(other, tri[i]), max(other, tri[i]))
    edges[ne + 3] = (tri[0], tri[1])
    edges[ne + 4] = (tri[1], tri[2])
    edges[ne + 5] = (tri[0], tri[2])
    return MultiGraph((set(g.vertices) - {v}) | set(tri), edges)


def four_circuit_expansion(g, e1, e2, cross=False):
    """Expand two disjoint edges into a 4-circuit: subdivide each twice and
    join the subdivision vertices pairwise (parallel, or crosswise with
    cross=True).  Inverse of the 4-circuit reduction; +4 vertices.  Whether
    the result of expanding a snark is again a snark depends on the edge
    pair and the wiring, so callers must check."""
    if e1 == e2:
        raise ConstructionError("need two distinct edges")
    if set(g.endpoints(e1)) & set(g.endpoints(e2)):
        raise ConstructionError("the two edges must be disjoint")
    g1, u1, (f1, f2), _ = subdivide(g, e1)
    g1, u2, _, _ = subdivide(g1, f2)
    g1, u3, (h1, h2), _ = subdivide(g1, e2)
    g1, u4, _, _ = subdivide(g1, h2)
    _, ne = _next_edge_id(g1)
    edges = dict(g1.edges)
    a, b = (u4, u3) if cross else (u3, u4)
    edges[ne] = (min(u1, a), max(u1, a))
    edges[ne + 1] = (min(u2, b), max(u2, b))
    return MultiGraph(set(g1.vertices), edges)


def build_R(i, verify=True):
    """The alternating extension family: R0 = Petersen, R1 = the order-28
    snark with cyclic connectivity 2, and each later member extends the one
    two steps back at its least vertex (+30 vertices, +4 oddness)."""
    if i < 0:
        raise ConstructionError("index must be >= 0")
    if i == 0:
        return petersen()
    if i == 1:
        return build_H(1)
    base = build_R(i - 2, verify=False)
    g = gv_extension(base, min(base.vertices))
    if verify:
        assert_snark(g, True, f"R_{i}")
    return g


# -- section-8: the 7-pole Z and its chains --------------------------------------------


def build_Z():
    """Uncolourable 7-pole: P5vvv with each pair junctioned to the pair of a
    distinct P5ev copy.  25 vertices."""
    pv = build_P5vvv()
    pe1 = build_P5ev()
    pe2 = build_P5ev()
    g, (tv, t1, t2) = merge_networks([pv, pe1, pe2])
    # pv terminals: pairA, pairC, single; pe terminals: pair, triple
    juncs = join_pair_to_pair(tv[:2], t1[:2]) + join_pair_to_pair(tv[2:4], t2[:2])
    g, alive = _junction_seq(g, tv + t1 + t2, juncs)
    # remaining: pv single + two triples
    single = [t for t in alive if t == tv[4]]
    tri1 = [t for t in alive if t in t1[2:]]
    tri2 = [t for t in alive if t in t2[2:]]
    terms = tuple(single + tri1 + tri2)
    return Network(
        g,
        terms,
        (
            ("single", tuple(single)),
            ("triple1", tuple(tri1)),
            ("triple2", tuple(tri2)),
        ),
    )


def _matchings_cross_first(terminals, copy_of):
    """Perfect matchings of the terminal list; at each step the lowest
    unmatched terminal tries partners from other copies first."""

    def rec(unmatched):
        if not unmatched:
            yield []
            return
        first = unmatched[0]
        rest = unmatched[1:]
        order = sorted(rest, key=lambda t: (copy_of[t] == copy_of[first], t))
        for t in order:
            remaining = [x for x in rest if x != t]
            for tail in rec(remaining):
                yield [(first, t)] + tail

    yield from rec(list(terminals))


def chain_Z(r, verify=True, max_tries=20000):
    """Cyclically 5-connected snark from r copies of Z (order 25r for even
    r; odd r needs one terminal triple identified, giving 25r+1).

    The terminal matching is found by deterministic search filtered by
    girth >= 5 and cyclic 5-connectivity.
    """
    if r < 2:
        raise ConstructionError("chain_Z needs r >= 2")
    zs = [build_Z() for _ in range(r)]
    g0, per = merge_networks(zs)
    copy_of = {}
    for i, ts in enumerate(per):
        for t in ts:
            copy_of[t] = i
    terms = [t for ts in per for t in ts]

    def candidates():
        if r % 2 == 0:
            for m in _matchings_cross_first(terms, copy_of):
                yield m, None
        else:
            # odd r: identify one triple (one terminal from each of three
            # distinct copies), pair the rest
            for triple in itertools.combinations(terms, 3):
                if len({copy_of[t] for t in triple}) != 3:
                    continue
                rest = [t for t in terms if t not in triple]
                for m in _matchings_cross_first(rest, copy_of):
                    yield m, triple

    tried = 0
    for pairing, triple in candidates():
        tried += 1
        if tried > max_tries:
            break
        base = g0 if triple is None else _attach_new_vertex(g0, triple)
        alive = terms if triple is None else [t for t in terms if t not in triple]
        try:
            g, rest = _junction_seq(base, alive, pairing)
        except GraphError:
            continue
        if rest or not g.is_cubic() or not g.is_2_connected():
            continue
        if girth(g) < 5:
            continue
        ok, _ = is_cyclically_k_connected(g, 5)
        if not ok:
            continue
        if verify:
            assert_snark(g, True, "chain_Z")
        return g
    raise ConstructionError("no cyclically 5-connected terminal matching found")


def ring_join_orientations(blocks):
    """For each joint-orientation combination of a ring, report whether the
    result is bridgeless ('bridgeless'/'bridged') or aborts ('loop')."""
    g0, per = merge_networks(blocks)
    r = len(blocks)
    pair1 = [tuple(per[i][:2]) for i in range(r)]
    pair2 = [tuple(per[i][2:]) for i in range(r)]
    alive0 = [t for ts in per for t in ts]
    report = {}
    for flips in itertools.product((False, True), repeat=r):
        juncs = []
        for j in range(r):
            juncs += join_pair_to_pair(pair2[j], pair1[(j + 1) % r], flips[j])
        try:
            g, rest = _junction_seq(g0, alive0, juncs)
        except GraphError:
            report[flips] = "loop"
            continue
        report[flips] = "bridgeless" if (not rest and g.is_bridgeless()) else "bridged"
    return report


# -- superposition engine -------------------------------------------------------------


@dataclass(frozen=True)
class SuperpositionPlan:
    """Replacement recipe: a supervertex (network with three connectors) for
    every vertex of the base, a superedge (two connectors) for every edge,
    and the incidence association matching connectors to edge-ends.

    sv_assign maps (vertex, edge id) to a connector index of the
    supervertex; se_assign maps (edge id, vertex) to a connector index of
    the superedge.  Sizes must match across each incidence.
    """

    base: MultiGraph
    supervertices: dict
    sv_assign: dict
    superedges: dict
    se_assign: dict

    def validate(self):
        for v in self.base.vertices:
            if v not in self.supervertices:
                raise ConstructionError(f"no supervertex for {v}")
            sv = self.supervertices[v]
            if len(sv.connectors) != 3:
                raise ConstructionError(f"supervertex at {v} needs 3 connectors")
            inc = [e for e, _ in self.base.incident(v)]
            used = [self.sv_assign[(v, e)] for e in inc]
            if sorted(used) != [0, 1, 2]:
                raise ConstructionError(f"connector assignment at {v} is not a bijection")
        for e, (u, w) in self.base.edges.items():
            if e not in self.superedges:
                raise ConstructionError(f"no superedge for {e}")
            se = self.superedges[e]
            if len(se.connectors) != 2:
                raise ConstructionError(f"superedge at {e} needs 2 connectors")
            ends = [self.se_assign[(e, u)], self.se_assign[(e, w)]]
            if sorted(ends) != [0, 1]:
                raise ConstructionError(f"end assignment at edge {e} is not a bijection")
            for v in (u, w):
                cv = self.supervertices[v].connectors[self.sv_assign[(v, e)]][1]
                ce = se.connectors[self.se_assign[(e, v)]][1]
                if len(cv) != len(ce):
                    raise ConstructionError(
                        f"connector size mismatch at incidence ({v}, {e}):"
                        f" {len(cv)} vs {len(ce)}"
                    )


@dataclass(frozen=True)
class Projection:
    """Incidence-preserving surjection from the superposed graph onto the
    base: values are ('vertex', v) or ('edge', e) of the base."""

    vertex_map: dict
    edge_map: dict

    def image_vertices(self, vertex_subset):
        """Base vertices hit by a vertex subset of the superposed graph
        (superedge vertices count as the lower endpoint of their edge)."""
        out = set()
        for x in vertex_subset:
            kind, ref = self.vertex_map[x]
            out.add(ref if kind == "vertex" else min(self._base_ends(ref)))
        return out

    def _base_ends(self, e):
        return self._ends[e]

    _ends: dict = field(default_factory=dict)


def trivial_supervertex():
    """One nonterminal vertex with three pendant terminal edges."""
    g = MultiGraph({0, 1, 2, 3}, {0: (0, 1), 1: (0, 2), 2: (0, 3)})
    return Network(g, (1, 2, 3), (("c0", (1,)), ("c1", (2,)), ("c2", (3,))))


def trivial_superedge():
    """A single edge with both ends terminal."""
    g = MultiGraph({0, 1}, {0: (0, 1)})
    return Network(g, (0, 1), (("end0", (0,)), ("end1", (1,))))


def trivial_plan(base):
    """The identity plan: trivial supervertices and superedges everywhere."""
    sv = {}
    sva = {}
    se = {}
    sea = {}
    for v in base.vertices:
        sv[v] = trivial_supervertex()
        for k, (e, _) in enumerate(base.incident(v)):
            sva[(v, e)] = k
    for e, (u, w) in base.edges.items():
        se[e] = trivial_superedge()
        sea[(e, u)] = 0
        sea[(e, w)] = 1
    return SuperpositionPlan(base, sv, sva, se, sea)


def _base_sweep_order(plan):
    """Piece merge order: greedy vertex sweep of the base minimising the
    weighted boundary (edge weight = superedge connector size), each edge
    piece emitted right after its later endpoint."""
    base = plan.base
    weight = {e: len(plan.superedges[e].connectors[0][1]) for e in base.edges}
    vis = set()
    touch = {}
    order = []
    verts = sorted(base.vertices)
    for i in range(len(verts)):
        best = None
        bkey = None
        for v in verts:
            if v in vis:
                continue
            delta = sum(
                weight[e] if u in vis else -weight[e] for e, u in base.incident(v)
            )
            key = (delta, touch.get(v, -1), -v)
            if bkey is None or key > bkey:
                best, bkey = v, key
        vis.add(best)
        order.append(("v", best))
        for e, u in base.incident(best):
            if u in vis:
                order.append(("e", e))
            else:
                touch[u] = i
    return order


def superpose(plan):
    """Perform all junctions of a superposition plan.

    Returns (graph, projection).  The vertex count of the result equals the
    sum of the nonterminal counts of all supervertices and superedges.
    """
    plan.validate()
    base = plan.base
    # Merge pieces along a narrow-frontier sweep of the base (edge weight =
    # boundary size of its superedge) so the output labelling keeps each
    # partially-built region's boundary small; the colouring engine sweeps
    # vertices in id order and depends on this for large outputs.
    order = _base_sweep_order(plan)
    nets = {("v", v): plan.supervertices[v] for v in base.vertices}
    nets.update({("e", e): plan.superedges[e] for e in base.edges})
    g = None
    vmaps = {}
    for key in order:
        piece = nets[key].graph
        if g is None:
            g = piece
            vmaps[key] = {v: v for v in piece.vertices}
        else:
            g, vmap, _ = disjoint_union(g, piece)
            vmaps[key] = vmap
    owner = {}
    for key in order:
        net = nets[key]
        terms = set(net.terminals)
        for v in net.graph.vertices:
            if v not in terms:
                kind = "vertex" if key[0] == "v" else "edge"
                owner[vmaps[key][v]] = (kind, key[1])
    # junction per incidence, connector terminals matched in listed order
    juncs = []
    for e, (u, w) in sorted(base.edges.items()):
        for v in (u, w):
            cv = plan.supervertices[v].connectors[plan.sv_assign[(v, e)]][1]
            ce = plan.superedges[e].connectors[plan.se_assign[(e, v)]][1]
            for t1, t2 in zip(cv, ce):
                juncs.append((vmaps[("v", v)][t1], vmaps[("e", e)][t2]))
    alive = []
    for key in order:
        alive += [vmaps[key][t] for t in nets[key].terminals]
    out, rest = _junction_seq(g, alive, juncs)
    if rest:
        raise ConstructionError("superposition left terminals unjoined")
    expected = sum(n.nonterminal_count() for n in nets.values())
    if out.n() != expected:
        raise ConstructionError("superposition vertex count mismatch")
    # project: vertices by ownership, edges by the owners of their ends
    vertex_map = {x: owner[x] for x in out.vertices}
    edge_map = {}
    cross = {}
    for eid, (x, y) in out.edges.items():
        o1, o2 = owner[x], owner[y]
        if o1 == o2:
            edge_map[eid] = o1
        elif o1[0] == "edge":
            edge_map[eid] = o1
        elif o2[0] == "edge":
            edge_map[eid] = o2
        else:
            cross.setdefault(frozenset((o1[1], o2[1])), []).append(eid)
    for key, eids in cross.items():
        uw = sorted(key) if len(key) == 2 else [min(key), min(key)]
        base_eids = base.edges_between(uw[0], uw[-1])
        for eid, be in zip(sorted(eids), base_eids):
            edge_map[eid] = ("edge", be)
    proj = Projection(vertex_map, edge_map, dict(base.edges))
    return out, proj


def is_proper_superedge(y):
    """A superedge is proper when, in every colouring, the colour sums of
    its two connectors are equal and nonzero (Klein-group xor)."""
    if len(y.connectors) != 2:
        raise ConstructionError("a superedge needs exactly two connectors")
    idx = {t: i for i, t in enumerate(y.terminals)}
    groups = [[idx[t] for t in ts] for _, ts in y.connectors]
    for tup in boundary_colourings(y):
        sums = []
        for grp in groups:
            s = 0
            for i in grp:
                s ^= tup[i]
            sums.append(s)
        if sums[0] == 0 or sums[0] != sums[1]:
            return False
    return True


@dataclass(frozen=True)
class SuperpositionResistanceReport:
    """Resistance comparison between a base snark and its superposition."""

    rho_base: int
    rho_super: int
    exact: bool  # rho_super exact, or only certified as a lower bound
    holds: bool
    witness_size: int | None = None
    projected_size: int | None = None


def check_superposition_resistance(base, plan, exact_cap=60):
    """Verify that the superposition resists at least as much as the base.

    For large outputs the superposition's resistance is certified as a
    lower bound (every deletion of fewer than rho(base) vertices leaves the
    graph uncolourable) instead of computed exactly.
    """
    for e, y in plan.superedges.items():
        if not is_proper_superedge(y):
            raise ConstructionError(f"superedge at {e} is not proper")
    rho_base, _ = resistance(base)
    sup, proj = superpose(plan)
    if sup.n() <= exact_cap:
        rho_super, witness = resistance(sup)
        pw = proj.image_vertices(witness.deleted)
        return SuperpositionResistanceReport(
            rho_base,
            rho_super,
            True,
            rho_super >= rho_base,
            len(witness.deleted),
            len(pw),
        )
    arr_holds = not is_colourable(sup) if rho_base > 0 else True
    k = 0
    if arr_holds:
        k = 1
        while k < rho_base and arr_holds:
            for combo in itertools.combinations(sorted(sup.vertices), k):
                sub = MultiGraph(
                    set(sup.vertices) - set(combo),
                    {
                        e: p
                        for e, p in sup.edges.items()
                        if p[0] not in combo and p[1] not in combo
                    },
                )
                if is_colourable(sub):
                    arr_holds = False
                    break
            else:
                k += 1
    return SuperpositionResistanceReport(rho_base, k, False, arr_holds and k >= rho_base)


# -- section-9: L_r, the supervertex X, the superedge Y, and M_r ------------------------


def _merge_with_vmaps(nets):
    g = nets[0].graph
    per = [list(nets[0].terminals)]
    vmaps = [{v: v for v in nets[0].graph.vertices}]
    for net in nets[1:]:
        g, vmap, _ = disjoint_union(g, net.graph)
        per.append([vmap[t] for t in net.terminals])
        vmaps.append(vmap)
    return g, per, vmaps


def build_L(r, with_copies=False):
    """Ring of r copies of P3 (terminals a_i, b_i, c_i): b_i joined to
    a_{i+1}; leftover c-terminals paired by junctions (one triple identified
    to a new vertex when r is odd).  3-connected; order 9r (even r) or
    9r + 1 (odd r)."""
    if r < 2:
        raise ConstructionError("build_L needs r >= 2")
    nets = [build_P3() for _ in range(r)]
    g0, per, vmaps = _merge_with_vmaps(nets)
    copies = [
        frozenset(vmaps[i][v] for v in nets[i].graph.vertices if v not in nets[i].terminals)
        for i in range(r)
    ]
    ring = [(per[i][1], per[(i + 1) % r][0]) for i in range(r)]
    cs = [per[i][2] for i in range(r)]

    def leftover_plans():
        if r % 2 == 0:
            for pairing in _pairings(cs):
                yield pairing, None
        else:
            for triple in itertools.combinations(cs, 3):
                rest = [c for c in cs if c not in triple]
                for pairing in _pairings(rest):
                    yield pairing, triple

    alive0 = [t for ts in per for t in ts]
    for pairing, triple in leftover_plans():
        base = g0 if triple is None else _attach_new_vertex(g0, triple)
        alive = alive0 if triple is None else [t for t in alive0 if t not in triple]
        try:
            g, rest = _junction_seq(base, alive, ring + pairing)
        except GraphError:
            continue
        if rest or not g.is_cubic():
            continue
        if not g.is_connected() or edge_connectivity(g) < 3:
            continue
        return (g, copies) if with_copies else g
    raise ConstructionError("no 3-connected leftover pairing found for L_r")


def build_X():
    """The 7-pole supervertex with a single nonterminal vertex: three
    pendant edges plus two terminal-terminal through-edges; connector sizes
    (3, 3, 1)."""
    g = MultiGraph(
        set(range(8)),
        {0: (0, 1), 1: (0, 2), 2: (0, 3), 3: (4, 5), 4: (6, 7)},
    )
    return Network(
        g,
        (1, 2, 3, 4, 5, 6, 7),
        (("A", (1, 4, 6)), ("B", (2, 5, 7)), ("C", (3,))),
    )


def build_Y():
    """The proper superedge with 18 nonterminal vertices: the flower snark
    J5 with two nonadjacent vertices split off, one of them on its unique
    5-circuit.  Connectors are the two split-off triples."""
    j5 = flower_snark(5)
    fives = [c for c in enumerate_circuits(j5, 5) if len(c) == 5]
    if len(fives) != 1:
        raise ConstructionError("J5 should have a unique 5-circuit")
    v1 = min(fives[0].vertices)
    v2 = next(
        v
        for v in sorted(j5.vertices)
        if v not in fives[0].vertex_set() and v not in j5.neighbours(v1)
    )
    n1 = split_off(j5, v1)
    n2 = split_off(n1.graph, v2)
    terms = n1.terminals + n2.terminals
    return Network(n2.graph, terms, (("A", n1.terminals), ("B", n2.terminals)))


def find_spanning_circuit(g, copies, length):
    """First circuit of the given length (deterministic order) meeting every
    copy such that each copy minus the circuit's edges is acyclic."""
    for c in enumerate_circuits(g, length):
        if len(c) != length:
            continue
        vs = c.vertices
        if any(not (set(vs) & cp) for cp in copies):
            continue
        cedges = set()
        for i in range(len(vs)):
            cedges.add(g.edges_between(vs[i], vs[(i + 1) % len(vs)])[0])
        ok = True
        for cp in copies:
            inner = [
                e
                for e, (u, w) in g.edges.items()
                if u in cp and w in cp and e not in cedges
            ]
            # forest test on the copy's remaining internal edges
            parent = {v: v for v in cp}

            def find(x):
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                return x

            for e in inner:
                u, w = g.endpoints(e)
                ru, rw = find(u), find(w)
                if ru == rw:
                    ok = False
                    break
                parent[ru] = rw
            if not ok:
                break
        if ok:
            return c, cedges
    raise ConstructionError("no suitable circuit found")


def build_M_plan(r):
    """The superposition plan behind M_r: a circuit C of length 5r in L_r
    meeting every P3 copy with acyclic per-copy remainders; nontrivial X on
    C-vertices, Y on C-edges, trivial pieces elsewhere.

    Returns (L_r, plan).
    """
    L, copies = build_L(r, with_copies=True)
    circ, cedges = find_spanning_circuit(L, copies, 5 * r)
    vs = circ.vertices
    k = len(vs)
    on_c = set(vs)
    sv = {}
    sva = {}
    se = {}
    sea = {}
    for i, v in enumerate(vs):
        e_prev = L.edges_between(vs[(i - 1) % k], v)[0]
        e_next = L.edges_between(v, vs[(i + 1) % k])[0]
        e_off = next(e for e, _ in L.incident(v) if e not in (e_prev, e_next))
        sv[v] = build_X()
        sva[(v, e_prev)] = 0  # size-3 connector A
        sva[(v, e_next)] = 1  # size-3 connector B
        sva[(v, e_off)] = 2  # size-1 connector C
    for v in L.vertices:
        if v in on_c:
            continue
        sv[v] = trivial_supervertex()
        for kk, (e, _) in enumerate(L.incident(v)):
            sva[(v, e)] = kk
    for i in range(k):
        u, w = vs[i], vs[(i + 1) % k]
        e = L.edges_between(u, w)[0]
        se[e] = build_Y()
        # Y's connector A meets the predecessor's e_next slot (connector B of
        # X at u) and connector B meets the successor's e_prev slot.
        sea[(e, u)] = 0
        sea[(e, w)] = 1
    for e in L.edges:
        if e in se:
            continue
        u, w = L.endpoints(e)
        se[e] = trivial_superedge()
        sea[(e, u)] = 0
        sea[(e, w)] = 1
    return L, SuperpositionPlan(L, sv, sva, se, sea)


def build_M(r, verify=True):
    """Snark of order 99r (even r) or 99r+1 (odd r), cyclically 6-connected
    by construction, with resistance at least r."""
    _, plan = build_M_plan(r)
    g, _ = superpose(plan)
    if verify:
        assert_snark(g, True, "build_M")
    return g
