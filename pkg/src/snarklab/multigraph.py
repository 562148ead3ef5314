"""Cubic multigraph data model and structural editing primitives.

A :class:`MultiGraph` is an undirected multigraph with stable integer edge
ids.  Parallel edges are first-class citizens (several reductions produce
them); loops are forbidden and every operation that would create one raises
:class:`LoopError`.  All values are immutable after construction: structural
edits return fresh graphs together with an id-mapping of surviving edges.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field


class GraphError(ValueError):
    """Base class for structural errors."""


class LoopError(GraphError):
    """An operation would create a loop (edge joining a vertex to itself)."""


class AcyclicError(GraphError):
    """Raised by girth() on a forest."""


class MultiGraph:
    """Undirected multigraph with dense integer vertex ids and stable edge ids.

    ``edges`` maps edge id -> (u, v) with u <= v.  Vertices may be isolated.
    Instances are treated as immutable; do not mutate the returned dicts.
    """

    __slots__ = ("_vertices", "_edges", "_adj")

    def __init__(self, vertices, edges):
        self._vertices = frozenset(vertices)
        self._edges = {}
        adj = {v: [] for v in self._vertices}
        for eid, (u, v) in sorted(edges.items()):
            if u == v:
                raise LoopError(f"edge {eid} is a loop at vertex {u}")
            if u not in self._vertices or v not in self._vertices:
                raise GraphError(f"edge {eid}=({u},{v}) has endpoint outside vertex set")
            if u > v:
                u, v = v, u
            self._edges[eid] = (u, v)
            adj[u].append((eid, v))
            adj[v].append((eid, u))
        self._adj = adj

    @classmethod
    def from_edge_list(cls, pairs, n=None):
        """Build a graph from a list of (u, v) pairs; edge ids are list positions."""
        verts = set()
        for u, v in pairs:
            verts.add(u)
            verts.add(v)
        if n is not None:
            verts.update(range(n))
        return cls(verts, {i: (u, v) for i, (u, v) in enumerate(pairs)})

    # -- queries ----------------------------------------------------------

    @property
    def vertices(self):
        return self._vertices

    @property
    def edges(self):
        return self._edges

    def n(self):
        return len(self._vertices)

    def m(self):
        return len(self._edges)

    def degree(self, v):
        return len(self._adj[v])

    def incident(self, v):
        """List of (edge_id, other_endpoint) pairs at v, in edge-id order."""
        return sorted(self._adj[v])

    def endpoints(self, eid):
        return self._edges[eid]

    def other_end(self, eid, v):
        u, w = self._edges[eid]
        return w if v == u else u

    def neighbours(self, v):
        return sorted({w for _, w in self._adj[v]})

    def multiplicity(self, u, v):
        if u > v:
            u, v = v, u
        return sum(1 for e in self._edges.values() if e == (u, v))

    def is_cubic(self):
        return all(self.degree(v) == 3 for v in self._vertices)

    def edges_between(self, u, v):
        if u > v:
            u, v = v, u
        return sorted(eid for eid, e in self._edges.items() if e == (u, v))

    def has_parallel_edges(self):
        seen = set()
        for pair in self._edges.values():
            if pair in seen:
                return True
            seen.add(pair)
        return False

    # -- connectivity helpers ---------------------------------------------

    def components(self):
        """List of vertex sets of connected components."""
        seen = set()
        out = []
        for s in sorted(self._vertices):
            if s in seen:
                continue
            comp = {s}
            queue = deque([s])
            while queue:
                v = queue.popleft()
                for _, w in self._adj[v]:
                    if w not in comp:
                        comp.add(w)
                        queue.append(w)
            seen |= comp
            out.append(comp)
        return out

    def is_connected(self):
        return len(self.components()) <= 1

    def bridges(self):
        """Edge ids of all bridges (parallel-edge aware, iterative Tarjan)."""
        disc = {}
        low = {}
        out = []
        timer = itertools.count()
        for root in sorted(self._vertices):
            if root in disc:
                continue
            stack = [(root, -1, iter(sorted(self._adj[root])))]
            disc[root] = low[root] = next(timer)
            while stack:
                v, in_edge, it = stack[-1]
                advanced = False
                for eid, w in it:
                    if eid == in_edge:
                        continue
                    if w not in disc:
                        disc[w] = low[w] = next(timer)
                        stack.append((w, eid, iter(sorted(self._adj[w]))))
                        advanced = True
                        break
                    low[v] = min(low[v], disc[w])
                if not advanced:
                    stack.pop()
                    if stack:
                        p = stack[-1][0]
                        low[p] = min(low[p], low[v])
                        if low[v] > disc[p]:
                            out.append(in_edge)
        return sorted(out)

    def is_bridgeless(self):
        return not self.bridges()

    def is_2_connected(self):
        # For loopless graphs of max degree 3 a cutvertex forces a bridge,
        # so 2-connectedness reduces to connected + bridgeless (order >= 3).
        return self.n() >= 3 and self.is_connected() and self.is_bridgeless()

    # -- equality / hashing -------------------------------------------------

    def edge_multiset(self):
        return sorted(self._edges.values())

    def __eq__(self, other):
        if not isinstance(other, MultiGraph):
            return NotImplemented
        return self._vertices == other._vertices and self._edges == other._edges

    def __hash__(self):
        return hash((self._vertices, tuple(sorted(self._edges.items()))))

    def __repr__(self):
        return f"MultiGraph(n={self.n()}, m={self.m()})"

    def relabelled(self, mapping):
        """Fresh graph with vertices renamed through ``mapping`` (a dict)."""
        return MultiGraph(
            {mapping[v] for v in self._vertices},
            {e: (mapping[u], mapping[v]) for e, (u, v) in self._edges.items()},
        )

    def dense(self):
        """Relabel vertices to 0..n-1 and edges to 0..m-1 (sorted order).

        Returns (graph, vertex_map, edge_map) where the maps send old ids
        to new ids.
        """
        vmap = {v: i for i, v in enumerate(sorted(self._vertices))}
        emap = {e: i for i, e in enumerate(sorted(self._edges))}
        g = MultiGraph(
            range(len(vmap)),
            {emap[e]: (vmap[u], vmap[v]) for e, (u, v) in self._edges.items()},
        )
        return g, vmap, emap


@dataclass(frozen=True)
class Network:
    """A multigraph with an ordered list of degree-1 terminals (a k-pole).

    ``connectors``, when given, is an ordered tuple of (name, terminal-tuple)
    groups that partition the terminal list exactly.
    """

    graph: MultiGraph
    terminals: tuple
    connectors: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "terminals", tuple(self.terminals))
        object.__setattr__(
            self, "connectors", tuple((n, tuple(ts)) for n, ts in self.connectors)
        )
        if self.connectors:
            flat = [t for _, ts in self.connectors for t in ts]
            if sorted(flat) != sorted(self.terminals):
                raise GraphError("connectors do not partition the terminal list")

    def nonterminal_count(self):
        return self.graph.n() - len(self.terminals)

    def terminal_edge(self, t):
        """The unique edge id incident with terminal t."""
        inc = self.graph.incident(t)
        if len(inc) != 1:
            raise GraphError(f"terminal {t} has degree {len(inc)}")
        return inc[0][0]

    def connector_sizes(self):
        return tuple(len(ts) for _, ts in self.connectors)


@dataclass(frozen=True)
class Circuit:
    """Closed walk with no repeated vertices, stored as a vertex tuple."""

    vertices: tuple

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))

    def __len__(self):
        return len(self.vertices)

    @property
    def parity(self):
        return len(self.vertices) % 2

    def is_odd(self):
        return self.parity == 1

    def vertex_set(self):
        return frozenset(self.vertices)


# -- validation --------------------------------------------------------------


@dataclass
class ValidationReport:
    """Degree/loop violations found by validate(); empty == contract holds."""

    violations: list = field(default_factory=list)

    def ok(self):
        return not self.violations


def validate(g, mode="cubic", terminals=()):
    """Report every degree violation for the given mode.

    mode="cubic": every vertex must have degree 3.
    mode="network": the listed terminals must have degree 1, all other
    vertices degree 3.
    """
    report = ValidationReport()
    terminals = set(terminals)
    for v in sorted(g.vertices):
        d = g.degree(v)
        if mode == "network" and v in terminals:
            if d != 1:
                report.violations.append((v, d, 1))
        elif d != 3:
            report.violations.append((v, d, 3))
    return report


def validate_network(net):
    return validate(net.graph, mode="network", terminals=net.terminals)


# -- circuits ------------------------------------------------------------------


def girth(g):
    """Length of a shortest circuit; a parallel pair counts as a 2-circuit.

    Raises AcyclicError on a forest.
    """
    best = None
    seen_pairs = set()
    for pair in g.edges.values():
        if pair in seen_pairs:
            return 2
        seen_pairs.add(pair)
    # BFS from every vertex on the underlying simple graph.
    for s in sorted(g.vertices):
        dist = {s: 0}
        parent = {s: None}
        queue = deque([s])
        while queue:
            v = queue.popleft()
            if best is not None and dist[v] * 2 >= best:
                continue
            for w in g.neighbours(v):
                if w not in dist:
                    dist[w] = dist[v] + 1
                    parent[w] = v
                    queue.append(w)
                elif parent[v] != w and parent[w] != v:
                    cyc = dist[v] + dist[w] + 1
                    if best is None or cyc < best:
                        best = cyc
    if best is None:
        raise AcyclicError("graph is a forest: no circuit exists")
    return best


def enumerate_circuits(g, max_len):
    """All circuits of length <= max_len, each exactly once up to
    rotation/reflection, as Circuit values in a deterministic order.

    Circuits are identified by their cyclic vertex sequence; a pair of
    vertices joined by >= 2 parallel edges yields one 2-circuit.
    """
    if max_len < 2:
        raise GraphError("max_len must be >= 2")
    out = []
    # 2-circuits: parallel pairs.
    seen_pairs = set()
    mult = {}
    for pair in g.edges.values():
        mult[pair] = mult.get(pair, 0) + 1
    for (u, v), k in sorted(mult.items()):
        if k >= 2:
            out.append(Circuit((u, v)))
        seen_pairs.add((u, v))
    if max_len == 2:
        return out
    # Longer circuits: DFS with smallest vertex first; reflections removed
    # by requiring path[1] < path[-1].
    adj = {v: g.neighbours(v) for v in g.vertices}
    for s in sorted(g.vertices):
        stack = [(s, [s], {s})]
        while stack:
            v, path, onpath = stack.pop()
            for w in reversed(adj[v]):
                if w == s and len(path) >= 3:
                    if path[1] < path[-1]:
                        out.append(Circuit(tuple(path)))
                elif w > s and w not in onpath and len(path) < max_len:
                    stack.append((w, path + [w], onpath | {w}))
    out.sort(key=lambda c: (len(c), c.vertices))
    return out


def five_circuit_incidence(g):
    """Per-vertex count of 5-circuits plus the (n0..n6) profile.

    Returns (counts, profile, over6) where over6 lists any vertex on more
    than six 5-circuits (an internal-consistency error for cubic graphs).
    """
    counts = {v: 0 for v in g.vertices}
    for c in enumerate_circuits(g, 5):
        if len(c) == 5:
            for v in c.vertices:
                counts[v] += 1
    profile = [0] * 7
    over6 = []
    for v, k in counts.items():
        if k > 6:
            over6.append(v)
        else:
            profile[k] += 1
    return counts, tuple(profile), sorted(over6)


def is_circuit_of(g, circuit):
    """True iff the vertex sequence is a circuit of g (consecutive adjacency)."""
    vs = circuit.vertices
    if len(vs) < 2 or len(set(vs)) != len(vs):
        return False
    if len(vs) == 2:
        return g.multiplicity(vs[0], vs[1]) >= 2
    return all(g.multiplicity(vs[i], vs[(i + 1) % len(vs)]) >= 1 for i in range(len(vs)))


# -- structural edits ----------------------------------------------------------


def _next_ids(g):
    nv = max(g.vertices, default=-1) + 1
    ne = max(g.edges, default=-1) + 1
    return nv, ne


def subdivide(g, eid):
    """Replace edge eid by a path of two edges through a fresh vertex.

    Returns (graph, new_vertex, (eid_u, eid_v), edge_map).  edge_map sends
    surviving old edge ids to themselves; eid is consumed.
    """
    if eid not in g.edges:
        raise GraphError(f"no edge {eid}")
    u, v = g.edges[eid]
    w, ne = _next_ids(g)
    edges = {e: p for e, p in g.edges.items() if e != eid}
    edges[ne] = (u, w)
    edges[ne + 1] = (w, v)
    g2 = MultiGraph(set(g.vertices) | {w}, edges)
    emap = {e: e for e in g.edges if e != eid}
    return g2, w, (ne, ne + 1), emap


def suppress_degree2(g, v):
    """Remove a degree-2 vertex, joining its two neighbours by a new edge.

    Rejects parallel edges at v (the result would be a loop); a new edge
    parallel to an existing one is allowed.
    Returns (graph, new_edge, edge_map).
    """
    inc = g.incident(v)
    if len(inc) != 2:
        raise GraphError(f"vertex {v} has degree {g.degree(v)}, need 2")
    (e1, a), (e2, b) = inc
    if a == b:
        raise LoopError(f"suppressing {v} would create a loop at {a}")
    _, ne = _next_ids(g)
    edges = {e: p for e, p in g.edges.items() if e not in (e1, e2)}
    edges[ne] = (min(a, b), max(a, b))
    g2 = MultiGraph(set(g.vertices) - {v}, edges)
    emap = {e: e for e in g.edges if e not in (e1, e2)}
    return g2, ne, emap


def split_off(g, v):
    """Split off vertex v: remove it and attach a fresh terminal to each
    dangling edge.  Returns a Network whose terminals correspond to v's
    incident edges in edge-id order.
    """
    d = g.degree(v)
    if d not in (2, 3):
        raise GraphError(f"vertex {v} has degree {d}, need 2 or 3")
    nv, ne = _next_ids(g)
    edges = {}
    terminals = []
    for e, p in g.edges.items():
        if v in p:
            continue
        edges[e] = p
    for i, (eid, other) in enumerate(g.incident(v)):
        t = nv + i
        terminals.append(t)
        edges[ne + i] = (other, t)
    g2 = MultiGraph((set(g.vertices) - {v}) | set(terminals), edges)
    return Network(g2, tuple(terminals))


def contract_circuit(g, circuit):
    """Contract a circuit of g into a single vertex, dropping all edges with
    both ends on the circuit.  Returns (graph, new_vertex, edge_map).
    """
    if not is_circuit_of(g, circuit):
        raise GraphError(f"{circuit.vertices} is not a circuit of the graph")
    cset = circuit.vertex_set()
    w, _ = _next_ids(g)
    edges = {}
    emap = {}
    for e, (u, v) in g.edges.items():
        iu, iv = u in cset, v in cset
        if iu and iv:
            continue
        if iu:
            u = w
        if iv:
            v = w
        edges[e] = (min(u, v), max(u, v))
        emap[e] = e
    g2 = MultiGraph((set(g.vertices) - cset) | {w}, edges)
    return g2, w, emap


def disjoint_union(a, b):
    """Relabel b away from a and return (merged graph, b_vertex_map, b_edge_map)."""
    nv, ne = _next_ids(a)
    vmap = {v: nv + i for i, v in enumerate(sorted(b.vertices))}
    emap = {e: ne + i for i, e in enumerate(sorted(b.edges))}
    edges = dict(a.edges)
    for e, (u, v) in b.edges.items():
        edges[emap[e]] = (vmap[u], vmap[v])
    g = MultiGraph(set(a.vertices) | set(vmap.values()), edges)
    return g, vmap, emap


def junction(a, ta, b=None, tb=None):
    """Join two terminal edges into one nonterminal edge.

    With four arguments, joins terminal ta of network a with terminal tb of
    the disjoint network b.  With (a, ta, None, tb) or b=a, joins two
    distinct terminals of the same network.  Returns the merged Network, or
    the bare MultiGraph when no terminals remain.
    """
    if b is None or b is a:
        g = a.graph
        terms = list(a.terminals)
        sa, sb = ta, tb
    else:
        g, vmap, _ = disjoint_union(a.graph, b.graph)
        terms = list(a.terminals) + [vmap[t] for t in b.terminals]
        sa, sb = ta, vmap[tb]
    if sa == sb:
        raise GraphError("cannot junction a terminal with itself")
    for t in (sa, sb):
        if t not in terms:
            raise GraphError(f"{t} is not a terminal")
        if g.degree(t) != 1:
            raise GraphError(f"terminal {t} has degree {g.degree(t)}")
    (e1, x) = g.incident(sa)[0]
    (e2, y) = g.incident(sb)[0]
    if x == sb:
        # the two terminals are joined by a single edge already
        raise LoopError("junction of the two ends of one edge would create a loop")
    if x == y:
        raise LoopError(f"junction would create a loop at {x}")
    _, ne = _next_ids(g)
    edges = {e: p for e, p in g.edges.items() if e not in (e1, e2)}
    edges[ne] = (min(x, y), max(x, y))
    g2 = MultiGraph(set(g.vertices) - {sa, sb}, edges)
    remaining = tuple(t for t in terms if t not in (sa, sb))
    if remaining:
        return Network(g2, remaining)
    return g2
