"""Oddness-preserving reductions on snarks.

Four rules, each removing a short circuit or a small edge cut while keeping
the minimum number of odd circuits over 2-factors intact:

* ``reduce_to_girth4`` — contract 2- and 3-circuits;
* ``reduce_to_girth5`` — eliminate 4-circuits by deleting an opposite edge
  pair and suppressing the circuit;
* ``reduce_2cuts``     — replace a 2-edge-cut whose one side is colourable
  by the other side, closed with an edge;
* ``reduce_3cuts``     — replace the colourable side of a cycle-separating
  3-edge-cut by a single vertex.

Every public op returns ``(reduced_graph, ReductionTrace)``; replaying the
trace on the original input reproduces the output exactly.  Preservation of
oddness is not assumed: with ``verify_omega=True`` (the default) it is
checked a posteriori on the instance and a mismatch raises.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .colouring import is_colourable
from .multigraph import (
    Circuit,
    GraphError,
    MultiGraph,
    _next_ids,
    contract_circuit,
    enumerate_circuits,
    suppress_degree2,
)

RULE_GIRTH2 = "girth2-contract"
RULE_GIRTH3 = "girth3-contract"
RULE_CIRCUIT4 = "4-circuit"
RULE_CUT2 = "2-cut"
RULE_CUT3 = "3-cut"


@dataclass(frozen=True)
class ReductionStep:
    """One reduction move: the rule applied, the structure consumed, and
    the graph orders before/after."""

    rule: str
    vertices: tuple  # vertices consumed (circuit in cyclic order / removed side, sorted)
    edges: tuple  # edges consumed (removed pair for 4-circuits, the cut edges for cuts)
    order_before: int
    order_after: int

    def to_dict(self):
        return {
            "rule": self.rule,
            "vertices": list(self.vertices),
            "edges": list(self.edges),
            "order_before": self.order_before,
            "order_after": self.order_after,
        }


@dataclass(frozen=True)
class ReductionTrace:
    steps: tuple = field(default_factory=tuple)

    def __len__(self):
        return len(self.steps)

    def __add__(self, other):
        return ReductionTrace(self.steps + other.steps)

    def to_dict(self):
        return {"steps": [s.to_dict() for s in self.steps]}


def replay(g, trace):
    """Re-apply a trace to its original input; returns the reduced graph."""
    for step in trace.steps:
        g = _apply_step(g, step)[0]
    return g


# -- preconditions ---------------------------------------------------------------


def _require_snark(g):
    if not g.is_cubic():
        raise GraphError("reductions require a cubic graph")
    if not g.is_2_connected():
        raise GraphError("reductions require a 2-connected graph")
    if is_colourable(g):
        raise GraphError("reductions require an uncolourable graph")


def _verify_omega(before, after, rule):
    from .factors import OddnessUndefined, oddness

    a = oddness(before)
    b = oddness(after)
    if isinstance(a, OddnessUndefined) or isinstance(b, OddnessUndefined):
        raise GraphError(f"{rule}: oddness undefined (bridge) on a reduction instance")
    if a.omega != b.omega:
        raise GraphError(
            f"{rule}: oddness not preserved on this instance "
            f"({a.omega} -> {b.omega}); reduction aborted"
        )


# -- step application (shared by the ops and by replay) ---------------------------


def _apply_step(g, step):
    """Apply one step to g; returns (graph, realized_step).

    The realized step re-derives consumed edges from the graph so that the
    ops can first build a candidate step from structure ids alone.
    """
    if step.rule in (RULE_GIRTH2, RULE_GIRTH3):
        return _apply_contract(g, step)
    if step.rule == RULE_CIRCUIT4:
        return _apply_circuit4(g, step)
    if step.rule == RULE_CUT2:
        return _apply_cut2(g, step)
    if step.rule == RULE_CUT3:
        return _apply_cut3(g, step)
    raise GraphError(f"unknown reduction rule {step.rule!r}")


def _make_step(rule, vertices, edges, before, after):
    return ReductionStep(rule, tuple(vertices), tuple(edges), before.n(), after.n())


def _apply_contract(g, step):
    circuit = Circuit(step.vertices)
    cset = circuit.vertex_set()
    inner = tuple(sorted(e for e, (u, v) in g.edges.items() if u in cset and v in cset))
    g2, w, _ = contract_circuit(g, circuit)
    if g2.degree(w) == 2:
        g2, _, _ = suppress_degree2(g2, w)
    realized = _make_step(step.rule, step.vertices, inner, g, g2)
    return g2, realized


def _circuit4_edge_pairs(g, circuit):
    """The two opposite edge-id pairs of a 4-circuit, lex-least pair first."""
    vs = circuit.vertices
    eids = []
    for i in range(4):
        u, v = vs[i], vs[(i + 1) % 4]
        eids.append(min(g.edges_between(u, v)))
    pairs = [tuple(sorted((eids[0], eids[2]))), tuple(sorted((eids[1], eids[3])))]
    pairs.sort()
    return pairs


def _apply_circuit4(g, step):
    pair = step.edges
    cset = set(step.vertices)
    edges = {e: p for e, p in g.edges.items() if e not in pair}
    g2 = MultiGraph(set(g.vertices), edges)
    for v in sorted(cset):
        g2, _, _ = suppress_degree2(g2, v)
    realized = _make_step(RULE_CIRCUIT4, step.vertices, pair, g, g2)
    return g2, realized


def _side_components(g, cut):
    edges = {e: p for e, p in g.edges.items() if e not in cut}
    return MultiGraph(set(g.vertices), edges).components()


def _side_graph(g, cut, side):
    side = set(side)
    edges = {
        e: p
        for e, p in g.edges.items()
        if e not in cut and p[0] in side and p[1] in side
    }
    return MultiGraph(side, edges)


def _close_2pole(side_graph):
    """Join the two degree-2 vertices of an opened 2-cut side by an edge."""
    deg2 = sorted(v for v in side_graph.vertices if side_graph.degree(v) == 2)
    if len(deg2) != 2:
        raise GraphError(f"2-cut side has {len(deg2)} degree-2 vertices, need 2")
    _, ne = _next_ids(side_graph)
    edges = dict(side_graph.edges)
    edges[ne] = (deg2[0], deg2[1])
    return MultiGraph(set(side_graph.vertices), edges)


def _close_3pole(side_graph):
    """Join a fresh vertex to the three degree-2 vertices of a 3-cut side."""
    deg2 = sorted(v for v in side_graph.vertices if side_graph.degree(v) == 2)
    if len(deg2) != 3:
        raise GraphError(f"3-cut side has {len(deg2)} degree-2 vertices, need 3")
    w, ne = _next_ids(side_graph)
    edges = dict(side_graph.edges)
    for i, v in enumerate(deg2):
        edges[ne + i] = (min(v, w), max(v, w))
    return MultiGraph(set(side_graph.vertices) | {w}, edges)


def _apply_cut2(g, step):
    # step.vertices holds the removed (colourable) side, sorted
    removed = set(step.vertices)
    kept = set(g.vertices) - removed
    g2 = _close_2pole(_side_graph(g, set(step.edges), kept))
    realized = _make_step(RULE_CUT2, step.vertices, step.edges, g, g2)
    return g2, realized


def _apply_cut3(g, step):
    removed = set(step.vertices)
    kept = set(g.vertices) - removed
    g2 = _close_3pole(_side_graph(g, set(step.edges), kept))
    realized = _make_step(RULE_CUT3, step.vertices, step.edges, g, g2)
    return g2, realized


# -- cut enumeration --------------------------------------------------------------


def two_edge_cuts(g):
    """All 2-edge-cuts as sorted edge-id pairs, lexicographically ordered.

    Assumes a bridgeless input (so every returned pair is a minimal cut)."""
    out = []
    eids = sorted(g.edges)
    for pair in itertools.combinations(eids, 2):
        if len(_side_components(g, set(pair))) == 2:
            out.append(pair)
    return out


def _has_circuit(side_graph):
    return side_graph.m() >= side_graph.n()  # connected side: circuit iff not a tree


def cycle_separating_three_edge_cuts(g):
    """Minimal 3-edge-cuts both of whose sides contain a circuit, as sorted
    edge-id triples in lexicographic order.  Trivial vertex cuts delta(v)
    are excluded because their singleton side is acyclic."""
    if two_edge_cuts(g):
        raise GraphError("3-cut enumeration expects no 2-edge-cuts (reduce those first)")
    out = []
    eids = sorted(g.edges)
    for triple in itertools.combinations(eids, 3):
        comps = _side_components(g, set(triple))
        if len(comps) != 2:
            continue
        sides = [_side_graph(g, set(triple), c) for c in comps]
        # minimality: every cut edge must run between the two sides
        s0 = set(comps[0])
        if any((g.edges[e][0] in s0) == (g.edges[e][1] in s0) for e in triple):
            continue
        if all(_has_circuit(s) for s in sides):
            out.append(triple)
    return out


# -- the four reduction ops --------------------------------------------------------


def reduce_to_girth4(g, verify_omega=True):
    """Contract 2- and 3-circuits (lex-least first) until girth >= 4.

    Input must be a snark; the result is again a snark and has the same
    oddness, which is checked on the instance when verify_omega is set.
    """
    _require_snark(g)
    out = g
    steps = []
    while True:
        circs = enumerate_circuits(out, 3)
        if not circs:
            break
        c = min(circs, key=lambda c: tuple(sorted(c.vertices)))
        rule = RULE_GIRTH2 if len(c) == 2 else RULE_GIRTH3
        out, realized = _apply_step(out, ReductionStep(rule, c.vertices, (), 0, 0))
        steps.append(realized)
    if steps:
        if not out.is_2_connected() or is_colourable(out):
            raise GraphError("girth-4 reduction left a non-snark; aborted")
        if verify_omega:
            _verify_omega(g, out, "reduce_to_girth4")
    return out, ReductionTrace(tuple(steps))


def reduce_to_girth5(g, verify_omega=True):
    """Eliminate 4-circuits (interleaving girth-4 reduction) until girth >= 5.

    Each 4-circuit elimination has two opposite-edge-pair choices, and only
    some choice sequences preserve oddness.  The op searches the choice
    tree depth-first in lexicographic order and returns the first sequence
    whose result is a 2-connected uncolourable graph (of unchanged oddness
    when verify_omega is set); the result is therefore deterministic.
    """
    _require_snark(g)
    if not enumerate_circuits(g, 4):
        return g, ReductionTrace(())
    from .factors import OddnessUndefined, oddness

    want = None
    if verify_omega:
        cert = oddness(g)
        if isinstance(cert, OddnessUndefined):
            raise GraphError("reduce_to_girth5: oddness undefined (bridge) on input")
        want = cert.omega

    def dfs(cur, steps):
        short = enumerate_circuits(cur, 4)
        if not short:
            if not cur.is_2_connected() or is_colourable(cur):
                return None
            if want is not None:
                cert = oddness(cur)
                if isinstance(cert, OddnessUndefined) or cert.omega != want:
                    return None
            return cur, steps
        if any(len(c) <= 3 for c in short):
            out, tr = reduce_to_girth4(cur, verify_omega=False)
            return dfs(out, steps + list(tr.steps))
        c = min(
            (c for c in short if len(c) == 4),
            key=lambda c: tuple(sorted(c.vertices)),
        )
        for pair in _circuit4_edge_pairs(cur, c):
            try:
                cand, realized = _apply_step(
                    cur, ReductionStep(RULE_CIRCUIT4, c.vertices, pair, 0, 0)
                )
            except GraphError:
                continue  # this choice collapses to a loop; try the other pair
            if not cand.is_2_connected():
                continue
            found = dfs(cand, steps + [realized])
            if found is not None:
                return found
        return None

    found = dfs(g, [])
    if found is None:
        raise GraphError(
            "internal error: no 4-circuit elimination sequence yields a "
            "2-connected uncolourable graph of unchanged oddness"
        )
    out, steps = found
    return out, ReductionTrace(tuple(steps))


def _reduce_cuts(g, cuts_of, closer, rule):
    out = g
    steps = []
    while True:
        progressed = False
        for cut in cuts_of(out):
            comps = _side_components(out, set(cut))
            comps = sorted(comps, key=lambda c: tuple(sorted(c)))
            closed = [closer(_side_graph(out, set(cut), c)) for c in comps]
            colourable = [is_colourable(h) for h in closed]
            if not any(colourable):
                continue  # both sides uncolourable: this cut may stay
            if all(colourable):
                raise GraphError(
                    f"{rule}: both sides of cut {cut} are colourable on an "
                    "uncolourable input; inconsistent state"
                )
            removed = comps[colourable.index(True)]
            out, realized = _apply_step(
                out, ReductionStep(rule, tuple(sorted(removed)), tuple(cut), 0, 0)
            )
            steps.append(realized)
            progressed = True
            break  # re-enumerate cuts on the reduced graph
        if not progressed:
            break
    return out, steps


def reduce_2cuts(g, verify_omega=True):
    """Eliminate 2-edge-cuts with a colourable side, keeping the
    uncolourable side closed by an edge; afterwards every 2-edge-cut
    separates two uncolourable sides."""
    _require_snark(g)
    out, steps = _reduce_cuts(g, two_edge_cuts, _close_2pole, RULE_CUT2)
    if steps:
        if not out.is_2_connected() or is_colourable(out):
            raise GraphError("2-cut reduction left a non-snark; aborted")
        if verify_omega:
            _verify_omega(g, out, "reduce_2cuts")
    return out, ReductionTrace(tuple(steps))


def reduce_3cuts(g, verify_omega=True):
    """Eliminate cycle-separating 3-edge-cuts with a colourable side,
    replacing that side by a single vertex on the three cut stubs.
    Trivial cuts around a single vertex are exempt."""
    _require_snark(g)
    out, steps = _reduce_cuts(
        g, cycle_separating_three_edge_cuts, _close_3pole, RULE_CUT3
    )
    if steps:
        if not out.is_2_connected() or is_colourable(out):
            raise GraphError("3-cut reduction left a non-snark; aborted")
        if verify_omega:
            _verify_omega(g, out, "reduce_3cuts")
    return out, ReductionTrace(tuple(steps))


_ALL_RULES = (
    ("girth4", reduce_to_girth4),
    ("girth5", reduce_to_girth5),
    ("cut2", reduce_2cuts),
    ("cut3", reduce_3cuts),
)

RULES = {name: op for name, op in _ALL_RULES}


def reduce_all(g, verify_omega=True):
    """Apply girth4, girth5, cut2, cut3 in order, repeating to a fixpoint."""
    out = g
    trace = ReductionTrace()
    while True:
        changed = False
        for _, op in _ALL_RULES:
            out, tr = op(out, verify_omega=verify_omega)
            if tr.steps:
                changed = True
                trace = trace + tr
        if not changed:
            return out, trace
