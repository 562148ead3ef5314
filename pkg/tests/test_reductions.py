import json

import pytest

from snarklab.canonical import are_isomorphic
from snarklab.colouring import is_colourable
from snarklab.constructions import (
    build_H,
    build_P2,
    build_P3,
    four_circuit_expansion,
    triangle_expansion,
)
from snarklab.factors import oddness
from snarklab.multigraph import (
    GraphError,
    MultiGraph,
    Network,
    girth,
    junction,
    split_off,
    subdivide,
)
from snarklab.reductions import (
    RULES,
    ReductionTrace,
    cycle_separating_three_edge_cuts,
    reduce_2cuts,
    reduce_3cuts,
    reduce_all,
    reduce_to_girth4,
    reduce_to_girth5,
    replay,
    two_edge_cuts,
)


def k4():
    return MultiGraph.from_edge_list([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


def close_network(net):
    """Join the remaining terminals of a 2- or 3-terminal network pairwise
    into a cubic graph (for 3 terminals the first joins the last)."""
    while True:
        ts = net.terminals
        if len(ts) == 2:
            out = junction(net, ts[0], None, ts[1])
            return out
        net = junction(net, ts[0], None, ts[-1])


def test_identity_on_irreducible(pet):
    for name, op in RULES.items():
        out, trace = op(pet)
        assert len(trace) == 0, name
        assert out == pet


def test_requires_snark():
    for op in RULES.values():
        with pytest.raises(GraphError):
            op(k4())


def test_triangle_expansion_contracts_back(pet):
    g = triangle_expansion(pet, 0)
    assert g.n() == 12 and girth(g) == 3
    assert not is_colourable(g)
    out, trace = reduce_to_girth4(g)
    assert are_isomorphic(out, pet)
    assert [s.rule for s in trace.steps] == ["girth3-contract"]
    assert replay(g, trace) == out


def test_parallel_pair_contracts_back(pet):
    p2 = build_P2()
    gadget = Network(
        MultiGraph({0, 1, 2, 3}, {0: (0, 1), 1: (0, 1), 2: (0, 2), 3: (1, 3)}),
        (2, 3),
    )
    sn = junction(p2, p2.terminals[0], gadget, 2)
    sn = junction(sn, sn.terminals[0], None, sn.terminals[1])
    assert sn.is_cubic() and girth(sn) == 2
    assert not is_colourable(sn)
    out, trace = reduce_to_girth4(sn)
    assert are_isomorphic(out, pet)
    assert trace.steps[0].rule == "girth2-contract"


def test_four_circuit_reduction():
    h1 = build_H(1)
    es = sorted(h1.edges)
    e1 = es[0]
    ends = set(h1.endpoints(e1))
    e2 = next(e for e in es if e != e1 and not (set(h1.endpoints(e)) & ends))
    g = four_circuit_expansion(h1, e1, e2)
    assert g.n() == h1.n() + 4 and girth(g) == 4
    assert not is_colourable(g)
    before = oddness(g).omega
    out, trace = reduce_to_girth5(g)
    assert girth(out) >= 5
    assert out.is_2_connected() and not is_colourable(out)
    assert oddness(out).omega == before
    assert replay(g, trace) == out


def test_cut2_reduction(pet):
    k4s, w, _, _ = subdivide(k4(), 0)
    pole = split_off(k4s, w)
    q = build_P2()
    sn = junction(q, q.terminals[0], pole, pole.terminals[0])
    sn = junction(sn, sn.terminals[0], None, sn.terminals[1])
    assert sn.is_cubic() and len(two_edge_cuts(sn)) >= 1
    out, trace = reduce_2cuts(sn)
    assert are_isomorphic(out, pet)
    assert [s.rule for s in trace.steps] == ["2-cut"]
    # after reduction, no 2-cut has a colourable side (here: none remain)
    assert two_edge_cuts(out) == []


def test_cut3_reduction(pet):
    pole3 = split_off(k4(), 0)
    p3 = build_P3()
    net = junction(p3, p3.terminals[0], pole3, pole3.terminals[0])
    net = junction(net, net.terminals[0], None, net.terminals[2])
    sn = junction(net, net.terminals[0], None, net.terminals[1])
    assert sn.is_cubic()
    out, trace = reduce_3cuts(sn)
    assert are_isomorphic(out, pet)
    assert [s.rule for s in trace.steps] == ["3-cut"]


def test_cut3_identity_on_H2():
    # H2 has a cycle-separating 3-cut with both sides uncolourable
    h2 = build_H(2)
    assert len(cycle_separating_three_edge_cuts(h2)) >= 1
    out, trace = reduce_3cuts(h2)
    assert len(trace) == 0
    assert out == h2


def test_reduce_all_fixpoint(pet):
    g = triangle_expansion(triangle_expansion(pet, 0), 1)
    out, trace = reduce_all(g)
    assert are_isomorphic(out, pet)
    assert len(trace) == 2
    assert replay(g, trace) == out


def test_trace_serialization(pet):
    g = triangle_expansion(pet, 0)
    out, trace = reduce_to_girth4(g)
    d = trace.to_dict()
    text = json.dumps(d)  # must be JSON-serializable
    back = json.loads(text)
    assert back["steps"][0]["rule"] == "girth3-contract"
    assert back["steps"][0]["order_before"] == 12
    assert back["steps"][0]["order_after"] == 10
    assert ReductionTrace() + trace == trace


def test_determinism(pet):
    g = triangle_expansion(pet, 3)
    out1, tr1 = reduce_to_girth4(g)
    out2, tr2 = reduce_to_girth4(g)
    assert out1 == out2 and tr1 == tr2
