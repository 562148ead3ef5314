import pytest

from snarklab.multigraph import (
    AcyclicError,
    Circuit,
    GraphError,
    LoopError,
    MultiGraph,
    contract_circuit,
    enumerate_circuits,
    five_circuit_incidence,
    girth,
    is_circuit_of,
    junction,
    split_off,
    subdivide,
    suppress_degree2,
    validate,
)


def k4():
    return MultiGraph.from_edge_list([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


def test_basic_accessors():
    g = k4()
    assert g.n() == 4 and g.m() == 6
    assert g.is_cubic()
    assert g.degree(0) == 3
    assert sorted(g.neighbours(0)) == [1, 2, 3]
    assert g.multiplicity(0, 1) == 1
    assert not g.has_parallel_edges()


def test_parallel_edges_and_loop_rejection():
    g = MultiGraph({0, 1}, {0: (0, 1), 1: (0, 1), 2: (0, 1)})
    assert g.multiplicity(0, 1) == 3
    assert g.is_cubic()
    assert g.has_parallel_edges()
    with pytest.raises(GraphError):
        MultiGraph({0}, {0: (0, 0)})


def test_components_bridges():
    g = MultiGraph.from_edge_list([(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)])
    assert g.is_connected()
    assert len(g.bridges()) == 1
    assert not g.is_bridgeless()
    assert g.is_2_connected() is False


def test_girth():
    assert girth(k4()) == 3
    assert girth(MultiGraph({0, 1}, {0: (0, 1), 1: (0, 1)})) == 2
    with pytest.raises(AcyclicError):
        girth(MultiGraph.from_edge_list([(0, 1), (1, 2)]))


def test_enumerate_circuits_k4():
    circs = enumerate_circuits(k4(), 4)
    lens = sorted(len(c) for c in circs)
    assert lens == [3, 3, 3, 3, 4, 4, 4]  # four triangles, three 4-circuits


def test_circuit_identity_dedup():
    g = k4()
    circs = enumerate_circuits(g, 3)
    assert all(is_circuit_of(g, c) for c in circs)
    assert len({tuple(sorted(c.vertices)) for c in circs}) == len(circs)


def test_five_circuit_incidence_petersen(pet):
    counts, profile, over6 = five_circuit_incidence(pet)
    assert over6 == []
    assert profile == (0, 0, 0, 0, 0, 0, 10)  # every vertex on six 5-circuits
    assert all(v == 6 for v in counts.values())


def test_subdivide_suppress_roundtrip():
    g = k4()
    g2, w, (e1, e2), emap = subdivide(g, 0)
    assert g2.degree(w) == 2 and g2.n() == 5
    g3, ne, _ = suppress_degree2(g2, w)
    assert g3.n() == 4 and g3.m() == 6
    assert sorted(g3.edges[ne]) == sorted(g.edges[0])


def test_suppress_rejects_loop():
    g = MultiGraph({0, 1}, {0: (0, 1), 1: (0, 1)})
    with pytest.raises(LoopError):
        suppress_degree2(g, 1)


def test_contract_circuit():
    g = k4()
    tri = Circuit((0, 1, 2))
    g2, w, _ = contract_circuit(g, tri)
    assert g2.n() == 2
    assert g2.multiplicity(w, 3) == 3


def test_split_off_and_junction():
    g = k4()
    net = split_off(g, 0)
    assert len(net.terminals) == 3
    assert net.nonterminal_count() == 3
    # junction two K4 3-poles back into a cubic graph (the 3-prism)
    other = split_off(k4(), 0)
    j = junction(net, net.terminals[0], other, other.terminals[0])
    j = junction(j, j.terminals[0], None, j.terminals[2])
    out = junction(j, j.terminals[0], None, j.terminals[1])
    assert isinstance(out, MultiGraph)
    assert out.is_cubic() and out.n() == 6


def test_junction_loop_detection():
    g = MultiGraph({0, 1, 2}, {0: (0, 1), 1: (0, 2)})
    from snarklab.multigraph import Network

    net = Network(g, (1, 2))
    with pytest.raises(LoopError):
        junction(net, 1, None, 2)


def test_validate():
    assert validate(k4(), mode="cubic").ok()
    rep = validate(MultiGraph.from_edge_list([(0, 1)]), mode="cubic")
    assert not rep.ok()
    assert len(rep.violations) == 2
