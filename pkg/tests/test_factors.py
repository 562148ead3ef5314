from fractions import Fraction

from snarklab.constructions import (
    build_P3,
    flower_snark,
    k33,
    petersen,
)
from snarklab.factors import (
    OddnessCertificate,
    OddnessUndefined,
    complement_two_factor,
    enumerate_perfect_matchings,
    enumerate_two_factors,
    oddness_upper_bound,
    max_selected_edges,
    min_selected_5circuits,
    oddness,
    oddness_no_pruning,
    special_edges,
    ratio_bound_check,
)
from snarklab.multigraph import MultiGraph, enumerate_circuits, junction


def k4():
    return MultiGraph.from_edge_list([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


def test_matching_counts(pet):
    assert len(list(enumerate_perfect_matchings(k4()))) == 3
    assert len(list(enumerate_perfect_matchings(pet))) == 6
    triple = MultiGraph({0, 1}, {0: (0, 1), 1: (0, 1), 2: (0, 1)})
    assert len(list(enumerate_perfect_matchings(triple))) == 3


def test_matching_two_factor_bijection(pet):
    pms = list(enumerate_perfect_matchings(pet))
    tfs = list(enumerate_two_factors(pet))
    assert len(pms) == len(tfs)
    for pm, tf in zip(pms, tfs):
        assert tf.edges == frozenset(pet.edges) - pm
        assert complement_two_factor(pet, pm).edges == tf.edges


def test_decompose_two_factor(pet):
    tf = next(enumerate_two_factors(pet))
    assert sorted(len(c) for c, _ in tf.circuits) == [5, 5]
    assert tf.odd_count == 2
    assert tf.p_counts() == {5: 2}


def test_oddness_examples(pet):
    assert oddness(k4()).omega == 0
    assert oddness(k33()).omega == 0
    cert = oddness(pet)
    assert isinstance(cert, OddnessCertificate)
    assert cert.omega == 2
    assert cert.two_factor.odd_count == 2
    assert oddness(flower_snark(5)).omega == 2


def test_oddness_undefined_on_bridge():
    # two doubled-edge triangles joined by a bridge (smallest cubic graph
    # with a bridge)
    bridge_graph = MultiGraph(
        {0, 1, 2, 3, 4, 5},
        {
            0: (0, 1), 1: (0, 1), 2: (0, 2), 3: (1, 2),
            4: (2, 3),
            5: (3, 4), 6: (3, 5), 7: (4, 5), 8: (4, 5),
        },
    )
    assert bridge_graph.is_cubic()
    res = oddness(bridge_graph)
    assert isinstance(res, OddnessUndefined)
    assert str(res) == f"undefined: bridge (edge {res.bridge})"
    assert res.bridge == 4


def test_oddness_agrees_with_exhaustive(pet):
    for g in (k4(), k33(), pet, flower_snark(3)):
        assert oddness(g).omega == oddness_no_pruning(g).omega


def test_oddness_stop_at(pet):
    cert = oddness(pet, stop_at=2)
    assert cert.omega <= 2 or cert.omega == 2


def test_special_edges_petersen(pet):
    assert special_edges(pet) == set()


def test_special_edges_k33():
    # bipartite: no 2-factor has an odd circuit, so every edge is special
    assert special_edges(k33()) == set(k33().edges)


def test_special_edges_junction_snark():
    # joining two Petersen 3-poles by three edges gives an 18-vertex snark
    # whose special edges are exactly the three junction edges
    a = build_P3()
    b = build_P3()
    j = junction(a, a.terminals[0], b, b.terminals[0])
    j = junction(j, j.terminals[0], None, j.terminals[2])
    g = junction(j, j.terminals[0], None, j.terminals[1])
    assert isinstance(g, MultiGraph)
    assert g.n() == 18 and g.is_cubic()
    specials = special_edges(g)
    assert len(specials) == 3
    # removing the three special edges disconnects the graph into the
    # two 9-vertex sides
    rest = MultiGraph(g.vertices, {e: p for e, p in g.edges.items() if e not in specials})
    comps = rest.components()
    assert sorted(len(c) for c in comps) == [9, 9]


def test_min_selected_5circuits(pet):
    fives = [c for c in enumerate_circuits(pet, 5) if len(c) == 5]
    assert len(fives) == 12
    k_all, tf = min_selected_5circuits(pet, fives)
    assert k_all == 2  # every 2-factor is a pair of 5-circuits
    assert tf.odd_count == 2
    k_one, _ = min_selected_5circuits(pet, fives[:1])
    assert k_one == 0  # some 2-factor avoids any single 5-circuit


def test_max_selected_edges(pet):
    k, tf = max_selected_edges(pet, set(pet.edges))
    assert k == 10 and len(tf.edges) == 10
    pm = next(enumerate_perfect_matchings(pet))
    k, _ = max_selected_edges(pet, pm)
    assert k == 4  # distinct Petersen matchings share exactly one edge
    assert Fraction(k) >= Fraction(2 * len(pm), 3)


def test_oddness_upper_bound(pet):
    assert oddness_upper_bound(10, 12) == Fraction(2)
    assert Fraction(oddness(pet).omega) <= oddness_upper_bound(10, 12)


def test_ratio_bound_check(pet):
    rep = ratio_bound_check(pet)
    assert rep.exempt and rep.connectivity_class == "petersen"
    rep = ratio_bound_check(flower_snark(5))
    assert not rep.exempt
    assert rep.ratio == Fraction(10)
    assert rep.ok
