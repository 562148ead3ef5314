import pytest

from snarklab.canonical import are_isomorphic, canonical_form
from snarklab.colouring import boundary_colourings, is_colourable
from snarklab.constructions import (
    ConstructionError,
    P_NETWORK_BUILDERS,
    P_NONTERMINAL_COUNTS,
    assert_snark,
    build_H,
    build_L,
    build_N1,
    build_N2,
    build_P2,
    build_P4e,
    build_R,
    build_X,
    build_Y,
    build_Z,
    flower_snark,
    four_circuit_expansion,
    gv_extension,
    insert_into_edge,
    is_proper_superedge,
    k33,
    petersen,
    ring_join,
    ring_join_orientations,
    snark44,
    superpose,
    triangle_expansion,
    trivial_plan,
)
from snarklab.multigraph import MultiGraph, girth


def test_petersen_basics(pet):
    assert pet.n() == 10 and pet.m() == 15
    assert pet.is_cubic() and pet.is_2_connected()
    assert girth(pet) == 5
    assert not is_colourable(pet)


def test_flower_snarks():
    for k in (3, 5, 7):
        g = flower_snark(k)
        assert g.n() == 4 * k and g.is_cubic()
        assert not is_colourable(g)
    with pytest.raises(ConstructionError):
        flower_snark(4)


def test_k33():
    g = k33()
    assert g.n() == 6 and g.is_cubic() and girth(g) == 4


def test_assert_snark_rejects_colourable():
    k4 = MultiGraph.from_edge_list(
        [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    )
    with pytest.raises(ConstructionError):
        assert_snark(k4)


def test_p_network_counts():
    for name, build in P_NETWORK_BUILDERS.items():
        net = build()
        assert net.nonterminal_count() == P_NONTERMINAL_COUNTS[name], name
        # all Petersen-derived networks are uncolourable as open networks
        # except the 4- and 5-poles, which admit restricted boundary sets
        if name in ("P2", "P3"):
            assert boundary_colourings(net) == set(), name


def test_p_builders_choice_independent():
    # the Petersen graph is vertex- and edge-transitive, so the derived
    # networks do not depend on which vertex/edge is chosen
    assert len({canonical_form(build_P2(edge=k).graph) for k in (0, 5, 14)}) == 1
    base = canonical_form(build_P4e().graph)
    p = petersen()
    # a different distance-1 pair gives the same network up to isomorphism
    alt = next(
        (e1, e2)
        for e1 in sorted(p.edges)
        for e2 in sorted(p.edges)
        if e2 > e1 and (e1, e2) != (0, 2)
        and _dist1(p, e1, e2)
    )
    assert canonical_form(build_P4e(edges=alt).graph) == base


def _dist1(p, e1, e2):
    from snarklab.constructions import _edge_distance

    return _edge_distance(p, e1, e2) == 1


def test_N_networks():
    n1 = build_N1()
    assert n1.nonterminal_count() == 18
    assert boundary_colourings(n1) == set()
    n2 = build_N2()
    assert n2.nonterminal_count() == 26
    assert boundary_colourings(n2) == set()


def test_snark44():
    g = snark44(verify=True)
    assert g.n() == 44
    assert girth(g) == 5


def test_ring_join_orientations():
    blocks = [build_N2(), build_N1()]
    report = ring_join_orientations(blocks)
    assert len(report) == 4
    assert "bridgeless" in report.values()
    assert ring_join(blocks, verify=False).is_cubic()


def test_Z_network():
    z = build_Z()
    assert z.nonterminal_count() == 25
    assert z.connector_sizes() == (1, 3, 3)
    assert boundary_colourings(z) == set()


def test_gv_extension_order(pet):
    g = gv_extension(pet, 0)
    assert g.n() == 40 and g.is_cubic()


def test_R_family_orders():
    r2 = build_R(2, verify=False)
    assert r2.n() == 40 and r2.is_cubic()
    assert not is_colourable(r2)


def test_H_pair():
    h1, h2 = build_H(1), build_H(2)
    assert h1.n() == h2.n() == 28
    assert girth(h1) >= 5 and girth(h2) >= 5
    assert not are_isomorphic(h1, h2)


def test_expansions(pet):
    t = triangle_expansion(pet, 0)
    assert t.n() == 12 and girth(t) == 3 and t.is_cubic()
    e1, e2 = 0, next(
        e for e in sorted(pet.edges)
        if not (set(pet.endpoints(e)) & set(pet.endpoints(0)))
    )
    f = four_circuit_expansion(pet, e1, e2)
    assert f.n() == 14 and f.is_cubic() and girth(f) == 4


def test_insert_into_edge(pet):
    g = insert_into_edge(pet, 0, build_P2())
    assert g.n() == 20 and g.is_cubic()
    assert not is_colourable(g)


def test_supervertex_superedge_shapes():
    x = build_X()
    assert x.connector_sizes() == (3, 3, 1)
    assert x.nonterminal_count() == 1
    y = build_Y()
    assert y.nonterminal_count() == 18
    assert y.connector_sizes() == (3, 3)
    assert is_proper_superedge(y)


def test_trivial_plan_identity(pet):
    g, proj = superpose(trivial_plan(pet))
    assert are_isomorphic(g, pet)
    assert len(proj.vertex_map) >= pet.n()


def test_L_orders():
    assert build_L(2).n() == 18
    assert build_L(3).n() == 28
