import pytest

from snarklab.connectivity import (
    CyclicCutCertificate,
    cyclic_connectivity,
    cyclic_connectivity_bruteforce,
    edge_connectivity,
    is_cycle_separating,
    is_cyclically_k_connected,
    validate_cut_certificate,
)
from snarklab.constructions import build_H, flower_snark, k33
from snarklab.multigraph import GraphError, MultiGraph


def k4():
    return MultiGraph.from_edge_list([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


def cycle(n):
    return MultiGraph.from_edge_list([(i, (i + 1) % n) for i in range(n)])


def test_edge_connectivity():
    assert edge_connectivity(k4()) == 3
    assert edge_connectivity(cycle(5)) == 2
    assert edge_connectivity(MultiGraph.from_edge_list([(0, 1), (1, 2)])) == 1


def test_petersen_zeta(pet):
    res = cyclic_connectivity(pet, k_cap=7)
    assert res.kind == "exact" and res.zeta == 5
    assert res.describe() == "5"
    assert validate_cut_certificate(pet, res.certificate)
    assert len(res.certificate.cut) == 5


def test_no_cut_sentinel():
    for g in (k4(), k33()):
        res = cyclic_connectivity(g, k_cap=7)
        assert res.kind == "no_cut"
        assert res.describe() == "no cycle-separating cut"
        # true by convention for every k
        for k in (2, 4, 8):
            ok, cert = is_cyclically_k_connected(g, k)
            assert ok and cert is None
        assert cyclic_connectivity_bruteforce(g, k_cap=4) is None


def test_flower_zeta():
    # the five spokes around the hub circuit form a cycle-separating cut
    res = cyclic_connectivity(flower_snark(5), k_cap=7)
    assert res.kind == "exact" and res.zeta == 5
    assert validate_cut_certificate(flower_snark(5), res.certificate)


def test_H_candidates_zeta():
    zetas = set()
    for which in (1, 2):
        g = build_H(which)
        res = cyclic_connectivity(g, k_cap=7)
        assert res.kind == "exact"
        assert validate_cut_certificate(g, res.certificate)
        zetas.add(res.zeta)
    assert zetas == {2, 3}


def test_is_cyclically_k_connected_with_counterexample():
    g = build_H(2)
    ok3, _ = is_cyclically_k_connected(g, 3)
    assert ok3
    ok4, cert = is_cyclically_k_connected(g, 4)
    assert not ok4
    assert len(cert.cut) == 3
    assert validate_cut_certificate(g, cert)
    assert is_cycle_separating(g, cert.cut)


def test_certificate_validation_rejects_tampering(pet):
    res = cyclic_connectivity(pet)
    c = res.certificate
    bad = CyclicCutCertificate(
        c.cut, c.side_a | {min(c.side_b)}, c.side_b - {min(c.side_b)},
        c.witness_a, c.witness_b,
    )
    assert not validate_cut_certificate(pet, bad)


def test_k_range_checked():
    with pytest.raises(GraphError):
        is_cyclically_k_connected(k4(), 1)
    with pytest.raises(GraphError):
        is_cyclically_k_connected(k4(), 9)
