import numpy as np
import pytest

from snarklab.colouring import (
    EdgeColouring,
    GraphArrays,
    UNCOLOURABLE,
    _solve,
    _sweep_solve,
    boundary_colourings,
    find_colouring,
    is_colourable,
    is_proper,
    resistance,
    uncolourable_after_each_vertex_deletion,
    verify_deletion_witness,
    verify_parity,
)
from snarklab.constructions import flower_snark, k33, petersen, snark44
from snarklab.multigraph import MultiGraph, Network


def k4():
    return MultiGraph.from_edge_list([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


def test_k4_colourable():
    col = find_colouring(k4())
    assert col is not UNCOLOURABLE
    assert is_proper(k4(), col)


def test_petersen_uncolourable(pet):
    assert find_colouring(pet) is UNCOLOURABLE
    assert not is_colourable(pet)


def test_flower_snarks_uncolourable():
    for k in (3, 5, 7):
        assert not is_colourable(flower_snark(k))


def test_k33_colourable():
    col = find_colouring(k33())
    assert is_proper(k33(), col)


def test_triple_edge_colourable():
    g = MultiGraph({0, 1}, {0: (0, 1), 1: (0, 1), 2: (0, 1)})
    col = find_colouring(g)
    assert sorted(col.colours.values()) == [1, 2, 3]


def test_parity_at_vertex_cut():
    g = k4()
    col = find_colouring(g)
    for v in g.vertices:
        cut = [e for e, _ in g.incident(v)]
        assert verify_parity(col, cut)


def test_parity_matching_cut():
    # a colour class of K4 is a 2-edge cut with counts (2, 0, 0)
    g = k4()
    col = find_colouring(g)
    by_colour = {}
    for e, c in col.colours.items():
        by_colour.setdefault(c, []).append(e)
    for edges in by_colour.values():
        assert len(edges) == 2
        assert verify_parity(col, edges)


def test_resistance_examples(pet):
    assert resistance(k4())[0] == 0
    rho, witness = resistance(pet)
    assert rho == 2
    assert verify_deletion_witness(pet, witness)
    rho_e, witness_e = resistance(pet, mode="edge")
    assert rho_e == 2
    assert verify_deletion_witness(pet, witness_e)


def test_deletion_scan(pet):
    # Petersen has resistance 2, so some single deletion never suffices
    assert uncolourable_after_each_vertex_deletion(pet)


def test_boundary_colourings_empty_iff_uncolourable(pet):
    net = Network(pet, ())
    assert (boundary_colourings(net) == set()) == (not is_colourable(pet))


def test_sweep_engine_agrees_with_kernel():
    for g in (petersen(), flower_snark(5), k4(), k33(), snark44()):
        arr = GraphArrays(g)
        fixed = np.zeros(arr.m, dtype=np.int8)
        sweep = _sweep_solve(arr, fixed)
        kernel = _solve(arr)
        assert (sweep is None) == (kernel is None)
        if sweep is not None:
            colouring = EdgeColouring(
                {arr.edge_ids[e]: int(sweep[e]) for e in range(arr.m)}
            )
            assert is_proper(g, colouring)


def test_degree_cap():
    g = MultiGraph({0, 1, 2, 3, 4}, {i: (0, i + 1) for i in range(4)})
    with pytest.raises(Exception):
        find_colouring(g)
