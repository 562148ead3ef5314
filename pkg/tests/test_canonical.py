import random

from snarklab.canonical import are_isomorphic, canonical_form
from snarklab.constructions import flower_snark, k33
from snarklab.multigraph import MultiGraph


def shuffled(g, seed):
    rng = random.Random(seed)
    verts = sorted(g.vertices)
    perm = dict(zip(verts, rng.sample(verts, len(verts))))
    return g.relabelled(perm)


def test_canonical_invariant_under_relabelling(pet):
    base = canonical_form(pet)
    for seed in range(5):
        assert canonical_form(shuffled(pet, seed)) == base


def test_distinguishes_nonisomorphic():
    assert canonical_form(k33()) != canonical_form(
        MultiGraph.from_edge_list(
            [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]
        )
    )  # K33 vs prism


def test_are_isomorphic(pet):
    assert are_isomorphic(pet, shuffled(pet, 1))
    assert not are_isomorphic(pet, flower_snark(3))


def test_multigraph_multiplicity_matters():
    a = MultiGraph({0, 1, 2}, {0: (0, 1), 1: (0, 1), 2: (1, 2), 3: (0, 2)})
    b = MultiGraph({0, 1, 2}, {0: (0, 1), 1: (1, 2), 2: (1, 2), 3: (0, 2)})
    assert are_isomorphic(a, b)
    c = MultiGraph({0, 1, 2}, {0: (0, 1), 1: (1, 2), 2: (0, 2), 3: (0, 2)})
    assert are_isomorphic(a, c)
