"""Built-in verification suites: family claims, property checks, oracle
agreement.

Each suite is a list of named claims; ``run_suite`` executes them and
returns one ``ClaimResult`` per claim.  The test suite and the ``verify``
CLI command both drive these functions, so there is a single source of
truth for every checked statement.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

from .canonical import canonical_form
from .colouring import (
    boundary_colourings,
    find_colouring,
    is_colourable,
    resistance,
    uncolourable_after_each_vertex_deletion,
    verify_parity,
    UNCOLOURABLE,
)
from .connectivity import (
    cyclic_connectivity,
    cyclic_connectivity_bruteforce,
    edge_connectivity,
    is_cyclically_k_connected,
)
from .constructions import (
    P_NETWORK_BUILDERS,
    P_NONTERMINAL_COUNTS,
    build_H_candidates,
    build_M,
    build_M_plan,
    build_N1,
    build_N2,
    build_P2,
    build_P3,
    build_R,
    build_Z,
    chain_Z,
    check_superposition_resistance,
    four_circuit_expansion,
    petersen,
    ring_join,
    snark44,
    triangle_expansion,
)
from .factors import (
    enumerate_two_factors,
    oddness_upper_bound,
    max_selected_edges,
    min_selected_5circuits,
    oddness,
    oddness_no_pruning,
    OddnessUndefined,
    ratio_bound_check,
)
from .graphio import read_graph6_file
from .multigraph import (
    MultiGraph,
    Network,
    enumerate_circuits,
    five_circuit_incidence,
    girth,
    junction,
)
from .reductions import (
    reduce_2cuts,
    reduce_3cuts,
    reduce_to_girth4,
    reduce_to_girth5,
    replay,
)


@dataclass(frozen=True)
class ClaimResult:
    suite: str
    name: str
    ok: bool
    detail: str
    seconds: float


def run_suite(suite_name, claims, progress=None):
    """Execute (name, fn) claims; fn returns a detail string or raises
    AssertionError."""
    out = []
    for name, fn in claims:
        t0 = time.perf_counter()
        try:
            detail = fn() or ""
            ok = True
        except AssertionError as exc:
            detail = str(exc)
            ok = False
        dt = time.perf_counter() - t0
        res = ClaimResult(suite_name, name, ok, detail, dt)
        out.append(res)
        if progress:
            progress(res)
    return out


def load_fixture(name):
    """Graphs from a bundled fixture file, in file order."""
    text = resources.files("snarklab").joinpath("data", name).read_text()
    return [g for _, g in read_graph6_file(text)]


# -- family claims ----------------------------------------------------------------


def claim_petersen_baseline():
    g = petersen()
    assert g.n() == 10, f"order {g.n()} != 10"
    assert girth(g) == 5, f"girth {girth(g)} != 5"
    zr = cyclic_connectivity(g)
    assert zr.kind == "exact" and zr.zeta == 5, f"zeta {zr.describe()} != 5"
    rho, _ = resistance(g)
    assert rho == 2, f"rho {rho} != 2"
    cert = oddness(g)
    assert cert.omega == 2, f"omega {cert.omega} != 2"
    fives = [c for c in enumerate_circuits(g, 5) if len(c) == 5]
    assert len(fives) == 12, f"{len(fives)} 5-circuits != 12"
    tfs = list(enumerate_two_factors(g))
    assert len(tfs) == 6, f"{len(tfs)} 2-factors != 6"
    for tf in tfs:
        lens = sorted(len(c) for c, _ in tf.circuits)
        assert lens == [5, 5], f"2-factor circuit lengths {lens} != [5, 5]"
    return "order 10, girth 5, zeta 5, rho 2, omega 2, twelve 5-circuits, six 2-factors of two 5-circuits"


def claim_p_networks():
    expected = {"P2": 10, "P3": 9, "P4v": 8, "P4e": 10, "P5vvv": 7, "P5ev": 9}
    assert P_NONTERMINAL_COUNTS == expected, f"counts {P_NONTERMINAL_COUNTS}"
    for name, want in expected.items():
        net = P_NETWORK_BUILDERS[name]()
        got = net.nonterminal_count()
        assert got == want, f"{name}: {got} nonterminal vertices, want {want}"
    # boundary-colouring laws
    for name in ("P2", "P3"):
        bc = boundary_colourings(P_NETWORK_BUILDERS[name]())
        assert bc == set(), f"{name} is colourable as a network"
    bc = boundary_colourings(P_NETWORK_BUILDERS["P4v"]())
    assert len(bc) == 9 and all(t[0] == t[1] and t[2] == t[3] for t in bc), (
        f"P4v law fails: {sorted(bc)[:4]}..."
    )
    bc = boundary_colourings(P_NETWORK_BUILDERS["P4e"]())
    assert len(bc) == 12 and all(t[0] != t[1] and t[2] != t[3] for t in bc), (
        "P4e law fails"
    )
    bc = boundary_colourings(P_NETWORK_BUILDERS["P5vvv"]())
    assert len(bc) == 36, f"P5vvv has {len(bc)} tuples"
    for t in bc:
        counts = sorted(t.count(c) for c in (1, 2, 3))
        assert counts == [1, 1, 3], f"P5vvv colour counts {counts} in {t}"
        assert (t[0] == t[1]) != (t[2] == t[3]), f"P5vvv pair law fails on {t}"
    bc = boundary_colourings(P_NETWORK_BUILDERS["P5ev"]())
    assert len(bc) == 42, f"P5ev has {len(bc)} tuples"
    assert all(t[0] != t[1] for t in bc), "P5ev pair law fails"
    return "counts (10,9,8,10,7,9); all boundary laws hold"


def claim_order28_search():
    cands = build_H_candidates()
    assert len(cands) == 2, f"{len(cands)} candidates after dedup, want 2"
    ecs = {}
    for g in cands:
        assert g.n() == 28, f"order {g.n()} != 28"
        assert girth(g) >= 5, f"girth {girth(g)} < 5"
        cert = oddness(g)
        assert cert.omega == 4, f"omega {cert.omega} != 4"
        rho, _ = resistance(g)
        assert rho == 3, f"rho {rho} != 3"
        ec = edge_connectivity(g)
        zr = cyclic_connectivity(g)
        assert zr.kind == "exact" and zr.zeta == ec, (
            f"zeta {zr.describe()} != edge connectivity {ec}"
        )
        ecs[ec] = g
    assert set(ecs) == {2, 3}, f"cyclic connectivities {sorted(ecs)} != [2, 3]"
    return "two order-28 omega-4 snarks; zeta 2 and 3; each rho 3, girth >= 5"


def claim_R_family(slow=True):
    r1 = build_R(1)
    assert r1.n() == 28 and oddness(r1).omega == 4, "R1 is not (28, omega 4)"
    assert Fraction(r1.n(), 4) == 7, "R1 ratio != 7"
    r2 = build_R(2)
    assert r2.n() == 40, f"R2 order {r2.n()} != 40"
    w2 = oddness(r2).omega
    assert w2 == 6, f"R2 omega {w2} != 6"
    assert Fraction(40, 6) == Fraction(20, 3), "R2 ratio != 20/3"
    detail = "R1 = (28, omega 4, ratio 7); R2 = (40, omega 6, ratio 20/3)"
    if slow:
        r3 = build_R(3)
        assert r3.n() == r1.n() + 30, f"R3 order {r3.n()} != 58"
        w3 = oddness(r3).omega
        assert w3 == 8, f"R3 omega {w3} != 8"
        r4 = build_R(4)
        assert r4.n() == r2.n() + 30, f"R4 order {r4.n()} != 70"
        w4 = oddness(r4).omega
        assert w4 == 10, f"R4 omega {w4} != 10"
        detail += "; R3 = (58, omega 8); R4 = (70, omega 10): +30 vertices, +4 oddness"
    return detail


def claim_ring_family():
    n1 = build_N1()
    assert n1.nonterminal_count() == 18, "N1 nonterminal count != 18"
    assert boundary_colourings(n1) == set(), "N1 is colourable as a network"
    n2 = build_N2()
    assert n2.nonterminal_count() == 26, "N2 nonterminal count != 26"
    assert boundary_colourings(n2) == set(), "N2 is colourable as a network"
    nonterm = sorted(set(n2.graph.vertices) - set(n2.terminals))
    for w in nonterm:
        sub = MultiGraph(
            set(n2.graph.vertices) - {w},
            {e: p for e, p in n2.graph.edges.items() if w not in p},
        )
        assert not is_colourable(sub), f"N2 - {w} is colourable"
    g44 = snark44()
    assert g44.n() == 44, f"ring(N2, N1) order {g44.n()} != 44"
    assert girth(g44) == 5, f"44-snark girth {girth(g44)} != 5"
    assert oddness(g44).omega == 4, "44-snark omega != 4"
    rho, _ = resistance(g44)
    assert rho == 3, f"44-snark rho {rho} != 3"
    zr = cyclic_connectivity(g44)
    assert zr.kind == "exact" and zr.zeta == 4, f"44-snark zeta {zr.describe()} != 4"
    g52 = ring_join([build_N2(), build_N2()], verify=True)
    assert g52.n() == 52, f"ring(N2, N2) order {g52.n()} != 52"
    rho52, _ = resistance(g52)
    assert rho52 == 4, f"ring(N2, N2) rho {rho52} != 4"
    return "N1/N2 uncolourable (27 calls); 44-snark (44, rho 3, omega 4, zeta 4, girth 5); ring(N2,N2) = (52, rho 4)"


def claim_Z_family():
    z = build_Z()
    assert z.nonterminal_count() == 25, f"Z nonterminal count {z.nonterminal_count()} != 25"
    assert boundary_colourings(z) == set(), "Z is colourable as a network"
    c2 = chain_Z(2)
    assert c2.n() == 50, f"chain_Z(2) order {c2.n()} != 50"
    assert not is_colourable(c2), "chain_Z(2) colourable"
    assert uncolourable_after_each_vertex_deletion(c2), "chain_Z(2) has rho < 2"
    zr = cyclic_connectivity(c2)
    assert zr.kind == "exact" and zr.zeta == 5, f"chain_Z(2) zeta {zr.describe()} != 5"
    return "Z: 25 nonterminal vertices, uncolourable; chain_Z(2): 50 vertices, rho >= 2, zeta 5"


def claim_M_family():
    m2 = build_M(2, verify=False)
    assert m2.n() == 198, f"M2 order {m2.n()} != 198"
    assert not is_colourable(m2), "M2 is colourable"
    assert uncolourable_after_each_vertex_deletion(m2), "M2 - v colourable for some v"
    assert is_cyclically_k_connected(m2, 6), "M2 not cyclically 6-connected"
    l2, plan = build_M_plan(2)
    rep = check_superposition_resistance(l2, plan)
    assert rep.holds, f"resistance inequality fails: {rep}"
    assert rep.rho_base == 2, f"rho(L2) {rep.rho_base} != 2"
    return "M2: 198 vertices, uncolourable, rho >= 2 (199 calls), cyclically 6-connected; rho(M2) >= rho(L2) = 2"


def claim_reductions():
    inputs = []
    P = petersen()
    for v in sorted(P.vertices)[:5]:
        inputs.append(("girth4", triangle_expansion(P, v)))
    t = triangle_expansion(P, 0)
    inputs.append(("girth4", triangle_expansion(t, max(t.vertices))))
    # parallel-pair snarks: junction of P2 with a 2-circuit gadget
    for k in range(2):
        p2 = build_P2(edge=k)
        gad = Network(
            MultiGraph({0, 1, 2, 3}, {0: (0, 1), 1: (0, 1), 2: (0, 2), 3: (1, 3)}),
            (2, 3),
        )
        sn = junction(p2, p2.terminals[0], gad, 2)
        sn = junction(sn, sn.terminals[0], None, sn.terminals[1])
        inputs.append(("girth4", sn))
    h1 = None
    from .constructions import build_H

    h1 = build_H(1)
    es = sorted(h1.edges)
    pairs = []
    for e1 in es:
        ends = set(h1.endpoints(e1))
        for e2 in es:
            if e2 > e1 and not (set(h1.endpoints(e2)) & ends):
                pairs.append((e1, e2))
        if len(pairs) >= 4:
            break
    for e1, e2 in pairs[:4]:
        inputs.append(("girth5", four_circuit_expansion(h1, e1, e2)))
    # junction-built 2-cut snarks: P2 closed through a colourable 2-pole
    from .multigraph import split_off, subdivide

    k4 = MultiGraph.from_edge_list([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    for eid in (0, 1, 2, 3):
        k4s, w, _, _ = subdivide(k4, eid)
        pole = split_off(k4s, w)
        q = build_P2()
        sn = junction(q, q.terminals[0], pole, pole.terminals[0])
        sn = junction(sn, sn.terminals[0], None, sn.terminals[1])
        inputs.append(("cut2", sn))
    # junction-built 3-cut snarks: P3 closed through a colourable 3-pole
    from .constructions import build_P3

    for v in (0, 1, 2, 3):
        pole3 = split_off(k4, v)
        p3 = build_P3()
        net = junction(p3, p3.terminals[0], pole3, pole3.terminals[0])
        net = junction(net, net.terminals[0], None, net.terminals[2])
        sn = junction(net, net.terminals[0], None, net.terminals[1])
        inputs.append(("cut3", sn))
    assert len(inputs) >= 20, f"only {len(inputs)} constructed inputs"
    ops = {
        "girth4": reduce_to_girth4,
        "girth5": reduce_to_girth5,
        "cut2": reduce_2cuts,
        "cut3": reduce_3cuts,
    }
    from .connectivity import cyclic_connectivity as cc
    from .reductions import cycle_separating_three_edge_cuts, two_edge_cuts
    from .reductions import _close_2pole, _close_3pole, _side_components, _side_graph

    for kind, g in inputs:
        op = ops[kind]
        before = oddness(g).omega
        out, trace = op(g)  # verify_omega=True re-checks internally
        after = oddness(out).omega
        assert before == after, f"{kind}: omega {before} -> {after}"
        assert out.n() <= g.n(), f"{kind}: order increased"
        assert out.is_2_connected(), f"{kind}: output not 2-connected"
        assert not is_colourable(out), f"{kind}: output colourable"
        assert replay(g, trace) == out, f"{kind}: trace replay mismatch"
        out2, trace2 = op(g)
        assert trace2 == trace and out2 == out, f"{kind}: nondeterministic"
        if kind == "girth4":
            assert girth(out) >= 4, f"girth4: girth {girth(out)}"
            zb, za = cc(g), cc(out)
            if zb.kind == "exact" and za.kind == "exact":
                assert za.zeta >= zb.zeta, f"girth4: zeta {zb.zeta} -> {za.zeta}"
        elif kind == "girth5":
            assert girth(out) >= 5, f"girth5: girth {girth(out)}"
        elif kind == "cut2":
            for cut in two_edge_cuts(out):
                for comp in _side_components(out, set(cut)):
                    side = _close_2pole(_side_graph(out, set(cut), comp))
                    assert not is_colourable(side), f"cut2: colourable side at {cut}"
        elif kind == "cut3":
            for cut in cycle_separating_three_edge_cuts(out):
                for comp in _side_components(out, set(cut)):
                    side = _close_3pole(_side_graph(out, set(cut), comp))
                    assert not is_colourable(side), f"cut3: colourable side at {cut}"
    return f"{len(inputs)} inputs: omega preserved, postconditions hold, replay deterministic"


def claims(slow=True):
    claims = [
        ("petersen-baseline", claim_petersen_baseline),
        ("networks-and-boundary-laws", claim_p_networks),
        ("order28-search", claim_order28_search),
        ("extension-family-R", lambda: claim_R_family(slow=slow)),
        ("ring-family", claim_ring_family),
        ("chain-family-Z", claim_Z_family),
        ("reduction-suite", claim_reductions),
    ]
    if slow:
        claims.insert(6, ("superposition-family-M", claim_M_family))
    return claims


# -- property suite ---------------------------------------------------------------


def _all_small_cuts(g, max_size):
    """All edge cuts delta(S) of size <= max_size over vertex subsets S."""
    verts = sorted(g.vertices)
    n = len(verts)
    seen = set()
    cuts = []
    for mask in range(1, 1 << (n - 1)):  # fix verts[-1] outside S: halves the work
        s = {verts[i] for i in range(n - 1) if (mask >> i) & 1}
        cut = frozenset(
            e for e, (u, v) in g.edges.items() if (u in s) != (v in s)
        )
        if 0 < len(cut) <= max_size and cut not in seen:
            seen.add(cut)
            cuts.append(cut)
    return cuts


def properties(seed=0, size_cap=12, progress=None):
    fixture = [g for g in load_fixture("cubic_bridgeless_le12.g6") if g.n() <= size_cap]
    rng = random.Random(seed)
    results = {"graphs": len(fixture), "snarks": 0}

    def check_measures():
        for g in fixture:
            cert = oddness(g)
            assert not isinstance(cert, OddnessUndefined), "bridge in fixture"
            w = cert.omega
            rv, _ = resistance(g, "vertex")
            re_, _ = resistance(g, "edge")
            assert w % 2 == 0, f"omega {w} odd"
            assert rv <= w, f"rho {rv} > omega {w}"
            assert rv != 1, "rho == 1"
            assert (rv == 2) == (w == 2), f"rho {rv} vs omega {w}"
            assert rv == re_, f"vertex rho {rv} != edge rho {re_}"
        return f"rho/omega laws on {len(fixture)} graphs"

    def check_parity():
        for g in fixture:
            col = find_colouring(g)
            if col is UNCOLOURABLE:
                continue
            for cut in _all_small_cuts(g, 4):
                assert verify_parity(col, cut), f"parity fails on cut {sorted(cut)}"
        return "parity on all cuts of size <= 4"

    def check_five_circuit_selection():
        for g in fixture:
            fives = [c for c in enumerate_circuits(g, 5) if len(c) == 5]
            if not fives:
                continue
            subsets = []
            if 2 ** len(fives) <= 256:
                for r in range(len(fives) + 1):
                    subsets.extend(itertools.combinations(fives, r))
            else:
                for _ in range(100):
                    r = rng.randint(0, len(fives))
                    subsets.append(tuple(rng.sample(fives, r)))
            for sub in subsets:
                k, _ = min_selected_5circuits(g, list(sub))
                assert Fraction(k) <= Fraction(len(sub), 6), (
                    f"selected 5-circuit minimum {k} > |C|/6 = {len(sub)}/6"
                )
        return "5-circuit selection bound (<= |C|/6)"

    def check_edge_selection():
        for g in fixture:
            eids = sorted(g.edges)
            for _ in range(100):
                r = rng.randint(0, len(eids))
                s = rng.sample(eids, r)
                k, _ = max_selected_edges(g, s)
                assert Fraction(k) >= Fraction(2 * len(s), 3), (
                    f"2-factor covers only {k} of {len(s)} selected edges"
                )
        return "edge selection bound (>= 2|S|/3)"

    def check_snark_bounds():
        pet = canonical_form(petersen())
        snarks = [g for g in fixture if not is_colourable(g)]
        results["snarks"] = len(snarks)
        for g in snarks:
            if girth(g) < 4:
                continue
            counts, profile, over6 = five_circuit_incidence(g)
            assert not over6, f"vertex on > 6 5-circuits: {over6}"
            n = g.n()
            n4, n5, n6 = profile[4], profile[5], profile[6]
            if canonical_form(g) != pet:
                assert n6 == 0, f"n6 = {n6} on a non-Petersen snark"
            assert Fraction(n5) <= Fraction(2 * n, 5), f"n5 = {n5} > 2n/5"
            if is_cyclically_k_connected(g, 3):
                assert n5 == 0, f"cyclically 3-connected but n5 = {n5}"
            if is_cyclically_k_connected(g, 5):
                assert n4 == 0, f"cyclically 5-connected but n4 = {n4}"
            q = sum(1 for c in enumerate_circuits(g, 5) if len(c) == 5)
            w = oddness(g).omega
            assert Fraction(w) <= oddness_upper_bound(n, q), (
                f"omega {w} > (3n+q)/21 = {oddness_upper_bound(n, q)}"
            )
            rep = ratio_bound_check(g, omega=w)
            assert rep.exempt or rep.ok, f"ratio {rep.ratio} < bound {rep.bound}"
        return f"5-circuit profile, oddness and ratio bounds on {len(snarks)} snark members"

    claims = [
        ("measures-rho-omega", check_measures),
        ("parity-on-small-cuts", check_parity),
        ("five-circuit-selection", check_five_circuit_selection),
        ("edge-selection", check_edge_selection),
        ("snark-bounds", check_snark_bounds),
    ]
    return run_suite("properties", claims, progress=progress)


# -- oracle agreement --------------------------------------------------------------


def oracles(size_cap=16, progress=None):
    small = load_fixture("cubic_bridgeless_le12.g6")
    named = load_fixture("named_le16.g6")
    zeta_graphs = [g for g in small + named if g.n() <= size_cap]
    odd_graphs = [g for g in small if g.n() <= 12]

    def check_zeta():
        for g in zeta_graphs:
            fast = cyclic_connectivity(g, k_cap=7)
            brute = cyclic_connectivity_bruteforce(g, k_cap=4)
            if brute is not None:
                assert fast.kind == "exact" and fast.zeta == brute, (
                    f"zeta {fast.describe()} != brute-force {brute} on n={g.n()}"
                )
            else:  # no cycle-separating cut of size <= 4
                assert fast.kind == "no_cut" or (
                    fast.zeta >= 5 if fast.kind == "exact" else True
                ), f"zeta {fast.describe()} < brute-force lower bound 5 on n={g.n()}"
        return f"cyclic connectivity agrees on {len(zeta_graphs)} graphs (k <= 4 exact)"

    def check_oddness():
        for g in odd_graphs:
            a = oddness(g)
            b = oddness_no_pruning(g)
            assert a.omega == b.omega, (
                f"branch-and-bound omega {a.omega} != exhaustive {b.omega}"
            )
        return f"oddness agrees on {len(odd_graphs)} graphs"

    claims = [("zeta-vs-bruteforce", check_zeta), ("oddness-vs-exhaustive", check_oddness)]
    return run_suite("oracles", claims, progress=progress)
