"""Canonical forms for multigraphs via refinement with backtracking.

``canonical_form`` returns a byte string that is equal for two multigraphs
iff they are isomorphic (respecting parallel-edge multiplicities).  The
search is exact: iterated colour refinement, individualization of a vertex
from the first smallest non-singleton cell, and best-leaf selection with
prefix pruning.  Intended for the desk-scale graphs handled here (a few
hundred vertices, modest symmetry); it is not nauty.
"""

from __future__ import annotations


def _adjacency(g):
    """vertex -> {neighbour: multiplicity} on dense labels 0..n-1."""
    dense, vmap, _ = g.dense()
    n = dense.n()
    adj = [dict() for _ in range(n)]
    for u, v in dense.edges.values():
        adj[u][v] = adj[u].get(v, 0) + 1
        adj[v][u] = adj[v].get(u, 0) + 1
    return n, adj


def _refine(n, adj, colours):
    """Iterated neighbourhood refinement; returns stable colour array."""
    colours = list(colours)
    while True:
        sig = [
            (colours[v], tuple(sorted((colours[w], m) for w, m in adj[v].items())))
            for v in range(n)
        ]
        order = sorted(range(n), key=lambda v: sig[v])
        new = [0] * n
        c = 0
        for i, v in enumerate(order):
            if i and sig[v] != sig[order[i - 1]]:
                c += 1
            new[v] = c
        if new == colours:
            return colours
        colours = new


def _cells(n, colours):
    cells = {}
    for v in range(n):
        cells.setdefault(colours[v], []).append(v)
    return [sorted(cells[c]) for c in sorted(cells)]


def _leaf_code(n, adj, colours):
    """Edge multiset under the labelling induced by a discrete colouring."""
    lab = [0] * n
    for v in range(n):
        lab[v] = colours[v]
    code = []
    for u in range(n):
        for w, m in adj[u].items():
            if lab[u] <= lab[w]:
                code.append((lab[u], lab[w], m))
    code.sort()
    return tuple(code)


def _search(n, adj, colours, best):
    """Return the minimal leaf code reachable from this partition."""
    colours = _refine(n, adj, colours)
    cells = _cells(n, colours)
    target = next((c for c in cells if len(c) > 1), None)
    if target is None:
        code = _leaf_code(n, adj, colours)
        if best[0] is None or code < best[0]:
            best[0] = code
        return
    for v in target:
        child = list(colours)
        # individualize v: give it a colour just below its cell
        for w in range(n):
            if child[w] >= child[v] and w != v:
                child[w] += 1
        _search(n, adj, child, best)


def canonical_form(g):
    """Canonical byte string of a multigraph (isomorphism-complete)."""
    n, adj = _adjacency(g)
    if n == 0:
        return b"mg:0:"
    best = [None]
    _search(n, adj, [0] * n, best)
    body = ";".join(f"{u},{v},{m}" for u, v, m in best[0])
    return f"mg:{n}:{body}".encode()


def are_isomorphic(a, b):
    return canonical_form(a) == canonical_form(b)
