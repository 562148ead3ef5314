#!/usr/bin/env python3
"""Generate the bundled graph fixtures.

Writes two graph6 files into src/snarklab/data/:

* cubic_bridgeless_le12.g6 — every connected bridgeless cubic simple graph
  on up to 12 vertices, one per isomorphism class.  Generated by writing
  each cubic graph as a 2-factor plus a perfect matching (exhaustive over
  cycle partitions and avoiding matchings, deduplicated by canonical
  form); the count of *connected* cubic graphs per order is cross-checked
  against the known census (1, 2, 5, 19, 85 for n = 4, 6, 8, 10, 12)
  before anything is written.

* named_le16.g6 — a few standard cubic graphs on 14-16 vertices (Heawood,
  generalized Petersen GP(7,2) and GP(8,3)) used by the cut-enumeration
  oracle tests.

Run from the repository root:  python3 tools/gen_fixture.py
"""

import itertools
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from snarklab.canonical import canonical_form  # noqa: E402
from snarklab.graphio import write_graph6  # noqa: E402
from snarklab.multigraph import MultiGraph  # noqa: E402

CONNECTED_CUBIC_COUNTS = {4: 1, 6: 2, 8: 5, 10: 19, 12: 85}


def _cycle_partitions(n, min_part=3, largest=None):
    """Partitions of n into parts >= 3, nonincreasing order."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for p in range(min(largest, n), min_part - 1, -1):
        if n - p == 0 or n - p >= min_part:
            for rest in _cycle_partitions(n - p, min_part, p):
                yield (p,) + rest


def _matchings_avoiding(n, forbidden):
    """All perfect matchings of K_n avoiding the forbidden vertex pairs."""
    out = []

    def rec(unmatched, acc):
        if not unmatched:
            out.append(tuple(acc))
            return
        u = unmatched[0]
        for i in range(1, len(unmatched)):
            w = unmatched[i]
            if (u, w) in forbidden:
                continue
            acc.append((u, w))
            rec(unmatched[1:i] + unmatched[i + 1 :], acc)
            acc.pop()

    rec(tuple(range(n)), [])
    return out


def all_cubic_graphs(n):
    """All cubic simple graphs on n vertices that have a perfect matching,
    one per isomorphism class.

    Every such graph is an edge-disjoint union of a 2-factor and a perfect
    matching, so enumerating (cycle partition, avoiding matching) pairs and
    deduplicating by canonical form is exhaustive.  For n <= 14 every
    connected cubic graph has a perfect matching (the smallest one without
    has 16 vertices), so this misses nothing at fixture scale.
    """
    finals = {}
    for part in _cycle_partitions(n):
        # canonical 2-factor: consecutive blocks of cycle lengths `part`
        fedges = []
        base = 0
        for p in part:
            for i in range(p):
                a, b = base + i, base + (i + 1) % p
                fedges.append((min(a, b), max(a, b)))
            base += p
        forbidden = set(fedges)
        for m in _matchings_avoiding(n, forbidden):
            edges = {i: e for i, e in enumerate(fedges + list(m))}
            g = MultiGraph(range(n), edges)
            finals.setdefault(canonical_form(g), g)
    return list(finals.values())


def generalized_petersen(n, k):
    edges = {}
    e = 0
    for i in range(n):
        edges[e] = (i, (i + 1) % n)
        e += 1
        edges[e] = (i, n + i)
        e += 1
        edges[e] = (n + i, n + (i + k) % n)
        e += 1
    return MultiGraph(range(2 * n), edges)


def heawood():
    """14-cycle plus chords i ~ i+5 for even i (LCF [5,-5]^7)."""
    edges = {}
    e = 0
    for i in range(14):
        edges[e] = (i, (i + 1) % 14)
        e += 1
    for i in range(0, 14, 2):
        edges[e] = tuple(sorted((i, (i + 5) % 14)))
        e += 1
    return MultiGraph(range(14), edges)


def main():
    data_dir = Path(__file__).resolve().parent.parent / "src" / "snarklab" / "data"
    data_dir.mkdir(parents=True, exist_ok=True)

    lines = [
        "# Connected bridgeless cubic simple graphs on 4-12 vertices,",
        "# one graph6 string per line, one graph per isomorphism class.",
        "# Generated by tools/gen_fixture.py (2-factor + perfect-matching",
        "# decomposition, deduplicated by canonical form; connected-cubic",
        "# counts per order verified against the census 1, 2, 5, 19, 85).",
    ]
    for n in (4, 6, 8, 10, 12):
        graphs = all_cubic_graphs(n)
        connected = [g for g in graphs if g.is_connected()]
        if len(connected) != CONNECTED_CUBIC_COUNTS[n]:
            raise SystemExit(
                f"census mismatch at n={n}: generated {len(connected)} "
                f"connected cubic graphs, expected {CONNECTED_CUBIC_COUNTS[n]}"
            )
        bridgeless = [g for g in connected if g.is_bridgeless()]
        codes = sorted(write_graph6(g) for g in bridgeless)
        lines.extend(codes)
        print(
            f"n={n}: {len(graphs)} cubic, {len(connected)} connected, "
            f"{len(bridgeless)} bridgeless"
        )
    out = data_dir / "cubic_bridgeless_le12.g6"
    out.write_text("\n".join(lines) + "\n")
    print(f"wrote {out}")

    named = [
        ("Heawood graph (14 vertices, girth 6)", heawood()),
        ("generalized Petersen GP(7,2) (14 vertices)", generalized_petersen(7, 2)),
        ("generalized Petersen GP(8,3) (16 vertices)", generalized_petersen(8, 3)),
    ]
    lines = ["# Standard cubic graphs on 14-16 vertices for oracle tests."]
    for desc, g in named:
        lines.append(f"# {desc}")
        lines.append(write_graph6(g))
    out = data_dir / "named_le16.g6"
    out.write_text("\n".join(lines) + "\n")
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
