"""Graph file formats: graph6 (simple graphs, bit-exact) and multi_text.

multi_text is a line-based multigraph format: an "n m" header line followed
by m lines "u v", one per edge; repeated lines encode parallel edges.
Blank lines and lines starting with '#' are ignored.
"""

from __future__ import annotations

from .multigraph import MultiGraph


class ParseError(ValueError):
    def __init__(self, message, line=None, offset=None):
        loc = ""
        if line is not None:
            loc = f" (line {line}" + (f", offset {offset}" if offset is not None else "") + ")"
        super().__init__(message + loc)
        self.line = line
        self.offset = offset


# -- graph6 --------------------------------------------------------------------


def _g6_encode_n(n):
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError("n too large for graph6")


def _g6_decode_n(s, line):
    if not s:
        raise ParseError("empty graph6 string", line)
    if s[0] != "~":
        return ord(s[0]) - 63, 1
    if len(s) >= 2 and s[1] != "~":
        if len(s) < 4:
            raise ParseError("truncated graph6 order", line)
        n = 0
        for ch in s[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        return n, 4
    if len(s) < 8:
        raise ParseError("truncated graph6 order", line)
    n = 0
    for ch in s[2:8]:
        n = (n << 6) | (ord(ch) - 63)
    return n, 8


def write_graph6(g):
    """graph6 string (header-free) of a simple graph with vertices 0..n-1.

    Multigraphs are rejected: graph6 cannot encode parallel edges.
    """
    if g.has_parallel_edges():
        raise ValueError("graph6 cannot encode parallel edges; use multi_text")
    dense, _, _ = g.dense()
    n = dense.n()
    adjset = set(dense.edges.values())
    bits = []
    for v in range(1, n):
        for u in range(v):
            bits.append(1 if (u, v) in adjset else 0)
    while len(bits) % 6:
        bits.append(0)
    chars = []
    for i in range(0, len(bits), 6):
        x = 0
        for b in bits[i : i + 6]:
            x = (x << 1) | b
        chars.append(chr(x + 63))
    return _g6_encode_n(n) + "".join(chars)


def read_graph6(s, line=None):
    """Parse one graph6 string into a MultiGraph."""
    s = s.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    n, pos = _g6_decode_n(s, line)
    need = (n * (n - 1) // 2 + 5) // 6
    body = s[pos:]
    if len(body) != need:
        raise ParseError(
            f"graph6 body has {len(body)} characters, expected {need} for n={n}",
            line,
            pos,
        )
    bits = []
    for ch in body:
        x = ord(ch) - 63
        if not 0 <= x <= 63:
            raise ParseError(f"invalid graph6 character {ch!r}", line)
        bits.extend((x >> s_) & 1 for s_ in (5, 4, 3, 2, 1, 0))
    edges = []
    k = 0
    for v in range(1, n):
        for u in range(v):
            if bits[k]:
                edges.append((u, v))
            k += 1
    return MultiGraph(range(n), {i: e for i, e in enumerate(edges)})


def read_graph6_file(text):
    """Parse a file of one graph6 string per line; yields (lineno, graph)."""
    for i, raw in enumerate(text.splitlines(), start=1):
        s = raw.strip()
        if not s or s.startswith("#"):
            continue
        yield i, read_graph6(s, line=i)


# -- multi_text ----------------------------------------------------------------


def write_multi_text(g):
    dense, _, _ = g.dense()
    lines = [f"{dense.n()} {dense.m()}"]
    for _, (u, v) in sorted(dense.edges.items()):
        lines.append(f"{u} {v}")
    return "\n".join(lines) + "\n"


def read_multi_text(text):
    """Parse one multigraph in multi_text format."""
    lines = [
        (i, ln.strip())
        for i, ln in enumerate(text.splitlines(), start=1)
        if ln.strip() and not ln.strip().startswith("#")
    ]
    if not lines:
        raise ParseError("empty multi_text input", 1)
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise ParseError(f"bad header {header!r}, expected 'n m'", lineno)
    n, m = int(parts[0]), int(parts[1])
    if len(lines) - 1 != m:
        raise ParseError(f"expected {m} edge lines, found {len(lines) - 1}", lineno)
    edges = {}
    for i, (ln, s) in enumerate(lines[1:]):
        ps = s.split()
        if len(ps) != 2 or not all(p.isdigit() for p in ps):
            raise ParseError(f"bad edge line {s!r}", ln)
        u, v = int(ps[0]), int(ps[1])
        if u == v:
            raise ParseError(f"loop {u} {v} not allowed", ln)
        if not (u < n and v < n):
            raise ParseError(f"endpoint out of range in {s!r}", ln)
        edges[i] = (u, v)
    return MultiGraph(range(n), edges)
