"""Graph serialization: the graph6 text codec and a plain edge-list format.

graph6 packs the upper triangle of the adjacency matrix in column order,
six bits per character, each character offset by 63.  The edge-list format
is a header line "n m" followed by m lines "u v" (0-based); blank lines and
"#" comments are ignored.
"""
from __future__ import annotations

from .graph import Graph

_HEADER = ">>graph6<<"


def _triangle_bits(g: Graph) -> list[int]:
    bits = []
    for j in range(1, g.n):
        col = g.adj_mask(j)
        bits.extend((col >> i) & 1 for i in range(j))
    return bits


def to_graph6(g: Graph, header: bool = False) -> str:
    """Encode a graph as a graph6 string."""
    n = g.n
    if n <= 62:
        prefix = [n + 63]
    elif n <= 258047:
        prefix = [126, 63 + (n >> 12), 63 + ((n >> 6) & 63), 63 + (n & 63)]
    elif n <= 68719476735:
        prefix = [126, 126] + [63 + ((n >> s) & 63) for s in range(30, -1, -6)]
    else:
        raise ValueError("graph too large for graph6")
    bits = _triangle_bits(g)
    while len(bits) % 6:
        bits.append(0)
    body = []
    for i in range(0, len(bits), 6):
        x = 0
        for b in bits[i : i + 6]:
            x = (x << 1) | b
        body.append(x + 63)
    s = bytes(prefix + body).decode("ascii")
    return _HEADER + s if header else s


def from_graph6(text: str) -> Graph:
    """Decode a single graph6 string (optional >>graph6<< header allowed)."""
    s = text.strip()
    if s.startswith(">>"):
        if not s.startswith(_HEADER):
            raise ValueError(f"unsupported header in {text!r}")
        s = s[len(_HEADER) :]
    if not s:
        raise ValueError("empty graph6 string")
    data = s.encode("ascii", errors="strict") if s.isascii() else None
    if data is None or any(c < 63 or c > 126 for c in data):
        raise ValueError(f"invalid graph6 characters in {text!r}")
    vals = [c - 63 for c in data]
    if vals[0] < 63:
        n, pos = vals[0], 1
    elif len(vals) >= 2 and vals[1] < 63:
        if len(vals) < 4:
            raise ValueError("truncated graph6 size")
        n, pos = (vals[1] << 12) | (vals[2] << 6) | vals[3], 4
    else:
        if len(vals) < 8:
            raise ValueError("truncated graph6 size")
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        pos = 8
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(vals) - pos != need:
        raise ValueError(f"graph6 body length mismatch for n={n}")
    bits = []
    for v in vals[pos:]:
        bits.extend(((v >> s_) & 1) for s_ in range(5, -1, -1))
    if any(bits[nbits:]):
        raise ValueError("nonzero padding in graph6 body")
    masks = [0] * n
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                masks[i] |= 1 << j
                masks[j] |= 1 << i
            idx += 1
    return Graph.from_masks(masks)


def read_graph6_lines(text: str) -> list[Graph]:
    """Decode one graph per nonempty line."""
    return [from_graph6(line) for line in text.splitlines() if line.strip()]


def read_edge_list(text: str) -> Graph:
    """Parse the "n m" edge-list format; rejects malformed or duplicate edges."""
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line)
    if not rows:
        raise ValueError("empty edge list")
    head = rows[0].split()
    if len(head) != 2:
        raise ValueError(f"expected header 'n m', got {rows[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise ValueError(f"expected integer header 'n m', got {rows[0]!r}") from None
    if len(rows) - 1 != m:
        raise ValueError(f"header promises {m} edges, found {len(rows) - 1}")
    edges = []
    seen = set()
    for row in rows[1:]:
        parts = row.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line {row!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"bad edge line {row!r}") from None
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ValueError(f"duplicate edge {row!r}")
        seen.add(key)
        edges.append((u, v))
    return Graph(n, edges)
