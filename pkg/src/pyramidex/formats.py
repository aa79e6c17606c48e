"""graph6 and plain edge-list serialisation."""
from __future__ import annotations

from pathlib import Path
from typing import Iterable

from .errors import EdgeListError, Graph6Error
from .graph import MAX_VERTICES, Graph, iter_bits

_HEADER = ">>graph6<<"


def _encode_n(n: int) -> str:
    if n < 63:
        return chr(63 + n)
    if n < 258048:
        return "~" + "".join(chr(63 + (n >> s & 63)) for s in (12, 6, 0))
    return "~~" + "".join(chr(63 + (n >> s & 63)) for s in (30, 24, 18, 12, 6, 0))


def encode_graph6(g: Graph) -> str:
    """graph6 line for ``g`` (no trailing newline)."""
    cols = []
    for j in range(1, g.n):
        # bit i of the column is adjacency (i, j), i = 0 first
        cols.append(format(g.rows[j] & ((1 << j) - 1), f"0{j}b")[::-1])
    bits = "".join(cols)
    bits += "0" * (-len(bits) % 6)
    payload = "".join(chr(63 + int(bits[p:p + 6], 2)) for p in range(0, len(bits), 6))
    return _encode_n(g.n) + payload


def decode_graph6(line: str | bytes) -> Graph:
    if isinstance(line, bytes):
        line = line.decode("ascii", errors="replace")
    line = line.strip()
    start = 0
    if line.startswith(_HEADER):
        start = len(_HEADER)
    data = line[start:]

    def val(pos: int) -> int:
        if pos >= len(data):
            raise Graph6Error("truncated graph6 input", start + pos)
        c = ord(data[pos])
        if not 63 <= c <= 126:
            raise Graph6Error(f"invalid graph6 character {data[pos]!r}", start + pos)
        return c - 63

    if not data:
        raise Graph6Error("empty graph6 line", start)
    if data[0] == "~":
        if len(data) > 1 and data[1] == "~":
            n = 0
            for p in range(2, 8):
                n = (n << 6) | val(p)
            pos = 8
        else:
            n = 0
            for p in range(1, 4):
                n = (n << 6) | val(p)
            pos = 4
    else:
        n = val(0)
        pos = 1
    for p in range(pos, len(data)):
        val(p)
    nbits = n * (n - 1) // 2
    nchars = (nbits + 5) // 6
    if len(data) - pos < nchars:
        raise Graph6Error(f"truncated payload: expected {nchars} data bytes", start + len(data))
    if len(data) - pos > nchars:
        raise Graph6Error("trailing characters after graph6 payload", start + pos + nchars)
    if n > MAX_VERTICES:
        raise Graph6Error(f"graph6 vertex count {n} exceeds the limit {MAX_VERTICES}", start)
    bits = "".join(format(ord(c) - 63, "06b") for c in data[pos:pos + nchars])
    if "1" in bits[nbits:]:
        raise Graph6Error("nonzero padding bits", start + pos + nchars - 1)
    rows = [0] * n
    k = 0
    for j in range(1, n):
        col = bits[k:k + j]
        k += j
        if "1" not in col:
            continue
        rows[j] = int(col[::-1], 2)
        for i in iter_bits(rows[j]):
            rows[i] |= 1 << j
    return Graph(n, rows)


def read_graph6_lines(text: str) -> list[Graph]:
    return [decode_graph6(ln) for ln in text.splitlines() if ln.strip()]


def format_edge_list(g: Graph) -> str:
    lines = [f"# n={g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str, n: int | None = None) -> Graph:
    """Parse ``u v`` lines (0-indexed). ``#`` starts a comment.

    A ``# n=<count>`` comment fixes the vertex count; otherwise it is the
    largest endpoint plus one.
    """
    edges = []
    declared = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        body, _, comment = raw.partition("#")
        comment = comment.strip()
        if comment.startswith("n=") and declared is None:
            try:
                declared = int(comment[2:])
            except ValueError:
                raise EdgeListError(f"bad vertex count {comment!r}", lineno) from None
        parts = body.split()
        if not parts:
            continue
        if len(parts) != 2:
            raise EdgeListError(f"expected 'u v', got {body.strip()!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListError(f"non-integer vertex in {body.strip()!r}", lineno) from None
        if u < 0 or v < 0:
            raise EdgeListError("negative vertex index", lineno)
        if u == v:
            raise EdgeListError(f"self-loop at vertex {u}", lineno)
        edges.append((u, v))
    if n is None:
        n = declared if declared is not None else 1 + max((max(e) for e in edges), default=-1)
    return Graph.from_edges(n, edges)


def load_graph(path: str | Path) -> Graph:
    """Load the first graph in a ``.g6`` file, or an edge-list file otherwise."""
    path = Path(path)
    text = path.read_text()
    if path.suffix in (".g6", ".graph6"):
        graphs = read_graph6_lines(text)
        if not graphs:
            raise Graph6Error("no graph in file", 0)
        return graphs[0]
    return parse_edge_list(text)


def save_graph(g: Graph, path: str | Path) -> None:
    path = Path(path)
    if path.suffix in (".g6", ".graph6"):
        path.write_text(encode_graph6(g) + "\n")
    else:
        path.write_text(format_edge_list(g))


def write_graph6_lines(graphs: Iterable[Graph]) -> str:
    return "".join(encode_graph6(g) + "\n" for g in graphs)
