"""Reading and writing graphs: graph6 and ordered edge lists.

graph6 stores the upper triangle of the adjacency matrix column by column
(``(0,1), (0,2), (1,2), (0,3), ...``) in 6-bit groups offset by 63, after a
size header. It cannot record an edge order, so parsed graphs get the
lexicographic order. The edge-list format keeps the file order, which is
how a caller fixes a custom edge order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParseError
from .graph import Graph

GRAPH6_HEADER = ">>graph6<<"


def _size_header(n: int) -> str:
    if n < 0:
        raise ValueError("negative vertex count")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError("graph too large for graph6")


def to_graph6(g: Graph) -> str:
    adjacent = set(g.edges)
    bits = [(i, j) in adjacent for j in range(1, g.n) for i in range(j)]
    bits += [False] * (-len(bits) % 6)
    body = []
    for p in range(0, len(bits), 6):
        value = 0
        for b in bits[p:p + 6]:
            value = value << 1 | b
        body.append(chr(value + 63))
    return _size_header(g.n) + "".join(body)


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 string (an optional ``>>graph6<<`` prefix is allowed)."""
    text = line.strip()
    offset = 0
    if text.startswith(GRAPH6_HEADER):
        offset = len(GRAPH6_HEADER)
    data = text[offset:]
    if not data:
        raise ParseError("empty graph6 string", offset)
    for pos, ch in enumerate(data):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"byte {ord(ch)} outside 63..126", offset + pos)

    values = [ord(ch) - 63 for ch in data]
    if values[0] != 63:
        n, start = values[0], 1
    elif len(values) >= 2 and values[1] != 63:
        if len(values) < 4:
            raise ParseError("truncated 4-byte size header", offset)
        n, start = (values[1] << 12) | (values[2] << 6) | values[3], 4
        if n <= 62:
            raise ParseError("non-canonical size header", offset)
    else:
        if len(values) < 8:
            raise ParseError("truncated 8-byte size header", offset)
        n = 0
        for v in values[2:8]:
            n = n << 6 | v
        start = 8
        if n <= 258047:
            raise ParseError("non-canonical size header", offset)

    nbits = n * (n - 1) // 2
    need = -(-nbits // 6)
    body = values[start:]
    if len(body) != need:
        raise ParseError(f"expected {need} data bytes for n={n}, found {len(body)}", offset + start)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    pad = need * 6 - nbits
    if pad and body[-1] & ((1 << pad) - 1):
        raise ParseError("nonzero padding bits", offset + start + need - 1)
    return Graph.from_edges(n, edges)


def parse_edgelist(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines ``u v`` (0-based), keeping file order.

    Blank lines and ``#`` comments are ignored.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line))
    if not rows:
        raise ParseError("missing 'n m' header", 1, "line")
    lineno, header = rows[0]
    n, m = _two_ints(header, lineno)
    if n < 0 or m < 0:
        raise ParseError("negative count in header", lineno, "line")
    body = rows[1:]
    if len(body) != m:
        raise ParseError(f"header promises {m} edges, found {len(body)}",
                         body[-1][0] if body else lineno, "line")
    seen = set()
    edges = []
    for lineno, line in body:
        u, v = _two_ints(line, lineno)
        if u == v:
            raise ParseError(f"loop at vertex {u}", lineno, "line")
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex out of range 0..{n - 1}", lineno, "line")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate edge {key}", lineno, "line")
        seen.add(key)
        edges.append(key)
    return Graph(n, tuple(edges))


def _two_ints(line: str, lineno: int) -> tuple[int, int]:
    fields = line.split()
    if len(fields) != 2:
        raise ParseError(f"expected two integers, got {line!r}", lineno, "line")
    try:
        return int(fields[0]), int(fields[1])
    except ValueError:
        raise ParseError(f"expected two integers, got {line!r}", lineno, "line") from None


def to_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class GraphDocument:
    format: str
    graph: Graph
    name: str | None = None

    def serialize(self) -> str:
        if self.format == "graph6":
            return to_graph6(self.graph) + "\n"
        return to_edgelist(self.graph)


def parse_document(text: str, name: str | None = None) -> GraphDocument:
    """Detect the format: an edge list starts with two integers."""
    first = next((ln.split("#", 1)[0].strip() for ln in text.splitlines()
                  if ln.split("#", 1)[0].strip()), "")
    fields = first.split()
    if len(fields) == 2 and all(f.lstrip("-").isdigit() for f in fields):
        return GraphDocument("edgelist", parse_edgelist(text), name)
    return GraphDocument("graph6", parse_graph6(first), name)
