"""graph6, edge-list and DOT serialisation."""

from __future__ import annotations

from .errors import ParseError
from .graph import Graph

_HEADER = ">>graph6<<"


def _encode_n(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])
    raise ValueError("graph6 supports at most 258047 vertices")


def to_graph6(g: Graph) -> str:
    """Encode as graph6 (upper triangle, column-major, six bits per byte)."""
    n = g.n
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    bits += [0] * (-len(bits) % 6)
    body = bytes(
        63 + sum(b << (5 - t) for t, b in enumerate(bits[i:i + 6])) for i in range(0, len(bits), 6)
    )
    return (_encode_n(n) + body).decode("ascii")


def from_graph6(text: str) -> Graph:
    s = text.strip()
    base = 0
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
        base = len(_HEADER)
    data = s.encode("ascii", errors="replace")
    if not data:
        raise ParseError("empty graph6 string", base)
    for i, c in enumerate(data):
        if not 63 <= c <= 126:
            raise ParseError(f"invalid graph6 byte {c!r}", base + i)
    if data[0] != 126:
        n, pos = data[0] - 63, 1
    elif len(data) >= 4 and data[1] != 126:
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        pos = 4
    else:
        raise ParseError("unsupported graph6 size prefix", base)
    need = (n * (n - 1) // 2 + 5) // 6
    if len(data) - pos != need:
        raise ParseError(f"expected {need} adjacency bytes, got {len(data) - pos}", base + pos)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = data[pos + k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


def to_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def from_edgelist(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines of 0-based ``u v`` pairs."""
    tokens: list[tuple[str, int]] = []
    offset = 0
    for line in text.splitlines(keepends=True):
        col = 0
        for part in line.split():
            col = line.index(part, col)
            tokens.append((part, offset + col))
            col += len(part)
        offset += len(line.encode())
    if len(tokens) < 2:
        raise ParseError("missing 'n m' header", offset)

    def number(i: int) -> int:
        word, at = tokens[i]
        try:
            value = int(word)
        except ValueError:
            raise ParseError(f"expected an integer, got {word!r}", at) from None
        if value < 0:
            raise ParseError("negative value", at)
        return value

    n, m = number(0), number(1)
    if len(tokens) != 2 + 2 * m:
        raise ParseError(f"header promises {m} edges, found {(len(tokens) - 2) / 2:g}", offset)
    edges = []
    for e in range(m):
        u, v = number(2 + 2 * e), number(3 + 2 * e)
        if u >= n or v >= n or u == v:
            raise ParseError(f"bad edge ({u}, {v})", tokens[2 + 2 * e][1])
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def to_dot(g: Graph, name: str = "G", labels: list[str] | None = None) -> str:
    out = [f"graph {name} {{"]
    for v in range(g.n):
        if labels is not None:
            out.append(f'  {v} [label="{labels[v]}"];')
        else:
            out.append(f"  {v};")
    out += [f"  {u} -- {v};" for u, v in g.edges()]
    out.append("}")
    return "\n".join(out) + "\n"


def parse_graph(text: str, fmt: str = "graph6") -> Graph:
    if fmt == "graph6":
        return from_graph6(text)
    if fmt == "edgelist":
        return from_edgelist(text)
    raise ValueError(f"unknown graph format {fmt!r}")


def emit_graph(g: Graph, fmt: str = "graph6") -> str:
    if fmt == "graph6":
        return to_graph6(g) + "\n"
    if fmt == "edgelist":
        return to_edgelist(g)
    if fmt == "dot":
        return to_dot(g)
    raise ValueError(f"unknown graph format {fmt!r}")
