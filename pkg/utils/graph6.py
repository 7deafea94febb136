"""graph6 encoding and decoding (header-free variant, optional `>>graph6<<` header accepted)"""
from core.graph import Graph
from services.exceptions import Graph6ParseError

HEADER = ">>graph6<<"
_MIN, _MAX = 63, 126


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + _MIN)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 0x3F) + _MIN) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 0x3F) + _MIN) for s in (30, 24, 18, 12, 6, 0))


def to_graph6(graph: Graph) -> str:
    """Encode `graph` as a graph6 string"""
    out = [_encode_n(graph.n)]
    rows = graph.rows
    acc, filled = 0, 0
    for j in range(1, graph.n):
        row = rows[j]
        for i in range(j):
            acc = (acc << 1) | ((row >> i) & 1)
            filled += 1
            if filled == 6:
                out.append(chr(acc + _MIN))
                acc, filled = 0, 0
    if filled:
        out.append(chr((acc << (6 - filled)) + _MIN))
    return "".join(out)


def _decode_n(text: str) -> tuple[int, int]:
    """Return (n, offset of the first edge byte)"""
    if not text:
        raise Graph6ParseError("empty graph6 string", offset=0)
    if text[0] != "~":
        return ord(text[0]) - _MIN, 1
    if len(text) >= 2 and text[1] == "~":
        width, start = 6, 2
    else:
        width, start = 3, 1
    if len(text) < start + width:
        raise Graph6ParseError("truncated vertex count", offset=len(text))
    n = 0
    for ch in text[start:start + width]:
        n = (n << 6) | (ord(ch) - _MIN)
    return n, start + width


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 string; errors carry the offending offset"""
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    for offset, ch in enumerate(s):
        if not _MIN <= ord(ch) <= _MAX:
            raise Graph6ParseError(f"character {ch!r} outside the graph6 alphabet", offset=offset)
    n, start = _decode_n(s)
    pairs = n * (n - 1) // 2
    expected = start + (pairs + 5) // 6
    if len(s) != expected:
        raise Graph6ParseError(
            f"length {len(s)} does not match {expected} expected for n={n}",
            offset=min(len(s), expected),
        )

    rows = [0] * n
    k = 0
    data = s[start:]
    for j in range(1, n):
        for i in range(j):
            byte = ord(data[k // 6]) - _MIN
            if (byte >> (5 - k % 6)) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if pairs % 6:
        tail = ord(data[-1]) - _MIN
        if tail & ((1 << (6 - pairs % 6)) - 1):
            raise Graph6ParseError("non-zero padding bits", offset=len(s) - 1)
    return Graph.from_rows(n, rows, check=False)


def parse_graph6_lines(text: str) -> list[Graph]:
    return [parse_graph6(line) for line in text.splitlines() if line.strip()]
