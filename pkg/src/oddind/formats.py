"""Reading and writing graphs in graph6 and DIMACS edge format.

graph6 follows the de-facto interchange standard: one graph per line, no
header, 6-bit groups offset by 63, upper-triangle bits in column order.
DIMACS is the classic ``p edge n m`` / ``e u v`` text form with 1-based
vertex ids.
"""

from __future__ import annotations

from typing import List

from .graphs import Graph, MAX_VERTICES, from_edge_list


class MalformedGraph6(ValueError):
    """Invalid graph6 input; ``offset`` is the byte position of the fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


class MalformedDimacs(ValueError):
    pass


def _check_bytes(text: str) -> None:
    for i, ch in enumerate(text):
        o = ord(ch)
        if o < 63 or o > 126:
            raise MalformedGraph6(f"character {ch!r} outside graph6 alphabet", i)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line into a :class:`Graph`."""
    text = text.rstrip("\n")
    if not text:
        raise MalformedGraph6("empty input", 0)
    _check_bytes(text)
    pos = 0
    first = ord(text[0]) - 63
    if first < 63:
        n = first
        pos = 1
    else:
        if len(text) < 4:
            raise MalformedGraph6("truncated vertex count", len(text))
        if text[1] == "~":
            raise MalformedGraph6("vertex counts above 258047 unsupported", 1)
        n = 0
        for i in range(1, 4):
            n = n << 6 | (ord(text[i]) - 63)
        pos = 4
    if n > MAX_VERTICES:
        raise MalformedGraph6(f"vertex count {n} exceeds cap {MAX_VERTICES}", 0)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(text) - pos != need:
        raise MalformedGraph6(
            f"expected {need} payload bytes for n={n}, got {len(text) - pos}", len(text)
        )
    rows = [0] * n
    bit = 0
    for i in range(need):
        group = ord(text[pos + i]) - 63
        for k in range(5, -1, -1):
            if bit >= nbits:
                if group >> k & 1:
                    raise MalformedGraph6("nonzero padding bits", pos + i)
                continue
            if group >> k & 1:
                u, v = _bit_to_pair(bit)
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            bit += 1
    return Graph(n, rows)


def _bit_to_pair(index: int):
    # column order: (0,1), (0,2), (1,2), (0,3), ...
    v = 1
    while v * (v - 1) // 2 <= index:
        v += 1
    v -= 1
    return index - v * (v - 1) // 2, v


def to_graph6(g: Graph) -> str:
    n = g.n
    if n < 63:
        head = chr(n + 63)
    else:
        head = "~" + "".join(chr((n >> s & 63) + 63) for s in (12, 6, 0))
    bits: List[int] = []
    for v in range(1, n):
        for u in range(v):
            bits.append(g.adj[u] >> v & 1)
    while len(bits) % 6:
        bits.append(0)
    payload = []
    for i in range(0, len(bits), 6):
        group = 0
        for b in bits[i:i + 6]:
            group = group << 1 | b
        payload.append(chr(group + 63))
    return head + "".join(payload)


def parse_dimacs(text: str) -> Graph:
    """Decode DIMACS edge format (1-based ``e u v`` lines)."""
    n = None
    edges = []
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if len(parts) != 4 or parts[1] not in ("edge", "edges", "col"):
                raise MalformedDimacs(f"line {ln}: bad problem line {line!r}")
            n = int(parts[2])
        elif parts[0] == "e":
            if n is None:
                raise MalformedDimacs(f"line {ln}: edge before problem line")
            if len(parts) != 3:
                raise MalformedDimacs(f"line {ln}: bad edge line {line!r}")
            u, v = int(parts[1]) - 1, int(parts[2]) - 1
            edges.append((u, v))
        else:
            raise MalformedDimacs(f"line {ln}: unknown record {parts[0]!r}")
    if n is None:
        raise MalformedDimacs("missing problem line")
    return from_edge_list(n, edges)


def to_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.edge_count()}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def guess_format(path: str) -> str:
    lowered = path.lower()
    if lowered.endswith((".col", ".dimacs", ".clq")):
        return "dimacs"
    return "graph6"


def loads(text: str, fmt: str) -> Graph:
    if fmt == "graph6":
        return parse_graph6(text.strip().splitlines()[0] if text.strip() else "")
    if fmt == "dimacs":
        return parse_dimacs(text)
    raise ValueError(f"unknown format {fmt!r}")


def dumps(g: Graph, fmt: str) -> str:
    if fmt == "graph6":
        return to_graph6(g) + "\n"
    if fmt == "dimacs":
        return to_dimacs(g)
    raise ValueError(f"unknown format {fmt!r}")
