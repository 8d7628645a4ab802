"""Serialization: graph6 for simple graphs, `.mg` text for multigraphs,
plus the small line formats for transition systems, trails and matchings.

All writers emit LF line endings and single spaces so that round trips are
bit-exact.
"""

from __future__ import annotations

from pathlib import Path

from .core import ClosedTrail, Multigraph, build_multigraph
from .errors import (
    MalformedGraph6Error,
    MalformedGraphFileError,
    MultiEdgeInGraph6Error,
    TooLargeError,
)

_G6_HEADER = ">>graph6<<"


def encode_graph6(g: Multigraph) -> str:
    """graph6 string for a simple graph with n <= 62."""
    if not g.is_simple():
        raise MultiEdgeInGraph6Error("graph6 cannot hold parallel edges")
    if g.n > 62:
        raise TooLargeError("graph6 writer handles n <= 62 only")
    adj = set()
    for u, v in g.edges:
        adj.add((min(u, v), max(u, v)))
    bits = []
    for v in range(1, g.n):
        for u in range(v):
            bits.append(1 if (u, v) in adj else 0)
    out = [chr(g.n + 63)]
    for i in range(0, len(bits), 6):
        chunk = bits[i : i + 6]
        chunk += [0] * (6 - len(chunk))
        val = 0
        for b in chunk:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


def decode_graph6(s: str) -> Multigraph:
    """Parse a graph6 string (n <= 62).  Edge ids follow (u, v)-lexicographic
    order of the endpoint pairs, so encode(decode(s)) == s byte for byte."""
    s = s.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER) :].strip()
    if not s:
        raise MalformedGraph6Error("empty graph6 string")
    n = ord(s[0]) - 63
    if not (0 <= n <= 62):
        raise MalformedGraph6Error(f"unsupported size byte {s[0]!r} (only n <= 62)")
    nbits = n * (n - 1) // 2
    nchars = (nbits + 5) // 6
    body = s[1:]
    if len(body) != nchars:
        raise MalformedGraph6Error(f"expected {nchars} body chars, got {len(body)}")
    bits = []
    for ch in body:
        val = ord(ch) - 63
        if not (0 <= val < 64):
            raise MalformedGraph6Error(f"byte {ch!r} out of graph6 range")
        bits.extend((val >> k) & 1 for k in range(5, -1, -1))
    if any(bits[nbits:]):
        raise MalformedGraph6Error("nonzero padding bits")
    pairs = []
    i = 0
    for v in range(1, n):
        for u in range(v):
            if bits[i]:
                pairs.append((u, v))
            i += 1
    pairs.sort()
    return build_multigraph(n, pairs)


def write_mg(g: Multigraph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def read_mg(text: str) -> Multigraph:
    if "\r" in text:
        raise MalformedGraphFileError(".mg files use LF line endings")
    if not text.endswith("\n"):
        raise MalformedGraphFileError(".mg file must end with a newline")
    lines = text[:-1].split("\n")
    header = lines[0].split(" ")
    if len(header) != 2 or not all(p.isdigit() for p in header):
        raise MalformedGraphFileError(f"bad header line {lines[0]!r}")
    n, m = int(header[0]), int(header[1])
    if len(lines) != m + 1:
        raise MalformedGraphFileError(f"expected {m} edge lines, got {len(lines) - 1}")
    pairs = []
    for line in lines[1:]:
        parts = line.split(" ")
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise MalformedGraphFileError(f"bad edge line {line!r}")
        pairs.append((int(parts[0]), int(parts[1])))
    return build_multigraph(n, pairs)


def write_transition_codes(codes) -> str:
    return "".join(f"{c}\n" for c in codes)


def read_transition_codes(text: str) -> tuple[int, ...]:
    codes = []
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        if line not in ("0", "1", "2"):
            raise MalformedGraphFileError(f"bad pairing code {line!r}")
        codes.append(int(line))
    return tuple(codes)


def write_trail(trail: ClosedTrail) -> str:
    return "".join(f"{e},{s}\n" for e, s in trail.darts)


def read_trail(text: str) -> ClosedTrail:
    darts = []
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        parts = line.split(",")
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise MalformedGraphFileError(f"bad dart line {line!r}")
        darts.append((int(parts[0]), int(parts[1])))
    return ClosedTrail(tuple(darts))


def write_matching_ids(edge_ids) -> str:
    return "".join(f"{e}\n" for e in sorted(edge_ids))


def read_matching_ids(text: str) -> tuple[int, ...]:
    ids = []
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        if not line.isdigit():
            raise MalformedGraphFileError(f"bad edge id line {line!r}")
        ids.append(int(line))
    return tuple(ids)


def load_graph(path: str | Path) -> Multigraph:
    """Load a graph file by extension: .g6/.graph6 or .mg."""
    p = Path(path)
    text = p.read_text()
    suffix = p.suffix.lower()
    if suffix in (".g6", ".graph6"):
        first = text.strip().splitlines()[0] if text.strip() else ""
        return decode_graph6(first)
    if suffix == ".mg":
        return read_mg(text)
    raise MalformedGraphFileError(f"unknown graph file extension {suffix!r}")
