"""Graph file formats: graph6, edge lists and 0/1 adjacency matrices."""

from __future__ import annotations

import logging
from pathlib import Path

import numpy as np

from .errors import ParseError, SizeError
from .graph import MAX_NODES, Graph

log = logging.getLogger(__name__)

GRAPH6_HEADER = b">>graph6<<"
FORMATS = ("g6", "edges", "adj")
_SUFFIXES = {
    ".g6": "g6", ".graph6": "g6",
    ".edges": "edges", ".el": "edges", ".txt": "edges", ".edgelist": "edges",
    ".adj": "adj", ".mat": "adj",
}


# --------------------------------------------------------------------------
# graph6
# --------------------------------------------------------------------------

def _encode_n(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])


def emit_graph6(g: Graph, header: bool = False) -> bytes:
    """graph6 encoding of ``g`` (no trailing newline)."""
    cols, rows = np.tril_indices(g.n, k=-1)
    # upper triangle in column-major order: x(0,1), x(0,2), x(1,2), x(0,3), ...
    bits = g.adjacency[rows, cols].astype(np.uint8)
    pad = (-len(bits)) % 6
    bits = np.concatenate([bits, np.zeros(pad, dtype=np.uint8)]).reshape(-1, 6)
    body = (bits @ (1 << np.arange(5, -1, -1)) + 63).astype(np.uint8).tobytes()
    return (GRAPH6_HEADER if header else b"") + _encode_n(g.n) + body


def parse_graph6(data: bytes | str, *, line: int | None = None) -> Graph:
    """Decode a single graph6 string (optional ``>>graph6<<`` header)."""
    if isinstance(data, str):
        data = data.encode("ascii", errors="replace")
    data = data.strip()
    start = len(GRAPH6_HEADER) if data.startswith(GRAPH6_HEADER) else 0
    raw = data[start:]
    if not raw:
        raise ParseError("empty graph6 string", line=line)
    for pos, byte in enumerate(raw):
        if not 63 <= byte <= 126:
            raise ParseError(f"byte value {byte} outside the printable range 63..126",
                             line=line, offset=start + pos)
    vals = np.frombuffer(raw, dtype=np.uint8).astype(np.int64) - 63
    if vals[0] < 63:
        n, head = int(vals[0]), 1
    elif len(vals) >= 4 and vals[1] < 63:
        n, head = int((vals[1] << 12) | (vals[2] << 6) | vals[3]), 4
    elif len(vals) >= 8:
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | int(v)
        head = 8
    else:
        raise ParseError("truncated size header", line=line, offset=start)
    if n < 1:
        raise ParseError("graph6 encodes an empty graph (n = 0)", line=line)
    if n > MAX_NODES:
        raise SizeError(f"graph6 graph has {n} nodes; dense limit is {MAX_NODES}")
    n_bits = n * (n - 1) // 2
    expected = (n_bits + 5) // 6
    body = vals[head:]
    if len(body) != expected:
        raise ParseError(f"expected {expected} body bytes for n={n}, got {len(body)}",
                         line=line, offset=start + head)
    bits = ((body[:, None] >> np.arange(5, -1, -1)) & 1).ravel()[:n_bits].astype(bool)
    cols, rows = np.tril_indices(n, k=-1)
    adj = np.zeros((n, n), dtype=bool)
    adj[cols, rows] = bits
    adj[rows, cols] = bits
    return Graph(adj)


def parse_graph6_lines(text: bytes | str, source=None, errors: list | None = None):
    """Graphs from a multi-line graph6 file as ``(label, Graph)`` pairs.

    With ``errors`` given, bad lines are appended there as ``(label, message)``
    and skipped; otherwise the first bad line raises.
    """
    if isinstance(text, str):
        text = text.encode("ascii", errors="replace")
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        if not raw.strip():
            continue
        label = f"{source}:{lineno}" if source is not None else f"line {lineno}"
        try:
            out.append((label, parse_graph6(raw, line=lineno)))
        except (ParseError, SizeError) as exc:
            if errors is None:
                raise
            errors.append((label, str(exc)))
    return out


# --------------------------------------------------------------------------
# Edge lists and adjacency matrices
# --------------------------------------------------------------------------

def read_edge_list(text: str, source=None) -> tuple[Graph, int]:
    """Parse an edge list; return the graph and the number of duplicate
    edges that were collapsed.

    Lines hold whitespace-separated node-label pairs; ``#`` starts a
    comment. Labels become indices in order of first appearance.
    """
    index: dict[str, int] = {}
    edges: set[tuple[int, int]] = set()
    duplicates = 0
    for lineno, line in enumerate(text.splitlines(), 1):
        tokens = line.split("#", 1)[0].split()
        if not tokens:
            continue
        if len(tokens) % 2:
            raise ParseError(f"odd number of tokens ({len(tokens)})", line=lineno,
                             source=source)
        for u, v in zip(tokens[::2], tokens[1::2]):
            if u == v:
                raise ParseError(f"self-loop on node {u!r}", line=lineno, source=source)
            iu = index.setdefault(u, len(index))
            iv = index.setdefault(v, len(index))
            key = (min(iu, iv), max(iu, iv))
            if key in edges:
                duplicates += 1
            edges.add(key)
    if not index:
        raise ParseError("edge list contains no edges", source=source)
    if len(index) > MAX_NODES:
        raise SizeError(f"edge list has {len(index)} nodes; dense limit is {MAX_NODES}")
    labels = list(index)
    if duplicates:
        log.warning("%s: collapsed %d duplicate edge(s)", source or "edge list", duplicates)
    return Graph.from_edges(len(labels), sorted(edges), labels), duplicates


def parse_edge_list(text: str, source=None) -> Graph:
    return read_edge_list(text, source)[0]


def emit_edge_list(g: Graph) -> str:
    names = g.labels or [str(i) for i in range(g.n)]
    return "".join(f"{names[u]} {names[v]}\n" for u, v in g.edges())


def parse_adjacency(text: str, source=None) -> Graph:
    """Parse n rows of n whitespace-separated 0/1 entries."""
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        tokens = line.split("#", 1)[0].split()
        if not tokens:
            continue
        bad = [t for t in tokens if t not in ("0", "1")]
        if bad:
            raise ParseError(f"entry {bad[0]!r} is not 0 or 1", line=lineno, source=source)
        rows.append([t == "1" for t in tokens])
    if not rows:
        raise ParseError("adjacency matrix is empty", source=source)
    n = len(rows)
    for i, row in enumerate(rows):
        if len(row) != n:
            raise ParseError(f"row {i} has {len(row)} entries, expected {n}", source=source)
    adj = np.array(rows, dtype=bool)
    diag = np.flatnonzero(adj.diagonal())
    if diag.size:
        i = int(diag[0])
        raise ParseError(f"nonzero diagonal entry at ({i}, {i})", source=source)
    asym = np.argwhere(adj != adj.T)
    if asym.size:
        i, j = (int(x) for x in asym[0])
        raise ParseError(f"asymmetric entries at ({i}, {j}) and ({j}, {i})", source=source)
    return Graph(adj)


def emit_adjacency(g: Graph) -> str:
    return "".join(" ".join("1" if x else "0" for x in row) + "\n" for row in g.adjacency)


# --------------------------------------------------------------------------
# Files
# --------------------------------------------------------------------------

def detect_format(path: str | Path) -> str:
    fmt = _SUFFIXES.get(Path(path).suffix.lower())
    if fmt is None:
        raise ParseError(f"cannot infer format from suffix of {path}; pass a format "
                         f"({', '.join(FORMATS)})")
    return fmt


def read_graph_file(path: str | Path, fmt: str | None = None,
                    errors: list | None = None) -> list[tuple[str, Graph]]:
    """All graphs in a file as ``(label, Graph)`` pairs; empty files give []."""
    path = Path(path)
    fmt = fmt or detect_format(path)
    if fmt not in FORMATS:
        raise ParseError(f"unknown format {fmt!r}; choose from {', '.join(FORMATS)}")
    data = path.read_bytes()
    if not data.strip():
        return []
    if fmt == "g6":
        return parse_graph6_lines(data, source=path, errors=errors)
    text = data.decode("utf-8")
    if fmt == "edges":
        return [(str(path), parse_edge_list(text, source=path))]
    return [(str(path), parse_adjacency(text, source=path))]


def write_graph_file(g: Graph, path: str | Path, fmt: str | None = None) -> None:
    path = Path(path)
    fmt = fmt or detect_format(path)
    if fmt == "g6":
        path.write_bytes(emit_graph6(g) + b"\n")
    elif fmt == "edges":
        if g.m == 0:
            raise ParseError("an edgeless graph cannot be written as an edge list")
        isolated = int((g.degrees == 0).sum())
        if isolated:
            log.warning("%s: %d isolated node(s) are not representable in an edge list",
                        path, isolated)
        path.write_text(emit_edge_list(g))
    elif fmt == "adj":
        path.write_text(emit_adjacency(g))
    else:
        raise ParseError(f"unknown format {fmt!r}; choose from {', '.join(FORMATS)}")
