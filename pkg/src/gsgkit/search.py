"""Exhaustive and parametric searches for golden and almost-golden graphs.

* free trees, one per isomorphism class, from canonical level sequences;
* all connected graphs on up to seven nodes (optionally up to isomorphism);
* parameter scans over any constructible family, and scans over graph files;
* the Fibonacci / Lucas line-graph study.
"""

from __future__ import annotations

import itertools
import logging
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, Mapping, Sequence

import numpy as np

from .analysis import ALMOST_TOL, EXACT_TOL, fibonacci, golden_deviation, lucas
from .eigen import eig_symmetric
from .errors import GsgError, ParameterError, SizeError
from .graph import FamilySpec, Graph, build_family, complete, complete_bipartite, line_graph
from .spectra import Spectrum, spectral_ratios

log = logging.getLogger(__name__)

MAX_TREE_ORDER = 16
MAX_LABELED_ORDER = 7
MAX_DEDUP_ORDER = 6
MAX_STUDY_K = 12


# --------------------------------------------------------------------------
# Free trees
# --------------------------------------------------------------------------

def _rooted_successor(levels: list[int], p: int | None = None) -> list[int] | None:
    """Next canonical rooted tree in reverse-lexicographic level-sequence order."""
    if p is None:
        p = len(levels) - 1
        while levels[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while levels[q] != levels[p] - 1:
        q -= 1
    nxt = list(levels)
    shift = p - q
    for i in range(p, len(nxt)):
        nxt[i] = nxt[i - shift]
    return nxt


def _split_at_root(levels: list[int]) -> tuple[list[int], list[int]]:
    # first subtree of the root (re-rooted at level 0) and everything else
    try:
        m = levels.index(1, 2)
    except ValueError:
        m = len(levels)
    return [x - 1 for x in levels[1:m]], [0] + levels[m:]


def _is_free_canonical(left: list[int], rest: list[int]) -> bool:
    h_left, h_rest = max(left), max(rest)
    if h_rest != h_left:
        return h_rest > h_left
    if len(left) != len(rest):
        return len(left) < len(rest)
    return left <= rest


def free_tree_level_sequences(n: int) -> Iterator[list[int]]:
    """Level sequences of the free trees on ``n`` nodes, each tree once.

    Trees are rooted at a centre; rooted canonical sequences that are not
    the centre-rooted representative are skipped in blocks rather than
    one at a time, which keeps the amortised cost per tree constant.
    """
    if n < 2:
        raise ParameterError(f"free trees need n >= 2, got {n}")
    levels = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while levels is not None:
        left, rest = _split_at_root(levels)
        if _is_free_canonical(left, rest):
            yield levels
            levels = _rooted_successor(levels)
            continue
        p = len(left)
        nxt = _rooted_successor(levels, p)
        if nxt is not None and levels[p] > 2:
            h = max(_split_at_root(nxt)[0])
            nxt[len(nxt) - (h + 1):] = range(1, h + 2)
        levels = nxt


def tree_from_levels(levels: Sequence[int]) -> Graph:
    """Tree whose preorder depth sequence is ``levels`` (node i = position i)."""
    stack: list[int] = []
    edges = []
    for i, depth in enumerate(levels):
        del stack[depth:]
        if stack:
            edges.append((stack[-1], i))
        stack.append(i)
    return Graph.from_edges(len(levels), edges)


def enumerate_free_trees(n_min: int, n_max: int) -> Iterator[Graph]:
    if not 2 <= n_min <= n_max:
        raise ParameterError(f"need 2 <= n_min <= n_max, got ({n_min}, {n_max})")
    if n_max > MAX_TREE_ORDER:
        raise SizeError(f"tree enumeration is capped at n = {MAX_TREE_ORDER}")
    for n in range(n_min, n_max + 1):
        for levels in free_tree_level_sequences(n):
            yield tree_from_levels(levels)


# --------------------------------------------------------------------------
# Small connected graphs
# --------------------------------------------------------------------------

def _pairs(n: int) -> tuple[np.ndarray, np.ndarray]:
    return np.triu_indices(n, k=1)


def _masks_to_adjacency(masks: np.ndarray, n: int) -> np.ndarray:
    iu, ju = _pairs(n)
    bits = (masks[:, None] >> np.arange(len(iu))) & 1
    adj = np.zeros((len(masks), n, n), dtype=bool)
    adj[:, iu, ju] = bits.astype(bool)
    adj[:, ju, iu] = adj[:, iu, ju]
    return adj


def _connected(adj: np.ndarray) -> np.ndarray:
    """Batched connectivity via boolean reachability squaring."""
    n = adj.shape[1]
    reach = adj.astype(np.float64) + np.eye(n)
    steps = 1
    while steps < n - 1:
        reach = np.minimum(np.matmul(reach, reach), 1.0)
        steps *= 2
    return (reach[:, 0, :] > 0).all(axis=1)


def _canonical_codes(masks: np.ndarray, n: int) -> np.ndarray:
    """Smallest edge-bit code over all relabelings, per mask."""
    iu, ju = _pairs(n)
    n_edges = len(iu)
    index = {(int(i), int(j)): e for e, (i, j) in enumerate(zip(iu, ju))}
    perms = list(itertools.permutations(range(n)))
    weights = np.zeros((n_edges, len(perms)))
    for k, perm in enumerate(perms):
        for e, (i, j) in enumerate(zip(iu, ju)):
            a, b = perm[i], perm[j]
            weights[e, k] = 2.0 ** index[(min(a, b), max(a, b))]
    codes = np.empty(len(masks), dtype=np.int64)
    for start in range(0, len(masks), 2048):
        chunk = masks[start:start + 2048]
        bits = ((chunk[:, None] >> np.arange(n_edges)) & 1).astype(np.float64)
        codes[start:start + 2048] = (bits @ weights).min(axis=1).astype(np.int64)
    return codes


def enumerate_connected_graphs(n: int, dedup: bool = False) -> Iterator[Graph]:
    """All connected graphs on ``n`` labelled nodes, in edge-mask order.

    With ``dedup`` one canonical representative per isomorphism class is
    produced instead (ordered by canonical code); only for n <= 6.
    """
    if not 1 <= n <= MAX_LABELED_ORDER:
        raise SizeError(f"labelled enumeration needs 1 <= n <= {MAX_LABELED_ORDER}, got {n}")
    if dedup and n > MAX_DEDUP_ORDER:
        raise SizeError(f"isomorphism dedup is limited to n <= {MAX_DEDUP_ORDER}")
    if n == 1:
        yield Graph(np.zeros((1, 1), dtype=bool))
        return
    n_edges = n * (n - 1) // 2
    total = 1 << n_edges
    chunk = 1 << 14
    if dedup:
        masks = np.arange(total, dtype=np.int64)
        keep = np.concatenate([_connected(_masks_to_adjacency(masks[s:s + chunk], n))
                               for s in range(0, total, chunk)])
        codes = np.unique(_canonical_codes(masks[keep], n))
        for adj in _masks_to_adjacency(codes, n):
            yield Graph(adj)
        return
    for start in range(0, total, chunk):
        masks = np.arange(start, min(total, start + chunk), dtype=np.int64)
        adj = _masks_to_adjacency(masks, n)
        for a in adj[_connected(adj)]:
            yield Graph(a)


# --------------------------------------------------------------------------
# Scans
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class ScanRecord:
    """Spectral ratios of one scanned graph. ``rank`` is 1-based after
    ranking by deviation (undefined deviations last), then n, then spec."""

    spec: str
    n: int
    m: int
    w1: float | None
    w2: float | None
    gap: float
    deviation: float | None
    is_golden: bool
    rank: int = 0


def _record(label: str, g: Graph, tol: float, method: str = "auto") -> ScanRecord:
    r = spectral_ratios(Spectrum(eig_symmetric(g.adjacency_matrix(), method=method)))
    dev = golden_deviation(r.w1, r.w2)
    return ScanRecord(spec=label, n=g.n, m=g.m, w1=r.w1, w2=r.w2, gap=r.gap,
                      deviation=dev, is_golden=dev is not None and dev <= tol)


def _sort_key(rec: ScanRecord):
    dev = rec.deviation
    return (dev is None, dev if dev is not None else 0.0, rec.n, rec.spec)


def rank_records(records: Iterable[ScanRecord]) -> list[ScanRecord]:
    ordered = sorted(records, key=_sort_key)
    return [ScanRecord(**{**r.__dict__, "rank": i}) for i, r in enumerate(ordered, 1)]


def _spec_record(args):
    spec, tol = args
    return _record(str(spec), build_family(spec), tol)


def scan_specs(specs: Iterable[FamilySpec], tol: float = ALMOST_TOL,
               workers: int | None = None) -> list[ScanRecord]:
    """Scan explicit family instances; results are ranked.

    ``workers > 1`` fans the instances out to a process pool; results are
    merged in input order before ranking, so output is identical either way.
    """
    jobs = [(spec, tol) for spec in specs]
    if workers and workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(_spec_record, jobs))
    else:
        records = [_spec_record(job) for job in jobs]
    return rank_records(records)


def expand_grid(grid: Mapping[str, Iterable]) -> list[dict]:
    """Cartesian product of parameter value lists, first key varying slowest."""
    keys = list(grid)
    values = [list(grid[k]) for k in keys]
    return [dict(zip(keys, combo)) for combo in itertools.product(*values)]


def scan_family(family: str, param_range, tol: float = ALMOST_TOL,
                workers: int | None = None) -> list[ScanRecord]:
    """Scan a family over a parameter grid (mapping of value lists) or an
    explicit sequence of parameter dicts."""
    if isinstance(param_range, Mapping):
        param_range = expand_grid(param_range)
    specs = [FamilySpec(family, params) for params in param_range]
    return scan_specs(specs, tol, workers)


_TERM = re.compile(r"^\s*([A-Za-z_]+)\s*=\s*(.+?)\s*$")
_SPAN = re.compile(r"^(-?\d+)\.\.(-?\d+)(?::(\d+))?$")


def parse_range(expr: str) -> dict[str, list]:
    """Parse ``"q=3..20 r=1"``-style range expressions.

    Terms are separated by whitespace or ``;``. Each term is ``name=lo..hi``
    (inclusive, optional ``:step``), ``name=v1,v2,...`` or ``name=value``.
    ``conn`` values are tuples separated by ``/`` (``conn=1/4``).
    """
    grid: dict[str, list] = {}
    for term in re.split(r"[;\s]+", expr.strip()):
        if not term:
            continue
        match = _TERM.match(term)
        if not match:
            raise ParameterError(f"bad range term {term!r}; expected name=values")
        name, body = match.groups()
        span = _SPAN.match(body)
        if span:
            lo, hi, step = int(span[1]), int(span[2]), int(span[3] or 1)
            if step < 1:
                raise ParameterError(f"range step must be >= 1 in {term!r}")
            values = list(range(lo, hi + 1, step))
        elif name == "conn":
            values = [tuple(int(x) for x in part.split("/")) for part in body.split(",")]
        elif name == "name":
            values = body.split(",")
        else:
            try:
                values = [int(x) for x in body.split(",")]
            except ValueError:
                raise ParameterError(f"non-integer value in {term!r}") from None
        grid[name] = values
    if not grid:
        raise ParameterError("empty range expression")
    return grid


def scan_graphs(graphs: Iterable[tuple[str, Graph]], tol: float = ALMOST_TOL,
                rank: bool = True) -> list[ScanRecord]:
    records = [_record(label, g, tol) for label, g in graphs]
    return rank_records(records) if rank else records


@dataclass
class FileScan:
    records: list[ScanRecord]
    errors: list[tuple[str, str]]
    warnings: list[str]


def scan_files(paths: Iterable[str | Path], fmt: str | None = None,
               tol: float = ALMOST_TOL) -> FileScan:
    """Scan graph files (graph6, edge list or adjacency matrix).

    Bad files and bad graph6 lines are reported in ``errors`` and skipped.
    """
    from .io import read_graph_file

    records, errors, warnings = [], [], []
    for path in paths:
        path = Path(path)
        try:
            entries = read_graph_file(path, fmt, errors=errors)
        except (OSError, GsgError) as exc:
            errors.append((str(path), str(exc)))
            continue
        if not entries:
            msg = f"{path}: no graphs found"
            log.warning(msg)
            warnings.append(msg)
            continue
        for label, g in entries:
            if g.n < 2:
                errors.append((label, "single-node graph has no spectral ratios"))
                continue
            records.append(_record(label, g, tol))
    return FileScan(rank_records(records), errors, warnings)


def scan_trees(n_min: int = 2, n_max: int = 10, tol: float = ALMOST_TOL) -> list[ScanRecord]:
    """Ratios of every free tree; labels are ``tree(n=..;levels=...)``."""
    out = []
    for n in range(n_min, n_max + 1):
        if n > MAX_TREE_ORDER:
            raise SizeError(f"tree enumeration is capped at n = {MAX_TREE_ORDER}")
        for levels in free_tree_level_sequences(n):
            label = f"tree(n={n}; levels={''.join(_digit(x) for x in levels)})"
            out.append((label, tree_from_levels(levels)))
    return scan_graphs(out, tol)


def _digit(x: int) -> str:
    return "0123456789abcdefg"[x]


# --------------------------------------------------------------------------
# Fibonacci / Lucas line graphs
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class StudyRow:
    k: int
    a: int
    b: int
    n: int
    w1: float | None
    w2: float | None
    predicted_w1: float
    predicted_w2: float
    method: str


def _line_bipartite_spectrum(a: int, b: int, dense_limit: int) -> tuple[Spectrum, str]:
    if a * b <= dense_limit:
        g = line_graph(complete_bipartite(a, b))
        return Spectrum(eig_symmetric(g.adjacency_matrix())), "dense"
    # L(K_{a,b}) is the Cartesian product K_a x K_b: eigenvalues add pairwise
    ea = eig_symmetric(complete(a).adjacency_matrix()) if a > 1 else np.zeros(1)
    eb = eig_symmetric(complete(b).adjacency_matrix()) if b > 1 else np.zeros(1)
    return Spectrum((ea[:, None] + eb[None, :]).ravel()), "cartesian"


def fibonacci_line_graph_study(k_max: int, k_min: int = 2, sequence: str = "fibonacci",
                               dense_limit: int = 2000) -> list[StudyRow]:
    """Numeric ratios of L(K_{a,b}) for consecutive Fibonacci (or Lucas)
    pairs a = X_{k+1}, b = X_k, next to the predictions a/b and (a+b)/a.

    Orders above ``dense_limit`` are diagonalised through the Cartesian
    product structure instead of densely.
    """
    if k_min < 1 or k_max < k_min:
        raise ParameterError(f"need 1 <= k_min <= k_max, got ({k_min}, {k_max})")
    if k_max > MAX_STUDY_K:
        raise SizeError(f"k_max is capped at {MAX_STUDY_K}")
    seq = {"fibonacci": fibonacci, "lucas": lucas}.get(sequence)
    if seq is None:
        raise ParameterError(f"sequence must be 'fibonacci' or 'lucas', got {sequence!r}")
    rows = []
    for k in range(k_min, k_max + 1):
        a, b = seq(k + 1), seq(k)
        spectrum, method = _line_bipartite_spectrum(a, b, dense_limit)
        r = spectral_ratios(spectrum)
        rows.append(StudyRow(k, a, b, a * b, r.w1, r.w2, a / b, (a + b) / a, method))
    return rows


def exact_golden_instances(graphs: Iterable[Graph], tol: float = EXACT_TOL) -> list[Graph]:
    """Graphs from ``graphs`` whose two ratios are both within ``tol`` of phi."""
    found = []
    for g in graphs:
        if g.n < 2:
            continue
        r = spectral_ratios(Spectrum(eig_symmetric(g.adjacency_matrix())))
        dev = golden_deviation(r.w1, r.w2)
        if dev is not None and dev <= tol:
            found.append(g)
    return found
