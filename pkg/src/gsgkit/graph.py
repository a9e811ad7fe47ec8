"""Simple undirected graphs, the parametric families and graph operators.

All graphs are stored densely as a read-only boolean adjacency matrix.
Constructors are pure and return a fresh :class:`Graph`; node ordering is
fixed per family and documented on each builder.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import DomainError, ParameterError, SizeError
from .named import NAMED, PLATONIC

MAX_NODES = 20000


class Graph:
    """Immutable simple graph on nodes ``0..n-1``.

    Args:
        adjacency: square boolean (or 0/1) matrix; must be symmetric with an
            all-false diagonal.
        labels: optional external node names, one per node.
    """

    __slots__ = ("_adj", "_labels", "_degrees")

    def __init__(self, adjacency, labels: Sequence[str] | None = None):
        adj = np.array(adjacency, dtype=bool, copy=True)
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
            raise ParameterError(f"adjacency must be square, got shape {adj.shape}")
        n = adj.shape[0]
        if n < 1:
            raise ParameterError("a graph needs at least one node")
        if n > MAX_NODES:
            raise SizeError(f"graph has {n} nodes; dense limit is {MAX_NODES}")
        if not np.array_equal(adj, adj.T):
            i, j = np.argwhere(adj != adj.T)[0]
            raise ParameterError(f"adjacency not symmetric at ({i}, {j})")
        if adj.diagonal().any():
            i = int(np.flatnonzero(adj.diagonal())[0])
            raise ParameterError(f"self-loop at node {i}")
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != n:
                raise ParameterError(f"{len(labels)} labels for {n} nodes")
        adj.flags.writeable = False
        degrees = adj.sum(axis=1)
        degrees.flags.writeable = False
        self._adj = adj
        self._labels = labels
        self._degrees = degrees

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]],
                   labels: Sequence[str] | None = None) -> Graph:
        if n < 1:
            raise ParameterError("a graph needs at least one node")
        if n > MAX_NODES:
            raise SizeError(f"graph has {n} nodes; dense limit is {MAX_NODES}")
        adj = np.zeros((n, n), dtype=bool)
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ParameterError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ParameterError(f"self-loop at node {u}")
            adj[u, v] = adj[v, u] = True
        return cls(adj, labels)

    @property
    def n(self) -> int:
        return self._adj.shape[0]

    @property
    def adjacency(self) -> np.ndarray:
        """Read-only boolean adjacency matrix."""
        return self._adj

    @property
    def labels(self) -> tuple[str, ...] | None:
        return self._labels

    @property
    def degrees(self) -> np.ndarray:
        return self._degrees

    @property
    def m(self) -> int:
        return int(self._degrees.sum()) // 2

    def adjacency_matrix(self) -> np.ndarray:
        """Float copy of the adjacency matrix, ready for eigensolvers."""
        return self._adj.astype(float)

    def laplacian_matrix(self) -> np.ndarray:
        return np.diag(self._degrees.astype(float)) - self._adj

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        us, vs = np.nonzero(np.triu(self._adj, k=1))
        return list(zip(us.tolist(), vs.tolist()))

    def neighbors(self, u: int) -> np.ndarray:
        return np.flatnonzero(self._adj[u])

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return np.array_equal(self._adj, other._adj)

    def __hash__(self):
        return hash((self.n, np.packbits(self._adj).tobytes()))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


# --------------------------------------------------------------------------
# Family specifications
# --------------------------------------------------------------------------

FAMILIES = (
    "cycle", "path", "complete", "complete_bipartite", "complete_multipartite",
    "cocktail_party", "star", "comet", "circulant", "moebius_ladder", "prism",
    "generalized_petersen", "platonic", "named", "c5_expansion", "k_cover_c3",
    "k_cover_c5", "line_complete_bipartite",
)

# Required integer parameters per family; "conn" and "name" are special.
_REQUIRED = {
    "cycle": ("n",),
    "path": ("n",),
    "complete": ("n",),
    "complete_bipartite": ("a", "b"),
    "complete_multipartite": ("n", "c"),
    "cocktail_party": ("n",),
    "star": ("q",),
    "comet": ("q", "r"),
    "circulant": ("n", "conn"),
    "moebius_ladder": ("n",),
    "prism": ("n",),
    "generalized_petersen": ("n", "k"),
    "platonic": ("name",),
    "named": ("name",),
    "c5_expansion": ("k",),
    "k_cover_c3": ("k",),
    "k_cover_c5": ("k",),
    "line_complete_bipartite": ("a", "b"),
}


@dataclass(frozen=True)
class FamilySpec:
    """Tagged description of one instance of a parametric graph family.

    ``params`` holds integers, except ``conn`` (a tuple of connection
    offsets for circulants) and ``name`` (platonic / named graphs).
    """

    family: str
    params: Mapping[str, object] = field(default_factory=dict)

    def __post_init__(self):
        if self.family not in _REQUIRED:
            raise ParameterError(f"unknown family {self.family!r}")
        params = dict(self.params)
        missing = [p for p in _REQUIRED[self.family] if p not in params]
        if missing:
            raise ParameterError(f"{self.family} needs parameter(s) {', '.join(missing)}")
        extra = sorted(set(params) - set(_REQUIRED[self.family]))
        if extra:
            raise ParameterError(f"{self.family} does not take {', '.join(extra)}")
        for key, value in params.items():
            if key == "conn":
                params[key] = tuple(int(x) for x in value)
            elif key == "name":
                params[key] = str(value).lower()
            else:
                params[key] = int(value)
        object.__setattr__(self, "params", dict(sorted(params.items())))

    @classmethod
    def of(cls, family: str, **params) -> FamilySpec:
        return cls(family, params)

    def __hash__(self):
        return hash((self.family, tuple(self.params.items())))

    def __str__(self):
        parts = []
        for key, value in self.params.items():
            if isinstance(value, tuple):
                value = ",".join(str(x) for x in value)
            parts.append(f"{key}={value}")
        return f"{self.family}({'; '.join(parts)})"


def build_family(spec: FamilySpec) -> Graph:
    """Construct the canonical instance described by ``spec``."""
    p = spec.params
    f = spec.family
    if f == "cycle":
        return cycle(p["n"])
    if f == "path":
        return path(p["n"])
    if f == "complete":
        return complete(p["n"])
    if f == "complete_bipartite":
        return complete_bipartite(p["a"], p["b"])
    if f == "complete_multipartite":
        return complete_multipartite(p["n"], p["c"])
    if f == "cocktail_party":
        return cocktail_party(p["n"])
    if f == "star":
        return comet(p["q"], 0)
    if f == "comet":
        return comet(p["q"], p["r"])
    if f == "circulant":
        return circulant(p["n"], p["conn"])
    if f == "moebius_ladder":
        return moebius_ladder(p["n"])
    if f == "prism":
        return prism(p["n"])
    if f == "generalized_petersen":
        return generalized_petersen(p["n"], p["k"])
    if f == "platonic":
        return platonic(p["name"])
    if f == "named":
        return named(p["name"])
    if f == "c5_expansion":
        return clique_expansion(cycle(5), p["k"])
    if f == "k_cover_c3":
        return k_cover(3, p["k"])
    if f == "k_cover_c5":
        return k_cover(5, p["k"])
    if f == "line_complete_bipartite":
        return line_graph(complete_bipartite(p["a"], p["b"]))
    raise ParameterError(f"unknown family {f!r}")  # pragma: no cover


def _need(cond: bool, message: str):
    if not cond:
        raise ParameterError(message)


def cycle(n: int) -> Graph:
    """C_n with nodes 0..n-1 in cyclic order."""
    _need(n >= 3, f"cycle needs n >= 3, got {n}")
    return circulant(n, (1,))


def path(n: int) -> Graph:
    """P_n with nodes 0..n-1 along the path."""
    _need(n >= 1, f"path needs n >= 1, got {n}")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def complete(n: int) -> Graph:
    _need(n >= 1, f"complete graph needs n >= 1, got {n}")
    return Graph(~np.eye(n, dtype=bool))


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b}; nodes 0..a-1 form the first side, a..a+b-1 the second."""
    _need(a >= 1 and b >= 1, f"complete bipartite needs a, b >= 1, got ({a}, {b})")
    side = np.repeat([0, 1], [a, b])
    return Graph(side[:, None] != side[None, :])


def complete_multipartite(n: int, c: int) -> Graph:
    """K_{n/c,...,n/c}; part of node i is i // (n/c)."""
    _need(n >= 1 and c >= 1, f"multipartite needs n, c >= 1, got ({n}, {c})")
    _need(n % c == 0, f"multipartite needs c | n, got n={n}, c={c}")
    part = np.arange(n) // (n // c)
    return Graph(part[:, None] != part[None, :])


def cocktail_party(n: int) -> Graph:
    """CP_n on 2n nodes; node i is paired (non-adjacent) with node i + n."""
    _need(n >= 1, f"cocktail party needs n >= 1 pairs, got {n}")
    pair = np.arange(2 * n) % n
    return Graph(pair[:, None] != pair[None, :])


def comet(q: int, r: int) -> Graph:
    """Cm(q, r): star K_{1,q} with a path of r extra nodes hanging off a leaf.

    Node 0 is the centre, 1..q the leaves, q+1..q+r the path; the path
    starts at leaf 1.
    """
    _need(q >= 1 and r >= 0, f"comet needs q >= 1 and r >= 0, got ({q}, {r})")
    edges = [(0, i) for i in range(1, q + 1)]
    prev = 1
    for i in range(q + 1, q + r + 1):
        edges.append((prev, i))
        prev = i
    return Graph.from_edges(q + r + 1, edges)


def circulant(n: int, conn: Iterable[int]) -> Graph:
    """Ci_n(conn): node i is adjacent to i +- j (mod n) for every j in conn."""
    conn = tuple(conn)
    _need(n >= 2, f"circulant needs n >= 2, got {n}")
    _need(len(conn) > 0, "circulant needs a non-empty connection list")
    adj = np.zeros((n, n), dtype=bool)
    idx = np.arange(n)
    for j in conn:
        _need(j % n != 0, f"circulant connection {j} is a multiple of n={n}")
        adj[idx, (idx + j) % n] = True
        adj[idx, (idx - j) % n] = True
    return Graph(adj)


def moebius_ladder(n: int) -> Graph:
    """Moebius ladder on n nodes, i.e. Ci_n(1, n/2)."""
    _need(n >= 4 and n % 2 == 0, f"Moebius ladder needs even n >= 4, got {n}")
    return circulant(n, (1, n // 2))


def prism(n: int) -> Graph:
    """Prism on n nodes: two (n/2)-cycles 0..h-1 and h..n-1 joined by i ~ i+h."""
    _need(n >= 6 and n % 2 == 0, f"prism needs even n >= 6, got {n}")
    h = n // 2
    edges = []
    for i in range(h):
        edges += [(i, (i + 1) % h), (h + i, h + (i + 1) % h), (i, h + i)]
    return Graph.from_edges(n, edges)


def generalized_petersen(n: int, k: int) -> Graph:
    """GP(n, k): outer cycle 0..n-1, spokes i ~ n+i, inner n+i ~ n+(i+k mod n)."""
    _need(n >= 3, f"generalized Petersen needs n >= 3, got {n}")
    _need(1 <= k and 2 * k < n, f"generalized Petersen needs 1 <= k < n/2, got n={n}, k={k}")
    edges = []
    for i in range(n):
        edges += [(i, (i + 1) % n), (i, n + i), (n + i, n + (i + k) % n)]
    return Graph.from_edges(2 * n, edges)


def platonic(name: str) -> Graph:
    name = name.lower()
    if name not in PLATONIC:
        raise ParameterError(f"unknown platonic solid {name!r}; "
                             f"choose from {', '.join(PLATONIC)}")
    n, edges = PLATONIC[name]
    return Graph.from_edges(n, edges)


def named(name: str) -> Graph:
    """Petersen, Heawood, McGee or any platonic graph, by name."""
    name = name.lower()
    if name not in NAMED:
        raise ParameterError(f"unknown named graph {name!r}; choose from {', '.join(NAMED)}")
    n, edges = NAMED[name]
    return Graph.from_edges(n, edges)


# --------------------------------------------------------------------------
# Operators
# --------------------------------------------------------------------------

def _check_product_size(n: int):
    if n > MAX_NODES:
        raise SizeError(f"result would have {n} nodes; dense limit is {MAX_NODES}")


def tensor_product(g: Graph, h: Graph) -> Graph:
    """Kronecker product: (u, x) ~ (v, y) iff u ~ v and x ~ y.

    Node (u, x) gets index ``u * h.n + x``.
    """
    _check_product_size(g.n * h.n)
    return Graph(np.kron(g.adjacency, h.adjacency))


def clique_expansion(g: Graph, k: int, *, cliques: bool = False) -> Graph:
    """Blow every node of ``g`` up into ``k`` copies.

    By default the adjacency is ``A (x) J_k``: copies of one node are
    mutually non-adjacent and (u, i) ~ (v, j) iff u ~ v. A d-regular ``g``
    gives a kd-regular graph whose spectrum is k times that of ``g`` padded
    with zeros; this is the form whose spectra are used throughout.

    With ``cliques=True`` the copies of a node also form a k-clique,
    i.e. adjacency ``(A + I) (x) J_k - I`` and degrees ``k(d + 1) - 1``.

    Node (u, i) gets index ``u * k + i``.
    """
    _need(k >= 1, f"expansion factor k must be >= 1, got {k}")
    _check_product_size(g.n * k)
    ones = np.ones((k, k), dtype=bool)
    if cliques:
        adj = np.kron(g.adjacency | np.eye(g.n, dtype=bool), ones)
        np.fill_diagonal(adj, False)
    else:
        adj = np.kron(g.adjacency, ones)
    return Graph(adj)


def _shift_matrix(k: int) -> np.ndarray:
    # C[i, j] = 1 iff j = i + 1 (mod k)
    return np.roll(np.eye(k, dtype=np.int64), 1, axis=1)


def k_cover(base: int, k: int) -> Graph:
    """k-cover of the base triangle (``base=3``) or pentagon (``base=5``).

    Built from the k^2 x k^2 blocks ``P`` (block row i is k copies of
    ``C**i``, C the cyclic shift) and ``D = (J_k - I_k) (x) I_k``, arranged
    with D on the block diagonal, P above it and P^T below it, cyclically.
    The result has ``base * k**2`` nodes and is (3k - 1)-regular.
    """
    _need(base in (3, 5), f"k_cover base must be 3 or 5, got {base}")
    _need(k >= 1, f"k_cover needs k >= 1, got {k}")
    _check_product_size(base * k * k)
    shift = _shift_matrix(k)
    rows = [np.tile(np.linalg.matrix_power(shift, i), (1, k)) for i in range(k)]
    P = np.vstack(rows)
    D = np.kron(np.ones((k, k), dtype=np.int64) - np.eye(k, dtype=np.int64),
                np.eye(k, dtype=np.int64))
    Z = np.zeros_like(D)
    blocks = [[Z] * base for _ in range(base)]
    for i in range(base):
        blocks[i][i] = D
        blocks[i][(i + 1) % base] = P
        blocks[i][(i - 1) % base] = P.T
    return Graph(np.block(blocks) != 0)


def line_graph(g: Graph) -> Graph:
    """One node per edge of ``g`` (lexicographic edge order); adjacent iff
    the edges share an endpoint."""
    edges = g.edges()
    if not edges:
        raise DomainError("line graph of an edgeless graph is empty")
    _check_product_size(len(edges))
    e = np.asarray(edges)
    incidence = np.zeros((len(edges), g.n), dtype=np.int64)
    rows = np.arange(len(edges))
    incidence[rows, e[:, 0]] = 1
    incidence[rows, e[:, 1]] = 1
    shared = incidence @ incidence.T
    np.fill_diagonal(shared, 0)
    return Graph(shared > 0)


# --------------------------------------------------------------------------
# Structural properties
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class GraphProps:
    n: int
    m: int
    degree_sequence: tuple[int, ...]
    is_regular: bool
    degree: int | None
    is_connected: bool
    is_bipartite: bool
    components: int


def _bfs_coloring(g: Graph) -> tuple[np.ndarray, np.ndarray, bool]:
    """Component ids and 2-colouring attempt by breadth-first search."""
    comp = np.full(g.n, -1, dtype=np.int64)
    color = np.full(g.n, -1, dtype=np.int64)
    bipartite = True
    nbrs = [g.neighbors(u) for u in range(g.n)]
    cid = 0
    for start in range(g.n):
        if comp[start] >= 0:
            continue
        comp[start] = cid
        color[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in nbrs[u]:
                if comp[v] < 0:
                    comp[v] = cid
                    color[v] = 1 - color[u]
                    queue.append(v)
                elif color[v] == color[u]:
                    bipartite = False
        cid += 1
    return comp, color, bipartite


def connected_components(g: Graph) -> int:
    comp, _, _ = _bfs_coloring(g)
    return int(comp.max()) + 1


def is_connected(g: Graph) -> bool:
    return connected_components(g) == 1


def graph_props(g: Graph) -> GraphProps:
    comp, _, bipartite = _bfs_coloring(g)
    degrees = g.degrees
    regular = bool((degrees == degrees[0]).all())
    ncomp = int(comp.max()) + 1
    return GraphProps(
        n=g.n,
        m=g.m,
        degree_sequence=tuple(sorted(degrees.tolist(), reverse=True)),
        is_regular=regular,
        degree=int(degrees[0]) if regular else None,
        is_connected=ncomp == 1,
        is_bipartite=bipartite,
        components=ncomp,
    )


def girth(g: Graph) -> int | None:
    """Length of the shortest cycle, or None for forests."""
    best = None
    nbrs = [g.neighbors(u) for u in range(g.n)]
    for s in range(g.n):
        dist = {s: 0}
        parent = {s: -1}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in nbrs[u]:
                v = int(v)
                if v not in dist:
                    dist[v] = dist[u] + 1
                    parent[v] = u
                    queue.append(v)
                elif parent[u] != v:
                    length = dist[u] + dist[v] + 1
                    if best is None or length < best:
                        best = length
    return best


def regular_degree(g: Graph) -> int:
    """Common degree of a regular graph; DomainError otherwise."""
    d = g.degrees
    if not (d == d[0]).all():
        raise DomainError("graph is not regular")
    return int(d[0])
