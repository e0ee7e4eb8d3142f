"""Constructors for the regular graph families under study.

All families are simple, undirected, connected and d-regular, so the walk
Hamiltonian A/d is always well defined.  Adjacency matrices are dense 0/1
float arrays; vertex orders are fixed by each constructor so that the
closed-form amplitude formulas index vertices consistently.
"""

import re
from dataclasses import dataclass
from itertools import permutations

import numpy as np

from .exceptions import (
    ContractViolationError,
    DegenerateGraphError,
    InvalidParameterError,
    SizeLimitError,
)

__all__ = [
    "Graph",
    "Hamiltonian",
    "complete_graph",
    "balanced_multipartite",
    "cycle_graph",
    "cayley_symmetric",
    "hypercube_graph",
    "hamiltonian",
    "as_graph",
    "to_edge_list",
    "from_edge_list",
]

FAMILY_COMPLETE = "complete"
FAMILY_MULTIPARTITE = "multipartite"
FAMILY_CYCLE = "cycle"
FAMILY_CAYLEY_SYM = "cayley-sym"
FAMILY_HYPERCUBE = "hypercube"
FAMILY_CUSTOM = "custom"

# Circulant families get the Fourier eigenbasis without diagonalization.
CIRCULANT_FAMILIES = (FAMILY_COMPLETE, FAMILY_CYCLE)

MAX_CAYLEY_N = 5
MAX_HYPERCUBE_DIM = 12


@dataclass(frozen=True, eq=False)
class Graph:
    """A d-regular graph with a family tag.

    Attributes
    ----------
    n : int
        Number of vertices.
    adjacency : numpy.ndarray
        Symmetric 0/1 matrix with zero diagonal, shape ``(n, n)``.
    degree : int
        Common vertex degree.
    family : str
        One of ``complete``, ``multipartite``, ``cycle``, ``cayley-sym``,
        ``hypercube`` or ``custom``.
    params : tuple
        Family parameters, e.g. ``(a, b)`` for multipartite.
    """

    n: int
    adjacency: np.ndarray
    degree: int
    family: str
    params: tuple = ()

    def __post_init__(self):
        adj = np.asarray(self.adjacency, dtype=float)
        adj.flags.writeable = False
        object.__setattr__(self, "adjacency", adj)
        object.__setattr__(self, "params", tuple(int(p) for p in self.params))

    @property
    def label(self):
        """Compact family label, e.g. ``multipartite(2,3)``."""
        if not self.params:
            return self.family
        return f"{self.family}({','.join(str(p) for p in self.params)})"

    @property
    def display_name(self):
        """Conventional name for tables: K_5, K_{2,3}, C_7, X_4, Q_3."""
        if self.family == FAMILY_COMPLETE:
            return f"K_{self.params[0]}"
        if self.family == FAMILY_MULTIPARTITE:
            a, b = self.params
            return "K_{" + ",".join([str(b)] * a) + "}"
        if self.family == FAMILY_CYCLE:
            return f"C_{self.params[0]}"
        if self.family == FAMILY_CAYLEY_SYM:
            return f"X_{self.params[0]}"
        if self.family == FAMILY_HYPERCUBE:
            return f"Q_{self.params[0]}"
        return f"custom_{self.n}"

    def edges(self):
        """Sorted list of edges (u, v) with u < v."""
        rows, cols = np.nonzero(np.triu(self.adjacency))
        return list(zip(rows.tolist(), cols.tolist()))


def _finish(adjacency, family, params):
    adjacency = np.asarray(adjacency, dtype=float)
    degree = int(round(adjacency[0].sum()))
    return Graph(adjacency.shape[0], adjacency, degree, family, tuple(params))


def complete_graph(n):
    """Complete graph K_n: adjacency J - I, degree n - 1.  Requires n >= 2."""
    n = int(n)
    if n < 2:
        raise InvalidParameterError(f"complete graph needs n >= 2, got {n}")
    return _finish(np.ones((n, n)) - np.eye(n), FAMILY_COMPLETE, (n,))


def balanced_multipartite(a, b):
    """Complete a-partite graph with b vertices per block.

    Vertices are block-contiguous: vertex ``v`` belongs to block ``v // b``,
    so the adjacency is ``(J_a - I_a) kron J_b`` and the degree is
    ``(a - 1) * b``.  The case ``b = 1`` is the complete graph K_a and is
    delegated to :func:`complete_graph`; ``a = 1`` is the empty graph, whose
    walk Hamiltonian A/d is undefined, and is rejected.
    """
    a, b = int(a), int(b)
    if a <= 1:
        raise DegenerateGraphError(
            f"balanced multipartite graph needs a >= 2 blocks, got a={a} "
            "(a single block has no edges, so A/d is undefined)"
        )
    if b < 1:
        raise InvalidParameterError(f"block size must be >= 1, got b={b}")
    if b == 1:
        return complete_graph(a)
    adj = np.kron(np.ones((a, a)) - np.eye(a), np.ones((b, b)))
    return _finish(adj, FAMILY_MULTIPARTITE, (a, b))


def cycle_graph(n):
    """Cycle C_n: circulant with first column [0,1,0,...,0,1].  Requires n >= 3."""
    n = int(n)
    if n < 3:
        raise InvalidParameterError(f"cycle needs n >= 3 vertices, got {n}")
    adj = np.zeros((n, n))
    idx = np.arange(n)
    adj[idx, (idx + 1) % n] = 1.0
    adj[(idx + 1) % n, idx] = 1.0
    return _finish(adj, FAMILY_CYCLE, (n,))


def _apply_transposition(perm, x, y):
    # left multiplication: entries equal to x and y swap
    return tuple(y if v == x else x if v == y else v for v in perm)


def cayley_symmetric(n):
    """Cayley graph of the symmetric group S_n with all transpositions.

    Vertices are the permutations of ``0..n-1`` in lexicographic order;
    ``pi`` and ``tau * pi`` are adjacent for every transposition ``tau``
    (left multiplication).  The graph is C(n,2)-regular on n! vertices and
    bipartite by permutation parity.  Supported for ``2 <= n <= 5``.
    """
    n = int(n)
    if n < 2:
        raise InvalidParameterError(f"symmetric-group Cayley graph needs n >= 2, got {n}")
    if n > MAX_CAYLEY_N:
        raise SizeLimitError(
            f"cayley-sym supports n <= {MAX_CAYLEY_N} ({MAX_CAYLEY_N}! = 120 vertices), got {n}"
        )
    verts = sorted(permutations(range(n)))
    index = {p: i for i, p in enumerate(verts)}
    adj = np.zeros((len(verts), len(verts)))
    for p in verts:
        i = index[p]
        for x in range(n):
            for y in range(x + 1, n):
                adj[i, index[_apply_transposition(p, x, y)]] = 1.0
    return _finish(adj, FAMILY_CAYLEY_SYM, (n,))


def hypercube_graph(d):
    """d-dimensional hypercube on 2**d vertices, adjacency by Hamming distance 1."""
    d = int(d)
    if d < 1:
        raise InvalidParameterError(f"hypercube needs dimension >= 1, got {d}")
    if d > MAX_HYPERCUBE_DIM:
        raise SizeLimitError(f"hypercube supports d <= {MAX_HYPERCUBE_DIM}, got {d}")
    m = 1 << d
    adj = np.zeros((m, m))
    for u in range(m):
        for bit in range(d):
            adj[u, u ^ (1 << bit)] = 1.0
    return _finish(adj, FAMILY_HYPERCUBE, (d,))


@dataclass(frozen=True, eq=False)
class Hamiltonian:
    """Hermitian walk generator with its normalization tag.

    ``adjacency`` is the transition-matrix form A/d (unit row sums);
    ``laplacian`` is A - D with D = diag(degrees), which differs from a
    rescaled A only by a multiple of the identity on regular graphs.
    """

    matrix: np.ndarray
    normalization: str

    def __post_init__(self):
        mat = np.asarray(self.matrix, dtype=np.complex128)
        mat.flags.writeable = False
        object.__setattr__(self, "matrix", mat)


def hamiltonian(graph, normalization="adjacency"):
    """Build the walk Hamiltonian of a regular graph.

    Parameters
    ----------
    graph : Graph
    normalization : {"adjacency", "laplacian"}
        ``adjacency`` gives H = A/d; ``laplacian`` gives L = A - D.
    """
    g = as_graph(graph)
    if normalization == "adjacency":
        return Hamiltonian(g.adjacency / g.degree, "adjacency")
    if normalization == "laplacian":
        return Hamiltonian(g.adjacency - g.degree * np.eye(g.n), "laplacian")
    raise InvalidParameterError(
        f"unknown normalization {normalization!r}; expected 'adjacency' or 'laplacian'"
    )


def _connected(adjacency):
    n = adjacency.shape[0]
    seen = np.zeros(n, dtype=bool)
    stack = [0]
    seen[0] = True
    while stack:
        u = stack.pop()
        for v in np.nonzero(adjacency[u])[0]:
            if not seen[v]:
                seen[v] = True
                stack.append(int(v))
    return bool(seen.all())


def as_graph(graph_or_adjacency):
    """Validate a Graph, or wrap a raw adjacency matrix as a custom Graph.

    Custom adjacency input must be symmetric 0/1 with zero diagonal,
    regular, and connected.
    """
    if isinstance(graph_or_adjacency, Graph):
        return graph_or_adjacency
    adj = np.asarray(graph_or_adjacency, dtype=float)
    if adj.ndim != 2 or adj.shape[0] != adj.shape[1] or adj.shape[0] < 2:
        raise InvalidParameterError(f"adjacency must be square with n >= 2, got shape {adj.shape}")
    if not np.array_equal(adj, adj.T):
        raise ContractViolationError("adjacency must be symmetric")
    if not np.isin(adj, (0.0, 1.0)).all():
        raise ContractViolationError("adjacency entries must be 0 or 1")
    if np.diagonal(adj).any():
        raise ContractViolationError("adjacency must have a zero diagonal (no self-loops)")
    degrees = adj.sum(axis=1)
    if not np.all(degrees == degrees[0]) or degrees[0] == 0:
        raise ContractViolationError("graph must be regular with positive degree")
    if not _connected(adj):
        raise ContractViolationError("graph must be connected")
    return _finish(adj.copy(), FAMILY_CUSTOM, ())


def to_edge_list(graph):
    """Serialize a graph to edge-list text: ``n d family`` then ``u v`` lines."""
    g = as_graph(graph)
    lines = [f"{g.n} {g.degree} {g.label}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


_LABEL_RE = re.compile(r"^([a-z-]+)(?:\(([\d,]+)\))?$")


def from_edge_list(text):
    """Parse the edge-list text format back into a Graph."""
    lines = [ln for ln in text.strip().splitlines() if ln.strip()]
    if not lines:
        raise InvalidParameterError("empty edge-list document")
    head = lines[0].split()
    if len(head) != 3:
        raise InvalidParameterError(f"bad edge-list header: {lines[0]!r}")
    n, degree, label = int(head[0]), int(head[1]), head[2]
    match = _LABEL_RE.match(label)
    if match is None:
        raise InvalidParameterError(f"bad family label: {label!r}")
    family = match.group(1)
    params = tuple(int(p) for p in match.group(2).split(",")) if match.group(2) else ()
    adj = np.zeros((n, n))
    for ln in lines[1:]:
        u, v = (int(tok) for tok in ln.split())
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise InvalidParameterError(f"bad edge: {ln!r}")
        adj[u, v] = adj[v, u] = 1.0
    got = as_graph(adj)
    if got.degree != degree:
        raise ContractViolationError(
            f"edge list declares degree {degree} but edges give {got.degree}"
        )
    return Graph(n, adj, degree, family, params)
