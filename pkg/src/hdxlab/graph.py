"""Weighted graphs, normalized adjacency and spectral summaries.

Convention: the normalized adjacency is row-stochastic, ``P[i, j]`` is the
probability of stepping from i to j, i.e. ``P = D^{-1} W``.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
import scipy.sparse
from scipy.sparse.csgraph import connected_components

from . import _linalg
from .errors import GenerationError, InputError, IsolatedVertexError, ReversibilityError
from .report import BoundEntry

SPEC_TOL = 1e-9


@dataclass(frozen=True)
class WeightedGraph:
    """Graph on vertices ``0..n-1`` with non-negative edge weights.

    Undirected edges are unordered and stored once; a loop ``(u, u, w)``
    contributes ``w`` to the weighted degree of ``u``.
    """

    n: int
    edges: tuple
    directed: bool = False
    _W: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not isinstance(self.n, (int, np.integer)) or self.n < 1:
            raise InputError(f"vertex count must be a positive integer, got {self.n!r}")
        clean = []
        seen = set()
        for e in self.edges:
            if len(e) == 2:
                u, v, w = e[0], e[1], 1.0
            elif len(e) == 3:
                u, v, w = e
            else:
                raise InputError(f"edge must be (u, v) or (u, v, w), got {e!r}")
            if int(u) != u or int(v) != v:
                raise InputError(f"vertex ids must be integers, got {e!r}")
            u, v, w = int(u), int(v), float(w)
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InputError(f"edge {e!r} references a vertex outside 0..{self.n - 1}")
            if not math.isfinite(w) or w < 0:
                raise InputError(f"edge {e!r} has a negative or non-finite weight")
            key = (u, v) if self.directed else (min(u, v), max(u, v))
            if key in seen:
                raise InputError(f"duplicate edge {key}")
            seen.add(key)
            clean.append((u, v, w))
        object.__setattr__(self, "edges", tuple(clean))
        W = np.zeros((self.n, self.n))
        for u, v, w in clean:
            W[u, v] += w
            if not self.directed and u != v:
                W[v, u] += w
        W.flags.writeable = False
        object.__setattr__(self, "_W", W)

    @property
    def weight_matrix(self) -> np.ndarray:
        return self._W

    @property
    def out_weights(self) -> np.ndarray:
        return self._W.sum(axis=1)

    def neighbors(self, u: int) -> list[int]:
        return [int(v) for v in np.flatnonzero(self._W[u]) if v != u]

    @classmethod
    def from_matrix(cls, W: np.ndarray, directed: bool = False) -> "WeightedGraph":
        W = np.asarray(W, dtype=float)
        n = W.shape[0]
        if directed:
            idx = zip(*np.nonzero(W))
        else:
            if not np.allclose(W, W.T, atol=0, rtol=1e-12):
                raise InputError("undirected weight matrix must be symmetric")
            idx = zip(*np.nonzero(np.triu(W)))
        return cls(n, tuple((int(u), int(v), float(W[u, v])) for u, v in idx), directed)


@dataclass(frozen=True)
class SpectralSummary:
    eigenvalues: tuple
    one_sided_gap: float
    two_sided_gap: float

    @classmethod
    def from_eigenvalues(cls, eigs) -> "SpectralSummary":
        eigs = np.sort(np.asarray(eigs, dtype=float))[::-1]
        one, two = _linalg.gaps(eigs)
        return cls(tuple(float(x) for x in eigs), one, two)

    @property
    def second(self) -> float:
        return self.eigenvalues[1] if len(self.eigenvalues) > 1 else 0.0

    @property
    def smallest(self) -> float:
        return self.eigenvalues[-1]


# ---------------------------------------------------------------------------
# basic operations


def normalized_adjacency(g: WeightedGraph) -> np.ndarray:
    """Row-stochastic transition matrix of the random walk on ``g``."""
    d = g.out_weights
    bad = np.flatnonzero(d <= 0)
    if len(bad):
        raise IsolatedVertexError(f"vertices with zero out-weight: {bad[:10].tolist()}")
    return g.weight_matrix / d[:, None]


def degree_distribution(g: WeightedGraph) -> np.ndarray:
    """Stationary distribution of the walk on an undirected graph."""
    d = g.out_weights
    return d / d.sum()


def matrix_spectrum(P: np.ndarray, pi: np.ndarray | None = None) -> SpectralSummary:
    """Spectrum of a transition matrix.

    With ``pi`` given the chain must be reversible and the symmetrised
    matrix is used; otherwise a general eigensolve is run and the
    eigenvalues must be real.
    """
    if pi is not None:
        return SpectralSummary.from_eigenvalues(_linalg.symmetric_eigenvalues(P, pi))
    return SpectralSummary.from_eigenvalues(_linalg.general_eigenvalues(P))


def spectrum(g: WeightedGraph, symmetric: bool | None = None) -> SpectralSummary:
    """Eigenvalues and gaps of the normalized adjacency of ``g``.

    Undirected graphs use the symmetric solver. Directed graphs use the
    general solver unless ``symmetric=True``, which requires reversibility.
    """
    P = normalized_adjacency(g)
    if not g.directed:
        return matrix_spectrum(P, degree_distribution(g))
    if symmetric:
        pi = _linalg.stationary_vector(P)
        return matrix_spectrum(P, pi)
    return matrix_spectrum(P)


def spectra_deviation(a, b) -> float:
    """Max pairwise deviation of two sorted multisets (inf if sizes differ)."""
    a = np.sort(np.asarray(a, dtype=float))
    b = np.sort(np.asarray(b, dtype=float))
    if a.shape != b.shape:
        return math.inf
    if a.size == 0:
        return 0.0
    return float(np.abs(a - b).max())


def spectra_match(a, b, tol: float = SPEC_TOL) -> bool:
    return spectra_deviation(a, b) <= tol


def tensor_product(g: WeightedGraph, h: WeightedGraph) -> WeightedGraph:
    """Kronecker product: vertex (a, b) is ``a * h.n + b``."""
    W = np.kron(g.weight_matrix, h.weight_matrix)
    return WeightedGraph.from_matrix(W, directed=g.directed or h.directed)


def add_lazy_loops(g: WeightedGraph, c: float) -> WeightedGraph:
    """Graph whose walk is ``c I + (1 - c) P``."""
    if not 0 <= c <= 1:
        raise InputError(f"laziness must lie in [0, 1], got {c}")
    d = g.out_weights
    if (d <= 0).any():
        raise IsolatedVertexError("lazy loops need positive out-weights")
    W = c * np.diag(d) + (1 - c) * g.weight_matrix
    return WeightedGraph.from_matrix(W, directed=g.directed)


# ---------------------------------------------------------------------------
# structure


def is_simple(g: WeightedGraph) -> bool:
    return not g.directed and all(u != v for u, v, _ in g.edges)


def regular_degree(g: WeightedGraph) -> int | None:
    """Common (unweighted) degree if ``g`` is a simple regular graph."""
    if not is_simple(g):
        return None
    deg = (g.weight_matrix > 0).sum(axis=1)
    return int(deg[0]) if (deg == deg[0]).all() else None


def is_connected(g: WeightedGraph) -> bool:
    ncomp, _ = connected_components(scipy.sparse.csr_matrix(g.weight_matrix > 0), directed=g.directed,
                                    connection="strong")
    return ncomp == 1


def has_triangle(g: WeightedGraph) -> bool:
    A = (g.weight_matrix > 0).astype(float)
    np.fill_diagonal(A, 0)
    return bool(np.trace(A @ A @ A) > 0)


def girth(g: WeightedGraph) -> float:
    """Length of a shortest cycle of a simple undirected graph (inf for a forest)."""
    if not is_simple(g):
        raise InputError("girth needs a simple undirected graph")
    adj = [g.neighbors(v) for v in range(g.n)]
    best = math.inf
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        frontier = [root]
        while frontier:
            nxt = []
            for u in frontier:
                for w in adj[u]:
                    if w not in dist:
                        dist[w] = dist[u] + 1
                        parent[w] = u
                        nxt.append(w)
                    elif parent[u] != w:
                        best = min(best, dist[u] + dist[w] + 1)
            frontier = nxt
    return best


def unit_edges(g: WeightedGraph) -> list[tuple[int, int]]:
    """Edges of a simple undirected graph as sorted pairs, in stored order."""
    if not is_simple(g):
        raise InputError("expected a simple undirected graph")
    return [(min(u, v), max(u, v)) for u, v, _ in g.edges]


def line_graph(g: WeightedGraph) -> WeightedGraph:
    """Line graph of a simple undirected graph; vertex i is ``g.edges[i]``."""
    E = unit_edges(g)
    out = []
    for i in range(len(E)):
        for j in range(i + 1, len(E)):
            if set(E[i]) & set(E[j]):
                out.append((i, j, 1.0))
    return WeightedGraph(len(E), tuple(out))


def sachs_predicted_spectrum(g: WeightedGraph) -> np.ndarray:
    """Normalized line-graph spectrum predicted from a d-regular ``g``."""
    d = regular_degree(g)
    if d is None or d < 2:
        raise InputError("line-graph spectrum relation needs a simple d-regular graph with d >= 2")
    lam = np.asarray(spectrum(g).eigenvalues)
    mapped = (lam * d + d - 2) / (2 * d - 2)
    extra_mult = g.n * (d - 2) // 2
    return np.concatenate([mapped, np.full(extra_mult, -2.0 / (2 * d - 2))])


def check_sachs_relation(g: WeightedGraph, tol: float = SPEC_TOL, name: str = "G") -> BoundEntry:
    """Max deviation between the line-graph spectrum and its prediction."""
    dev = spectra_deviation(spectrum(line_graph(g)).eigenvalues, sachs_predicted_spectrum(g))
    return BoundEntry(f"graph.sachs[{name}]", dev, 0.0, "<=", tol,
                      note="max |sorted(L spectrum) - sorted(predicted)|")


# ---------------------------------------------------------------------------
# builders


def cycle_graph(n: int) -> WeightedGraph:
    if n < 3:
        raise InputError("cycle needs at least 3 vertices")
    return WeightedGraph(n, tuple((i, (i + 1) % n, 1.0) for i in range(n)))


def complete_graph(n: int) -> WeightedGraph:
    return WeightedGraph(n, tuple((i, j, 1.0) for i in range(n) for j in range(i + 1, n)))


def petersen_graph() -> WeightedGraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return WeightedGraph(10, tuple((u, v, 1.0) for u, v in outer + spokes + inner))


def random_regular_triangle_free(n: int, t: int, seed: int, max_attempts: int = 10_000,
                                 connected: bool = False) -> WeightedGraph:
    """Uniform-ish simple t-regular triangle-free graph via the configuration model.

    Pairings with loops, repeated edges or triangles (and, if requested,
    disconnected results) are rejected and redrawn. The outcome depends only
    on ``(n, t, seed)``.
    """
    if t < 1 or n <= t:
        raise InputError(f"need 1 <= t < n, got n={n}, t={t}")
    if (n * t) % 2:
        raise InputError(f"n*t must be even, got n={n}, t={t}")
    rng = np.random.default_rng(seed)
    points = np.repeat(np.arange(n), t)
    for _ in range(max_attempts):
        pairs = rng.permutation(points).reshape(-1, 2)
        if (pairs[:, 0] == pairs[:, 1]).any():
            continue
        keys = {(min(a, b), max(a, b)) for a, b in pairs.tolist()}
        if len(keys) != len(pairs):
            continue
        g = WeightedGraph(n, tuple((a, b, 1.0) for a, b in sorted(keys)))
        if has_triangle(g):
            continue
        if connected and not is_connected(g):
            continue
        return g
    raise GenerationError(f"no triangle-free {t}-regular graph on {n} vertices after {max_attempts} attempts")


# ---------------------------------------------------------------------------
# serialisation


def graph_to_dict(g: WeightedGraph) -> dict:
    return {"n": g.n, "directed": g.directed, "edges": [[u, v, w] for u, v, w in g.edges]}


def graph_from_dict(doc: dict) -> WeightedGraph:
    try:
        return WeightedGraph(int(doc["n"]), tuple(tuple(e) for e in doc["edges"]), bool(doc.get("directed", False)))
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed graph document: {exc}") from exc


def save_graph(g: WeightedGraph, path) -> None:
    Path(path).write_text(json.dumps(graph_to_dict(g)))


def load_graph(path) -> WeightedGraph:
    try:
        doc = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: not valid JSON ({exc})") from exc
    return graph_from_dict(doc)


__all__ = [
    "WeightedGraph", "SpectralSummary", "normalized_adjacency", "spectrum", "matrix_spectrum",
    "tensor_product", "add_lazy_loops", "line_graph", "check_sachs_relation", "sachs_predicted_spectrum",
    "random_regular_triangle_free", "cycle_graph", "complete_graph", "petersen_graph",
    "spectra_match", "spectra_deviation", "ReversibilityError",
]
