"""Weighted simplicial complexes with balanced weights, links and expansion.

Faces are sorted tuples of vertex ids. Weights are balanced: a face weighs
the sum of the weights of the faces one dimension up that contain it,
starting from weights on the top-dimensional faces. The empty face is kept
(dimension -1) so that walks on vertices can go "down" through it.
"""

from __future__ import annotations

import itertools
import json
import logging
import math
from collections import defaultdict
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import graph as gr
from .errors import BalanceError, InputError
from .graph import WeightedGraph

log = logging.getLogger(__name__)

BALANCE_TOL = 1e-12


@dataclass(frozen=True)
class SimplicialComplex:
    """Downward-closed family of faces over vertices ``0..n-1``.

    ``faces[d]`` lists the d-faces (d = 0..top_dim) in sorted order and
    ``weights`` maps every face, including ``()``, to its weight.
    """

    n: int
    faces: tuple
    weights: dict = field(repr=False)
    pure: bool = True

    @property
    def top_dim(self) -> int:
        return len(self.faces) - 1

    def k_faces(self, k: int) -> tuple:
        if k == -1:
            return ((),)
        if not 0 <= k <= self.top_dim:
            raise InputError(f"dimension {k} outside -1..{self.top_dim}")
        return self.faces[k]

    def weight(self, face) -> float:
        return self.weights[tuple(face)]

    @property
    def is_degenerate(self) -> bool:
        return all(w == 0 for w in self.weights.values())

    def cofaces(self, k: int) -> dict:
        """Map each (k-1)-face to the k-faces containing it."""
        out = defaultdict(list)
        for J in self.k_faces(k):
            for i in range(len(J)):
                out[J[:i] + J[i + 1:]].append(J)
        return out

    def balance_residual(self) -> float:
        """Largest |w(F) - sum of w over immediate superfaces|, relative to max weight."""
        scale = max(self.weights.values(), default=1.0) or 1.0
        worst = 0.0
        for k in range(0, self.top_dim + 1):
            up = defaultdict(float)
            for J in self.faces[k]:
                for i in range(len(J)):
                    up[J[:i] + J[i + 1:]] += self.weights[J]
            for F in self.k_faces(k - 1):
                worst = max(worst, abs(self.weights[F] - up.get(F, 0.0)))
        return worst / scale

    @classmethod
    def from_top_faces(cls, n: int, top_faces, top_weights=None) -> "SimplicialComplex":
        """Complex generated by ``top_faces`` with propagated balanced weights."""
        top_faces = [tuple(F) for F in top_faces]
        tops = sorted({tuple(sorted(int(v) for v in F)) for F in top_faces})
        if not tops:
            raise InputError("a complex needs at least one top face")
        dims = {len(F) - 1 for F in tops}
        for F in tops:
            if len(set(F)) != len(F):
                raise InputError(f"face {F} repeats a vertex")
            if F[0] < 0 or F[-1] >= n:
                raise InputError(f"face {F} references a vertex outside 0..{n - 1}")
        H = max(dims)
        pure = len(dims) == 1
        by_dim = [set() for _ in range(H + 1)]
        for F in tops:
            for r in range(1, len(F) + 1):
                by_dim[r - 1].update(itertools.combinations(F, r))
        faces = tuple(tuple(sorted(s)) for s in by_dim)
        if top_weights is None:
            tw = {F: 1.0 for F in faces[H]}
        elif isinstance(top_weights, dict):
            tw = {tuple(sorted(F)): float(w) for F, w in top_weights.items()}
        else:
            tw = dict(zip([tuple(sorted(F)) for F in top_faces], map(float, top_weights)))
        c = cls(n, faces, {}, pure)
        return propagate_weights(c, tw)


def propagate_weights(c: SimplicialComplex, top_weights: dict) -> SimplicialComplex:
    """Balanced weights from weights on the top-dimensional faces."""
    H = c.top_dim
    w = {}
    for F in c.faces[H]:
        val = float(top_weights.get(F, 0.0))
        if not math.isfinite(val) or val < 0:
            raise InputError(f"top weight of {F} must be finite and non-negative")
        w[F] = val
    for k in range(H, -1, -1):
        for F in c.k_faces(k - 1):
            w.setdefault(F, 0.0)
        for J in c.faces[k]:
            for i in range(len(J)):
                w[J[:i] + J[i + 1:]] += w[J]
    out = SimplicialComplex(c.n, c.faces, w, c.pure)
    if out.is_degenerate:
        log.warning("all top weights are zero; the complex is degenerate")
    return out


def complete_complex(s: int, h: int) -> SimplicialComplex:
    """All subsets of size at most h+1 of s vertices, uniform top weights."""
    if not 0 <= h < s:
        raise InputError(f"need 0 <= h < s, got s={s}, h={h}")
    return SimplicialComplex.from_top_faces(s, itertools.combinations(range(s), h + 1))


# ---------------------------------------------------------------------------
# links and skeletons


@dataclass(frozen=True)
class Link:
    """Link of ``face`` relabelled onto ``0..m-1``; ``vertices[i]`` is the original id."""

    face: tuple
    vertices: tuple
    complex: SimplicialComplex | None


def _vertex_index(c: SimplicialComplex) -> dict:
    idx = defaultdict(list)
    for J in c.faces[c.top_dim]:
        for v in J:
            idx[v].append(J)
    return idx


def link(c: SimplicialComplex, s, _index: dict | None = None) -> Link:
    """``{T \\ s : s <= T}`` with weights ``w_s(T) = w(s | T)``."""
    s = tuple(sorted(s))
    if s not in c.weights:
        raise InputError(f"{s} is not a face")
    ss = set(s)
    if not s:
        tops = list(c.faces[c.top_dim])
    else:
        pool = _index[s[0]] if _index is not None else c.faces[c.top_dim]
        tops = [J for J in pool if ss.issubset(J)]
    rest = sorted({v for J in tops for v in J if v not in ss})
    if not rest:
        return Link(s, (), None)
    index = {v: i for i, v in enumerate(rest)}
    by_dim = defaultdict(set)
    for J in tops:
        R = [v for v in J if v not in ss]
        for r in range(1, len(R) + 1):
            by_dim[r - 1].update(itertools.combinations(R, r))
    faces = tuple(tuple(sorted(tuple(index[v] for v in T) for T in by_dim[d])) for d in range(len(by_dim)))
    weights = {(): c.weights[s]}
    for d in range(len(by_dim)):
        for T in by_dim[d]:
            weights[tuple(index[v] for v in T)] = c.weights[tuple(sorted(ss | set(T)))]
    return Link(s, tuple(rest), SimplicialComplex(len(rest), faces, weights, c.pure))


def one_skeleton(c: SimplicialComplex) -> WeightedGraph:
    """Weighted graph on the vertices with the 1-face weights as edge weights."""
    if c.top_dim < 1:
        return WeightedGraph(c.n, ())
    edges = tuple((u, v, c.weights[(u, v)]) for u, v in c.faces[1] if c.weights[(u, v)] > 0)
    return WeightedGraph(c.n, edges)


def global_expansion(c: SimplicialComplex) -> float:
    """Two-sided gap of the 1-skeleton."""
    return gr.spectrum(one_skeleton(c)).two_sided_gap


@dataclass(frozen=True)
class LinkGap:
    face: tuple
    gap: float
    connected: bool
    size: int


def _link_gap(c: SimplicialComplex, s, index=None) -> LinkGap | None:
    L = link(c, s, index)
    if L.complex is None or L.complex.n < 2 or L.complex.top_dim < 1:
        return None
    g = one_skeleton(L.complex)
    if (g.out_weights <= 0).any():
        return None
    return LinkGap(L.face, gr.spectrum(g).two_sided_gap, gr.is_connected(g), L.complex.n)


def link_gaps(c: SimplicialComplex, max_workers: int = 1) -> list[LinkGap]:
    """Two-sided gaps of the 1-skeleta of the links of all faces of dim 0..H-1.

    Links whose 1-skeleton has fewer than two vertices or no edges are
    skipped; disconnected link skeleta are kept and marked.
    """
    faces = [F for k in range(0, c.top_dim) for F in c.faces[k]]
    index = _vertex_index(c)
    if max_workers > 1:
        with ThreadPoolExecutor(max_workers) as ex:
            res = list(ex.map(lambda F: _link_gap(c, F, index), faces))
    else:
        res = [_link_gap(c, F, index) for F in faces]
    out = [r for r in res if r is not None]
    for r in out:
        if not r.connected:
            log.warning("link of %s has a disconnected 1-skeleton", r.face)
    return out


def local_expansion(c: SimplicialComplex, max_workers: int = 1) -> float:
    """Minimum link gap over non-empty faces of dim <= H-1 (inf if no link has an edge)."""
    gaps = [r.gap for r in link_gaps(c, max_workers)]
    return min(gaps) if gaps else math.inf


def two_sided_expansion(c: SimplicialComplex) -> float:
    """Min of the global and the local expansion."""
    return min(global_expansion(c), local_expansion(c))


def check_balance(c: SimplicialComplex, tol: float = BALANCE_TOL) -> float:
    r = c.balance_residual()
    if r > tol:
        raise BalanceError(f"balance residual {r:.3e} exceeds {tol:.0e}")
    return r


# ---------------------------------------------------------------------------
# serialisation


def complex_to_dict(c: SimplicialComplex) -> dict:
    tops = c.faces[c.top_dim]
    return {"n": c.n, "top_dim": c.top_dim, "top_faces": [list(F) for F in tops],
            "top_weights": [c.weights[F] for F in tops]}


def complex_from_dict(doc: dict) -> SimplicialComplex:
    try:
        tops = [tuple(F) for F in doc["top_faces"]]
        c = SimplicialComplex.from_top_faces(int(doc["n"]), tops, doc.get("top_weights"))
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed complex document: {exc}") from exc
    if "top_dim" in doc and int(doc["top_dim"]) != c.top_dim:
        raise InputError(f"top_dim {doc['top_dim']} disagrees with the faces ({c.top_dim})")
    return c


def save_complex(c: SimplicialComplex, path) -> None:
    Path(path).write_text(json.dumps(complex_to_dict(c)))


def load_complex(path) -> SimplicialComplex:
    try:
        return complex_from_dict(json.loads(Path(path).read_text()))
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: not valid JSON ({exc})") from exc


def face_vector(c: SimplicialComplex) -> list[int]:
    return [len(f) for f in c.faces]


def weights_array(c: SimplicialComplex, k: int) -> np.ndarray:
    return np.array([c.weights[F] for F in c.k_faces(k)])
