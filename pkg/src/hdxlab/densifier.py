"""Local densifier of a triangle-free base graph G with a base complex B.

Vertices are pairs (v, b) with v in G and b in B, encoded as ``v * s + b``.
An H-face is {(v_0, b_0), ..., (v_H, b_H)} where {b_i} is an H-face of B and
all v_i lie on one edge of G (constant labellings are taken once). Every
top face gets weight 1.

A k-face is written (F, f): F the base face in B, f the labelling by
vertices of G. Its offset is the size of the smaller label class, so
offset 0 means f is constant. Its colour is the image of f, a vertex or an
edge of G.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass
from functools import cached_property

from . import graph as gr
from .errors import InputError
from .graph import WeightedGraph
from .simplicial import SimplicialComplex


@dataclass(frozen=True, order=True)
class DensifiedFace:
    base_face: tuple
    labeling: tuple

    def __post_init__(self):
        if len(self.base_face) != len(self.labeling):
            raise InputError("base face and labelling must have equal length")

    @property
    def dim(self) -> int:
        return len(self.base_face) - 1

    @property
    def color(self) -> tuple:
        return tuple(sorted(set(self.labeling)))

    @property
    def offset(self) -> int:
        counts = Counter(self.labeling)
        return 0 if len(counts) == 1 else min(counts.values())

    @property
    def is_constant(self) -> bool:
        return len(set(self.labeling)) == 1

    @property
    def lonely(self) -> tuple:
        """Positions whose label appears nowhere else in a non-constant face."""
        if self.is_constant:
            return ()
        counts = Counter(self.labeling)
        return tuple(i for i, v in enumerate(self.labeling) if counts[v] == 1)

    def label_of(self, b: int) -> int:
        return self.labeling[self.base_face.index(b)]

    def to_json(self) -> list:
        return [list(self.base_face), list(self.labeling)]


@dataclass(frozen=True, eq=False)
class DensifiedComplex:
    graph: WeightedGraph
    base: SimplicialComplex
    complex: SimplicialComplex

    @property
    def s(self) -> int:
        return self.base.n

    @property
    def H(self) -> int:
        return self.base.top_dim

    @cached_property
    def T(self) -> int | None:
        return gr.regular_degree(self.graph)

    @cached_property
    def edges(self) -> list[tuple[int, int]]:
        return gr.unit_edges(self.graph)

    @cached_property
    def adj(self) -> list[list[int]]:
        return [self.graph.neighbors(v) for v in range(self.graph.n)]

    def vid(self, v: int, b: int) -> int:
        return v * self.s + b

    def decode(self, face) -> DensifiedFace:
        pairs = sorted(((x % self.s, x // self.s) for x in face))
        return DensifiedFace(tuple(b for b, _ in pairs), tuple(v for _, v in pairs))

    def encode(self, face: DensifiedFace) -> tuple:
        return tuple(sorted(self.vid(v, b) for b, v in zip(face.base_face, face.labeling)))

    def k_faces(self, k: int) -> list[DensifiedFace]:
        return [self.decode(F) for F in self.complex.k_faces(k)]

    def weight(self, face: DensifiedFace) -> float:
        return self.complex.weights[self.encode(face)]


def local_densifier(g: WeightedGraph, b: SimplicialComplex) -> DensifiedComplex:
    """Build the densified complex Q from G and B."""
    if not gr.is_simple(g):
        raise InputError("base graph must be simple and undirected")
    if gr.has_triangle(g):
        raise InputError("base graph must be triangle-free")
    if not gr.is_connected(g):
        raise InputError("base graph must be connected")
    if not b.pure or b.top_dim < 1:
        raise InputError("base complex must be pure of dimension >= 1")
    s, H = b.n, b.top_dim
    tops = []
    for F in b.faces[H]:
        for v in range(g.n):
            tops.append(tuple(sorted(v * s + x for x in F)))
        for u, w in gr.unit_edges(g):
            for lab in itertools.product((u, w), repeat=H + 1):
                if len(set(lab)) == 2:
                    tops.append(tuple(sorted(l * s + x for l, x in zip(lab, F))))
    q = SimplicialComplex.from_top_faces(g.n * s, tops)
    return DensifiedComplex(g, b, q)


# ---------------------------------------------------------------------------
# closed-form weights (B the complete complex K_s^(H), G T-regular)


@dataclass(frozen=True)
class DensifierWeights:
    H: int
    k: int
    T: int
    w_I: float
    w_J: float

    @property
    def D(self) -> float:
        return self.T * self.w_I + self.w_J


def densifier_weights(H: int, k: int, T: int) -> DensifierWeights:
    """Reduced weights of non-constant (w_I) and constant (w_J) k-faces."""
    if not 0 <= k <= H:
        raise InputError(f"need 0 <= k <= H, got k={k}, H={H}")
    return DensifierWeights(H, k, T, 2.0 ** (H - k), T * 2.0 ** (H - k) - (T - 1))


def face_weight(face: DensifiedFace, H: int, T: int, s: int | None = None, form: str = "reduced") -> float:
    """Closed-form weight of a k-face of the densifier.

    ``reduced``: w_I or w_J. ``binomial``: those times C(s, H-k).
    ``propagated``: the exact balanced weight when every top face weighs 1,
    i.e. (H-k)! C(s-k-1, H-k) times the reduced value.
    """
    k = face.dim
    if k > H:
        raise InputError(f"face of dimension {k} in a {H}-dimensional complex")
    if k == H:
        return 1.0
    w = densifier_weights(H, k, T)
    base = w.w_J if face.is_constant else w.w_I
    if form == "reduced":
        return base
    if s is None:
        raise InputError(f"form {form!r} needs s")
    if form == "binomial":
        return math.comb(s, H - k) * base
    if form == "propagated":
        return math.factorial(H - k) * math.comb(s - k - 1, H - k) * base
    raise InputError(f"unknown weight form {form!r}")


def link_case_weights(H: int, T: int, k: int) -> tuple[float, float]:
    """(w_S, w_C) edge weights in the link of a constant k-face, k = -1..H-2.

    k = -1 gives the global 1-skeleton.
    """
    if not -1 <= k <= H - 2:
        raise InputError(f"need -1 <= k <= H-2, got k={k}, H={H}")
    w_s = 2.0 ** (H - (k + 2))
    return w_s, 1.0 + T * (w_s - 1.0)


def k_face_count(n: int, T: int, s: int, k: int) -> tuple[int, int]:
    """(#constant, #non-constant) k-faces over K_s^(H) and a T-regular G."""
    base = math.comb(s, k + 1)
    return n * base, (n * T // 2) * base * (2 ** (k + 1) - 2)
