"""Closed-form predictions for the densifier chains and their decompositions.

Everything here is a pure function of the instance parameters
(n, T, s, H, k) and the induced weights w_I, w_J. The base complex is the
complete complex K_s^(H) and G is T-regular and triangle-free.

Shorthand used throughout:

    D      = T w_I + w_J
    Delta  = (2^k - 1) T w_I + w_J
    Dt     = 2 w_J + T w_I (2^(k+1) - 2)
    ratio  = (T w_I + w_J) / Delta
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .densifier import DensifiedComplex, densifier_weights
from .errors import InputError
from .walks import SplitState, hypercube_coordinates


@dataclass(frozen=True)
class WalkParams:
    n: int
    T: int
    s: int
    H: int
    k: int
    w_I: float
    w_J: float

    @classmethod
    def for_instance(cls, dq: DensifiedComplex, k: int, w_J_shift: float = 0.0) -> "WalkParams":
        if dq.T is None:
            raise InputError("closed forms need a regular base graph")
        w = densifier_weights(dq.H, k, dq.T)
        return cls(dq.graph.n, dq.T, dq.s, dq.H, k, w.w_I, w.w_J + w_J_shift)

    @classmethod
    def from_sizes(cls, n: int, T: int, s: int, H: int, k: int) -> "WalkParams":
        w = densifier_weights(H, k, T)
        return cls(n, T, s, H, k, w.w_I, w.w_J)

    @property
    def D(self) -> float:
        return self.T * self.w_I + self.w_J

    @property
    def Delta(self) -> float:
        return (2 ** self.k - 1) * self.T * self.w_I + self.w_J

    @property
    def Dt(self) -> float:
        return 2 * self.w_J + self.T * self.w_I * (2 ** (self.k + 1) - 2)

    @property
    def ratio(self) -> float:
        return (self.T * self.w_I + self.w_J) / self.Delta

    @property
    def n_edges(self) -> int:
        return self.n * self.T // 2

    @property
    def n_base(self) -> int:
        return math.comb(self.s, self.k + 1)

    @property
    def base(self) -> float:
        """1 / ((k+1)(s-k)), the probability of one delete-then-add path up to weights."""
        return 1.0 / ((self.k + 1) * (self.s - self.k))


# ---------------------------------------------------------------------------
# stationary distributions


def split_stationary(p: WalkParams, zero_offset: bool) -> float:
    """Stationary mass of one split state."""
    num = p.w_J / 2 if zero_offset else p.T * p.w_I / 2
    return num / (p.n_edges * p.n_base * p.Delta)


def outer_restriction_stationary(p: WalkParams, zero_offset: bool) -> float:
    num = p.w_J if zero_offset else p.T * p.w_I
    return num / (2 * p.n_base * p.Delta)


def inner_restriction_stationary(p: WalkParams, constant: bool) -> float:
    return (p.w_J if constant else p.T * p.w_I) / p.Dt


# ---------------------------------------------------------------------------
# outer projection


def outer_projection_offdiag(p: WalkParams) -> float:
    return p.ratio / (2 * p.T)


def outer_projection_diag(p: WalkParams) -> float:
    return 1.0 - (p.T - 1) / p.T * p.ratio


def outer_projection_matrix(p: WalkParams, edges: list[tuple[int, int]]) -> np.ndarray:
    """Predicted projection on the colour blocks, indexed like ``edges``."""
    m = len(edges)
    P = np.zeros((m, m))
    off = outer_projection_offdiag(p)
    for i, j in itertools.combinations(range(m), 2):
        if set(edges[i]) & set(edges[j]):
            P[i, j] = P[j, i] = off
    np.fill_diagonal(P, outer_projection_diag(p))
    return P


def outer_projection_gap_stated(p: WalkParams, gap2_g: float) -> float:
    """(Gap_2(G) / 2) * ratio, with the two-sided gap of G."""
    return gap2_g / 2 * p.ratio


def outer_projection_gap_exact(p: WalkParams, gap1_g: float) -> float:
    """(OneSidedGap(G) / 2) * ratio; the projection has no negative eigenvalue."""
    return gap1_g / 2 * p.ratio


def outer_projection_spectrum(p: WalkParams, line_eigs) -> np.ndarray:
    """Lazy map mu -> 1 - c (1 - mu) applied to the normalized line-graph spectrum."""
    c = (p.T - 1) / p.T * p.ratio
    return np.sort(1.0 - c * (1.0 - np.asarray(line_eigs, dtype=float)))[::-1]


def outer_projection_gap_lemma(p: WalkParams, gap2_g: float) -> float:
    """Weaker form used by the main proof: Gap_2(G) / (2 (2^k - 1))."""
    return gap2_g / (2 * (2 ** p.k - 1))


# ---------------------------------------------------------------------------
# outer restriction rows


def outer_restriction_row(p: WalkParams, kind: str) -> tuple[float, list[tuple[float, int]]]:
    """(self loop, [(probability, count), ...]) for a state of the given kind.

    ``kind`` is "zero" (0-offset), "one" (1-offset) or "rest".
    """
    k, s, T, D, wI, wJ = p.k, p.s, p.T, p.D, p.w_I, p.w_J
    b = p.base
    half = b / 2
    if kind == "zero":
        loop = (T - 1) / T + wJ / (D * T * (s - k))
        return loop, [(wJ / (D * T) * b, (k + 1) * (s - k - 1)), (wI / D * b, (k + 1) * (s - k))]
    if kind == "one":
        loop = (T - 1) / (T * (k + 1)) + wI / D * b + k * half
        return loop, [(wJ / (D * T) * b, s - k), (half, k), (wI / D * b, s - k - 1),
                      (half, 2 * k * (s - k - 1))]
    if kind == "rest":
        return 1.0 / (2 * (s - k)), [(half, k + 1), (half, 2 * (k + 1) * (s - k - 1))]
    raise InputError(f"unknown state kind {kind!r}")


def state_kind(st: SplitState) -> str:
    t = st.face.offset
    return "zero" if t == 0 else ("one" if t == 1 else "rest")


def row_deviation(row: np.ndarray, self_index: int, loop: float, offdiag: list[tuple[float, int]]) -> float:
    """Max deviation between a matrix row and a predicted (self loop, off-diagonal multiset)."""
    dev = abs(row[self_index] - loop)
    others = np.delete(row, self_index)
    got = np.sort(others[others > 0])
    want = np.sort(np.concatenate([np.full(c, v) for v, c in offdiag if c > 0 and v > 0] or [np.zeros(0)]))
    if len(got) != len(want):
        return math.inf
    if len(got):
        dev = max(dev, float(np.abs(got - want).max()))
    return dev


# ---------------------------------------------------------------------------
# inner projection


def inner_projection_offdiag(p: WalkParams) -> float:
    k, s, T = p.k, p.s, p.T
    num = ((2 ** k - 2) * T + 1) * T * p.w_I + p.w_J
    return num / (T * (k + 1) * (s - k) * p.Delta)


def inner_projection_degree(p: WalkParams) -> int:
    return (p.k + 1) * (p.s - p.k - 1)


def inner_projection_matrix(p: WalkParams, faces: list[tuple]) -> np.ndarray:
    """Predicted projection on base faces: ``q`` between faces sharing k vertices."""
    m = len(faces)
    q = inner_projection_offdiag(p)
    P = np.zeros((m, m))
    for i, j in itertools.combinations(range(m), 2):
        if len(set(faces[i]) & set(faces[j])) == p.k:
            P[i, j] = P[j, i] = q
    np.fill_diagonal(P, 1.0 - inner_projection_degree(p) * q)
    return P


def inner_projection_gap_exact(p: WalkParams) -> float:
    """s * q: the Johnson graph J(s, k+1) has normalized gap s / ((k+1)(s-k-1))."""
    return p.s * inner_projection_offdiag(p)


def inner_projection_gap_lemma(p: WalkParams) -> float:
    return 1.0 / (2 * p.T * (p.k + 1))


def inner_projection_step(p: WalkParams) -> tuple[float, float]:
    """(1/(2T), ((s-k-1)/(T(s-k))) * ratio_I), an intermediate step of the lemma."""
    k, s, T = p.k, p.s, p.T
    r = (((2 ** k - 2) * T + 1) * T * p.w_I + p.w_J) / p.Delta
    return 1.0 / (2 * T), (s - k - 1) / (T * (s - k)) * r


# ---------------------------------------------------------------------------
# inner restriction (hypercube)


def inner_restriction_matrix(p: WalkParams, states: list[SplitState]) -> np.ndarray:
    """Predicted transition matrix in the given state order."""
    coords = [hypercube_coordinates(st) for st in states]
    idx = {x: i for i, x in enumerate(coords)}
    dim = p.k + 1
    ends = {(0,) * dim, (1,) * dim}
    b = p.base
    P = np.zeros((len(states), len(states)))
    for x, i in idx.items():
        for c in range(dim):
            y = x[:c] + (1 - x[c],) + x[c + 1:]
            if y not in idx:
                continue
            if x in ends:
                v = b * p.w_I / p.D
            elif y in ends:
                v = b * p.w_J / (p.D * p.T)
            else:
                v = b / 2
            P[i, idx[y]] = v
        P[i, i] = 1.0 - P[i].sum()
    return P


def uniform_chain_neighbor_prob(p: WalkParams) -> float:
    return p.w_I / (p.D * (p.k + 1) * (p.s - p.k))


def uniform_chain_gap(p: WalkParams) -> float:
    return 2 * p.w_I / (p.D * (p.k + 1) * (p.s - p.k))


def hypercube_gap(dim: int) -> float:
    """Gap of the non-lazy walk on {0,1}^dim."""
    return 2.0 / dim


def hypercube_spectrum(dim: int) -> np.ndarray:
    return np.sort(np.concatenate([np.full(math.comb(dim, i), 1 - 2 * i / dim) for i in range(dim + 1)]))[::-1]


def comparison_factor(p: WalkParams) -> float:
    """Gap(R_I) >= factor * Gap(U)."""
    return p.w_J * p.Dt / (2 ** (p.k + 1) * (p.T * p.w_I) ** 2)


def comparison_factor_weak(p: WalkParams) -> float:
    return p.w_J / (2 * p.T * p.w_I)


def inner_restriction_gap_written(p: WalkParams) -> float:
    """The written middle form, with 2 w_J in place of 2 w_I."""
    return comparison_factor_weak(p) * 2 * p.w_J / (p.D * (p.k + 1) * (p.s - p.k))


def inner_restriction_gap_claim(p: WalkParams) -> float:
    return p.base


# ---------------------------------------------------------------------------
# links and expansion


def star_third_eigenvalue(T: int, w_C: float, w_S: float) -> float:
    """Eigenvalue of the centre-versus-satellites vector of the star chain."""
    return w_C / (w_C + T * w_S) - 0.5


def star_third_eigenvalue_stated(T: int, w_C: float, w_S: float) -> float:
    return 0.5 - w_C / (w_C + T * w_S)


def star_spectrum(T: int, w_C: float, w_S: float, stated: bool = False) -> np.ndarray:
    third = (star_third_eigenvalue_stated if stated else star_third_eigenvalue)(T, w_C, w_S)
    return np.sort(np.array([1.0] + [0.5] * (T - 1) + [third]))[::-1]


def global_factor(T: int, H: int) -> float:
    return T * 2 ** (H - 1) / (T * 2 ** H - (T - 1))


def global_expansion_bound(T: int, H: int, gap2_g: float) -> float:
    return (0.5 - 1.0 / (2 * (T * 2 ** H + 1))) * gap2_g


# ---------------------------------------------------------------------------
# main theorem and mixing


def main_theorem_rhs(p: WalkParams, gap2_g: float, t_power: int = 2) -> float:
    k, s = p.k, p.s
    return gap2_g / (64 * p.T ** t_power * (k + 1) ** 2 * (s - k) * (2 ** k - 1))


def smallest_eigenvalue_bound(p: WalkParams) -> float:
    return p.w_J / (p.D * (p.s - p.k)) - 1.0


def face_count(p: WalkParams) -> int:
    return p.n_base * (p.n + p.n_edges * (2 ** (p.k + 1) - 2))


def corollary_mixing_bound(p: WalkParams, gap2_g: float, eps: float) -> float:
    return math.log(2 * face_count(p) / eps) / main_theorem_rhs(p, gap2_g, 2)
