"""Finite Markov chains: stationarity, spectra, decompositions, mixing.

All chains are row-stochastic, ``P[x, y] = Pr(x -> y)``. Distances to
stationarity are reported both as total variation (half the L1 norm) and
as the plain L1 norm used in the mixing-time definition.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Hashable, Sequence

import numpy as np

from . import _linalg
from .errors import InputError, NonMixingError, ReversibilityError
from .graph import SpectralSummary, matrix_spectrum

STOCH_TOL = 1e-12
REVERSIBLE_TOL = 1e-10
EXACT_TV_LIMIT = 20_000
PAIRWISE_LIMIT = 4_000


@dataclass(frozen=True, eq=False)
class MarkovChain:
    """Transition matrix over labelled states."""

    states: tuple
    P: np.ndarray = field(repr=False)

    def __post_init__(self):
        P = np.array(self.P, dtype=float)
        n = len(self.states)
        if P.shape != (n, n):
            raise InputError(f"matrix shape {P.shape} does not match {n} states")
        if P.min(initial=0.0) < -STOCH_TOL:
            raise InputError("negative transition probability")
        dev = np.abs(P.sum(axis=1) - 1.0).max(initial=0.0)
        if dev > STOCH_TOL:
            raise InputError(f"rows deviate from 1 by {dev:.3e}")
        P[P < 0] = 0.0
        P.flags.writeable = False
        object.__setattr__(self, "states", tuple(self.states))
        object.__setattr__(self, "P", P)

    @property
    def n(self) -> int:
        return len(self.states)

    @cached_property
    def index(self) -> dict:
        return {s: i for i, s in enumerate(self.states)}

    @cached_property
    def pi(self) -> np.ndarray:
        pi = _linalg.stationary_vector(self.P)
        pi.flags.writeable = False
        return pi

    @cached_property
    def balance_residual(self) -> float:
        return _linalg.detailed_balance_residual(self.P, self.pi)

    @property
    def is_reversible(self) -> bool:
        return self.balance_residual <= REVERSIBLE_TOL

    @cached_property
    def spectrum(self) -> SpectralSummary:
        if self.is_reversible:
            return matrix_spectrum(self.P, self.pi)
        return matrix_spectrum(self.P)

    @property
    def one_sided_gap(self) -> float:
        return self.spectrum.one_sided_gap

    @property
    def two_sided_gap(self) -> float:
        return self.spectrum.two_sided_gap

    def prob(self, x: Hashable, y: Hashable) -> float:
        return float(self.P[self.index[x], self.index[y]])


def stationary(chain: MarkovChain) -> np.ndarray:
    return chain.pi


def check_detailed_balance(chain: MarkovChain) -> float:
    """max |pi(x) P(x,y) - pi(y) P(y,x)|."""
    return chain.balance_residual


# ---------------------------------------------------------------------------
# decomposition


@dataclass(frozen=True, eq=False)
class Decomposition:
    """Projection and restriction chains of a partition of the state space."""

    blocks: tuple
    labels: tuple
    projection: MarkovChain
    restrictions: tuple
    gamma: float


def _restriction(P: np.ndarray, idx: np.ndarray) -> np.ndarray:
    R = P[np.ix_(idx, idx)].copy()
    np.fill_diagonal(R, 0.0)
    np.fill_diagonal(R, 1.0 - R.sum(axis=1))
    return R


def decompose(chain: MarkovChain, partition: Sequence[Sequence[Hashable]], labels: Sequence | None = None) -> Decomposition:
    """Projection ``Pbar(i,j) = pi(O_i)^{-1} sum_{x in O_i, y in O_j} pi(x) P(x,y)``
    and restrictions that keep in-block moves and put escape mass on the diagonal.
    """
    blocks = [np.array([chain.index[s] for s in block], dtype=int) for block in partition]
    if any(len(b) == 0 for b in blocks):
        raise InputError("partition has an empty block")
    flat = np.concatenate(blocks)
    if len(flat) != chain.n or len(np.unique(flat)) != chain.n:
        raise InputError("partition must cover every state exactly once")
    labels = tuple(labels) if labels is not None else tuple(range(len(blocks)))
    m = len(blocks)
    B = np.zeros((chain.n, m))
    for i, b in enumerate(blocks):
        B[b, i] = 1.0
    pi = chain.pi
    mass = B.T @ pi
    Pbar = (B.T @ (pi[:, None] * chain.P) @ B) / mass[:, None]
    Pbar /= Pbar.sum(axis=1, keepdims=True)
    projection = MarkovChain(labels, Pbar)
    restrictions = []
    gamma = 0.0
    for b in blocks:
        inside = chain.P[np.ix_(b, b)].sum(axis=1)
        gamma = max(gamma, float((1.0 - inside).max()))
        restrictions.append(MarkovChain(tuple(chain.states[i] for i in b), _restriction(chain.P, b)))
    return Decomposition(tuple(tuple(chain.states[i] for i in b) for b in blocks), labels, projection,
                         tuple(restrictions), max(gamma, 0.0))


def jerrum_bound(lambda_bar: float, lambda_min: float, gamma: float) -> float:
    """Poincare constant guaranteed by the decomposition theorem."""
    return min(lambda_bar / 3.0, lambda_bar * lambda_min / (3.0 * gamma + lambda_bar))


@dataclass(frozen=True)
class JerrumCheck:
    chain_gap: float
    projection_gap: float
    restriction_gap: float
    gamma: float
    bound: float
    bound_gamma_one: float

    @property
    def sound(self) -> bool:
        return self.bound <= self.chain_gap + 1e-9


def jerrum_check(chain: MarkovChain, dec: Decomposition, restriction_gap: float | None = None) -> JerrumCheck:
    """Compare the decomposition bound (one-sided gaps) to the chain's own gap."""
    lbar = dec.projection.one_sided_gap
    lmin = restriction_gap if restriction_gap is not None else min(r.one_sided_gap for r in dec.restrictions)
    return JerrumCheck(chain.one_sided_gap, lbar, lmin, dec.gamma, jerrum_bound(lbar, lmin, dec.gamma),
                       jerrum_bound(lbar, lmin, 1.0))


# ---------------------------------------------------------------------------
# Dirichlet forms


def _require_reversible(chain: MarkovChain):
    if not chain.is_reversible:
        raise ReversibilityError(f"chain is not reversible (residual {chain.balance_residual:.3e})")


def dirichlet_form(chain: MarkovChain, f: np.ndarray, g: np.ndarray | None = None) -> float:
    """``1/2 sum pi(x) P(x,y) (f(x)-f(y)) (g(x)-g(y))``."""
    _require_reversible(chain)
    f = np.asarray(f, dtype=float)
    g = f if g is None else np.asarray(g, dtype=float)
    df = f[:, None] - f[None, :]
    dg = g[:, None] - g[None, :]
    return float(0.5 * np.sum(chain.pi[:, None] * chain.P * df * dg))


def variance(chain: MarkovChain, f: np.ndarray) -> float:
    """``1/2 sum pi(x) pi(y) (f(x)-f(y))^2``."""
    _require_reversible(chain)
    f = np.asarray(f, dtype=float)
    if chain.n <= PAIRWISE_LIMIT:
        return float(0.5 * chain.pi @ ((f[:, None] - f[None, :]) ** 2) @ chain.pi)
    mean = chain.pi @ f
    return float(chain.pi @ (f - mean) ** 2)


def variational_ratio(chain: MarkovChain, f: np.ndarray) -> float:
    var = variance(chain, f)
    if var <= 0:
        raise InputError("test function is constant")
    return dirichlet_form(chain, f) / var


# ---------------------------------------------------------------------------
# mixing


def mixing_time_bound(chain: MarkovChain, eps: float, gap: float | None = None) -> float:
    """``log(1 / (eps min pi)) / gap`` with the two-sided gap by default."""
    if not 0 < eps < 1:
        raise InputError("eps must lie in (0, 1)")
    gap = chain.two_sided_gap if gap is None else gap
    if gap <= 0:
        raise NonMixingError(f"spectral gap {gap:.3e} is not positive")
    return math.log(1.0 / (eps * float(chain.pi.min()))) / gap


@dataclass(frozen=True)
class TVCurve:
    t: np.ndarray
    tv_exact: np.ndarray
    l1_exact: np.ndarray
    tv_sampled: np.ndarray | None

    def first_below(self, eps: float, l1: bool = False) -> int | None:
        arr = self.l1_exact if l1 else self.tv_exact
        hit = np.flatnonzero(arr <= eps)
        return int(self.t[hit[0]]) if len(hit) else None

    def to_csv(self) -> str:
        rows = ["t,tv_exact,tv_sampled"]
        for i, t in enumerate(self.t):
            samp = "" if self.tv_sampled is None else f"{self.tv_sampled[i]:.12g}"
            rows.append(f"{t},{self.tv_exact[i]:.12g},{samp}")
        return "\n".join(rows) + "\n"


def _start_vector(chain: MarkovChain, start) -> np.ndarray:
    if isinstance(start, (int, np.integer)):
        nu = np.zeros(chain.n)
        nu[start] = 1.0
        return nu
    nu = np.asarray(start, dtype=float)
    if nu.shape != (chain.n,) or nu.min() < 0 or abs(nu.sum() - 1) > 1e-9:
        raise InputError("start must be a state index or a probability vector")
    return nu


def simulate_tv(chain: MarkovChain, start=0, t_max: int = 100, trials: int = 0, seed: int = 0) -> TVCurve:
    """Distance of ``nu P^t`` to stationarity for t = 0..t_max.

    The exact curve uses repeated vector-matrix products; with ``trials > 0``
    a Monte-Carlo estimate from that many independent walkers is added.
    """
    if t_max < 0:
        raise InputError("t_max must be non-negative")
    nu = _start_vector(chain, start)
    pi = chain.pi
    ts = np.arange(t_max + 1)
    l1 = np.empty(t_max + 1)
    if chain.n <= EXACT_TV_LIMIT:
        cur = nu.copy()
        for t in ts:
            l1[t] = np.abs(cur - pi).sum()
            cur = cur @ chain.P
    else:
        l1[:] = np.nan
    sampled = None
    if trials > 0:
        rng = np.random.default_rng(np.random.SeedSequence(seed))
        cum = np.cumsum(chain.P, axis=1)
        cum[:, -1] = 1.0
        pos = rng.choice(chain.n, size=trials, p=nu)
        sampled = np.empty(t_max + 1)
        for t in ts:
            occ = np.bincount(pos, minlength=chain.n) / trials
            sampled[t] = 0.5 * np.abs(occ - pi).sum()
            u = rng.random(trials)
            pos = (cum[pos] < u[:, None]).sum(axis=1)
    return TVCurve(ts, 0.5 * l1, l1, sampled)


def worst_case_l1(chain: MarkovChain, t_max: int) -> np.ndarray:
    """``max_x || P^t(x, .) - pi ||_1`` for t = 0..t_max (point masses are extremal)."""
    if chain.n > EXACT_TV_LIMIT:
        raise InputError("exact worst-case curve limited to 20000 states")
    pi = chain.pi
    M = np.eye(chain.n)
    out = np.empty(t_max + 1)
    for t in range(t_max + 1):
        out[t] = np.abs(M - pi[None, :]).sum(axis=1).max()
        M = M @ chain.P
    return out


# ---------------------------------------------------------------------------
# serialisation


def _jsonable(s):
    if hasattr(s, "to_json"):
        return s.to_json()
    if isinstance(s, (tuple, list)):
        return [_jsonable(x) for x in s]
    if isinstance(s, (np.integer,)):
        return int(s)
    return s


def chain_to_dict(chain: MarkovChain) -> dict:
    return {"states": [_jsonable(s) for s in chain.states], "P": chain.P.tolist(), "pi": chain.pi.tolist()}


def save_chain(chain: MarkovChain, path) -> None:
    Path(path).write_text(json.dumps(chain_to_dict(chain)))


def chain_from_dict(doc: dict) -> MarkovChain:
    def freeze(x):
        return tuple(freeze(y) for y in x) if isinstance(x, list) else x

    return MarkovChain(tuple(freeze(s) for s in doc["states"]), np.array(doc["P"], dtype=float))
