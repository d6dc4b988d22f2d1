"""Dense linear-algebra helpers shared by the graph and Markov-chain modules."""

from __future__ import annotations

import numpy as np
import scipy.linalg
from scipy.sparse.csgraph import connected_components

from .errors import ComplexSpectrumError, ReducibilityError, ReversibilityError

IMAG_TOL = 1e-8
REVERSIBLE_TOL = 1e-10


def is_irreducible(P: np.ndarray) -> bool:
    ncomp, _ = connected_components(P > 0, directed=True, connection="strong")
    return ncomp == 1


def _power_stationary(P: np.ndarray, tol: float = 1e-13, max_iter: int = 1_000_000) -> np.ndarray:
    # lazy version shares the stationary vector and is aperiodic
    L = 0.5 * (P + np.eye(P.shape[0]))
    pi = np.full(P.shape[0], 1.0 / P.shape[0])
    for _ in range(max_iter):
        nxt = pi @ L
        if np.abs(nxt - pi).sum() < tol:
            return nxt
        pi = nxt
    return pi


def stationary_vector(P: np.ndarray, tol: float = 1e-13) -> np.ndarray:
    """Stationary row vector of an irreducible row-stochastic matrix.

    Solves pi (P - I) = 0 with the normalisation sum(pi) = 1 swapped in for
    one redundant equation; falls back to power iteration on the lazy chain
    if the direct solve is inaccurate.
    """
    n = P.shape[0]
    if n == 1:
        return np.ones(1)
    if not is_irreducible(P):
        raise ReducibilityError("chain is reducible; stationary distribution is not unique")
    A = P.T - np.eye(n)
    A[-1, :] = 1.0
    b = np.zeros(n)
    b[-1] = 1.0
    try:
        pi = scipy.linalg.solve(A, b)
        resid = np.abs(pi @ P - pi).max()
        if resid > 1e-10 or pi.min() < -1e-12:
            pi = _power_stationary(P, tol)
    except (np.linalg.LinAlgError, scipy.linalg.LinAlgError):
        pi = _power_stationary(P, tol)
    pi = np.clip(pi, 0.0, None)
    return pi / pi.sum()


def detailed_balance_residual(P: np.ndarray, pi: np.ndarray) -> float:
    F = pi[:, None] * P
    return float(np.abs(F - F.T).max())


def symmetric_eigenvalues(P: np.ndarray, pi: np.ndarray, tol: float = REVERSIBLE_TOL) -> np.ndarray:
    """Eigenvalues of a reversible chain via D^{1/2} P D^{-1/2}, descending."""
    resid = detailed_balance_residual(P, pi)
    if resid > tol:
        raise ReversibilityError(f"detailed-balance residual {resid:.3e} exceeds {tol:.0e}")
    r = np.sqrt(pi)
    S = r[:, None] * P / r[None, :]
    S = 0.5 * (S + S.T)
    return np.sort(scipy.linalg.eigvalsh(S))[::-1]


def general_eigenvalues(P: np.ndarray) -> np.ndarray:
    """Eigenvalues via a general eigensolve; they must be real up to IMAG_TOL."""
    ev = scipy.linalg.eigvals(P)
    if np.abs(ev.imag).max(initial=0.0) > IMAG_TOL:
        raise ComplexSpectrumError(f"max imaginary part {np.abs(ev.imag).max():.3e}")
    return np.sort(ev.real)[::-1]


def gaps(eigs: np.ndarray) -> tuple[float, float]:
    """(one-sided, two-sided) gaps from a descending eigenvalue list.

    A one-state chain has no non-trivial eigenvalue; both gaps are then 1.
    """
    if len(eigs) < 2:
        return 1.0, 1.0
    one = 1.0 - eigs[1]
    two = 1.0 - max(abs(eigs[1]), abs(eigs[-1]))
    return float(one), float(two)
