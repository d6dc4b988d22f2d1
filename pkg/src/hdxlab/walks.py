"""Random walks on weighted complexes and the chains built from the densifier.

down-up on k-faces: from J drop a uniform vertex to reach a (k-1)-face F,
then move to J' containing F with probability w(J') / w(F).

up-down on k-faces: from F move to J containing F with probability
w(J) / w(F), then drop a uniform vertex of J.

The split chain copies every constant k-face once per edge at its label,
dividing the probability of entering a constant face evenly among copies.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass

import numpy as np

from .densifier import DensifiedComplex, DensifiedFace
from .errors import BalanceError, InputError
from .markov import Decomposition, MarkovChain, decompose
from .simplicial import BALANCE_TOL, SimplicialComplex


def _check_level(c: SimplicialComplex, k: int, cof: dict):
    for F, ups in cof.items():
        wF = c.weights[F]
        if wF <= 0:
            raise InputError(f"face {F} has non-positive weight")
        tot = sum(c.weights[J] for J in ups)
        if abs(tot - wF) > BALANCE_TOL * max(1.0, wF):
            raise BalanceError(f"face {F}: weight {wF} but superfaces sum to {tot}")


def down_up_chain(c: SimplicialComplex, k: int) -> MarkovChain:
    """Down-up walk on the k-faces of ``c`` (0 <= k <= top_dim)."""
    if not 0 <= k <= c.top_dim:
        raise InputError(f"down-up walk needs 0 <= k <= {c.top_dim}, got {k}")
    states = c.k_faces(k)
    idx = {J: i for i, J in enumerate(states)}
    cof = c.cofaces(k)
    _check_level(c, k, cof)
    w = c.weights
    P = np.zeros((len(states), len(states)))
    for a, J in enumerate(states):
        for i in range(k + 1):
            F = J[:i] + J[i + 1:]
            wF = w[F] * (k + 1)
            for J2 in cof[F]:
                P[a, idx[J2]] += w[J2] / wF
    return MarkovChain(states, P)


def up_down_chain(c: SimplicialComplex, k: int) -> MarkovChain:
    """Up-down walk on the k-faces of ``c`` (0 <= k < top_dim)."""
    if not 0 <= k < c.top_dim:
        raise InputError(f"up-down walk needs 0 <= k < {c.top_dim}, got {k}")
    states = c.k_faces(k)
    idx = {F: i for i, F in enumerate(states)}
    cof = c.cofaces(k + 1)
    _check_level(c, k + 1, cof)
    w = c.weights
    P = np.zeros((len(states), len(states)))
    for a, F in enumerate(states):
        for J in cof[F]:
            p = w[J] / (w[F] * (k + 2))
            for i in range(k + 2):
                P[a, idx[J[:i] + J[i + 1:]]] += p
    return MarkovChain(states, P)


# ---------------------------------------------------------------------------
# chains on the densifier


def _require_T(dq: DensifiedComplex) -> int:
    if dq.T is None:
        raise InputError("base graph must be regular")
    return dq.T


def q_down_up(dq: DensifiedComplex, k: int) -> MarkovChain:
    """Down-up walk on the k-faces of the densifier, states as DensifiedFace."""
    if not 1 <= k < dq.H:
        raise InputError(f"need 1 <= k < H={dq.H}, got k={k}")
    raw = down_up_chain(dq.complex, k)
    return MarkovChain(tuple(dq.decode(F) for F in raw.states), raw.P)


@dataclass(frozen=True, order=True)
class SplitState:
    base_face: tuple
    labeling: tuple
    color: tuple

    @property
    def face(self) -> DensifiedFace:
        return DensifiedFace(self.base_face, self.labeling)

    def to_json(self) -> list:
        return [list(self.base_face), list(self.labeling), list(self.color)]


def split_copies(dq: DensifiedComplex, face: DensifiedFace) -> list[SplitState]:
    if face.is_constant:
        u = face.labeling[0]
        return [SplitState(face.base_face, face.labeling, (min(u, w), max(u, w))) for w in sorted(dq.adj[u])]
    return [SplitState(face.base_face, face.labeling, face.color)]


def split_chain(dq: DensifiedComplex, k: int, q: MarkovChain | None = None) -> MarkovChain:
    """Split the constant faces of the down-up chain into one copy per incident edge."""
    T = _require_T(dq)
    q = q_down_up(dq, k) if q is None else q
    states, owner = [], []
    for a, face in enumerate(q.states):
        for st in split_copies(dq, face):
            states.append(st)
            owner.append(a)
    owner = np.array(owner)
    E = np.zeros((len(states), q.n))
    E[np.arange(len(states)), owner] = 1.0
    C = E.T.copy()
    for a, face in enumerate(q.states):
        if face.is_constant:
            C[a] /= T
    return MarkovChain(tuple(states), E @ q.P @ C)


def outer_partition(split: MarkovChain, dq: DensifiedComplex) -> list[list[SplitState]]:
    blocks = defaultdict(list)
    for st in split.states:
        blocks[st.color].append(st)
    return [blocks[e] for e in dq.edges]


def outer_decomposition(split: MarkovChain, dq: DensifiedComplex) -> Decomposition:
    """Partition the split chain by colour (edge of G)."""
    return decompose(split, outer_partition(split, dq), labels=dq.edges)


def edge_relabel(e_from: tuple, e_to: tuple):
    m = dict(zip(e_from, e_to))
    return lambda v: m[v]


def outer_isomorphism_deviation(dec: Decomposition) -> float:
    """Max entry deviation between restrictions after relabelling f -> t_ij o f.

    Returns inf if some relabelled state is missing from the target block.
    """
    worst = 0.0
    rs = dec.restrictions
    for i, j in itertools.combinations(range(len(rs)), 2):
        t = edge_relabel(dec.labels[i], dec.labels[j])
        Ri, Rj = rs[i], rs[j]
        try:
            perm = [Rj.index[SplitState(st.base_face, tuple(t(v) for v in st.labeling), dec.labels[j])]
                    for st in Ri.states]
        except KeyError:
            return float("inf")
        worst = max(worst, float(np.abs(Ri.P - Rj.P[np.ix_(perm, perm)]).max()))
    return worst


def inner_decomposition(restriction: MarkovChain) -> Decomposition:
    """Partition an outer restriction by base face."""
    blocks = defaultdict(list)
    for st in restriction.states:
        blocks[st.base_face].append(st)
    faces = sorted(blocks)
    return decompose(restriction, [blocks[F] for F in faces], labels=faces)


# ---------------------------------------------------------------------------
# small reference chains


def hypercube_chain(dim: int, laziness: float = 0.0) -> MarkovChain:
    """Walk on {0,1}^dim flipping a uniform coordinate, with holding prob ``laziness``."""
    states = tuple(itertools.product((0, 1), repeat=dim))
    idx = {x: i for i, x in enumerate(states)}
    P = laziness * np.eye(len(states))
    for x in states:
        for i in range(dim):
            y = x[:i] + (1 - x[i],) + x[i + 1:]
            P[idx[x], idx[y]] += (1 - laziness) / dim
    return MarkovChain(states, P)


def uniform_neighbor_hypercube(dim: int, q: float) -> MarkovChain:
    """Hypercube walk with probability q to each neighbour and 1 - dim q to stay."""
    if q * dim > 1:
        raise InputError("neighbour probability too large")
    return hypercube_chain(dim, 1.0 - dim * q)


def hypercube_coordinates(state: SplitState) -> tuple:
    """0/1 vector of a state in an inner block: 1 where the label is the larger edge end."""
    return tuple(int(v == state.color[1]) for v in state.labeling)


def star_chain(T: int, w_C: float, w_S: float) -> MarkovChain:
    """Centre 0 with T satellites; the centre keeps w_C, each satellite gets w_S.

    A satellite stays or returns to the centre with probability 1/2 each.
    """
    P = np.zeros((T + 1, T + 1))
    tot = w_C + T * w_S
    P[0, 0] = w_C / tot
    P[0, 1:] = w_S / tot
    for i in range(1, T + 1):
        P[i, 0] = P[i, i] = 0.5
    return MarkovChain(tuple(range(T + 1)), P)
