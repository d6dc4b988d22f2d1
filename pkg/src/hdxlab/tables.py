"""Transition tables of the densifier down-up chain and its split version.

A transition of the down-up walk on k-faces is a path: delete the vertex at
one position of the source face, then add a vertex to the remaining
(k-1)-face. Rows of the tables are indexed by

    (source offset, deletion class, target offset, same base face, same edge)

and give a per-target probability and a number of distinct targets.

Deletion classes: every deletion from a constant face is "any". Otherwise
the deleted vertex is "minority" if its label class is no larger than the
other class and "majority" if it is strictly larger. So a face with a
unique lonely vertex has exactly one minority deletion, and in a tie
(k = 1, t = 1 for instance) both classes are minority.

Rows as printed aggregate over all deletions of a class. ``per_deletion``
rescales a row to a single deletion: a row whose target does not depend on
which vertex was deleted (self loops and copies of the source face) keeps
its count and divides its probability by the class size; every other row
divides its count.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .densifier import DensifiedComplex, DensifiedFace, densifier_weights
from .errors import InputError
from .markov import MarkovChain
from .walks import SplitState

PROB_TOL = 1e-12


@dataclass(frozen=True)
class TableRow:
    delete: str
    target: int
    same_face: bool
    same_edge: bool | None
    prob: float
    count: int
    multiplicity: int
    shared: bool = False

    @property
    def key(self) -> tuple:
        return (self.delete, self.target, self.same_face, self.same_edge)

    def per_deletion(self) -> tuple[int, float]:
        if self.multiplicity == 0:
            return 0, 0.0
        if self.shared:
            return self.count, self.prob / self.multiplicity
        q = Fraction(self.count, self.multiplicity)
        if q.denominator != 1:
            raise InputError(f"row {self.key}: count {self.count} not divisible by {self.multiplicity}")
        return int(q), self.prob


@dataclass(frozen=True)
class TableParams:
    k: int
    s: int
    T: int
    w_I: float
    w_J: float

    @property
    def D(self) -> float:
        return self.T * self.w_I + self.w_J

    @classmethod
    def for_instance(cls, dq: DensifiedComplex, k: int, w_J_shift: float = 0.0) -> "TableParams":
        w = densifier_weights(dq.H, k, dq.T)
        return cls(k, dq.s, dq.T, w.w_I, w.w_J + w_J_shift)


def table_rows(t: int, p: TableParams, split: bool = False) -> list[TableRow]:
    """Predicted rows for a source of offset t, for the down-up chain or, if ``split``, the split chain."""
    k, s, T = p.k, p.s, p.T
    D, wI, wJ = p.D, p.w_I, p.w_J
    base = 1.0 / ((k + 1) * (s - k))
    half = base / 2
    r = s - (k + 1)
    rows = []
    if t == 0:
        m = k + 1
        if split:
            rows += [
                TableRow("any", 0, True, True, wJ / (D * T * (s - k)), 1, m, True),
                TableRow("any", 0, True, False, wJ / (D * T * (s - k)), T - 1, m, True),
                TableRow("any", 0, False, True, base * wJ / (D * T), r * m, m),
                TableRow("any", 0, False, False, base * wJ / (D * T), (T - 1) * r * m, m),
                TableRow("any", 1, True, True, base * wI / D, m, m),
                TableRow("any", 1, True, False, base * wI / D, m * (T - 1), m),
                TableRow("any", 1, False, True, base * wI / D, m * r, m),
                TableRow("any", 1, False, False, base * wI / D, m * (T - 1) * r, m),
            ]
        else:
            rows += [
                TableRow("any", 0, True, None, wJ / (D * (s - k)), 1, m, True),
                TableRow("any", 0, False, None, base * wJ / D, r * m, m),
                TableRow("any", 1, True, None, base * wI / D, m * T, m),
                TableRow("any", 1, False, None, base * wI / D, m * T * r, m),
            ]
        return rows
    if t == 1:
        if split:
            rows += [
                TableRow("minority", 0, True, True, base * wJ / (D * T), 1, 1),
                TableRow("minority", 0, True, False, base * wJ / (D * T), T - 1, 1),
                TableRow("minority", 0, False, True, base * wJ / (D * T), r, 1),
                TableRow("minority", 0, False, False, base * wJ / (D * T), r * (T - 1), 1),
            ]
        else:
            rows += [
                TableRow("minority", 0, True, None, base * wJ / D, 1, 1),
                TableRow("minority", 0, False, None, base * wJ / D, r, 1),
            ]
        rows += [
            TableRow("minority", 1, True, True, base * wI / D, 1, 1),
            TableRow("minority", 1, False, True, base * wI / D, r, 1),
            TableRow("minority", 1, True, False, base * wI / D, T - 1, 1),
            TableRow("minority", 1, False, False, base * wI / D, (T - 1) * r, 1),
            TableRow("majority", 1, True, True, k / (k + 1) / (s - k) / 2, 1, k, True),
            TableRow("majority", 1, False, True, half, r * k, k),
            TableRow("majority", 2, True, True, half, k, k),
            TableRow("majority", 2, False, True, half, k * r, k),
        ]
        return rows
    M = k + 1 - t
    return [
        TableRow("minority", t, True, True, t / (k + 1) / (s - k) / 2, 1, t, True),
        TableRow("minority", t, False, True, half, t * r, t),
        TableRow("minority", t - 1, True, True, half, t, t),
        TableRow("minority", t - 1, False, True, half, t * r, t),
        TableRow("majority", t, True, True, M / (k + 1) / (s - k) / 2, 1, M, True),
        TableRow("majority", t, False, True, half, M * r, M),
        TableRow("majority", t + 1, True, True, half, M, M),
        TableRow("majority", t + 1, False, True, half, M * r, M),
    ]


# ---------------------------------------------------------------------------
# transitions from the complex itself


class PathOracle:
    """Per-deletion transition probabilities read off the densified complex."""

    def __init__(self, dq: DensifiedComplex, k: int):
        self.dq = dq
        self.k = k
        self.cof = dq.complex.cofaces(k)
        self.w = dq.complex.weights

    def paths(self, face: DensifiedFace, pos: int) -> dict[DensifiedFace, float]:
        dq = self.dq
        R = dq.encode(face)
        drop = dq.vid(face.labeling[pos], face.base_face[pos])
        R = tuple(x for x in R if x != drop)
        wR = self.w[R] * (self.k + 1)
        return {dq.decode(J): self.w[J] / wR for J in self.cof[R]}

    def split_paths(self, state: SplitState, pos: int) -> dict[SplitState, float]:
        from .walks import split_copies

        T = self.dq.T
        out = {}
        for face, p in self.paths(state.face, pos).items():
            copies = split_copies(self.dq, face)
            for c in copies:
                out[c] = p / T if face.is_constant else p
        return out


def deletion_class(face: DensifiedFace, pos: int, literal: bool = False) -> tuple[str, int | None]:
    """(class, minority label) for deleting position ``pos``.

    With ``literal`` a tie is broken by calling the smaller label the
    minority, so exactly one class is minority as in the printed tables.
    """
    if face.is_constant:
        return "any", None
    a = face.labeling[pos]
    b = next(v for v in face.color if v != a)
    na, nb = face.labeling.count(a), face.labeling.count(b)
    if na < nb or (na == nb and (not literal or a < b)):
        return "minority", a
    return "majority", b


def target_key(source: DensifiedFace, src_color: tuple | None, target: DensifiedFace,
               tgt_color: tuple | None, minority_label, split: bool) -> tuple:
    same_face = target.base_face == source.base_face
    if source.is_constant:
        off = target.offset
    elif target.color == source.color:
        off = target.labeling.count(minority_label)
    else:
        off = target.offset
    if split:
        same_edge = tgt_color == src_color
    elif source.is_constant or target.is_constant:
        same_edge = None
    else:
        same_edge = target.color == source.color
    return off, same_face, same_edge


@dataclass
class ConformanceResult:
    sources: int = 0
    transitions: int = 0
    checked_rows: int = 0
    mismatches: list = field(default_factory=list)
    unclassified: list = field(default_factory=list)
    matrix_deviation: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.mismatches and not self.unclassified and self.matrix_deviation <= PROB_TOL


def _compare(rows: list[TableRow], got: dict, tag, res: ConformanceResult, tol: float, per_deletion: bool):
    expected = {}
    for r in rows:
        cnt, pr = r.per_deletion() if per_deletion else (r.count, r.prob)
        if cnt:
            expected[r.key] = (cnt, pr)
    for key, targets in got.items():
        if key not in expected:
            res.unclassified.append((tag, key, len(targets)))
            continue
        cnt, pr = expected[key]
        res.checked_rows += 1
        if len(targets) != cnt:
            res.mismatches.append((tag, key, "count", len(targets), cnt))
        worst = max(abs(p - pr) for p in targets.values())
        if worst > tol:
            res.mismatches.append((tag, key, "prob", max(targets.values(), key=lambda p: abs(p - pr)), pr))
    for key, (cnt, _) in expected.items():
        if key not in got:
            res.mismatches.append((tag, key, "count", 0, cnt))


def check_conformance(dq: DensifiedComplex, k: int, chain: MarkovChain, split: bool = False,
                      params: TableParams | None = None, per_deletion: bool = True,
                      tol: float = PROB_TOL) -> ConformanceResult:
    """Match every transition of ``chain`` (Q down-up or split) against the table rows.

    ``per_deletion`` checks each deleted vertex separately against the
    rescaled rows; otherwise targets are aggregated per deletion class and
    compared with the printed rows directly.
    """
    if dq.T is None:
        raise InputError("tables need a regular base graph")
    params = params or TableParams.for_instance(dq, k)
    oracle = PathOracle(dq, k)
    res = ConformanceResult()
    for a, src in enumerate(chain.states):
        face = src.face if split else src
        src_color = src.color if split else None
        rows = table_rows(face.offset, params, split)
        assembled = defaultdict(float)
        by_class = defaultdict(lambda: defaultdict(lambda: defaultdict(float)))
        for pos in range(k + 1):
            cls, minority = deletion_class(face, pos, literal=not per_deletion)
            paths = oracle.split_paths(src, pos) if split else oracle.paths(face, pos)
            got = defaultdict(dict)
            for tgt, p in paths.items():
                assembled[tgt] += p
                tface = tgt.face if split else tgt
                key = (cls,) + target_key(face, src_color, tface, tgt.color if split else None, minority, split)
                if per_deletion:
                    got[key][tgt] = p
                else:
                    by_class[cls][key][tgt] += p
            if per_deletion:
                _compare([r for r in rows if r.delete == cls], got, (src, pos), res, tol, True)
        if not per_deletion:
            merged = {}
            for cls, d in by_class.items():
                merged.update(d)
            _compare(rows, merged, (src, None), res, tol, False)
        row = np.zeros(chain.n)
        for tgt, p in assembled.items():
            row[chain.index[tgt]] = p
        res.matrix_deviation = max(res.matrix_deviation, float(np.abs(row - chain.P[a]).max()))
        res.sources += 1
        res.transitions += int((chain.P[a] > 0).sum())
    return res
