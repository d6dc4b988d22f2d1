"""The full verification ledger for one densifier instance.

``verify(inst)`` builds the down-up chain on k-faces of Q = LocalDensifier(G,
K_s^(H)), its split chain and both levels of the decomposition, and checks
every closed form and bound against the constructed objects. Each check is a
``BoundEntry``; required entries are facts that hold, informational entries
record printed statements that turned out to be off (see the README).
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field, replace
from functools import cached_property

import numpy as np

from . import closed_forms as cf
from . import graph as gr
from . import markov as mk
from . import simplicial as sc
from . import tables as tb
from . import walks as wk
from .densifier import DensifiedComplex, face_weight, link_case_weights, local_densifier
from .errors import InputError
from .graph import WeightedGraph
from .report import BoundEntry, BoundReport

EXACT_WORST_CASE_LIMIT = 600


def thread_count() -> int:
    try:
        return max(1, int(os.environ.get("HDXLAB_THREADS", "1")))
    except ValueError:
        return 1


@dataclass(frozen=True)
class Instance:
    """One verification run: G, the complete base complex K_s^(H), level k."""

    name: str
    graph: WeightedGraph
    s: int
    H: int
    k: int
    tol_spec: float = 1e-9
    tol_balance: float = 1e-12
    eps: float = 0.05
    w_J_shift: float = 0.0
    links: bool = True

    def __post_init__(self):
        if self.H < 1:
            raise InputError(f"H must be at least 1, got {self.H}")
        if self.s < self.H + 1:
            raise InputError(f"need s >= H+1, got s={self.s}, H={self.H}")
        if not 1 <= self.k < self.H:
            raise InputError(f"need 1 <= k < H, got k={self.k}, H={self.H}")
        if gr.regular_degree(self.graph) is None:
            raise InputError("base graph must be simple and regular")
        if not 0 < self.eps < 1:
            raise InputError("eps must lie in (0, 1)")


def canonical_instance(**kw) -> Instance:
    """C_5 with K_4^(2) at k = 1."""
    return Instance("canonical", gr.cycle_graph(5), 4, 2, kw.pop("k", 1), **kw)


def random_instance(k: int = 1, n: int = 20, t: int = 3, seed: int = 7, **kw) -> Instance:
    g = gr.random_regular_triangle_free(n, t, seed, connected=True)
    return Instance(f"random(n={n},t={t},seed={seed})", g, 5, 3, k, **kw)


class Build:
    """Lazily constructed objects shared by the ledger sections."""

    def __init__(self, inst: Instance):
        self.inst = inst
        self.base = sc.complete_complex(inst.s, inst.H)
        self.dq: DensifiedComplex = local_densifier(inst.graph, self.base)
        self.k = inst.k
        self.p = cf.WalkParams.for_instance(self.dq, inst.k)
        self.p_claimed = cf.WalkParams.for_instance(self.dq, inst.k, inst.w_J_shift)
        self.T = self.dq.T

    @cached_property
    def g_spec(self) -> gr.SpectralSummary:
        return gr.spectrum(self.inst.graph)

    @cached_property
    def q(self) -> mk.MarkovChain:
        return wk.q_down_up(self.dq, self.k)

    @cached_property
    def split(self) -> mk.MarkovChain:
        return wk.split_chain(self.dq, self.k, self.q)

    @cached_property
    def outer(self) -> mk.Decomposition:
        return wk.outer_decomposition(self.split, self.dq)

    @cached_property
    def inner(self) -> list[mk.Decomposition]:
        return [wk.inner_decomposition(r) for r in self.outer.restrictions]


# ---------------------------------------------------------------------------
# sections


def _table_entries(b: Build) -> list[BoundEntry]:
    params = tb.TableParams(b.k, b.dq.s, b.T, b.p_claimed.w_I, b.p_claimed.w_J)
    out = []
    for tag, chain, split in (("q", b.q, False), ("split", b.split, True)):
        res = tb.check_conformance(b.dq, b.k, chain, split=split, params=params, per_deletion=True)
        out.append(BoundEntry(f"tables.{tag}.rows", len(res.mismatches) + len(res.unclassified), 0, "==", 0.0,
                              note=f"{res.checked_rows} rows over {res.sources} states, per deleted vertex"))
        out.append(BoundEntry(f"tables.{tag}.matrix", res.matrix_deviation, 0.0, "<=", 1e-12,
                              note="paths summed vs chain matrix"))
        lit = tb.check_conformance(b.dq, b.k, chain, split=split, params=params, per_deletion=False)
        out.append(BoundEntry(f"tables.{tag}.aggregated", len(lit.mismatches) + len(lit.unclassified), 0, "==", 0.0,
                              required=b.k >= 2,
                              note="rows summed over a deletion class; ties broken by smaller label"))
    return out


def _walk_entries(b: Build) -> list[BoundEntry]:
    tol = b.inst.tol_spec
    out = []
    c = b.dq.complex
    dev = 0.0
    for k in range(c.top_dim):
        for F in c.faces[k]:
            want = face_weight(b.dq.decode(F), b.dq.H, b.T, b.dq.s, form="propagated")
            dev = max(dev, abs(c.weights[F] - want) / want)
    out.append(BoundEntry("weights.propagated", dev, 0.0, "<=", 1e-12, note="relative, every face below the top"))
    out.append(BoundEntry("weights.balance", c.balance_residual(), 0.0, "<=", b.inst.tol_balance))
    w = np.array([c.weights[b.dq.encode(F)] for F in b.q.states])
    out.append(BoundEntry("q.stationary_weights", float(np.abs(b.q.pi - w / w.sum()).max()), 0.0, "<=", 1e-12))
    ud = wk.up_down_chain(c, b.k)
    du = wk.down_up_chain(c, b.k + 1)
    nz = lambda ch: [x for x in ch.spectrum.eigenvalues if abs(x) > 1e-8]
    a, z = nz(ud), nz(du)
    dev = gr.spectra_deviation(a, z) if len(a) == len(z) else math.inf
    out.append(BoundEntry("walks.updown_downup_nonzero", dev, 0.0, "<=", tol,
                          note=f"up-down on {b.k}-faces vs down-up on {b.k + 1}-faces"))
    out.append(BoundEntry("walks.updown_stationary", float(np.abs(ud.pi - b.q.pi[[b.q.index[b.dq.decode(F)] for F in ud.states]]).max()),
                          0.0, "<=", 1e-12))
    return out


def _stationary_entries(b: Build) -> list[BoundEntry]:
    p = b.p_claimed
    sp = b.split
    want = np.array([cf.split_stationary(p, st.face.is_constant) for st in sp.states])
    out = [
        BoundEntry("stationary.split", float(np.abs(sp.pi - want).max()), 0.0, "<=", 1e-12),
        BoundEntry("stationary.split_residual", float(np.abs(sp.pi @ sp.P - sp.pi).max()), 0.0, "<=", 1e-12),
    ]
    dev = 0.0
    for r in b.outer.restrictions:
        want = np.array([cf.outer_restriction_stationary(p, st.face.is_constant) for st in r.states])
        dev = max(dev, float(np.abs(r.pi - want).max()))
    out.append(BoundEntry("stationary.outer_restriction", dev, 0.0, "<=", 1e-12))
    dev = 0.0
    dim = b.k + 1
    ends = {(0,) * dim, (1,) * dim}
    for dec in b.inner:
        for r in dec.restrictions:
            want = np.array([cf.inner_restriction_stationary(p, wk.hypercube_coordinates(st) in ends)
                             for st in r.states])
            dev = max(dev, float(np.abs(r.pi - want).max()))
    out.append(BoundEntry("stationary.inner_restriction", dev, 0.0, "<=", 1e-12))
    return out


def _containment_entries(b: Build) -> list[BoundEntry]:
    q = np.array(b.q.spectrum.eigenvalues)
    s = np.array(b.split.spectrum.eigenvalues)
    unmatched = _multiset_unmatched(q, s, b.inst.tol_spec)
    return [
        BoundEntry("split.state_count", b.split.n, b.q.n + (b.T - 1) * sum(F.is_constant for F in b.q.states), "==", 0.0),
        BoundEntry("split.spectrum_contains_q", unmatched, 0, "==", 0.0,
                   note=f"{len(q)} eigenvalues of Q looked up among {len(s)} of the split chain"),
        BoundEntry("split.gap_vs_q", b.q.one_sided_gap, b.split.one_sided_gap, ">=", b.inst.tol_spec),
    ]


def _multiset_unmatched(a: np.ndarray, pool: np.ndarray, tol: float) -> int:
    """Number of entries of ``a`` left without a partner in ``pool`` (greedy on sorted values)."""
    pool = sorted(pool)
    used = np.zeros(len(pool), dtype=bool)
    missing = 0
    for x in sorted(a):
        i = np.searchsorted(pool, x - tol)
        while i < len(pool) and (used[i] or pool[i] < x - tol):
            i += 1
        if i < len(pool) and abs(pool[i] - x) <= tol:
            used[i] = True
        else:
            missing += 1
    return missing


def _outer_entries(b: Build) -> list[BoundEntry]:
    p, tol = b.p_claimed, b.inst.tol_spec
    proj = b.outer.projection
    G = b.g_spec
    out = [BoundEntry("outer.projection_matrix",
                      float(np.abs(proj.P - cf.outer_projection_matrix(p, b.dq.edges)).max()), 0.0, "<=", 1e-12)]
    gap = proj.two_sided_gap
    stated = cf.outer_projection_gap_stated(p, G.two_sided_gap)
    out += [
        BoundEntry("outer.projection_gap_exact", gap, cf.outer_projection_gap_exact(p, G.one_sided_gap), "==", tol,
                   note="(OneSidedGap(G)/2) * ratio"),
        BoundEntry("outer.projection_gap_lower", gap, stated, ">=", tol, note="(Gap_2(G)/2) * ratio"),
        BoundEntry("outer.projection_gap_equality", gap, stated, "==", tol, required=False,
                   note="printed as an equality; holds only as a lower bound"),
        BoundEntry("outer.projection_gap_lemma", proj.one_sided_gap, cf.outer_projection_gap_lemma(p, G.two_sided_gap),
                   ">=", tol),
        BoundEntry("outer.projection_no_negative", proj.spectrum.smallest, 0.0, ">=", tol),
    ]
    line = gr.spectrum(gr.line_graph(b.inst.graph)).eigenvalues
    out.append(BoundEntry("outer.projection_spectrum_map",
                          gr.spectra_deviation(proj.spectrum.eigenvalues, cf.outer_projection_spectrum(p, line)),
                          0.0, "<=", tol, note="lazy map of the normalized line-graph spectrum"))
    out.append(gr.check_sachs_relation(b.inst.graph, tol, "base"))
    iso = wk.outer_isomorphism_deviation(b.outer)
    out.append(BoundEntry("outer.restrictions_isomorphic", iso, 0.0, "<=", 1e-12, note="edge relabelling, all pairs"))
    devs = {"zero": 0.0, "one": 0.0, "rest": 0.0}
    for r in b.outer.restrictions:
        for i, st in enumerate(r.states):
            kind = cf.state_kind(st)
            loop, off = cf.outer_restriction_row(p, kind)
            devs[kind] = max(devs[kind], cf.row_deviation(r.P[i], i, loop, off))
    for kind in ("zero", "one", "rest"):
        if kind == "rest" and b.k < 2:
            continue
        out.append(BoundEntry(f"outer.restriction_rows.{kind}", devs[kind], 0.0, "<=", 1e-12,
                              required=not (kind == "one" and b.k == 1),
                              note="self loop and off-diagonal multiset"))
    return out


def _inner_entries(b: Build) -> list[BoundEntry]:
    p, tol = b.p_claimed, b.inst.tol_spec
    dim = b.k + 1
    dev_proj = dev_rest = 0.0
    iso_bad = 0
    proj_gap = math.inf
    rest_gap = math.inf
    for dec in b.inner:
        dev_proj = max(dev_proj, float(np.abs(dec.projection.P - cf.inner_projection_matrix(p, list(dec.labels))).max()))
        proj_gap = min(proj_gap, dec.projection.one_sided_gap)
        for r in dec.restrictions:
            coords = [wk.hypercube_coordinates(st) for st in r.states]
            iso_bad += len(set(coords)) != 2 ** dim or len(r.states) != 2 ** dim
            dev_rest = max(dev_rest, float(np.abs(r.P - cf.inner_restriction_matrix(p, list(r.states))).max()))
            rest_gap = min(rest_gap, r.one_sided_gap)
    U = wk.uniform_neighbor_hypercube(dim, cf.uniform_chain_neighbor_prob(p))
    cube = wk.hypercube_chain(dim)
    step_lo, step_hi = cf.inner_projection_step(p)
    comparison = cf.comparison_factor(p) * U.one_sided_gap
    return [
        BoundEntry("inner.projection_matrix", dev_proj, 0.0, "<=", 1e-12),
        BoundEntry("inner.projection_gap_exact", proj_gap, cf.inner_projection_gap_exact(p), "==", tol,
                   note="s * q via the Johnson graph"),
        BoundEntry("inner.projection_gap_lower", proj_gap, cf.inner_projection_gap_lemma(p), ">=", tol),
        BoundEntry("inner.projection_step", step_hi, step_lo, ">=", tol),
        BoundEntry("inner.restriction_hypercube", iso_bad, 0, "==", 0.0, note="2^(k+1) states, distinct coordinates"),
        BoundEntry("inner.restriction_matrix", dev_rest, 0.0, "<=", 1e-12),
        BoundEntry("inner.uniform_gap", U.one_sided_gap, cf.uniform_chain_gap(p), "==", tol),
        BoundEntry("inner.hypercube_gap", cube.one_sided_gap, cf.hypercube_gap(dim), "==", tol),
        BoundEntry("inner.hypercube_spectrum", gr.spectra_deviation(cube.spectrum.eigenvalues, cf.hypercube_spectrum(dim)),
                   0.0, "<=", tol),
        BoundEntry("inner.restriction_gap_comparison", rest_gap, comparison, ">=", tol,
                   note="factor w_J Dt / (2^(k+1) (T w_I)^2) times Gap(U)"),
        BoundEntry("inner.restriction_gap_weak", comparison, cf.comparison_factor_weak(p) * U.one_sided_gap, ">=", tol),
        BoundEntry("inner.restriction_gap_written", rest_gap, cf.inner_restriction_gap_written(p), ">=", tol,
                   required=False, note="middle factor written with 2 w_J"),
        BoundEntry("inner.restriction_gap_claim", rest_gap, cf.inner_restriction_gap_claim(p), ">=", tol,
                   required=False, note="1/((k+1)(s-k))"),
    ]


def _balance_entries(b: Build) -> list[BoundEntry]:
    worst = max(b.q.balance_residual, b.split.balance_residual, b.outer.projection.balance_residual,
                max(r.balance_residual for r in b.outer.restrictions))
    for dec in b.inner:
        worst = max(worst, dec.projection.balance_residual, max(r.balance_residual for r in dec.restrictions))
    return [BoundEntry("decomposition.detailed_balance", worst, 0.0, "<=", 1e-10, note="every chain of both levels")]


def _jerrum_entries(b: Build) -> tuple[list[BoundEntry], float]:
    tol = b.inst.tol_spec
    out = []
    worst_slack = math.inf
    inner_bounds, inner_bounds_one = [], []
    for r, dec in zip(b.outer.restrictions, b.inner):
        chk = mk.jerrum_check(r, dec)
        worst_slack = min(worst_slack, chk.chain_gap - chk.bound)
        inner_bounds.append(chk.bound)
        inner_bounds_one.append(chk.bound_gamma_one)
    out.append(BoundEntry("jerrum.inner", worst_slack, 0.0, ">=", tol, note="min over colours of gap - bound"))
    gamma_I = max(dec.gamma for dec in b.inner)
    outer = mk.jerrum_check(b.split, b.outer)
    out.append(BoundEntry("jerrum.outer", outer.chain_gap, outer.bound, ">=", tol,
                          note=f"gamma_o={b.outer.gamma:.6g}"))
    lbar = b.outer.projection.one_sided_gap
    nested = mk.jerrum_bound(lbar, min(inner_bounds), b.outer.gamma)
    nested_one = mk.jerrum_bound(lbar, min(inner_bounds_one), 1.0)
    out.append(BoundEntry("jerrum.nested", b.split.one_sided_gap, nested, ">=", tol,
                          note=f"computed gamma_o, gamma_I={gamma_I:.6g}"))
    out.append(BoundEntry("jerrum.nested_gamma_one", b.split.one_sided_gap, nested_one, ">=", tol))
    p = b.p_claimed
    inner_lemma = mk.jerrum_bound(cf.inner_projection_gap_lemma(p),
                                  cf.comparison_factor(p) * cf.uniform_chain_gap(p), 1.0)
    lemma_chain = mk.jerrum_bound(cf.outer_projection_gap_lemma(p, b.g_spec.two_sided_gap), inner_lemma, 1.0)
    out.append(BoundEntry("jerrum.lemma_chain", b.q.one_sided_gap, lemma_chain, ">=", tol,
                          note="lemma lower bounds, gamma = 1"))
    return out, lemma_chain


def _theorem_entries(b: Build, lemma_chain: float) -> list[BoundEntry]:
    p, tol = b.p_claimed, b.inst.tol_spec
    gap2 = b.g_spec.two_sided_gap
    q = b.q
    rhs2 = cf.main_theorem_rhs(p, gap2, 2)
    rhs1 = cf.main_theorem_rhs(p, gap2, 1)
    min_loop = float(np.diag(q.P).min())
    return [
        BoundEntry("theorem.two_sided_gap", q.two_sided_gap, rhs2, ">=", tol, note="64 T^2 form"),
        BoundEntry("theorem.two_sided_gap_T", q.two_sided_gap, rhs1, ">=", tol, required=False, note="64 T form"),
        BoundEntry("theorem.lemma_chain_vs_rhs", lemma_chain, rhs2, ">=", tol, required=False,
                   note="nested lemma bounds against the 64 T^2 form"),
        BoundEntry("theorem.smallest_eigenvalue", q.spectrum.smallest, cf.smallest_eigenvalue_bound(p), ">=", tol),
        BoundEntry("theorem.min_self_loop", min_loop, p.w_J / (p.D * (p.s - p.k)), ">=", 1e-12, required=False,
                   note="self-loop premise used for the smallest eigenvalue"),
        BoundEntry("theorem.face_count", q.n, cf.face_count(p), "==", 0.0),
    ]


def _mixing_entries(b: Build) -> list[BoundEntry]:
    eps = b.inst.eps
    q = b.q
    spectral = mk.mixing_time_bound(q, eps)
    corollary = cf.corollary_mixing_bound(b.p_claimed, b.g_spec.two_sided_gap, eps)
    horizon = int(math.ceil(spectral)) + 1
    if q.n <= EXACT_WORST_CASE_LIMIT:
        l1 = mk.worst_case_l1(q, horizon)
        how = "worst start"
    else:
        l1 = mk.simulate_tv(q, int(np.argmin(q.pi)), horizon).l1_exact
        how = "start at argmin pi"
    hit = np.flatnonzero(l1 <= eps)
    t_hit = float(hit[0]) if len(hit) else math.inf
    return [
        BoundEntry("mixing.spectral_bound", t_hit, spectral, "<=", 0.0, note=f"first t with L1 <= {eps} ({how})"),
        BoundEntry("mixing.corollary_bound", t_hit, corollary, "<=", 0.0),
    ]


def _expansion_entries(b: Build) -> list[BoundEntry]:
    tol = b.inst.tol_spec
    T, H = b.T, b.dq.H
    Q = b.dq.complex
    out = []
    G = b.g_spec
    glob = sc.global_expansion(Q)
    base_glob = sc.global_expansion(b.base)
    stated = min(cf.global_factor(T, H) * G.two_sided_gap, base_glob)
    w_s, w_c = link_case_weights(H, T, -1)
    lazy = gr.add_lazy_loops(b.inst.graph, w_c / (w_c + T * w_s))
    lazy_spec = gr.spectrum(lazy)
    out += [
        BoundEntry("expansion.global_lower", glob, stated, ">=", tol, note="min{factor * Gap_2(G), GlobalExp(B)}"),
        BoundEntry("expansion.global_equality", glob, stated, "==", tol, required=False,
                   note="printed as an equality"),
        BoundEntry("expansion.global_tensor", glob, min(lazy_spec.two_sided_gap, base_glob), "==", tol,
                   note="min{TwoSidedGap(lazy G), GlobalExp(B)}"),
        BoundEntry("expansion.global_simple_bound", glob, cf.global_expansion_bound(T, H, G.two_sided_gap), ">=", tol),
        BoundEntry("expansion.lazy_scaling", lazy_spec.one_sided_gap, cf.global_factor(T, H) * G.one_sided_gap, "==", tol),
    ]
    skel = gr.spectrum(sc.one_skeleton(Q)).eigenvalues
    prod = np.outer(lazy_spec.eigenvalues, gr.spectrum(sc.one_skeleton(b.base)).eigenvalues).ravel()
    out.append(BoundEntry("expansion.skeleton_tensor", gr.spectra_deviation(skel, prod), 0.0, "<=", tol,
                          note="1-skeleton spectrum = products"))
    star_dev, star_dev_stated, star_abs = 0.0, 0.0, 0.0
    for k in range(-1, H - 1):
        w_s, w_c = link_case_weights(H, T, k)
        ev = wk.star_chain(T, w_c, w_s).spectrum.eigenvalues
        star_dev = max(star_dev, gr.spectra_deviation(ev, cf.star_spectrum(T, w_c, w_s)))
        star_dev_stated = max(star_dev_stated, gr.spectra_deviation(ev, cf.star_spectrum(T, w_c, w_s, stated=True)))
        star_abs = max(star_abs, sorted(abs(x) for x in ev)[-2])
    out += [
        BoundEntry("expansion.star_spectrum", star_dev, 0.0, "<=", tol, note="third eigenvalue w_C/(w_C+T w_S) - 1/2"),
        BoundEntry("expansion.star_spectrum_stated", star_dev_stated, 0.0, "<=", tol, required=False,
                   note="third eigenvalue printed as 1/2 - w_C/(w_C+T w_S)"),
        BoundEntry("expansion.star_second_abs", star_abs, 0.5, "<=", tol),
    ]
    if b.inst.links and H >= 2:
        out += _link_entries(b)
    return out


def _link_entries(b: Build) -> list[BoundEntry]:
    tol = b.inst.tol_spec
    dq, Q, B = b.dq, b.dq.complex, b.base
    H, T = dq.H, b.T
    gaps = sc.link_gaps(Q, thread_count())
    local = min(g.gap for g in gaps)
    target = min(sc.two_sided_expansion(B), 0.5)
    index = sc._vertex_index(Q)
    edge_dev = star_dev = 0.0
    for k in range(0, H - 1):
        for F in Q.faces[k]:
            face = dq.decode(F)
            L = sc.link(Q, F, index).complex
            got = gr.spectrum(sc.one_skeleton(L)).eigenvalues
            base_link = sc.link(B, face.base_face).complex
            mu = np.array(gr.spectrum(sc.one_skeleton(base_link)).eigenvalues)
            if face.is_constant:
                w_s, w_c = link_case_weights(H, T, k)
                want = np.outer(cf.star_spectrum(T, w_c, w_s), mu).ravel()
                star_dev = max(star_dev, gr.spectra_deviation(got, want))
            else:
                want = np.concatenate([mu, np.zeros(len(mu))])
                edge_dev = max(edge_dev, gr.spectra_deviation(got, want))
    return [
        BoundEntry("expansion.local", local, target, ">=", tol,
                   note=f"min over {len(gaps)} links vs min{{TwoSidedGap(B), 1/2}}"),
        BoundEntry("expansion.edge_link_spectrum", edge_dev, 0.0, "<=", tol, note="{0} u Spectrum(base link)"),
        BoundEntry("expansion.star_link_spectrum", star_dev, 0.0, "<=", tol, note="star spectrum times base link"),
    ]


def _graph_entries(inst: Instance) -> list[BoundEntry]:
    tol = inst.tol_spec
    out = [gr.check_sachs_relation(g, tol, name) for name, g in
           (("C5", gr.cycle_graph(5)), ("K4", gr.complete_graph(4)), ("Petersen", gr.petersen_graph()))]
    g = inst.graph
    K = gr.complete_graph(3)
    prod = np.outer(gr.spectrum(g).eigenvalues, gr.spectrum(K).eigenvalues).ravel()
    out.append(BoundEntry("graph.tensor_spectrum", gr.spectra_deviation(gr.spectrum(gr.tensor_product(g, K)).eigenvalues, prod),
                          0.0, "<=", tol))
    return out


def verify(inst: Instance) -> BoundReport:
    """Run every section of the ledger on ``inst``."""
    b = Build(inst)
    rep = BoundReport(meta={
        "instance": inst.name, "n": inst.graph.n, "T": b.T, "s": inst.s, "H": inst.H, "k": inst.k,
        "states_q": b.q.n, "states_split": b.split.n, "w_J_shift": inst.w_J_shift,
    })
    rep.extend(_graph_entries(inst))
    rep.extend(_table_entries(b))
    rep.extend(_walk_entries(b))
    rep.extend(_stationary_entries(b))
    rep.extend(_containment_entries(b))
    rep.extend(_outer_entries(b))
    rep.extend(_inner_entries(b))
    rep.extend(_balance_entries(b))
    jer, lemma_chain = _jerrum_entries(b)
    rep.extend(jer)
    rep.extend(_theorem_entries(b, lemma_chain))
    rep.extend(_mixing_entries(b))
    rep.extend(_expansion_entries(b))
    return rep
