"""The ten acceptance criteria, each at its stated tolerance.

Every test records one PASS/FAIL line, printed at the end of the session,
before asserting. Criteria 4 and 8 contain sub-checks that are stated as
equalities the construction does not satisfy; they are run as stated.
"""

import time
from fractions import Fraction

import numpy as np

from _props import build_instance, check_build
from conftest import ACCEPTANCE_LINES
from hdxlab import closed_forms as cf
from hdxlab import graph as gr
from hdxlab import markov as mk
from hdxlab import tables as tb
from hdxlab import walks as wk
from hdxlab.densifier import link_case_weights


def record(i: int, checks: dict, seconds: float, limit: float):
    """Store the line for criterion ``i``; ``checks`` maps a label to (passed, detail)."""
    timed = seconds <= limit
    ok = all(p for p, _ in checks.values()) and timed
    bad = [f"{k} ({d})" for k, (p, d) in checks.items() if not p]
    if not timed:
        bad.append(f"runtime {seconds:.2f}s > {limit:g}s")
    detail = "; ".join(bad) if bad else ", ".join(f"{k} {d}" for k, (_, d) in checks.items())
    line = f"criterion {i}: {'PASS' if ok else 'FAIL'} - {detail} [{seconds:.2f}s]"
    ACCEPTANCE_LINES[i] = line
    print(line)
    assert ok, line


def entry(rep, key):
    e = rep[key]
    return e.passed, f"lhs={e.lhs:.6g} rhs={e.rhs:.6g}"


def test_criterion_1_tables(canonical):
    b = canonical
    params = tb.TableParams(b.k, b.dq.s, b.T, b.p.w_I, b.p.w_J)
    t0 = time.perf_counter()
    checks = {}
    for tag, chain, split in (("Q", b.q, False), ("split", b.split, True)):
        res = tb.check_conformance(b.dq, b.k, chain, split=split, params=params, per_deletion=True)
        bad = len(res.mismatches) + len(res.unclassified)
        checks[f"{tag} rows"] = (bad == 0, f"{res.checked_rows - bad}/{res.checked_rows}")
        checks[f"{tag} matrix"] = (res.matrix_deviation <= 1e-12, f"{res.matrix_deviation:.1e}")
    record(1, checks, time.perf_counter() - t0, 1.0)


def test_criterion_2_stationary(canonical, reports):
    rep, _ = reports["canonical"]
    t0 = time.perf_counter()
    split = canonical.split
    want = np.array([1 / 140 if st.face.is_constant else 1 / 105 for st in split.states])
    dev = float(np.abs(split.pi - want).max())
    checks = {
        "split pi vs 1/140, 1/105": (dev <= 1e-12, f"{dev:.2e}"),
        "split pi closed form": entry(rep, "stationary.split"),
        "outer restriction pi": entry(rep, "stationary.outer_restriction"),
        "exact fractions": (Fraction(cf.split_stationary(canonical.p, True)).limit_denominator(10**6) == Fraction(1, 140)
                            and Fraction(cf.split_stationary(canonical.p, False)).limit_denominator(10**6)
                            == Fraction(1, 105), "1/140, 1/105"),
    }
    record(2, checks, time.perf_counter() - t0, 1.0)


def test_criterion_3_containment(canonical):
    t0 = time.perf_counter()
    q = canonical.q.spectrum.eigenvalues
    s = canonical.split.spectrum.eigenvalues
    pool = list(s)
    missing = 0
    for x in q:
        j = int(np.argmin([abs(x - y) for y in pool]))
        if abs(pool[j] - x) <= 1e-9:
            pool.pop(j)
        else:
            missing += 1
    checks = {"states": ((len(q), len(s)) == (90, 120), f"{len(q)} in {len(s)}"),
              "unmatched": (missing == 0, str(missing))}
    record(3, checks, time.perf_counter() - t0, 1.0)


def test_criterion_4_outer_projection(canonical, reports):
    rep, _ = reports["canonical"]
    t0 = time.perf_counter()
    b = canonical
    got = b.outer.projection.two_sided_gap
    stated = cf.outer_projection_gap_stated(b.p, b.g_spec.two_sided_gap)
    checks = {
        "projection matrix": entry(rep, "outer.projection_matrix"),
        "two-sided gap == (Gap_2/2) ratio": (abs(got - stated) <= 1e-9, f"{got:.6g} vs {stated:.6g}"),
    }
    for name, g in (("C5", gr.cycle_graph(5)), ("K4", gr.complete_graph(4)), ("Petersen", gr.petersen_graph())):
        e = gr.check_sachs_relation(g, 1e-9, name)
        checks[f"Sachs {name}"] = (e.lhs < 1e-9, f"{e.lhs:.1e}")
    record(4, checks, time.perf_counter() - t0, 1.0)


def test_criterion_5_inner_chains(canonical, reports):
    rep, _ = reports["canonical"]
    t0 = time.perf_counter()
    p = canonical.p
    inner_gap = min(d.projection.one_sided_gap for d in canonical.inner)
    u = wk.uniform_neighbor_hypercube(p.k + 1, cf.uniform_chain_neighbor_prob(p)).one_sided_gap
    checks = {
        "inner projection gap": (inner_gap >= 1 / (2 * p.T * (p.k + 1)) - 1e-9, f"{inner_gap:.6g}"),
        "hypercube restriction": entry(rep, "inner.restriction_hypercube"),
        "Gap(U)": (abs(u - 2 * p.w_I / (p.D * (p.k + 1) * (p.s - p.k))) <= 1e-9, f"{u:.6g}"),
    }
    for k in (1, 2, 3):
        g = wk.hypercube_chain(k + 1).one_sided_gap
        checks[f"hypercube k={k}"] = (abs(g - 2 / (k + 1)) <= 1e-9, f"{g:.6g}")
    record(5, checks, time.perf_counter() - t0, 1.0)


def test_criterion_6_jerrum(reports):
    checks, secs = {}, 0.0
    for key in ("canonical", 1, 2):
        rep, t = reports[key]
        secs = max(secs, t)
        for level in ("jerrum.outer", "jerrum.inner", "jerrum.nested"):
            checks[f"{key}:{level}"] = entry(rep, level)
    record(6, checks, secs, 30.0)


def test_criterion_7_main_theorem(reports):
    checks, secs = {}, 0.0
    for key in ("canonical", 1, 2):
        rep, t = reports[key]
        secs = max(secs, t)
        checks[f"{key}:gap"] = entry(rep, "theorem.two_sided_gap")
        checks[f"{key}:smallest"] = entry(rep, "theorem.smallest_eigenvalue")
    rhs = reports["canonical"][0]["theorem.two_sided_gap"].rhs
    checks["canonical rhs ~ 6.2e-5"] = (abs(rhs - 6.2e-5) < 0.05e-5, f"{rhs:.4g}")
    record(7, checks, secs, 30.0)


def test_criterion_8_expansion(canonical, reports):
    rep, _ = reports["canonical"]
    t0 = time.perf_counter()
    T, H = canonical.T, canonical.dq.H
    star_stated, star_abs = 0.0, 0.0
    for k in range(-1, H - 1):
        w_s, w_c = link_case_weights(H, T, k)
        ev = wk.star_chain(T, w_c, w_s).spectrum.eigenvalues
        want = [1.0] + [0.5] * (T - 1) + [0.5 - w_c / (w_c + T * w_s)]
        star_stated = max(star_stated, gr.spectra_deviation(ev, want))
    local = rep["expansion.local"]
    glob = rep["expansion.global_lower"]
    checks = {
        "links >= 1/2": (local.lhs >= 0.5 - 1e-9, f"min {local.lhs:.6g}"),
        "star spectrum {1, 1/2, 1/2 - w_C/(w_C+T w_S)}": (star_stated <= 1e-9, f"deviation {star_stated:.6g}"),
        "GlobalExp vs min{factor Gap_2, GlobalExp(B)}": (glob.passed, f"{glob.lhs:.6g} >= {glob.rhs:.6g}, slack {glob.slack:.6g}"),
    }
    record(8, checks, reports["canonical"][1] + time.perf_counter() - t0, 10.0)


def test_criterion_9_mixing(canonical):
    t0 = time.perf_counter()
    q, eps = canonical.q, 0.05
    spectral = mk.mixing_time_bound(q, eps)
    corollary = cf.corollary_mixing_bound(canonical.p, canonical.g_spec.two_sided_gap, eps)
    l1 = mk.worst_case_l1(q, int(np.ceil(spectral)) + 1)
    hit = int(np.flatnonzero(l1 <= eps)[0])
    checks = {"spectral": (hit <= spectral, f"t={hit} <= {spectral:.4g}"),
              "corollary": (hit <= corollary, f"t={hit} <= {corollary:.4g}")}
    record(9, checks, time.perf_counter() - t0, 10.0)


def test_criterion_10_properties():
    t0 = time.perf_counter()
    rng = np.random.default_rng(20240)
    done, failures = 0, []
    while done < 100:
        t = int(rng.choice([2, 3]))
        n = int(rng.choice([6, 8, 10, 12] if t == 3 else range(4, 13)))
        b = build_instance(n, t, int(rng.integers(2**31)), int(rng.choice([3, 4])))
        if b is None:
            continue
        res = check_build(b, rng)
        done += 1
        if not res.ok:
            failures.append((b.inst.name, res))
    checks = {"instances": (not failures, f"{done - len(failures)}/{done} clean")}
    record(10, checks, time.perf_counter() - t0, 60.0)
