import numpy as np
import pytest

from hdxlab import graph as gr
from hdxlab import simplicial as sc
from hdxlab import walks as wk
from hdxlab.densifier import DensifiedFace
from hdxlab.errors import BalanceError, InputError


def test_updown_and_downup_share_nonzero_spectrum():
    c = sc.complete_complex(4, 2)
    ud = wk.up_down_chain(c, 0)
    du = wk.down_up_chain(c, 1)
    a = [x for x in ud.spectrum.eigenvalues if abs(x) > 1e-9]
    b = [x for x in du.spectrum.eigenvalues if abs(x) > 1e-9]
    assert gr.spectra_deviation(a, b) < 1e-9


def test_stationary_proportional_to_weight():
    c = sc.SimplicialComplex.from_top_faces(5, [(0, 1, 2), (1, 2, 3), (2, 3, 4)], [1.0, 2.0, 3.0])
    for k in (0, 1):
        ch = wk.down_up_chain(c, k)
        w = np.array([c.weights[F] for F in ch.states])
        assert np.allclose(ch.pi, w / w.sum(), atol=1e-12)


@pytest.mark.parametrize("k", [1, 2])
def test_complete_complex_downup_gap(k):
    ch = wk.down_up_chain(sc.complete_complex(5, 3), k)
    assert ch.one_sided_gap >= 1 / (k + 1) - 1e-9


def test_vertex_walk_goes_through_empty_face():
    c = sc.complete_complex(3, 1)
    ch = wk.down_up_chain(c, 0)
    assert np.allclose(ch.P, 1 / 3)


def test_walk_errors():
    c = sc.complete_complex(4, 2)
    with pytest.raises(InputError):
        wk.up_down_chain(c, 2)
    with pytest.raises(InputError):
        wk.down_up_chain(c, 3)
    w = dict(c.weights)
    w[(0, 1)] += 1
    with pytest.raises(BalanceError):
        wk.down_up_chain(sc.SimplicialComplex(c.n, c.faces, w), 1)


def test_q_range(canonical_dq):
    with pytest.raises(InputError):
        wk.q_down_up(canonical_dq, 2)


def test_canonical_q_entries(canonical):
    q = canonical.q
    assert q.n == 90
    zero = DensifiedFace((0, 1), (0, 0))
    assert q.prob(zero, zero) == pytest.approx(1 / 7, abs=1e-12)
    one = DensifiedFace((0, 1), (0, 1))
    assert q.prob(zero, one) == pytest.approx(1 / 21, abs=1e-12)
    same_face = [F for F in q.states if F.base_face == (0, 1) and not F.is_constant and 0 in F.labeling]
    assert len(same_face) == 4
    assert q.prob(one, one) == pytest.approx(2 / 21, abs=1e-12)


def test_split_chain_canonical(canonical):
    sp = canonical.split
    assert sp.n == 120
    zero = [i for i, st in enumerate(sp.states) if st.face.is_constant]
    assert len(zero) == 60
    assert np.allclose(sp.pi[zero], 1 / 140, atol=1e-15)
    assert np.allclose(np.delete(sp.pi, zero), 1 / 105, atol=1e-15)


def test_split_copies_one_per_edge(canonical, canonical_dq):
    face = DensifiedFace((0, 1), (2, 2))
    copies = wk.split_copies(canonical_dq, face)
    assert [c.color for c in copies] == [(1, 2), (2, 3)]


def test_outer_projection_canonical(canonical):
    P = canonical.outer.projection.P
    assert np.allclose(np.diag(P), 0.5)
    assert sorted(set(np.round(P[P > 0], 12))) == [0.25, 0.5]
    assert canonical.outer.projection.two_sided_gap == pytest.approx(0.3454915028125263, abs=1e-12)


def test_outer_restrictions_isomorphic(canonical):
    assert wk.outer_isomorphism_deviation(canonical.outer) == 0


def test_outer_restriction_canonical(canonical):
    R = canonical.outer.restrictions[0]
    assert R.n == 24
    for i, st in enumerate(R.states):
        t = st.face.offset
        assert R.P[i, i] == pytest.approx(4 / 7 if t == 0 else 25 / 42, abs=1e-12)
        assert R.pi[i] == pytest.approx(1 / 28 if t == 0 else 1 / 21, abs=1e-12)


def test_inner_decomposition_canonical(canonical):
    inner = canonical.inner[0]
    P = inner.projection.P
    assert P.shape == (6, 6)
    assert np.allclose(np.diag(P), 2 / 3)
    off = P - np.diag(np.diag(P))
    assert np.all(np.isclose(off, 1 / 12).sum(axis=1) == 4)
    assert np.all(np.isclose(off, 0).sum(axis=1) == 2)
    RI = inner.restrictions[0]
    assert RI.n == 4
    assert RI.one_sided_gap == pytest.approx(1 / 14, abs=1e-12)
    coords = sorted(wk.hypercube_coordinates(st) for st in RI.states)
    assert coords == [(0, 0), (0, 1), (1, 0), (1, 1)]
    pi = {wk.hypercube_coordinates(st): RI.pi[i] for i, st in enumerate(RI.states)}
    assert pi[(0, 0)] == pytest.approx(3 / 14) and pi[(0, 1)] == pytest.approx(4 / 14)


@pytest.mark.parametrize("dim", [1, 2, 3, 4])
def test_hypercube_spectrum(dim):
    ch = wk.hypercube_chain(dim)
    want = sorted((1 - 2 * bin(x).count("1") / dim for x in range(2 ** dim)), reverse=True)
    assert np.allclose(ch.spectrum.eigenvalues, want, atol=1e-12)
    assert ch.one_sided_gap == pytest.approx(2 / dim)


def test_uniform_hypercube_bounds():
    with pytest.raises(InputError):
        wk.uniform_neighbor_hypercube(3, 0.5)
    ch = wk.uniform_neighbor_hypercube(2, 2 / 42)
    assert ch.one_sided_gap == pytest.approx(2 / 21)


def test_star_chain_canonical():
    ch = wk.star_chain(2, 3.0, 2.0)
    assert np.allclose(ch.spectrum.eigenvalues, [1, 0.5, -1 / 14], atol=1e-12)
