import math

import numpy as np
import pytest

from hdxlab import graph as gr
from hdxlab import simplicial as sc
from hdxlab.errors import BalanceError, InputError


def test_complete_complex_counts_and_weights():
    c = sc.complete_complex(4, 2)
    assert sc.face_vector(c) == [4, 6, 4]
    assert c.weight((0, 1, 2)) == 1
    assert c.weight((0, 1)) == 2
    assert c.weight((0,)) == 6
    assert c.weight(()) == 24
    assert c.balance_residual() == 0


def test_from_top_faces_accepts_generators_and_weights():
    c = sc.SimplicialComplex.from_top_faces(3, (f for f in [(0, 1), (1, 2)]), [2.0, 3.0])
    assert c.weight((1,)) == 5
    assert c.weight(()) == 10
    assert sc.check_balance(c) == 0


@pytest.mark.parametrize("faces", [[], [(0, 0)], [(0, 7)]])
def test_bad_top_faces(faces):
    with pytest.raises(InputError):
        sc.SimplicialComplex.from_top_faces(3, faces)


def test_non_pure_flagged():
    c = sc.SimplicialComplex.from_top_faces(4, [(0, 1, 2), (2, 3)])
    assert not c.pure


def test_unbalanced_weights_detected():
    c = sc.complete_complex(3, 1)
    w = dict(c.weights)
    w[(0,)] += 1
    bad = sc.SimplicialComplex(c.n, c.faces, w)
    assert bad.balance_residual() > 0
    with pytest.raises(BalanceError):
        sc.check_balance(bad)


def test_degenerate_complex():
    c = sc.SimplicialComplex.from_top_faces(2, [(0, 1)], [0.0])
    assert c.is_degenerate


def test_link_of_vertex_in_k4():
    c = sc.complete_complex(4, 2)
    L = sc.link(c, (0,))
    assert L.vertices == (1, 2, 3)
    assert L.complex.top_dim == 1
    g = sc.one_skeleton(L.complex)
    assert gr.spectrum(g).two_sided_gap == pytest.approx(0.5)


def test_link_of_missing_face():
    c = sc.SimplicialComplex.from_top_faces(3, [(0, 1), (1, 2)])
    with pytest.raises(InputError):
        sc.link(c, (0, 2))


def test_link_of_empty_face_is_whole_complex():
    c = sc.complete_complex(4, 2)
    L = sc.link(c, ())
    assert sc.face_vector(L.complex) == [4, 6, 4]


def test_expansion_of_k4():
    c = sc.complete_complex(4, 2)
    assert sc.global_expansion(c) == pytest.approx(2 / 3)
    assert sc.local_expansion(c) == pytest.approx(0.5)
    assert sc.two_sided_expansion(c) == pytest.approx(0.5)


def test_local_expansion_vacuous_for_graphs():
    assert sc.local_expansion(sc.complete_complex(4, 1)) == math.inf


def test_link_gaps_threaded_matches_serial():
    c = sc.complete_complex(5, 3)
    a = sc.link_gaps(c, 1)
    b = sc.link_gaps(c, 4)
    assert [(x.face, x.gap) for x in a] == [(x.face, x.gap) for x in b]


def test_json_round_trip(tmp_path):
    c = sc.SimplicialComplex.from_top_faces(4, [(0, 1, 2), (1, 2, 3)], [1.0, 2.0])
    sc.save_complex(c, tmp_path / "c.json")
    d = sc.load_complex(tmp_path / "c.json")
    assert d.faces == c.faces and d.weights == c.weights
    (tmp_path / "bad.json").write_text("{")
    with pytest.raises(InputError):
        sc.load_complex(tmp_path / "bad.json")


def test_weights_array():
    c = sc.complete_complex(4, 2)
    assert np.all(sc.weights_array(c, 0) == 6)
    assert c.k_faces(-1) == ((),)
