import json
import math

import numpy as np
import pytest

from hdxlab import graph as gr
from hdxlab.errors import ComplexSpectrumError, GenerationError, InputError, IsolatedVertexError


def test_c5_spectrum_matches_cosines(c5):
    want = sorted((math.cos(2 * math.pi * j / 5) for j in range(5)), reverse=True)
    spec = gr.spectrum(c5)
    assert np.allclose(spec.eigenvalues, want, atol=1e-12)
    assert spec.one_sided_gap == pytest.approx(1 - math.cos(2 * math.pi / 5), abs=1e-12)
    assert spec.two_sided_gap == pytest.approx(1 - math.cos(math.pi / 5), abs=1e-12)


def test_complete_graph_spectrum():
    spec = gr.spectrum(gr.complete_graph(4))
    assert np.allclose(spec.eigenvalues, [1, -1 / 3, -1 / 3, -1 / 3])
    assert spec.two_sided_gap == pytest.approx(2 / 3)


def test_normalized_adjacency_is_row_stochastic():
    g = gr.WeightedGraph(3, ((0, 1, 2.0), (1, 2, 1.0), (0, 0, 1.0)))
    P = gr.normalized_adjacency(g)
    assert np.allclose(P.sum(axis=1), 1)
    assert P[0, 0] == pytest.approx(1 / 3)
    assert P[0, 1] == pytest.approx(2 / 3)


def test_directed_cycle_has_complex_spectrum():
    g = gr.WeightedGraph(3, ((0, 1), (1, 2), (2, 0)), directed=True)
    P = gr.normalized_adjacency(g)
    assert np.allclose(P.sum(axis=1), 1)
    with pytest.raises(ComplexSpectrumError):
        gr.spectrum(g)


@pytest.mark.parametrize("edges", [((0, 5),), ((0, 1, -1.0),), ((0, 1), (1, 0)), ((0, 1, 2, 3),)])
def test_invalid_graphs(edges):
    with pytest.raises(InputError):
        gr.WeightedGraph(3, edges)


def test_isolated_vertex_rejected():
    g = gr.WeightedGraph(3, ((0, 1),))
    with pytest.raises(IsolatedVertexError):
        gr.normalized_adjacency(g)


def test_tensor_spectrum_is_products(c5):
    k3 = gr.complete_graph(3)
    prod = np.outer(gr.spectrum(c5).eigenvalues, gr.spectrum(k3).eigenvalues).ravel()
    got = gr.spectrum(gr.tensor_product(c5, k3)).eigenvalues
    assert gr.spectra_deviation(got, prod) < 1e-12


def test_lazy_loops_scale_spectrum(c5):
    c = 0.3
    got = gr.spectrum(gr.add_lazy_loops(c5, c)).eigenvalues
    want = [c + (1 - c) * x for x in gr.spectrum(c5).eigenvalues]
    assert gr.spectra_deviation(got, want) < 1e-12


def test_lazy_loops_range():
    with pytest.raises(InputError):
        gr.add_lazy_loops(gr.cycle_graph(4), 1.5)


@pytest.mark.parametrize("name,g", [("C5", gr.cycle_graph(5)), ("K4", gr.complete_graph(4)),
                                    ("Petersen", gr.petersen_graph())])
def test_sachs_relation(name, g):
    e = gr.check_sachs_relation(g, name=name)
    assert e.passed and e.lhs < 1e-9


def test_line_graph_of_c5_is_c5(c5):
    L = gr.line_graph(c5)
    assert L.n == 5 and len(L.edges) == 5
    assert gr.regular_degree(L) == 2


def test_structure_helpers(c5):
    assert gr.is_simple(c5) and gr.is_connected(c5) and not gr.has_triangle(c5)
    assert gr.has_triangle(gr.complete_graph(3))
    assert gr.regular_degree(gr.petersen_graph()) == 3
    assert gr.girth(gr.petersen_graph()) == 5
    assert gr.girth(gr.complete_graph(4)) == 3
    assert gr.girth(gr.WeightedGraph(3, ((0, 1), (1, 2)))) == math.inf


def test_random_regular_triangle_free_properties():
    g = gr.random_regular_triangle_free(20, 3, 7)
    assert gr.regular_degree(g) == 3
    assert not gr.has_triangle(g)
    assert gr.girth(g) >= 4
    assert gr.random_regular_triangle_free(20, 3, 7).edges == g.edges


def test_generator_on_five_vertices_gives_c5():
    g = gr.random_regular_triangle_free(5, 2, 0, connected=True)
    assert gr.regular_degree(g) == 2 and gr.is_connected(g) and gr.girth(g) == 5


def test_generator_errors():
    with pytest.raises(InputError):
        gr.random_regular_triangle_free(5, 3, 0)
    with pytest.raises(GenerationError, match="3 attempts"):
        gr.random_regular_triangle_free(4, 3, 0, max_attempts=3)


def test_json_round_trip(tmp_path, c5):
    path = tmp_path / "g.json"
    gr.save_graph(c5, path)
    assert gr.load_graph(path).edges == c5.edges
    assert json.loads(path.read_text())["n"] == 5
    with pytest.raises(InputError):
        gr.graph_from_dict({"edges": []})
