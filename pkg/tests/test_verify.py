import pytest

from hdxlab import graph as gr
from hdxlab import verify as vf
from hdxlab.errors import InputError
from hdxlab.report import BoundEntry, BoundReport

INFORMATIONAL_FAILING = {
    "tables.q.aggregated",
    "tables.split.aggregated",
    "outer.projection_gap_equality",
    "outer.restriction_rows.one",
    "inner.restriction_gap_claim",
    "theorem.min_self_loop",
    "expansion.global_equality",
    "expansion.star_spectrum_stated",
}


@pytest.fixture(scope="module")
def report():
    return vf.verify(vf.canonical_instance())


def test_canonical_all_required_pass(report):
    assert report.passed, [e.id for e in report.failures]
    assert len(report.entries) >= 40


def test_canonical_informational_discrepancies(report):
    failing = {e.id for e in report.entries if not e.passed}
    assert failing == INFORMATIONAL_FAILING
    assert not any(report[i].required for i in failing)


def test_report_json_round_trip(report):
    again = BoundReport.from_json(report.to_json())
    assert [e.to_dict() for e in again.entries] == [e.to_dict() for e in report.entries]
    assert again.meta["states_q"] == 90


def test_negative_control_fails_tables():
    rep = vf.verify(vf.canonical_instance(w_J_shift=1.0, links=False))
    ids = {e.id for e in rep.failures}
    assert {"tables.q.rows", "tables.split.rows", "stationary.split"} <= ids


@pytest.mark.parametrize("kw", [dict(k=2), dict(s=2), dict(k=0)])
def test_instance_validation(kw):
    args = dict(name="x", graph=gr.cycle_graph(5), s=4, H=2, k=1)
    args.update(kw)
    with pytest.raises(InputError):
        vf.Instance(**args)


def test_irregular_graph_rejected():
    path = gr.WeightedGraph(4, ((0, 1), (1, 2), (2, 3)))
    with pytest.raises(InputError):
        vf.Instance("path", path, 4, 2, 1)


def test_random_instance_k2_passes(reports):
    rep = reports[2][0]
    assert rep.passed, [e.id for e in rep.failures]
    assert rep["outer.restriction_rows.one"].required and rep["outer.restriction_rows.one"].passed
    assert rep["tables.q.aggregated"].passed


def test_written_form_fails_on_random_k1(reports):
    rep = reports[1][0]
    assert rep.passed
    assert not rep["inner.restriction_gap_written"].passed


def test_entry_semantics():
    assert BoundEntry("a", 1.0, 2.0, "<=").passed
    assert not BoundEntry("a", 1.0, 2.0, ">=").passed
    assert BoundEntry("a", 1.0, 1.0 + 1e-12, "==").passed
    assert not BoundEntry("a", float("nan"), 0.0, "<=").passed
    with pytest.raises(ValueError):
        BoundEntry("a", 1, 1, "!=")
