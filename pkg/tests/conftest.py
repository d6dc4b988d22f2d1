import time
from dataclasses import replace

import pytest

from hdxlab import graph as gr
from hdxlab import simplicial as sc
from hdxlab import verify as vf
from hdxlab.densifier import local_densifier

ACCEPTANCE_LINES: dict[int, str] = {}


@pytest.fixture(scope="session")
def c5():
    return gr.cycle_graph(5)


@pytest.fixture(scope="session")
def canonical_dq(c5):
    return local_densifier(c5, sc.complete_complex(4, 2))


@pytest.fixture(scope="session")
def canonical():
    return vf.Build(vf.canonical_instance())


@pytest.fixture(scope="session")
def random_graph():
    return gr.random_regular_triangle_free(20, 3, 7, connected=True)


@pytest.fixture(scope="session")
def random_builds():
    return {k: vf.Build(vf.random_instance(k)) for k in (1, 2)}


@pytest.fixture(scope="session")
def reports(canonical, random_builds):
    """Verification reports keyed by "canonical", 1 and 2, with wall times in seconds."""
    out = {}
    for key, inst in (("canonical", canonical.inst), (1, replace(random_builds[1].inst, links=False)),
                      (2, replace(random_builds[2].inst, links=False))):
        t0 = time.perf_counter()
        out[key] = (vf.verify(inst), time.perf_counter() - t0)
    return out


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for i in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[i])
