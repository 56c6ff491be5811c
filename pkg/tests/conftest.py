import pytest
from hypothesis import settings, strategies as st

from hilbreg.monomials import minimalize, zero_ideal

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

_acceptance = []
_notes = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, text): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark and (rep.when == "call" or rep.failed):
        _acceptance.append((mark.args[0], mark.args[1], rep.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number, text, outcome in sorted(_acceptance):
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {number}: {status}  {text}")
    for line in _notes:
        terminalreporter.write_line(line)


@pytest.fixture
def acceptance_note():
    """Append a line to the acceptance summary printed after the run."""
    return _notes.append


@st.composite
def monomial_ideals(draw, n_min=1, n_max=4, max_deg=5, max_gens=6):
    n = draw(st.integers(n_min, n_max))
    exps = st.lists(st.integers(0, max_deg), min_size=n, max_size=n).filter(
        lambda u: 1 <= sum(u) <= max_deg)
    gens = draw(st.lists(exps, min_size=0, max_size=max_gens))
    if not gens:
        return zero_ideal(n)
    return minimalize([tuple(u) for u in gens], n)
