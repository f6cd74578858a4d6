import sys
from pathlib import Path

import pytest
from hypothesis import settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from arithlab.syntax import Atom, Equals, ForAll, Implies, Not, Plus, Succ, Times, Var, Zero  # noqa: E402

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def terms(max_var=3):
    leaves = st.one_of(st.builds(Var, st.integers(1, max_var)), st.just(Zero()))
    return st.recursive(
        leaves,
        lambda t: st.one_of(st.builds(Succ, t), st.builds(Plus, t, t), st.builds(Times, t, t)),
        max_leaves=4,
    )


def formulas(max_var=3):
    atoms = st.builds(Equals, terms(max_var), terms(max_var))
    return st.recursive(
        atoms,
        lambda f: st.one_of(
            st.builds(Not, f),
            st.builds(Implies, f, f),
            st.builds(ForAll, st.integers(1, max_var), f),
        ),
        max_leaves=4,
    )


def toy_formulas():
    return st.recursive(
        st.just(Atom("A")),
        lambda f: st.one_of(st.builds(Not, f), st.builds(Implies, f, f)),
        max_leaves=5,
    )


# one PASS/FAIL line per acceptance criterion at the end of the run
_acceptance: dict[str, tuple[str, float]] = {}


def pytest_runtest_logreport(report):
    if report.when != "call" or "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    _acceptance[name] = ("PASS" if report.passed else "FAIL", report.duration)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_acceptance):
        status, dur = _acceptance[name]
        terminalreporter.write_line(f"{status}  {name}  ({dur:.2f}s)")


@pytest.fixture(scope="session")
def corpus():
    from arithlab.kernel import load_corpus
    return load_corpus()
