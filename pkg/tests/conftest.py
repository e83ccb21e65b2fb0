from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from hypercone.algebra import CQ, MPoly

settings.register_profile(
    "hypercone",
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("hypercone")

small_rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)
small_ints = st.integers(min_value=-4, max_value=4)


@st.composite
def gaussian_rationals(draw, real: bool = False, parts=small_rationals):
    re = draw(parts)
    im = Fraction(0) if real else draw(parts)
    return CQ(re, im)


@st.composite
def mpolys(draw, nvars: int = 2, max_degree: int = 3, max_terms: int = 5, real: bool = False, parts=small_rationals):
    k = draw(st.integers(min_value=1, max_value=max_terms))
    terms = {}
    for _ in range(k):
        exp = tuple(draw(st.integers(min_value=0, max_value=max_degree)) for _ in range(nvars))
        if sum(exp) > max_degree:
            continue
        terms[exp] = draw(gaussian_rationals(real=real, parts=parts))
    return MPoly(nvars, terms)


@st.composite
def points(draw, n: int, real: bool = False):
    return tuple(draw(gaussian_rationals(real=real)) for _ in range(n))


# -- acceptance reporting ----------------------------------------------------------------------

_ACCEPTANCE: list[tuple[str, str, str]] = []


@pytest.fixture
def record(request):
    """Attach a one-line detail to an acceptance criterion."""
    return lambda text: request.node.user_properties.append(("detail", text))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    name = item.name
    if rep.when == "call" and name.startswith("test_criterion_"):
        number = name.split("_")[2]
        detail = dict(item.user_properties).get("detail", "")
        if rep.failed:
            detail = str(call.excinfo.value).splitlines()[0] if call.excinfo else detail
        _ACCEPTANCE.append((number, "PASS" if rep.passed else "FAIL", detail))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, status, detail in sorted(_ACCEPTANCE, key=lambda r: int(r[0])):
        terminalreporter.write_line(f"criterion {number}: {status}  {detail}")
