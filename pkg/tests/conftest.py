import pytest
from hypothesis import HealthCheck, settings

from alk.ar import EnumerationClass
from alk.auslander import auslander_algebra
from alk.io import load_fixture

settings.register_profile(
    "alk", derandomize=True, deadline=None, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("alk")

R_INPUTS = {
    "e2": EnumerationClass("nakayama-linear", 2),
    "e3": EnumerationClass("linear-An"),
    "e4": EnumerationClass("linear-An"),
    "nakayama_a3_e2": EnumerationClass("nakayama-linear", 2),
}


@pytest.fixture(scope="session")
def alg():
    cache = {}

    def get(name):
        if name not in cache:
            cache[name] = load_fixture(name)
        return cache[name]

    return get


@pytest.fixture(scope="session")
def bundle(alg):
    cache = {}

    def get(name):
        if name not in cache:
            cache[name] = auslander_algebra(alg(name), R_INPUTS[name])
        return cache[name]

    return get


@pytest.fixture(scope="session")
def corpus(alg, bundle):
    """corpus("e1") over a fixture, corpus("e2", over_bundle=True) over its endomorphism algebra."""
    from alk.corpus import build_corpus

    cache = {}

    def get(name, over_bundle=False):
        key = (name, over_bundle)
        if key not in cache:
            cache[key] = build_corpus(bundle(name).lam if over_bundle else alg(name))
        return cache[key]

    return get


# one summary line per acceptance criterion

_CRITERIA: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion number and title")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when != "call" and rep.passed:
        return
    n, title = mark.args
    prev = _CRITERIA.get(n, (title, True, ""))
    detail = getattr(item, "criterion_detail", "")
    _CRITERIA[n] = (title, prev[1] and rep.passed, detail or prev[2])


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        title, ok, detail = _CRITERIA[n]
        line = f"criterion {n}: {'PASS' if ok else 'FAIL'}  {title}"
        terminalreporter.write_line(line + (f"  [{detail}]" if detail else ""))
