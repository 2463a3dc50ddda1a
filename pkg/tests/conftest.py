from math import gcd

import pytest

_ACCEPTANCE = []


def coprime_pairs(b_max, a_min=2, b_min=None):
    return [
        (a, b)
        for b in range(b_min or a_min + 1, b_max + 1)
        for a in range(a_min, b)
        if gcd(a, b) == 1
    ]


def brute_representable(n, gens):
    """Plain recursion over the first generator; shares nothing with the package."""
    if n < 0:
        return False
    if n == 0:
        return True
    g, rest = gens[0], gens[1:]
    if not rest:
        return n % g == 0
    return any(brute_representable(n - k * g, rest) for k in range(n // g + 1))


def brute_frobenius(gens, limit):
    """Largest n <= limit not representable (assumes limit exceeds the answer)."""
    for n in range(limit, -1, -1):
        if not brute_representable(n, gens):
            return n
    return -1


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None or rep.when != "call":
        return
    number, title = marker.args
    _ACCEPTANCE.append((number, title, rep.passed, rep.duration))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, passed, duration in sorted(_ACCEPTANCE):
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"[{status}] {number:>2}. {title} ({duration:.2f}s)")
