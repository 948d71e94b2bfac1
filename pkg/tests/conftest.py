import numpy as np
import pytest


def brute_cross(f, g, s):
    """Defining sum sum_j f_{j+s} conj(g_j), in plain Python."""
    total = 0
    for j in range(len(g)):
        if 0 <= j + s < len(f):
            total += f[j + s] * np.conj(g[j])
    return total


def brute_spectrum(f, g):
    return {s: brute_cross(f, g, s) for s in range(-(len(g) - 1), len(f))}


def brute_adf(f):
    spec = brute_spectrum(f, f)
    peak = abs(spec[0])
    return sum(abs(v) ** 2 for s, v in spec.items() if s != 0) / peak ** 2


def brute_cdf(f, g):
    num = sum(abs(v) ** 2 for v in brute_spectrum(f, g).values())
    return num / (abs(brute_cross(f, f, 0)) * abs(brute_cross(g, g, 0)))


def random_complex(rng, n):
    return rng.standard_normal(n) + 1j * rng.standard_normal(n)


@pytest.fixture
def rng():
    return np.random.default_rng(20261019)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
