import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import brute_cross, brute_spectrum, random_complex
from golaycorr import (
    as_sequence,
    autocorrelation_inner,
    autocorrelation_spectrum,
    crosscorrelation_at,
    energy,
    energy_identity_residual,
    spectrum_fast,
    spectrum_naive,
)
from golaycorr.correlation import CorrelationSpectrum

binary_lists = st.lists(st.sampled_from([-1, 1]), min_size=1, max_size=24)


def test_crosscorrelation_at_examples():
    f, g = as_sequence([1, 1]), as_sequence([1, -1])
    assert crosscorrelation_at(f, g, 0) == 0
    assert crosscorrelation_at(f, g, 1) == 1
    assert crosscorrelation_at(f, g, 2) == 0
    assert crosscorrelation_at(f, g, -5) == 0


def test_spectrum_naive_examples():
    # frozen from brute_spectrum
    assert spectrum_naive([1, 1], [1, -1]).as_dict() == {-1: -1, 0: 0, 1: 1}
    assert spectrum_naive([1, 1], [1, 1]).as_dict() == {-1: 1, 0: 2, 1: 1}
    c = 0.3 - 2j
    spec = spectrum_naive([0, 0, c], [0, 0, c])
    assert (spec.s_min, spec.s_max) == (-2, 2)
    assert spec.as_dict() == {-2: 0, -1: 0, 0: pytest.approx(abs(c) ** 2), 1: 0, 2: 0}


def test_frozen_examples_match_oracle():
    assert brute_spectrum([1, 1], [1, -1]) == {-1: -1, 0: 0, 1: 1}
    assert brute_spectrum([1, 1, 1, -1], [1, 1, 1, -1]) == {-3: -1, -2: 0, -1: 1, 0: 4, 1: 1, 2: 0, 3: -1}


def test_autocorrelation_examples():
    spec = autocorrelation_spectrum([1, 1, 1, -1])
    assert spec.as_dict() == {-3: -1, -2: 0, -1: 1, 0: 4, 1: 1, 2: 0, 3: -1}
    assert autocorrelation_spectrum([1, 1]).as_dict() == {-1: 1, 0: 2, 1: 1}
    mono = autocorrelation_spectrum([0, 0, 7j, 0])
    assert all(v == 0 for s, v in mono.as_dict().items() if s != 0)


@pytest.mark.parametrize("fast", [False, True])
def test_exact_path_is_integer(fast):
    spec = autocorrelation_spectrum(as_sequence([1, -1, 1, 1, -1]), fast=fast)
    assert spec.exact
    assert spec[0] == 5


def test_spectrum_matches_brute_force(rng):
    for nf, ng in [(1, 1), (1, 5), (5, 1), (3, 7), (8, 2)]:
        f, g = random_complex(rng, nf), random_complex(rng, ng)
        spec = spectrum_naive(f, g)
        for s, v in brute_spectrum(list(f), list(g)).items():
            assert abs(spec[s] - v) <= 1e-12


def test_fast_matches_naive_small():
    a = spectrum_fast([1, 1], [1, -1])
    b = spectrum_naive([1, 1], [1, -1])
    assert np.max(np.abs(a.values - b.values)) <= 1e-12


def test_fast_matches_naive_large(rng):
    f, g = random_complex(rng, 1000), random_complex(rng, 700)
    a, b = spectrum_fast(f, g), spectrum_naive(f, g)
    assert (a.s_min, a.s_max) == (b.s_min, b.s_max) == (-699, 999)
    scale = np.sqrt(energy(as_sequence(f)) * energy(as_sequence(g)))
    assert np.max(np.abs(a.values - b.values)) <= 1e-8 * scale


def test_fast_monomial_is_reversed_conjugate(rng):
    g = random_complex(rng, 6)
    c = 2 - 1j
    spec = spectrum_fast([c], g)
    np.testing.assert_array_equal(spec.values, c * np.conj(g[::-1]))


def test_fast_binary_exact(rng):
    f = 1 - 2 * rng.integers(0, 2, 3000)
    g = 1 - 2 * rng.integers(0, 2, 2000)
    a, b = spectrum_fast(as_sequence(f), as_sequence(g)), spectrum_naive(as_sequence(f), as_sequence(g))
    assert a.exact and b.exact
    np.testing.assert_array_equal(a.values, b.values)


def test_energy_identity_examples():
    assert energy_identity_residual([1, 1], [1, -1]) == 0.0
    assert energy_identity_residual(as_sequence([1, -1, -1, 1, 1]), as_sequence([1, 1, -1])) == 0


def test_energy_identity_random(rng):
    for _ in range(100):
        f = random_complex(rng, int(rng.integers(1, 513)))
        g = random_complex(rng, int(rng.integers(1, 513)))
        lhs = float(np.sum(np.abs(spectrum_naive(f, g).values) ** 2))
        assert energy_identity_residual(f, g) <= 1e-9 * lhs


def test_spectrum_text_format():
    text = spectrum_naive([1, 1], [1, -1]).to_text()
    assert text.splitlines() == ["-1\t-1\t0", "0\t0\t0", "1\t1\t0"]


def test_on_range_zero_fills():
    spec = CorrelationSpectrum(-1, 1, np.array([1, 2, 3]))
    assert spec.on_range(-3, 2).tolist() == [0, 0, 1, 2, 3, 0]


@settings(max_examples=200, deadline=None)
@given(binary_lists, binary_lists)
def test_conjugate_reversal_binary(f, g):
    a, b = spectrum_naive(f, g), spectrum_naive(g, f)
    for s in range(-30, 30):
        assert b[s] == a[-s]


def test_conjugate_reversal_complex(rng):
    for _ in range(50):
        f = random_complex(rng, int(rng.integers(1, 60)))
        g = random_complex(rng, int(rng.integers(1, 60)))
        a, b = spectrum_fast(f, g), spectrum_fast(g, f)
        for s in range(a.s_min, a.s_max + 1):
            assert abs(b[-s] - np.conj(a[s])) <= 1e-12 * max(1.0, abs(a[s]))


@settings(max_examples=200, deadline=None)
@given(binary_lists)
def test_autocorrelation_symmetry_and_peak(f):
    spec = autocorrelation_spectrum(as_sequence(f))
    assert spec[0] == len(f)
    for s in range(1, len(f)):
        assert spec[s] == spec[-s] == brute_cross(f, f, s)


def test_cross_sum_is_real(rng):
    for _ in range(100):
        f = random_complex(rng, int(rng.integers(1, 200)))
        g = random_complex(rng, int(rng.integers(1, 200)))
        v = autocorrelation_inner(f, g)
        scale = energy(as_sequence(f)) * energy(as_sequence(g))
        assert abs(v.imag) <= 1e-9 * scale
