"""Aperiodic correlation spectra.

The crosscorrelation of f with g at shift s is C_{f,g}(s) = sum_j f_{j+s} conj(g_j).
Viewed as polynomials, the whole spectrum is the coefficient vector of
f(z) * conj(g)(z), where conj(g)(z) carries conj(g_j) at exponent -j.

Two routes are provided.  :func:`spectrum_naive` evaluates the defining sum shift
by shift and serves as the oracle.  :func:`spectrum_fast` multiplies the two
polynomials with an FFT.  Integer inputs stay exact on both routes.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.fft

from .sequences import Sequence, as_sequence, require_nonzero

__all__ = [
    "CorrelationSpectrum",
    "crosscorrelation_at",
    "spectrum_naive",
    "spectrum_fast",
    "spectrum",
    "autocorrelation_spectrum",
    "autocorrelation_inner",
    "energy_identity_residual",
    "FAST_THRESHOLD",
]

# below this product of lengths the direct sum is cheaper than an FFT
FAST_THRESHOLD = 4096


@dataclass(frozen=True, eq=False)
class CorrelationSpectrum:
    """Values of C(s) for s_min <= s <= s_max; zero outside that range."""

    s_min: int
    s_max: int
    values: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.values).copy()
        if v.size != self.s_max - self.s_min + 1:
            raise ValueError("values do not match the shift range")
        v.flags.writeable = False
        object.__setattr__(self, "values", v)

    @property
    def exact(self) -> bool:
        return np.issubdtype(self.values.dtype, np.integer)

    @property
    def shifts(self) -> np.ndarray:
        return np.arange(self.s_min, self.s_max + 1)

    def __len__(self):
        return self.values.size

    def __getitem__(self, s: int):
        if self.s_min <= s <= self.s_max:
            v = self.values[s - self.s_min]
            return int(v) if self.exact else complex(v)
        return 0 if self.exact else 0j

    def on_range(self, s_min: int, s_max: int) -> np.ndarray:
        """Values over an arbitrary shift range, zero-filled outside the support."""
        out = np.zeros(s_max - s_min + 1, dtype=self.values.dtype)
        lo, hi = max(s_min, self.s_min), min(s_max, self.s_max)
        if lo <= hi:
            out[lo - s_min:hi - s_min + 1] = self.values[lo - self.s_min:hi - self.s_min + 1]
        return out

    def as_dict(self) -> dict:
        return {int(s): self[int(s)] for s in self.shifts}

    def to_text(self) -> str:
        """One ``s<TAB>re<TAB>im`` line per shift, in shift order."""
        lines = []
        for s, v in zip(self.shifts.tolist(), np.asarray(self.values, dtype=np.complex128).tolist()):
            lines.append(f"{s}\t{v.real:.17g}\t{v.imag:.17g}")
        return "\n".join(lines) + "\n"


def _pair(f, g):
    f, g = as_sequence(f), as_sequence(g)
    require_nonzero(f, g)
    return f, g


def _arrays(f: Sequence, g: Sequence):
    """Coefficient arrays on a common path: integer if both exact, else complex."""
    if f.exact and g.exact:
        return f.coefficients, g.coefficients
    return (np.asarray(f.coefficients, dtype=np.complex128),
            np.asarray(g.coefficients, dtype=np.complex128))


def crosscorrelation_at(f, g, s: int):
    """C_{f,g}(s) from the defining sum."""
    f, g = _pair(f, g)
    a, b = _arrays(f, g)
    lo = max(0, -s)
    hi = min(len(g), len(f) - s)
    if lo >= hi:
        return 0 if f.exact and g.exact else 0j
    v = np.dot(a[lo + s:hi + s], np.conj(b[lo:hi]))
    return int(v) if f.exact and g.exact else complex(v)


def spectrum_naive(f, g) -> CorrelationSpectrum:
    """All shifts -(len(g)-1)..len(f)-1, one inner product per shift."""
    f, g = _pair(f, g)
    a, b = _arrays(f, g)
    bc = np.conj(b)
    nf, ng = len(f), len(g)
    out = np.zeros(nf + ng - 1, dtype=a.dtype)
    for k, s in enumerate(range(-(ng - 1), nf)):
        lo = max(0, -s)
        hi = min(ng, nf - s)
        out[k] = np.dot(a[lo + s:hi + s], bc[lo:hi])
    return CorrelationSpectrum(-(ng - 1), nf - 1, out)


def _fft_product(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    n = a.size + b.size - 1
    size = scipy.fft.next_fast_len(n)
    fa = scipy.fft.fft(a, size)
    fb = scipy.fft.fft(b, size)
    return scipy.fft.ifft(fa * fb)[:n]


def spectrum_fast(f, g) -> CorrelationSpectrum:
    """Same spectrum as :func:`spectrum_naive`, via FFT polynomial multiplication.

    For integer inputs the FFT result is rounded back to integers.  The rounding
    is accepted only if every value lies within 1/4 of an integer; otherwise the
    integer direct sum is used instead.
    """
    f, g = _pair(f, g)
    a, b = _arrays(f, g)
    ng = len(g)
    if min(len(f), ng) == 1:
        # single-term factor: every output is one product
        return CorrelationSpectrum(-(ng - 1), len(f) - 1, np.convolve(a, np.conj(b[::-1])))
    # f(z) * conj(g)(z): conj(g) reversed, shifted by ng - 1
    prod = _fft_product(a.astype(np.complex128), np.conj(b[::-1]).astype(np.complex128))
    if f.exact and g.exact:
        real = prod.real
        rounded = np.rint(real)
        if np.max(np.abs(real - rounded)) < 0.25 and np.max(np.abs(prod.imag)) < 0.25:
            return CorrelationSpectrum(-(ng - 1), len(f) - 1, rounded.astype(np.int64))
        return spectrum_naive(f, g)
    return CorrelationSpectrum(-(ng - 1), len(f) - 1, prod)


def spectrum(f, g, fast: bool | None = None) -> CorrelationSpectrum:
    """Dispatch to the fast or naive route; ``None`` picks by problem size."""
    if fast is None:
        f, g = as_sequence(f), as_sequence(g)
        fast = len(f) * len(g) > FAST_THRESHOLD
    return spectrum_fast(f, g) if fast else spectrum_naive(f, g)


def autocorrelation_spectrum(f, fast: bool | None = None) -> CorrelationSpectrum:
    """C_{f,f}(s) for -(l-1) <= s <= l-1."""
    return spectrum(f, f, fast)


def autocorrelation_inner(f, g, include_zero: bool = False, fast: bool | None = None):
    """sum_s C_{f,f}(s) * conj(C_{g,g}(s)), over s != 0 unless ``include_zero``.

    The result is real in exact arithmetic; the raw complex value is returned
    for floating inputs so the imaginary part can be inspected.
    """
    f, g = _pair(f, g)
    af = autocorrelation_spectrum(f, fast)
    ag = autocorrelation_spectrum(g, fast)
    m = min(af.s_max, ag.s_max)
    x, y = af.on_range(-m, m), ag.on_range(-m, m)
    if not include_zero:
        x, y = np.delete(x, m), np.delete(y, m)
    if af.exact and ag.exact:
        return int(np.dot(x, y))
    return complex(np.dot(x, np.conj(y)))


def energy_identity_residual(f, g, fast: bool | None = None) -> float:
    """|sum_s |C_{f,g}(s)|^2 - sum_s C_{f,f}(s) conj(C_{g,g}(s))|.

    Both sides are the constant coefficient of f g conj(f g), so the residual
    is zero up to rounding (exactly zero for integer inputs).
    """
    f, g = _pair(f, g)
    cross = spectrum(f, g, fast)
    if cross.exact:
        lhs = int(np.dot(cross.values, cross.values))
    else:
        v = cross.values
        lhs = float(np.sum(v.real ** 2 + v.imag ** 2))
    rhs = autocorrelation_inner(f, g, include_zero=True, fast=fast)
    return float(abs(lhs - rhs))

