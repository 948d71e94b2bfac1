"""Demerit factors, the Pursley-Sarwate criterion and its equality cases.

For nonzero f, g::

    ADF(f)   = sum_{s != 0} |C_{f,f}(s)|^2 / C_{f,f}(0)^2
    CDF(f,g) = sum_s |C_{f,g}(s)|^2 / (C_{f,f}(0) C_{g,g}(0))
    PSC(f,g) = sqrt(ADF(f) ADF(g)) + CDF(f,g)

and |CDF(f,g) - 1| <= sqrt(ADF(f) ADF(g)), so PSC >= 1.  The lower bound is
attained exactly by monomials and by pairs (f, g) for which some lam > 0 makes
(f, lam*g) a Golay pair; the upper bound by monomials and by pairs whose
off-peak autocorrelations are positive multiples of each other.

Integer sequences are evaluated with exact rational arithmetic and only
converted to float at the end.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .correlation import autocorrelation_spectrum, spectrum
from .sequences import DEFAULT_TOL, Sequence, as_sequence, energy, is_monomial, require_nonzero

__all__ = [
    "DemeritReport",
    "EqualityCase",
    "adf",
    "cdf",
    "psc",
    "demerit_report",
    "find_golay_scaling",
    "fit_autocorrelation_ratio",
    "classify_equality",
]

MONOMIAL = "monomial"
LOWER = "lower_bound_golay"
UPPER = "upper_bound"
INTERIOR = "interior"


def _sumsq(values: np.ndarray):
    if np.issubdtype(values.dtype, np.integer):
        return int(np.dot(values, values))
    return float(np.sum(values.real ** 2 + values.imag ** 2))


def _ratio(num, den):
    if isinstance(num, int) and isinstance(den, int):
        return Fraction(num, den)
    return num / den


def _adf_exact(f: Sequence, fast=None):
    ac = autocorrelation_spectrum(f, fast)
    side = ac.values[len(f):]  # s = 1 .. l-1
    e = energy(f)
    return _ratio(2 * _sumsq(side), e * e)


def _cdf_exact(f: Sequence, g: Sequence, fast=None):
    cs = spectrum(f, g, fast)
    return _ratio(_sumsq(cs.values), energy(f) * energy(g))


def _rational_sqrt(q: Fraction):
    """sqrt(q) as a Fraction when q is a square of a rational, else None."""
    n, d = q.numerator, q.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def adf(f, fast: bool | None = None) -> float:
    """Autocorrelation demerit factor; zero exactly for monomials."""
    f = as_sequence(f)
    require_nonzero(f)
    return float(_adf_exact(f, fast))


def cdf(f, g, fast: bool | None = None) -> float:
    """Crosscorrelation demerit factor (symmetric in f and g)."""
    f, g = as_sequence(f), as_sequence(g)
    require_nonzero(f, g)
    return float(_cdf_exact(f, g, fast))


@dataclass(frozen=True)
class DemeritReport:
    """ADF of both sequences, their CDF, PSC, and the slack in both bounds.

    ``lower_slack = (cdf - 1) + sqrt(adf_f adf_g)`` and
    ``upper_slack = sqrt(adf_f adf_g) - (cdf - 1)``; both are >= 0.
    """

    adf_f: float
    adf_g: float
    cdf: float
    psc: float
    lower_slack: float
    upper_slack: float

    def near_boundary(self, tol: float = DEFAULT_TOL) -> bool:
        """A slack is positive but within 10x of ``tol``: too close to call silently."""
        return any(tol < s <= 10 * tol for s in (self.lower_slack, self.upper_slack))


def demerit_report(f, g, fast: bool | None = None) -> DemeritReport:
    f, g = as_sequence(f), as_sequence(g)
    require_nonzero(f, g)
    af, ag, c = _adf_exact(f, fast), _adf_exact(g, fast), _cdf_exact(f, g, fast)
    root = None
    if isinstance(af * ag, Fraction):
        root = _rational_sqrt(Fraction(af * ag))
    if root is not None:
        lower, upper, total = (c - 1) + root, root - (c - 1), root + c
        return DemeritReport(float(af), float(ag), float(c), float(total), float(lower), float(upper))
    r = math.sqrt(float(af) * float(ag))
    cf = float(c)
    return DemeritReport(float(af), float(ag), cf, r + cf, (cf - 1) + r, r - (cf - 1))


def psc(f, g, fast: bool | None = None) -> float:
    """Pursley-Sarwate criterion sqrt(ADF(f) ADF(g)) + CDF(f, g)."""
    return demerit_report(f, g, fast).psc


# -- equality classification ---------------------------------------------------

def fit_autocorrelation_ratio(f, g, fast: bool | None = None) -> tuple[float, float]:
    """Best real mu with C_{f,f}(s) ~ mu C_{g,g}(s) for every s != 0.

    mu is read off at the shift where |C_{g,g}| is largest and then checked at
    every other nonzero shift, so a zero of one autocorrelation against a
    nonzero of the other shows up in the residual.  Returns ``(mu, residual)``
    with ``residual = max_{s != 0} |C_{f,f}(s) - mu C_{g,g}(s)| / energy(f)``.
    Requires g to be a non-monomial.
    """
    f, g = as_sequence(f), as_sequence(g)
    require_nonzero(f, g)
    n = max(len(f), len(g)) - 1
    cf = autocorrelation_spectrum(f, fast).on_range(1, n)
    cg = autocorrelation_spectrum(g, fast).on_range(1, n)
    if n == 0 or not np.any(cg):
        raise ValueError("g has no off-peak autocorrelation (monomial)")
    k = int(np.argmax(np.abs(cg)))
    ef = energy(f)
    if np.issubdtype(cf.dtype, np.integer) and np.issubdtype(cg.dtype, np.integer):
        mu = Fraction(int(cf[k]), int(cg[k]))
        worst = max(abs(int(a) - mu * int(b)) for a, b in zip(cf.tolist(), cg.tolist()))
        return float(mu), float(worst / ef)
    mu = (complex(cf[k]) / complex(cg[k])).real
    worst = float(np.max(np.abs(cf - mu * cg)))
    return mu, worst / ef


def find_golay_scaling(f, g, tol: float = DEFAULT_TOL, fast: bool | None = None) -> float | None:
    """Positive lam with (f, lam*g) a Golay pair, or None if there is none.

    The pair must satisfy C_{f,f}(s) + lam^2 C_{g,g}(s) = 0 for all s != 0 up to
    ``tol`` relative to energy(f).  Monomial inputs are rejected.
    """
    f, g = as_sequence(f), as_sequence(g)
    require_nonzero(f, g)
    if is_monomial(f) or is_monomial(g):
        raise ValueError("monomial input: the pair is a monomial equality case")
    mu, residual = fit_autocorrelation_ratio(f, g, fast)
    if residual <= tol and mu < 0:
        return math.sqrt(-mu)
    return None


@dataclass(frozen=True)
class EqualityCase:
    """Which equality case of the PSC bound a pair falls into.

    ``tag`` is ``"monomial"``, ``"lower_bound_golay"`` (with ``lam`` and
    ``mu = -lam**2``), ``"upper_bound"`` (with ``mu > 0``) or ``"interior"``.
    ``residual`` is the relative misfit of the autocorrelation ratio.
    """

    tag: str
    residual: float = 0.0
    lam: float | None = None
    mu: float | None = None

    def __str__(self):
        if self.tag == LOWER:
            return f"LowerBoundGolay(lambda={self.lam:.12g})"
        if self.tag == UPPER:
            return f"UpperBound(mu={self.mu:.12g})"
        return {MONOMIAL: "MonomialCase", INTERIOR: "Interior"}[self.tag]


def classify_equality(f, g, tol: float = DEFAULT_TOL, fast: bool | None = None) -> EqualityCase:
    f, g = as_sequence(f), as_sequence(g)
    require_nonzero(f, g)
    if is_monomial(f) or is_monomial(g):
        return EqualityCase(MONOMIAL)
    mu, residual = fit_autocorrelation_ratio(f, g, fast)
    if residual <= tol and mu < 0:
        return EqualityCase(LOWER, residual, lam=math.sqrt(-mu), mu=mu)
    if residual <= tol and mu > 0:
        return EqualityCase(UPPER, residual, mu=mu)
    return EqualityCase(INTERIOR, residual)
