"""Golay complementary pairs: verification and construction.

(f, g) is a Golay pair when C_{f,f}(s) + C_{g,g}(s) = 0 for every s != 0.
Binary pairs are built for every length 2^a 10^b 26^c from seed pairs of
lengths 1, 2, 10 and 26 with two operations:

* doubling, (a, b) -> (a|b, a|-b);
* Turyn's product of a length-m pair with a length-n pair.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .correlation import autocorrelation_spectrum
from .sequences import DEFAULT_TOL, Sequence, as_sequence, energy, parse_sequence, require_nonzero

__all__ = [
    "GolayCertificate",
    "GolayError",
    "InadmissibleLengthError",
    "is_golay_pair",
    "double",
    "turyn_product",
    "seed_pair",
    "admissible_exponents",
    "construct_for_length",
    "admissible_lengths",
]


class GolayError(ValueError):
    """A constructor received a pair that is not a (binary) Golay pair."""


class InadmissibleLengthError(ValueError):
    """The requested length is not of the form 2^a 10^b 26^c."""

    def __init__(self, length: int):
        super().__init__(f"length {length} is not of the form 2^a * 10^b * 26^c")
        self.length = length


@dataclass(frozen=True)
class GolayCertificate:
    verdict: bool
    max_residual: float
    lengths: tuple[int, int]
    threshold: float = 0.0

    def __bool__(self):
        return self.verdict


def is_golay_pair(f, g, tol: float = DEFAULT_TOL, fast: bool | None = None) -> GolayCertificate:
    """Check C_{f,f}(s) + C_{g,g}(s) = 0 at every nonzero shift.

    The residual is the largest |C_{f,f}(s) + C_{g,g}(s)| over s != 0.  For
    integer inputs it is an exact integer; otherwise the pair passes when the
    residual is at most ``tol * max(energy(f), energy(g))``.
    """
    f, g = as_sequence(f), as_sequence(g)
    require_nonzero(f, g)
    n = max(len(f), len(g)) - 1
    threshold = tol * max(float(energy(f)), float(energy(g)))
    if n == 0:
        return GolayCertificate(True, 0.0, (len(f), len(g)), threshold)
    total = autocorrelation_spectrum(f, fast).on_range(1, n) + autocorrelation_spectrum(g, fast).on_range(1, n)
    residual = float(np.max(np.abs(total)))
    return GolayCertificate(residual <= threshold, residual, (len(f), len(g)), threshold)


def _is_binary(f: Sequence) -> bool:
    return f.exact and bool(np.all(np.abs(f.coefficients) == 1))


def double(pair):
    """(a, b) -> (a|b, a|-b), a Golay pair of twice the length."""
    a, b = (as_sequence(x) for x in pair)
    if len(a) != len(b):
        raise GolayError("doubling needs equal lengths")
    if not is_golay_pair(a, b):
        raise GolayError("input is not a Golay pair")
    ca, cb = a.coefficients, b.coefficients
    return Sequence(np.concatenate([ca, cb])), Sequence(np.concatenate([ca, -cb]))


def turyn_product(pair_a, pair_b):
    """Turyn's product of binary Golay pairs of lengths m and n, giving length m*n.

    With p = (a+b)/2 and q = (a-b)/2 (disjoint supports, entries in {-1, 0, 1})
    and (c, d) the second pair, the result is::

        f(z) = c(z^m) p(z) + d(z^m) q(z)
        g(z) = d~(z^m) p(z) - c~(z^m) q(z)

    where ~ reverses a sequence.  Every output term is a single +-1 product.
    """
    a, b = (as_sequence(x) for x in pair_a)
    c, d = (as_sequence(x) for x in pair_b)
    for x, y in ((a, b), (c, d)):
        if not (_is_binary(x) and _is_binary(y)):
            raise GolayError("Turyn's product needs binary pairs")
        if len(x) != len(y):
            raise GolayError("pair members must have equal length")
        if not is_golay_pair(x, y):
            raise GolayError("input is not a Golay pair")
    ca, cb = a.coefficients, b.coefficients
    p, q = (ca + cb) // 2, (ca - cb) // 2
    cc, cd = c.coefficients, d.coefficients
    f = np.kron(cc, p) + np.kron(cd, q)
    g = np.kron(cd[::-1], p) - np.kron(cc[::-1], q)
    return Sequence(f), Sequence(g)


# certified in tests/test_golay.py
_SEEDS = {
    1: ("bin:+", "bin:+"),
    2: ("bin:++", "bin:+-"),
    10: ("bin:+--+-+++++", "bin:+-+---++--"),
    26: ("bin:++++-++--+-+-+--+-+++--+++", "bin:++++-++--+-+++++-+---++---"),
}


def seed_pair(base: int):
    """Embedded binary Golay pair of length 1, 2, 10 or 26."""
    try:
        fs, gs = _SEEDS[base]
    except KeyError:
        raise ValueError(f"no seed pair of length {base}; choose from 1, 2, 10, 26") from None
    return parse_sequence(fs), parse_sequence(gs)


def admissible_exponents(length: int) -> tuple[int, int, int] | None:
    """(a, b, c) with length = 2^a 10^b 26^c, or None if no such exponents exist."""
    if length < 1:
        return None
    n, b, c = length, 0, 0
    while n % 5 == 0:
        n //= 5
        b += 1
    while n % 13 == 0:
        n //= 13
        c += 1
    twos = 0
    while n % 2 == 0:
        n //= 2
        twos += 1
    a = twos - b - c
    if n != 1 or a < 0:
        return None
    return a, b, c


def admissible_lengths(limit: int) -> list[int]:
    return [n for n in range(1, limit + 1) if admissible_exponents(n) is not None]


def construct_for_length(length: int):
    """Binary Golay pair of the given length.

    Doubles the length-1 seed a times, then folds in b length-10 seeds and c
    length-26 seeds with Turyn's product (left-associated).
    """
    exps = admissible_exponents(length)
    if exps is None:
        raise InadmissibleLengthError(length)
    a, b, c = exps
    pair = seed_pair(1)
    for _ in range(a):
        pair = double(pair)
    for _ in range(b):
        pair = turyn_product(pair, seed_pair(10))
    for _ in range(c):
        pair = turyn_product(pair, seed_pair(26))
    return pair
