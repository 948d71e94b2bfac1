"""Finite complex sequences identified with polynomials f(z) = sum_j f_j z^j.

A :class:`Sequence` stores its coefficients in a read-only numpy array.  Integer
coefficients (as produced by the ``bin:`` format or by the Golay constructors)
keep an integer dtype so that every correlation sum over them is exact.
"""

from __future__ import annotations

import math
import re
import warnings
from dataclasses import dataclass
from numbers import Integral
from pathlib import Path

import numpy as np

__all__ = [
    "Sequence",
    "SequenceClass",
    "SequenceParseError",
    "ZeroSequenceError",
    "as_sequence",
    "parse_sequence",
    "format_sequence",
    "read_sequences",
    "classify",
    "energy",
    "normalize",
    "is_monomial",
    "require_nonzero",
]

DEFAULT_TOL = 1e-9


class SequenceParseError(ValueError):
    """Raised for text that is not a valid ``bin:`` or ``cplx:`` sequence."""


class ZeroSequenceError(ValueError):
    """Raised when an analysis entry point receives the all-zero sequence."""


@dataclass(frozen=True, eq=False)
class Sequence:
    """Coefficient vector (f_0, ..., f_{l-1}); entries beyond it are zero."""

    coefficients: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.coefficients)
        if c.ndim != 1 or c.size == 0:
            raise ValueError("a sequence needs at least one coefficient")
        if np.issubdtype(c.dtype, np.integer):
            c = c.astype(np.int64)
        else:
            c = c.astype(np.complex128)
            if not np.all(np.isfinite(c)):
                raise ValueError("coefficients must be finite")
        c = c.copy()
        c.flags.writeable = False
        object.__setattr__(self, "coefficients", c)

    def __len__(self):
        return self.coefficients.size

    def __iter__(self):
        return iter(self.coefficients.tolist())

    def __repr__(self):
        return f"Sequence({self.coefficients.tolist()!r})"

    def __eq__(self, other):
        if not isinstance(other, Sequence):
            return NotImplemented
        return len(self) == len(other) and bool(np.all(self.coefficients == other.coefficients))

    __hash__ = None

    @property
    def exact(self) -> bool:
        """True when the coefficients are stored as integers."""
        return np.issubdtype(self.coefficients.dtype, np.integer)

    @property
    def is_zero(self) -> bool:
        return not np.any(self.coefficients)

    def scaled(self, c) -> "Sequence":
        """Return ``c * self``; integer scalars keep the exact path."""
        if self.exact and isinstance(c, Integral):
            return Sequence(self.coefficients * int(c))
        return Sequence(self.coefficients.astype(np.complex128) * complex(c))

    def reversed(self) -> "Sequence":
        return Sequence(self.coefficients[::-1])

    def __neg__(self):
        return Sequence(-self.coefficients)


def as_sequence(x) -> Sequence:
    """Coerce a Sequence, array or iterable of numbers into a Sequence.

    Python/numpy integers stay on the exact integer path; anything else is
    stored as complex128.
    """
    if isinstance(x, Sequence):
        return x
    if isinstance(x, np.ndarray):
        return Sequence(x)
    items = list(x)
    if items and all(isinstance(v, Integral) and not isinstance(v, bool) for v in items):
        return Sequence(np.array(items, dtype=np.int64))
    return Sequence(np.array(items, dtype=np.complex128))


def require_nonzero(*seqs: Sequence) -> None:
    for f in seqs:
        if f.is_zero:
            raise ZeroSequenceError("analysis requires a nonzero sequence")


# -- text format -------------------------------------------------------------

_REAL = re.compile(r"[+-]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?")


def _parse_real(text: str, token: str) -> float:
    if not _REAL.fullmatch(text):
        raise SequenceParseError(f"malformed token {token!r}")
    return float(text)


def _parse_complex(token: str) -> complex:
    """Parse ``a``, ``bi``, ``a+bi`` or ``a-bi`` (a bare ``i`` means 1i)."""
    t = token.strip()
    if not t:
        raise SequenceParseError("empty token")
    if not t.endswith("i"):
        return complex(_parse_real(t, token), 0.0)
    body = t[:-1]
    # split at the last sign that is not leading and not part of an exponent
    k = max((i for i, ch in enumerate(body) if ch in "+-" and i > 0 and body[i - 1] not in "eE"), default=-1)
    real_txt, imag_txt = (body[:k], body[k:]) if k > 0 else ("", body)
    real = _parse_real(real_txt, token) if real_txt else 0.0
    if imag_txt in ("", "+", "-"):
        imag = -1.0 if imag_txt == "-" else 1.0
    else:
        imag = _parse_real(imag_txt, token)
    return complex(real, imag)


def parse_sequence(text: str) -> Sequence:
    """Parse one ``bin:`` or ``cplx:`` line.

    >>> parse_sequence("bin:++-")
    Sequence([1, 1, -1])
    >>> parse_sequence("cplx:1+0i,0+1i")
    Sequence([(1+0j), 1j])
    """
    line = text.strip()
    if line.startswith("bin:"):
        body = line[4:].strip()
        if not body:
            raise SequenceParseError("empty sequence")
        bad = set(body) - {"+", "-"}
        if bad:
            raise SequenceParseError(f"unexpected characters in bin: body: {''.join(sorted(bad))!r}")
        return Sequence(np.array([1 if ch == "+" else -1 for ch in body], dtype=np.int64))
    if line.startswith("cplx:"):
        body = line[5:].strip()
        if not body:
            raise SequenceParseError("empty sequence")
        values = [_parse_complex(tok) for tok in body.split(",")]
        seq = Sequence(np.array(values, dtype=np.complex128))
        if seq.is_zero:
            warnings.warn("parsed an all-zero sequence", stacklevel=2)
        return seq
    raise SequenceParseError("expected a 'bin:' or 'cplx:' prefix")


def _fmt_real(x: float) -> str:
    return format(x, ".17g")


def format_sequence(f: Sequence) -> str:
    """Inverse of :func:`parse_sequence` (binary sequences use ``bin:``)."""
    c = f.coefficients
    if f.exact and np.all(np.abs(c) == 1):
        return "bin:" + "".join("+" if v > 0 else "-" for v in c.tolist())
    toks = []
    for v in np.asarray(c, dtype=np.complex128).tolist():
        im = v.imag
        sign = "-" if (im < 0 or (im == 0 and math.copysign(1.0, im) < 0)) else "+"
        toks.append(f"{_fmt_real(v.real)}{sign}{_fmt_real(abs(im))}i")
    return "cplx:" + ",".join(toks)


def read_sequences(path) -> list[Sequence]:
    """Read every sequence in a file, skipping blank lines and ``%`` comments."""
    seqs = []
    for lineno, line in enumerate(Path(path).read_text().splitlines(), 1):
        s = line.strip()
        if not s or s.startswith("%"):
            continue
        try:
            seqs.append(parse_sequence(s))
        except SequenceParseError as exc:
            raise SequenceParseError(f"{path}:{lineno}: {exc}") from None
    return seqs


# -- classification and basic measures ---------------------------------------

@dataclass(frozen=True)
class SequenceClass:
    """Most specific alphabet a sequence lives in.

    ``tag`` is one of ``"binary"``, ``"mary"``, ``"unimodular"``, ``"general"``;
    ``m`` is set for ``"mary"`` (and is 2 for ``"binary"``).
    """

    tag: str
    m: int | None = None
    tol: float = 0.0

    def __str__(self):
        return f"MAry({self.m})" if self.tag == "mary" else self.tag.capitalize()


def classify(f: Sequence, tol: float = DEFAULT_TOL, max_m: int = 64) -> SequenceClass:
    """Classify f as binary, m-ary (smallest m <= max_m), unimodular or general."""
    f = as_sequence(f)
    require_nonzero(f)
    c = np.asarray(f.coefficients, dtype=np.complex128)
    if np.all(np.minimum(np.abs(c - 1), np.abs(c + 1)) <= tol):
        return SequenceClass("binary", 2, tol)
    if not np.all(np.abs(np.abs(c) - 1) <= tol):
        return SequenceClass("general", None, tol)
    for m in range(3, max_m + 1):
        k = np.rint(np.angle(c) * m / (2 * np.pi))
        if np.all(np.abs(c - np.exp(2j * np.pi * k / m)) <= tol):
            return SequenceClass("mary", m, tol)
    return SequenceClass("unimodular", None, tol)


def energy(f: Sequence):
    """Sum of squared magnitudes, i.e. the zero-shift autocorrelation.

    Returns an ``int`` for integer sequences and a ``float`` otherwise.
    """
    f = as_sequence(f)
    c = f.coefficients
    if f.exact:
        return int(np.dot(c, c))
    return float(np.sum(c.real ** 2 + c.imag ** 2))


def normalize(f: Sequence) -> Sequence:
    """Scale f to unit Euclidean norm."""
    f = as_sequence(f)
    require_nonzero(f)
    c = np.asarray(f.coefficients, dtype=np.complex128)
    return Sequence(c / np.linalg.norm(c))


def is_monomial(f: Sequence) -> bool:
    """Exactly one stored coefficient is nonzero (exact comparison, no tolerance)."""
    f = as_sequence(f)
    require_nonzero(f)
    return int(np.count_nonzero(f.coefficients)) == 1
