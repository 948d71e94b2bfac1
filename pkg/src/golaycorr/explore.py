"""Search and sampling over pairs of binary sequences.

* :func:`exhaustive_min_psc` visits every ordered pair of length l <= 6.
* :func:`monte_carlo` estimates mean ADF, CDF and PSC of uniformly random pairs.
* :func:`local_search_min_psc` runs restarted single-sign-flip hill climbing.

Everything is deterministic given its arguments.  Work is split into fixed
blocks, each with its own seed, so results do not depend on ``workers``.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .golay import is_golay_pair
from .sequences import DEFAULT_TOL, Sequence

__all__ = [
    "SearchResult",
    "McStats",
    "all_binary",
    "batch_autocorrelation",
    "batch_crosscorrelation_energy",
    "exhaustive_min_psc",
    "enumerate_golay_pairs",
    "monte_carlo",
    "local_search_min_psc",
    "MAX_EXHAUSTIVE_LENGTH",
]

MAX_EXHAUSTIVE_LENGTH = 6
MC_BLOCK = 1024


@dataclass
class SearchResult:
    length: int
    min_psc: float
    argmin_count: int
    golay_count: int
    elapsed: float
    mode: str
    best_pair: tuple[Sequence, Sequence] | None = None
    argmin_pairs: list[tuple[Sequence, Sequence]] = field(default_factory=list, repr=False)
    near_boundary: int = 0


@dataclass
class McStats:
    length: int
    samples: int
    seed: int
    mean_adf: float
    mean_cdf: float
    mean_psc: float
    se_adf: float
    se_cdf: float
    se_psc: float


def _map(fn, items, workers: int):
    if workers <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def all_binary(length: int) -> np.ndarray:
    """Every +-1 vector of the given length, one per row, in binary-counting order."""
    idx = np.arange(2 ** length)
    bits = (idx[:, None] >> np.arange(length)) & 1
    return (1 - 2 * bits).astype(np.int64)


def batch_autocorrelation(x: np.ndarray) -> np.ndarray:
    """C(s) for s = 1..l-1 of each row of an integer matrix."""
    n = x.shape[1]
    out = np.zeros((x.shape[0], max(n - 1, 0)), dtype=np.int64)
    for s in range(1, n):
        out[:, s - 1] = np.einsum("ij,ij->i", x[:, s:], x[:, :n - s])
    return out


def batch_crosscorrelation_energy(x: np.ndarray, y: np.ndarray, outer: bool = False) -> np.ndarray:
    """sum_s C_{x_i, y_j}(s)^2 for real integer rows.

    Row-wise (x_i with y_i) by default; with ``outer`` every x_i against every y_j.
    """
    n, m = x.shape[1], y.shape[1]
    shape = (x.shape[0], y.shape[0]) if outer else (x.shape[0],)
    total = np.zeros(shape, dtype=np.int64)
    for s in range(-(m - 1), n):
        lo, hi = max(0, -s), min(m, n - s)
        xs, ys = x[:, lo + s:hi + s], y[:, lo:hi]
        c = xs @ ys.T if outer else np.einsum("ij,ij->i", xs, ys)
        total += c * c
    return total


def _to_seq(row) -> Sequence:
    return Sequence(np.asarray(row, dtype=np.int64))


# -- exhaustive ----------------------------------------------------------------

def _check_length(length: int):
    if not 1 <= length <= MAX_EXHAUSTIVE_LENGTH:
        raise ValueError(f"exhaustive search supports 1 <= length <= {MAX_EXHAUSTIVE_LENGTH}")


def _exhaustive_block(x, acf, adf_num, rows, tol):
    """PSC and Golay flags for x[rows] against all of x."""
    length = x.shape[1]
    e2 = length * length
    cross = batch_crosscorrelation_energy(x[rows], x, outer=True)
    psc = np.sqrt(np.outer(adf_num[rows], adf_num).astype(float)) / e2 + cross / e2
    golay = np.all(acf[rows][:, None, :] + acf[None, :, :] == 0, axis=2)
    return psc, golay


def exhaustive_min_psc(length: int, tol: float = DEFAULT_TOL, workers: int = 1,
                       keep_argmin: bool = True) -> SearchResult:
    """Minimum PSC over all 4^l ordered binary pairs of length l.

    Also counts Golay pairs and checks that, among non-monomial pairs, PSC
    within ``tol`` of 1 happens exactly for the Golay pairs.
    """
    _check_length(length)
    start = time.perf_counter()
    x = all_binary(length)
    acf = batch_autocorrelation(x)
    adf_num = 2 * np.sum(acf * acf, axis=1)
    n = x.shape[0]
    blocks = [np.arange(i, min(i + 16, n)) for i in range(0, n, 16)]
    parts = _map(lambda rows: _exhaustive_block(x, acf, adf_num, rows, tol), blocks, workers)
    psc = np.concatenate([p for p, _ in parts])
    golay = np.concatenate([g for _, g in parts])

    min_psc = float(psc.min())
    if min_psc < 1 - tol:
        raise AssertionError(f"PSC bound violated at length {length}: {min_psc!r}")
    at_min = psc <= min_psc + tol
    if length > 1:
        # binary sequences of length > 1 are never monomials
        if not np.array_equal(psc <= 1 + tol, golay):
            raise AssertionError("PSC = 1 pairs differ from Golay pairs")
    slack = psc - 1
    near = int(np.count_nonzero((slack > tol) & (slack <= 10 * tol)))
    i, j = np.nonzero(at_min)
    argmin = [(_to_seq(x[a]), _to_seq(x[b])) for a, b in zip(i, j)] if keep_argmin else []
    best = (_to_seq(x[i[0]]), _to_seq(x[j[0]]))
    return SearchResult(length, min_psc, int(at_min.sum()), int(golay.sum()),
                        time.perf_counter() - start, "exhaustive", best, argmin, near)


def enumerate_golay_pairs(length: int) -> int:
    """Number of ordered binary Golay pairs of length l."""
    _check_length(length)
    acf = batch_autocorrelation(all_binary(length))
    return int(np.all(acf[:, None, :] + acf[None, :, :] == 0, axis=2).sum())


# -- Monte Carlo -----------------------------------------------------------------

def _mc_block(length: int, seed: int, block: int, count: int) -> np.ndarray:
    rng = np.random.Generator(np.random.Philox(np.random.SeedSequence([seed, block])))
    f = 1 - 2 * rng.integers(0, 2, size=(count, length), dtype=np.int64)
    g = 1 - 2 * rng.integers(0, 2, size=(count, length), dtype=np.int64)
    e2 = float(length * length)
    af = batch_autocorrelation(f)
    ag = batch_autocorrelation(g)
    adf_f = 2 * np.sum(af * af, axis=1) / e2
    adf_g = 2 * np.sum(ag * ag, axis=1) / e2
    cdf = batch_crosscorrelation_energy(f, g) / e2
    return np.stack([adf_f, cdf, np.sqrt(adf_f * adf_g) + cdf], axis=1)


def monte_carlo(length: int, n: int, seed: int = 0, workers: int = 1) -> McStats:
    """Sample means and standard errors of ADF(f), CDF(f, g) and PSC(f, g).

    Pairs are drawn uniformly from binary sequences of the given length.  Block
    k of ``MC_BLOCK`` samples uses a Philox generator keyed by
    ``SeedSequence([seed, k])``; ADF statistics use the first sequence of each pair.
    """
    if length < 1 or n < 1:
        raise ValueError("need length >= 1 and n >= 1")
    jobs = [(k, min(MC_BLOCK, n - k * MC_BLOCK)) for k in range(math.ceil(n / MC_BLOCK))]
    parts = _map(lambda job: _mc_block(length, seed, *job), jobs, workers)
    data = np.concatenate(parts)
    means = data.mean(axis=0)
    if n > 1:
        se = data.std(axis=0, ddof=1) / math.sqrt(n)
    else:
        se = np.full(3, math.nan)
    return McStats(length, n, seed, *map(float, means), *map(float, se))


# -- local search ----------------------------------------------------------------

class _PairState:
    """Pair of +-1 vectors with correlation sums kept up to date under sign flips."""

    def __init__(self, f: np.ndarray, g: np.ndarray):
        self.n = f.size
        self.x = [f.copy(), g.copy()]
        self.acf = [batch_autocorrelation(v[None, :])[0] for v in self.x]
        # cross[k] is C_{f,g}(s) at s = k - (n - 1)
        n = self.n
        self.cross = np.array([np.dot(f[max(0, s):n + min(0, s)], g[max(0, -s):n - max(0, s)])
                               for s in range(-(n - 1), n)], dtype=np.int64)

    def objective(self, acf_f, acf_g, cross) -> float:
        # PSC * n^2
        af = 2 * int(np.dot(acf_f, acf_f))
        ag = 2 * int(np.dot(acf_g, acf_g))
        return math.sqrt(af * ag) + int(np.dot(cross, cross))

    def value(self) -> float:
        return self.objective(self.acf[0], self.acf[1], self.cross) / (self.n * self.n)

    def flip_delta(self, which: int, k: int):
        """New (acf of the flipped sequence, cross) after flipping coordinate k."""
        n = self.n
        v = self.x[which]
        padded = np.zeros(3 * n, dtype=np.int64)
        padded[n:2 * n] = v
        s = np.arange(1, n)
        acf = self.acf[which] - 2 * v[k] * (padded[n + k + s] + padded[n + k - s])
        other = np.zeros(3 * n, dtype=np.int64)
        other[n:2 * n] = self.x[1 - which]
        shifts = np.arange(-(n - 1), n)
        if which == 0:
            # term j = k - s in sum_j f_{j+s} g_j
            cross = self.cross - 2 * v[k] * other[n + k - shifts]
        else:
            cross = self.cross - 2 * v[k] * other[n + k + shifts]
        return acf, cross

    def apply(self, which: int, k: int, acf, cross):
        self.x[which][k] *= -1
        self.acf[which] = acf
        self.cross = cross


def _local_restart(length: int, iterations: int, seed: int, restart: int):
    rng = np.random.Generator(np.random.Philox(np.random.SeedSequence([seed, restart])))
    f = 1 - 2 * rng.integers(0, 2, size=length, dtype=np.int64)
    g = 1 - 2 * rng.integers(0, 2, size=length, dtype=np.int64)
    state = _PairState(f, g)
    current = state.objective(state.acf[0], state.acf[1], state.cross)
    evals = 0
    improved = True
    while improved and evals < iterations:
        improved = False
        for coord in rng.permutation(2 * length):
            if evals >= iterations:
                break
            which, k = divmod(int(coord), length)
            acf, cross = state.flip_delta(which, k)
            acfs = (acf, state.acf[1]) if which == 0 else (state.acf[0], acf)
            cand = state.objective(*acfs, cross)
            evals += 1
            if cand < current - 1e-9:
                state.apply(which, k, acf, cross)
                current = cand
                improved = True
                break
    return state.value(), _to_seq(state.x[0]), _to_seq(state.x[1])


def local_search_min_psc(length: int, iterations: int = 1000, restarts: int = 10, seed: int = 0,
                         tol: float = DEFAULT_TOL, workers: int = 1) -> SearchResult:
    """Restarted first-improvement hill climbing on PSC over binary pairs.

    Each restart starts from a random pair and flips one of the 2l signs at a
    time, taking the first flip that lowers PSC, until no flip helps or
    ``iterations`` candidate flips have been evaluated.  ``argmin_count`` is the
    number of restarts that ended at the best value; ``golay_count`` the number
    that ended at a Golay pair.
    """
    if length < 2:
        raise ValueError("local search needs length >= 2")
    start = time.perf_counter()
    runs = _map(lambda r: _local_restart(length, iterations, seed, r), range(restarts), workers)
    best_val = min(v for v, _, _ in runs)
    best = next((f, g) for v, f, g in runs if v == best_val)
    argmin = [(f, g) for v, f, g in runs if v <= best_val + tol]
    golay = sum(1 for _, f, g in runs if is_golay_pair(f, g, tol))
    return SearchResult(length, float(best_val), len(argmin), golay,
                        time.perf_counter() - start, "local", best, argmin)
