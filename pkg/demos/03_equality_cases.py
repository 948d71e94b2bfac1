# The four equality cases of the PSC bound.
import numpy as np

from golaycorr import classify_equality, construct_for_length, demerit_report

cases = {
    "monomial": ([0, 0, 3j], [1, 2, -1]),
    "Golay pair": ([1, 1], [1, -1]),
    "Golay after scaling g": ([1, 1], [2, -2]),
    "equal autocorrelations": ([1, 1, -1], [1, 1, -1]),
    "generic": ([1, 1, 1, -1], [1, 1]),
}
for name, (f, g) in cases.items():
    r = demerit_report(f, g)
    print(f"{name:24s} PSC={r.psc:.6f}  lower slack={r.lower_slack:.3g}  "
          f"upper slack={r.upper_slack:.3g}  -> {classify_equality(f, g)}")

# a length-520 Golay pair, rescaled and phase-rotated: the scale is recovered
f, g = construct_for_length(520)
rng = np.random.default_rng(1)
lam = 3.7
ff = np.exp(1j * rng.uniform(0, 6.28)) * np.asarray(f.coefficients)
gg = np.exp(1j * rng.uniform(0, 6.28)) * np.asarray(g.coefficients) / lam
print("recovered scale:", classify_equality(ff, gg).lam)
