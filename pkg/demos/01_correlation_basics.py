# Aperiodic correlation spectra, demerit factors and the PSC of a few pairs.
import numpy as np

from golaycorr import (
    adf,
    autocorrelation_spectrum,
    cdf,
    demerit_report,
    parse_sequence,
    spectrum_fast,
    spectrum_naive,
)

# sequences are parsed from the same text format the CLI reads
f = parse_sequence("bin:+++-")
g = parse_sequence("bin:++-+")

# autocorrelation: peak at s = 0 equals the energy, sidelobes elsewhere
print("C_ff:", autocorrelation_spectrum(f).as_dict())
print("C_gg:", autocorrelation_spectrum(g).as_dict())

# the sidelobes cancel, so this is a Golay pair and PSC hits its floor of 1
r = demerit_report(f, g)
print(f"ADF(f)={r.adf_f}  ADF(g)={r.adf_g}  CDF={r.cdf}  PSC={r.psc}")

# a pair of equal sequences sits on the opposite bound instead
print("PSC(f, f) =", demerit_report(f, f).psc, " upper slack", demerit_report(f, f).upper_slack)

# complex inputs go through floating point; FFT and direct sums agree
rng = np.random.default_rng(0)
a = rng.standard_normal(500) + 1j * rng.standard_normal(500)
b = rng.standard_normal(300) + 1j * rng.standard_normal(300)
dev = np.max(np.abs(spectrum_fast(a, b).values - spectrum_naive(a, b).values))
print(f"fast vs naive max deviation: {dev:.2e}")
print(f"ADF(a)={adf(a):.4f}  CDF(a,b)={cdf(a, b):.4f}")
