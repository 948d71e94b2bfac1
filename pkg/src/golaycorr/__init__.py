"""Aperiodic correlation, the Pursley-Sarwate criterion and Golay pairs."""

from .sequences import (
    Sequence,
    SequenceClass,
    SequenceParseError,
    ZeroSequenceError,
    as_sequence,
    classify,
    energy,
    format_sequence,
    is_monomial,
    normalize,
    parse_sequence,
    read_sequences,
)
from .correlation import (
    CorrelationSpectrum,
    autocorrelation_inner,
    autocorrelation_spectrum,
    crosscorrelation_at,
    energy_identity_residual,
    spectrum,
    spectrum_fast,
    spectrum_naive,
)
from .criteria import (
    DemeritReport,
    EqualityCase,
    adf,
    cdf,
    classify_equality,
    demerit_report,
    find_golay_scaling,
    psc,
)
from .golay import (
    GolayCertificate,
    GolayError,
    InadmissibleLengthError,
    construct_for_length,
    double,
    is_golay_pair,
    seed_pair,
    turyn_product,
)

__version__ = "0.1.0"
