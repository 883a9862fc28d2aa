"""Goldbach-pair counts, divisor bands, and density-based pair estimators.

Exact counting rests on a bit-packed segmented sieve; the estimator chain
(EGP, relative probability factors, alpha, IGP) quantifies how each small
prime thins the candidate pairs of an even number.  Hot kernels run in a
compiled extension when available, with a numpy fallback selected at import
(see :mod:`gbcomet.backend`).
"""

from .analysis import BandStats, ErrorReport, band_ratio, band_stats, error_report
from .backend import BACKEND
from .errors import DomainError, FormatError, NumericError, OutOfRangeError
from .estimator import (
    AlphaProfile,
    B2Constants,
    TrpfCurve,
    alpha,
    alpha_profile,
    egp,
    egp_b2_closed,
    igp,
    integral_2f,
    integral_3f,
    mertens_partial,
    rough_density,
    rpf_2f,
    trpf,
    trpf_curve,
)
from .goldbach import (
    BandSignature,
    GpRecord,
    band_from_str,
    band_signature,
    band_to_str,
    count_gp,
    gp_pairs,
    scan,
    sieving_primes,
)
from .numerics import CONSTANTS, E_GAMMA, GAMMA, Constants, li, li_offset, quadrature
from .primes import (
    PrimalityTable,
    SimulatedPrimeSeq,
    build_sieve,
    is_rough,
    load_cache,
    log_primorial,
    primes_in,
    primorial,
    save_cache,
    simulated_primes,
)

__version__ = "0.1.0"

__all__ = [
    "AlphaProfile", "B2Constants", "BACKEND", "BandSignature", "BandStats",
    "CONSTANTS", "Constants", "DomainError", "E_GAMMA", "ErrorReport",
    "FormatError", "GAMMA", "GpRecord", "NumericError", "OutOfRangeError",
    "PrimalityTable", "SimulatedPrimeSeq", "TrpfCurve", "alpha",
    "alpha_profile", "band_from_str", "band_ratio", "band_signature",
    "band_stats", "band_to_str", "build_sieve", "count_gp", "egp",
    "egp_b2_closed", "error_report", "gp_pairs", "igp", "integral_2f",
    "integral_3f", "is_rough", "li", "li_offset", "load_cache",
    "log_primorial", "mertens_partial", "primes_in", "primorial",
    "quadrature", "rough_density", "rpf_2f", "save_cache", "scan",
    "sieving_primes", "simulated_primes", "trpf", "trpf_curve",
]
