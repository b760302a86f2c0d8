"""Exact arithmetic for monomial ideals, specialized fast paths for the
coordinate-axes ideal, membership certificates, and containment surveys."""

from .axes import (
    FactorizationCertificate,
    axes_ideal,
    containment_bound,
    greedy_certificate,
    member_ordinary_fast,
    member_symbolic_fast,
    normalize,
    verify_certificate,
)
from .errors import (
    AxesIdealsError,
    CertificateError,
    GuardRefusal,
    InputError,
    InternalError,
)
from .ideals import (
    MonomialIdeal,
    PrimeSupport,
    format_ideal,
    intersect_all,
    load_ideal,
    minimal_primes,
    minimalize,
    parse_ideal,
    prime_power_ideal,
    prime_power_member,
    save_ideal,
    symbolic_power,
    unit_ideal,
    zero_ideal,
)
from .monomials import divides, format_vector, lcm, multiply, parse_monomial
from .oracle import (
    DEFAULT_GUARD,
    ResourceGuard,
    SurveyRow,
    check_engine_agreement,
    check_primary_decomposition,
    check_symbolic_lemma,
    containment_threshold,
    factor_witness,
    member_bruteforce,
    survey,
    survey_csv,
    survey_json,
    threshold_with_witness,
)

__version__ = "0.1.0"

__all__ = [
    "AxesIdealsError",
    "CertificateError",
    "DEFAULT_GUARD",
    "FactorizationCertificate",
    "GuardRefusal",
    "InputError",
    "InternalError",
    "MonomialIdeal",
    "PrimeSupport",
    "ResourceGuard",
    "SurveyRow",
    "axes_ideal",
    "check_engine_agreement",
    "check_primary_decomposition",
    "check_symbolic_lemma",
    "containment_bound",
    "containment_threshold",
    "divides",
    "factor_witness",
    "format_ideal",
    "format_vector",
    "greedy_certificate",
    "intersect_all",
    "lcm",
    "load_ideal",
    "member_bruteforce",
    "member_ordinary_fast",
    "member_symbolic_fast",
    "minimal_primes",
    "minimalize",
    "multiply",
    "normalize",
    "parse_ideal",
    "parse_monomial",
    "prime_power_ideal",
    "prime_power_member",
    "save_ideal",
    "survey",
    "survey_csv",
    "survey_json",
    "symbolic_power",
    "threshold_with_witness",
    "unit_ideal",
    "verify_certificate",
    "zero_ideal",
    "__version__",
]
