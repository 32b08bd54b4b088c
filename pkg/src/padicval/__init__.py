"""Prime valuations of product sequences t_n = Q(n) * t_{n-1}."""

from .analysis import (
    AllResidues,
    ErrorSeries,
    SlopeReport,
    asymptotic_zero_number,
    closed_form_slope_xp_pm1,
    composite_slope,
    empirical_slope,
    error_series,
    exact_slope,
    nu_Sp,
    nu_Tp,
    nu_xp_minus_1,
    nu_xp_plus_1,
    predicted_slope_hensel,
    root_count_xp_plus_1,
    scan_primes,
    slope_report,
)
from .errors import (
    DepthExceededError,
    HasIntegerRootError,
    NotARootError,
    NotHenselPrimeError,
    NotSimpleRootError,
    PadicValError,
    ParseError,
    PolynomialVanishesModP,
    ValuationOfZeroError,
    ZeroPolynomialError,
)
from .padic import (
    HenselRoot,
    Prime,
    PrimeClassification,
    Verdict,
    classify_prime,
    digit_sum,
    hensel_lift,
    int_valuation,
    is_prime,
    legendre_factorial_valuation,
    primes_first,
    roots_mod_p,
)
from .parser import parse_poly
from .poly import IntPolynomial, format_poly, integer_poly_gcd, nonneg_integer_roots
from .recurrence import (
    RecurrenceSpec,
    ValuationSeries,
    count_congruent,
    make_spec,
    max_power_index,
    valuation_series,
    valuation_tn_direct,
    valuation_tn_fast,
)

__version__ = "0.1.0"
