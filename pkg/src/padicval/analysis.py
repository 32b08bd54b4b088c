"""Asymptotics of the valuation sequence.

Slopes and asymptotic zero numbers are exact rationals (stdlib Fraction),
never floats.  Hensel primes get the closed form z_p/(p-1); non-Hensel
primes are handled by a branch recursion that mechanizes the hand steps of
the worked cases: substitute i = p*k + b at a non-simple root b, factor
out the minimal coefficient power of p, and recurse.
"""

from __future__ import annotations

import csv
import io
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import DepthExceededError, NotHenselPrimeError, PolynomialVanishesModP, ValuationOfZeroError
from .padic import (
    Prime,
    PrimeClassification,
    Verdict,
    classify_prime,
    int_valuation,
    primes_first,
    roots_mod_p,
)
from .poly import IntPolynomial, format_poly
from .recurrence import RecurrenceSpec, valuation_tn_direct, valuation_tn_fast

DEFAULT_DEPTH_CAP = 64


def predicted_slope_hensel(q: IntPolynomial, p: Prime) -> Fraction:
    """Per-n slope z_p/(p-1) at a Hensel (or rootless) prime."""
    cls = classify_prime(q, p)
    if cls.verdict is Verdict.NON_HENSEL:
        raise NotHenselPrimeError(
            f"{p} has non-simple roots {list(cls.non_hensel_roots)} for {q}"
        )
    return Fraction(cls.z_p, p.value - 1)


def _min_coeff_valuation(q: IntPolynomial, p: Prime) -> int:
    return min(int_valuation(c, p) for c in q.coeffs if c != 0)


def _expected_valuation(
    q: IntPolynomial, p: Prime, depth_cap: int, chain: tuple[int, ...]
) -> Fraction:
    if depth_cap <= 0:
        raise DepthExceededError(p.value, chain)
    pv = p.value
    roots = roots_mod_p(q, p)
    dq = q.derivative()
    total = Fraction(0)
    for b in roots:
        if dq.evaluate_mod(b, pv) != 0:
            # simple root: densities 1/p + 1/p^2 + ... = 1/(p-1)
            total += Fraction(1, pv - 1)
        else:
            r = q.affine_substitute(pv, b)
            m = _min_coeff_valuation(r, p)
            reduced = r.exact_scalar_div(pv**m)
            inner = _expected_valuation(reduced, p, depth_cap - 1, chain + (b,))
            total += Fraction(1, pv) * (m + inner)
    return total


def exact_slope(
    q: IntPolynomial, p: Prime, depth_cap: int = DEFAULT_DEPTH_CAP
) -> Fraction:
    """Exact per-n slope E = lim valuation(t_n)/n, as a fraction.

    Non-Hensel primes are handled by the residue-branch recursion.  A
    factor repeated over Z would stall that recursion, so repeated
    factors are first peeled off via gcd(Q, Q'): slopes add over any
    pointwise factorization, and each peeled layer is squarefree.  The
    depth cap remains as a backstop and surfaces as DepthExceededError
    naming the residue chain.
    """
    from .poly import integer_poly_gcd, poly_divexact

    rep = integer_poly_gcd(q, q.derivative())
    if rep.degree >= 1:
        return exact_slope(poly_divexact(q, rep), p, depth_cap) + exact_slope(
            rep, p, depth_cap
        )
    return _expected_valuation(q, p, depth_cap, ())


def asymptotic_zero_number(
    q: IntPolynomial, p: Prime, depth_cap: int = DEFAULT_DEPTH_CAP
) -> Fraction:
    """N_p = (p-1) * E, the limit of (p-1)*valuation/n."""
    return (p.value - 1) * exact_slope(q, p, depth_cap)


def empirical_slope(spec: RecurrenceSpec, p: Prime, n: int) -> Fraction:
    """(p-1)*valuation(t_n)/n exactly, at finite n.

    Uses the counting engine when the prime qualifies, else the direct
    oracle.
    """
    cls = classify_prime(spec.poly, p)
    if cls.verdict is Verdict.NON_HENSEL:
        v = valuation_tn_direct(spec, p, n)
    else:
        v = valuation_tn_fast(spec, p, n, classification=cls)
    return Fraction((p.value - 1) * v, n)


@dataclass(frozen=True)
class ErrorSeries:
    p: Prime
    z_p: int
    err: tuple[int, ...]     # err[k] for n = k+1: z_p*n - (p-1)*valuation
    relerr: tuple[int, ...]  # first differences, with err[0] relative to 0

    def to_csv(self) -> str:
        out = io.StringIO()
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["n", "err", "relerr"])
        for k in range(len(self.err)):
            w.writerow([k + 1, self.err[k], self.relerr[k]])
        return out.getvalue()

    def to_json(self) -> dict:
        return {
            "p": self.p.value,
            "z_p": self.z_p,
            "err": list(self.err),
            "relerr": list(self.relerr),
        }


def error_series(spec: RecurrenceSpec, p: Prime, n_max: int) -> ErrorSeries:
    """Normalized error z_p*n - (p-1)*valuation and its first difference."""
    from .recurrence import valuation_series

    zp = len(roots_mod_p(spec.poly, p))
    series = valuation_series(spec, p, n_max)
    pm1 = p.value - 1
    err = tuple(zp * (k + 1) - pm1 * v for k, v in enumerate(series.values))
    relerr = tuple(
        err[k] - (err[k - 1] if k > 0 else 0) for k in range(len(err))
    )
    return ErrorSeries(p, zp, err, relerr)


@dataclass(frozen=True)
class AllResidues:
    """Marker for primes dividing every coefficient: all residues are roots."""

    p: Prime

    def to_json(self) -> dict:
        return {"p": self.p.value, "verdict": "all_residues"}


ScanResult = list[tuple[Prime, "PrimeClassification | AllResidues"]]


def _scan_one(args) -> "PrimeClassification | AllResidues":
    q, p, threshold = args
    try:
        return classify_prime(q, p, threshold)
    except PolynomialVanishesModP:
        return AllResidues(p)


def scan_primes(
    q: IntPolynomial,
    count: int,
    scan_threshold: int | None = None,
    workers: int = 1,
) -> ScanResult:
    """Classify q at each of the first `count` primes, in prime order.

    With workers > 1 the classifications run in a process pool; output is
    identical to the sequential run.
    """
    from .padic import SCAN_THRESHOLD

    threshold = SCAN_THRESHOLD if scan_threshold is None else scan_threshold
    primes = primes_first(count)
    jobs = [(q, p, threshold) for p in primes]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_scan_one, jobs, chunksize=64))
    else:
        results = [_scan_one(j) for j in jobs]
    return list(zip(primes, results))


@dataclass(frozen=True)
class SlopeReport:
    p: Prime
    classification: PrimeClassification
    predicted: "Fraction | None"    # per-n slope of the valuation
    n_p: "Fraction | None"          # asymptotic zero number
    empirical: tuple[tuple[int, Fraction], ...]

    def to_json(self) -> dict:
        return {
            "p": self.p.value,
            "classification": self.classification.to_json(),
            "slope": _frac_str(self.predicted) if self.predicted is not None else None,
            "N_p": _frac_str(self.n_p) if self.n_p is not None else None,
            "empirical": [[n, _frac_str(v)] for n, v in self.empirical],
        }


def _frac_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def slope_report(
    spec: RecurrenceSpec,
    p: Prime,
    sample_points: tuple[int, ...] = (),
    depth_cap: int = DEFAULT_DEPTH_CAP,
) -> SlopeReport:
    q = spec.poly
    cls = classify_prime(q, p)
    try:
        e = exact_slope(q, p, depth_cap)
        predicted: Fraction | None = e
        n_p: Fraction | None = (p.value - 1) * e
    except DepthExceededError:
        predicted = None
        n_p = None
    empirical = tuple((n, empirical_slope(spec, p, n)) for n in sample_points)
    return SlopeReport(p, cls, predicted, n_p, empirical)


# -- closed forms for x^p +/- 1 and the cyclotomic-style sums -------------


def nu_xp_minus_1(x: int, p: Prime) -> int:
    """Valuation of x^p - 1 at odd p: 0 unless x = 1 mod p, else 1 + v(x-1)."""
    if x == 1:
        raise ValuationOfZeroError("x = 1 makes x^p - 1 zero")
    if x % p.value != 1:
        return 0
    return 1 + int_valuation(x - 1, p)


def nu_xp_plus_1(x: int, p: Prime) -> int:
    """Valuation of x^p + 1: 0 unless x = -1 mod p, else 1 + v(x+1)."""
    if x == -1:
        raise ValuationOfZeroError("x = -1 makes x^p + 1 zero")
    if x % p.value != p.value - 1:
        return 0
    return 1 + int_valuation(x + 1, p)


def nu_Tp(x: int, p: Prime) -> int:
    """Valuation of 1 + x + ... + x^(p-1) at odd p: 1 iff x = 1 mod p."""
    if x == 1:
        raise ValueError("x = 1 is excluded")
    return 1 if x % p.value == 1 else 0


def nu_Sp(x: int, p: Prime) -> int:
    """Valuation of the alternating sum x^(p-1) - ... + 1 at odd p."""
    if x == -1:
        raise ValueError("x = -1 is excluded")
    return 1 if x % p.value == p.value - 1 else 0


def root_count_xp_plus_1(p: Prime, q: Prime) -> int:
    """Number of roots of x^p + 1 mod q: gcd(p, q-1)."""
    return gcd(p.value, q.value - 1)


def closed_form_slope_xp_pm1(p: Prime, sign: int, q: Prime) -> Fraction:
    """Per-n slope of the valuation of t_n(x^p + sign) at the prime q.

    At q = p (p odd) the slope is (2p-1)/(p(p-1)); otherwise it is
    gcd(p, q-1)/(q-1).
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    pv = p.value
    if q.value == pv:
        if pv == 2:
            raise ValueError("the q = p closed form requires p odd")
        return Fraction(2 * pv - 1, pv * (pv - 1))
    return Fraction(gcd(pv, q.value - 1), q.value - 1)


def composite_slope(
    factors: list[tuple[IntPolynomial, int]],
    p: Prime,
    depth_cap: int = DEFAULT_DEPTH_CAP,
) -> Fraction:
    """Slope of a product given its factorization: sum of per-factor slopes.

    The valuation of a product of multipliers is the sum over factors, so
    a repeated factor is handled by its multiplicity even though the
    expanded product would stall the branch recursion.
    """
    if not factors:
        raise ValueError("factor list must be nonempty")
    total = Fraction(0)
    for poly, mult in factors:
        total += mult * exact_slope(poly, p, depth_cap)
    return total
