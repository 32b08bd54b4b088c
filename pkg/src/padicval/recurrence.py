"""Valuation engines for the product sequence t_n = Q(n) * t_{n-1}.

The sequence itself is never materialized (it has Theta(n log n) digits);
every engine works on per-term valuations.  The direct engine is the
oracle: evaluate Q at each index and strip powers of p.  The fast engine
counts indices in congruence classes of lazily lifted roots and never
touches individual terms.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

from .errors import HasIntegerRootError, NotHenselPrimeError, ZeroPolynomialError
from .padic import Prime, Verdict, classify_prime, int_valuation, roots_mod_p
from .poly import IntPolynomial, format_poly, nonneg_integer_roots


@dataclass(frozen=True)
class RecurrenceSpec:
    """Q plus the start index n0 (t_{n0} = 1 by convention).

    The multipliers are Q(n0+1), Q(n0+2), ...; the start index must sit
    at or beyond every nonnegative integer root of Q so no multiplier
    vanishes.
    """

    poly: IntPolynomial
    start_index: int = 0


def make_spec(q: IntPolynomial, auto_shift: bool = True) -> RecurrenceSpec:
    if q.is_zero:
        raise ZeroPolynomialError("recurrence multiplier must be nonzero")
    roots = nonneg_integer_roots(q)
    positive = {r for r in roots if r >= 1}
    if not positive:
        return RecurrenceSpec(q, 0)
    if not auto_shift:
        raise HasIntegerRootError(
            f"Q vanishes at {sorted(positive)}; enable auto_shift or shift manually"
        )
    return RecurrenceSpec(q, max(positive))


def count_congruent(n: int, r: int, m: int, lo: int = 0) -> int:
    """#{i : lo < i <= lo + n, i = r mod m}, by closed form."""
    if m < 1 or not 0 <= r < m:
        raise ValueError(f"need m >= 1 and 0 <= r < m, got r={r}, m={m}")
    return (lo + n - r) // m - (lo - r) // m


def valuation_tn_direct(spec: RecurrenceSpec, p: Prime, n: int) -> int:
    """Per-term oracle: sum of valuations of the n multipliers."""
    if n < 1:
        raise ValueError("n must be >= 1")
    q = spec.poly
    pv = p.value
    lo = spec.start_index
    total = 0
    for i in range(lo + 1, lo + n + 1):
        v = q.evaluate(i)
        while v % pv == 0:
            total += 1
            v //= pv
    return total


def valuation_tn_fast(
    spec: RecurrenceSpec, p: Prime, n: int, classification=None
) -> int:
    """Exact valuation by congruence counting over lazily lifted roots.

    Requires every root of Q mod p to be simple: then the valuation of a
    multiplier Q(i) equals the p-adic distance of i to the nearest lifted
    root, and the term sum collapses to counts of indices in nested
    congruence classes.  Each root is lifted one digit at a time, until
    its congruence class no longer meets the window.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    q = spec.poly
    pv = p.value
    cls = classification if classification is not None else classify_prime(q, p)
    if cls.verdict is Verdict.NO_ROOTS:
        return 0
    if cls.verdict is not Verdict.HENSEL:
        raise NotHenselPrimeError(
            f"{pv} is not a Hensel prime for {q}; use the direct engine"
        )
    dq = q.derivative()
    lo = spec.start_index
    total = 0
    for b in cls.roots:
        dinv = pow(dq.evaluate_mod(b, pv), -1, pv)
        gamma = b
        ps = pv  # p^s, the modulus at the current level
        while True:
            c = count_congruent(n, gamma % ps, ps, lo)
            if c == 0:
                break
            total += c
            mod = ps * pv
            t = q.evaluate_mod(gamma, mod) // ps
            gamma += ((-t * dinv) % pv) * ps
            ps = mod
    return total


@dataclass(frozen=True)
class ValuationSeries:
    p: Prime
    spec: RecurrenceSpec
    values: tuple[int, ...]  # values[k] is the valuation of t_{k+1}

    def __len__(self) -> int:
        return len(self.values)

    def to_csv(self) -> str:
        out = io.StringIO()
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["n", "valuation"])
        for k, v in enumerate(self.values, start=1):
            w.writerow([k, v])
        return out.getvalue()

    def to_json(self) -> dict:
        return {
            "p": self.p.value,
            "poly": format_poly(self.spec.poly),
            "n0": self.spec.start_index,
            "values": list(self.values),
        }


def valuation_series(spec: RecurrenceSpec, p: Prime, n_max: int) -> ValuationSeries:
    """Prefix sums of the per-term valuations, one multiplier per step.

    Indices whose residue mod p is not a root contribute nothing and are
    skipped without an exact evaluation.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    q = spec.poly
    pv = p.value
    lo = spec.start_index
    try:
        root_set = set(roots_mod_p(q, p))
    except Exception:
        root_set = None  # Q = 0 mod p: every index contributes
    values = []
    acc = 0
    for i in range(lo + 1, lo + n_max + 1):
        if root_set is None or (i % pv) in root_set:
            acc += int_valuation(q.evaluate(i), p)
        values.append(acc)
    return ValuationSeries(p, spec, tuple(values))


def max_power_index(spec: RecurrenceSpec, p: Prime, n: int) -> int:
    """Largest e with p^e dividing some multiplier in the window (r_n)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    q = spec.poly
    pv = p.value
    try:
        root_set = set(roots_mod_p(q, p))
    except Exception:
        root_set = None
    if root_set is not None and not root_set:
        return 0
    lo = spec.start_index
    best = 0
    for i in range(lo + 1, lo + n + 1):
        if root_set is None or (i % pv) in root_set:
            best = max(best, int_valuation(q.evaluate(i), p))
    return best
