import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from padicval.errors import (
    NotARootError,
    NotSimpleRootError,
    PolynomialVanishesModP,
    ValuationOfZeroError,
)
from padicval.padic import (
    Prime,
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
from padicval.poly import IntPolynomial

Q1 = IntPolynomial([3, 0, 0, 2, 0, 1])  # x^5+2x^3+3
P2, P3, P5, P7 = Prime(2), Prime(3), Prime(5), Prime(7)


class TestPrime:
    def test_rejects_composites(self):
        for n in (-3, 0, 1, 4, 9, 91, 561):
            with pytest.raises(ValueError):
                Prime(n)

    def test_accepts_primes(self):
        for n in (2, 3, 5, 48611, 2**61 - 1):
            assert Prime(n).value == n

    def test_is_prime_against_sieve(self):
        sieve = [True] * 5000
        sieve[0] = sieve[1] = False
        for i in range(2, 71):
            if sieve[i]:
                for j in range(i * i, 5000, i):
                    sieve[j] = False
        for n in range(5000):
            assert is_prime(n) == sieve[n]

    def test_primes_first(self):
        ps = primes_first(5000)
        assert len(ps) == 5000
        assert ps[0].value == 2
        assert ps[-1].value == 48611


class TestIntValuation:
    def test_examples(self):
        assert int_valuation(50, P5) == 2
        assert int_valuation(10, P3) == 0
        assert int_valuation(-243, P3) == 5

    def test_zero_raises(self):
        with pytest.raises(ValuationOfZeroError):
            int_valuation(0, P5)

    @given(
        x=st.integers(-10**9, 10**9).filter(bool),
        y=st.integers(-10**9, 10**9).filter(bool),
        p=st.sampled_from([2, 3, 5, 7, 11, 13]),
    )
    def test_multiplicative(self, x, y, p):
        p = Prime(p)
        assert int_valuation(x * y, p) == int_valuation(x, p) + int_valuation(y, p)


class TestDigitSum:
    def test_examples(self):
        assert digit_sum(0, P7) == 0
        assert digit_sum(1024, P2) == 1
        assert digit_sum(100, P3) == 4  # 10201 base 3


class TestLegendre:
    def test_against_factorial_trial_division(self):
        fact = 1
        for i in range(1, 11):
            fact *= i
        assert legendre_factorial_valuation(10, P2) == int_valuation(fact, P2) == 8

    def test_zero(self):
        assert legendre_factorial_valuation(0, P7) == 0

    def test_power_of_two(self):
        assert legendre_factorial_valuation(1024, P2) == 1023

    def test_floor_sum_agreement(self):
        for pv in (2, 3, 5, 7, 11, 47):
            p = Prime(pv)
            for n in range(0, 2000):
                total, power = 0, pv
                while power <= n:
                    total += n // power
                    power *= pv
                assert legendre_factorial_valuation(n, p) == total


class TestRootsModP:
    def test_example1(self):
        assert roots_mod_p(Q1, P5) == [3, 4]

    def test_no_roots(self):
        assert roots_mod_p(IntPolynomial([1, 0, 1]), P3) == []

    def test_x3_plus_1_mod_7(self):
        assert roots_mod_p(IntPolynomial([1, 0, 0, 1]), P7) == [3, 5, 6]

    def test_vanishing_mod_p(self):
        with pytest.raises(PolynomialVanishesModP):
            roots_mod_p(IntPolynomial([3, 6, 9]), P3)

    def test_gcd_path_equals_scan(self):
        rng = random.Random(20260823)
        primes = [p for p in primes_first(303) if p.value <= 2000 and p.value > 2]
        for _ in range(120):
            p = rng.choice(primes)
            q = IntPolynomial([rng.randint(-60, 60) for _ in range(rng.randint(2, 9))])
            try:
                scan = roots_mod_p(q, p, scan_threshold=10**9)
            except PolynomialVanishesModP:
                continue
            fast = roots_mod_p(q, p, scan_threshold=3)
            assert fast == scan, (q, p)

    def test_large_prime(self):
        p = Prime(104729)
        got = roots_mod_p(IntPolynomial([1, 0, 0, 1]), p)
        assert all(IntPolynomial([1, 0, 0, 1]).evaluate_mod(b, p.value) == 0 for b in got)
        from math import gcd

        assert len(got) == gcd(3, p.value - 1)


class TestClassifyPrime:
    def test_hensel_example1(self):
        cls = classify_prime(Q1, P5)
        assert cls.verdict is Verdict.HENSEL
        assert cls.roots == (3, 4)
        assert cls.non_hensel_roots == ()
        assert cls.z_p == 2

    def test_non_hensel_p3(self):
        assert classify_prime(Q1, P3).verdict is Verdict.NON_HENSEL

    def test_example3_p13(self):
        q = IntPolynomial([1, 0, 0, 1, 0, 1, 0, 0, 1])
        cls = classify_prime(q, Prime(13))
        assert cls.verdict is Verdict.NON_HENSEL
        assert 12 in cls.non_hensel_roots

    def test_no_roots_verdict(self):
        assert classify_prime(IntPolynomial([1, 0, 1]), P3).verdict is Verdict.NO_ROOTS

    def test_invariant_under_adding_p_multiple(self):
        rng = random.Random(7)
        for _ in range(40):
            q = IntPolynomial([rng.randint(-30, 30) for _ in range(rng.randint(2, 7))])
            p = Prime(rng.choice([2, 3, 5, 7, 11, 13]))
            shift = IntPolynomial([rng.randint(-5, 5) for _ in range(rng.randint(1, 7))])
            try:
                a = classify_prime(q, p)
                b = classify_prime(q + p.value * shift, p)
            except PolynomialVanishesModP:
                continue
            assert a.verdict == b.verdict
            assert a.roots == b.roots

    def test_serialization(self):
        payload = classify_prime(Q1, P5).to_json()
        assert payload == {"p": 5, "verdict": "hensel", "roots": [3, 4], "non_hensel_roots": []}


class TestHenselLift:
    def test_lift_examples_brute_force(self):
        q = IntPolynomial([1, 0, 1])
        # independent oracle: exhaustive search over residues congruent to 2 mod 5
        for k, modulus in ((1, 25), (2, 125)):
            expected = [r for r in range(2, modulus, 5) if q.evaluate(r) % modulus == 0]
            assert len(expected) == 1
            root = hensel_lift(q, P5, 2, k)
            assert root.truncation_value(k) == expected[0]

    def test_digits_values(self):
        root = hensel_lift(IntPolynomial([1, 0, 1]), P5, 2, 2)
        assert root.digits == (2, 1, 2)
        assert [root.truncation_value(s) for s in range(3)] == [2, 7, 57]

    def test_minus_one_all_digits(self):
        root = hensel_lift(IntPolynomial([1, 1]), P7, 6, 3)
        assert root.digits == (6, 6, 6, 6)
        assert root.truncation_value(3) == 7**4 - 1

    def test_not_a_root(self):
        with pytest.raises(NotARootError):
            hensel_lift(IntPolynomial([1, 0, 1]), P5, 1, 3)

    def test_not_simple(self):
        q = IntPolynomial([1, 0, 0, 1])  # x^3+1 has a triple root mod 3
        with pytest.raises(NotSimpleRootError):
            hensel_lift(q, P3, 2, 3)

    def test_truncation_index_range(self):
        root = hensel_lift(IntPolynomial([1, 0, 1]), P5, 2, 2)
        with pytest.raises(IndexError):
            root.truncation_value(3)

    def test_prefix_consistency(self):
        q = Q1
        root = hensel_lift(q, P5, 3, 8)
        for s in range(8):
            mod = 5 ** (s + 1)
            assert root.truncation_value(s + 1) % mod == root.truncation_value(s)
            assert q.evaluate(root.truncation_value(s)) % mod == 0

    def test_serialization(self):
        root = hensel_lift(IntPolynomial([1, 0, 1]), P5, 2, 2)
        assert root.to_json() == {"p": 5, "digits": [2, 1, 2]}
