"""Exact integer polynomial arithmetic.

Polynomials are immutable, stored low-degree first, and always trimmed so
that the top stored coefficient is nonzero (the zero polynomial is the
empty tuple).  Everything here is arbitrary precision; performance
shortcuts live in the recurrence engines, not in this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt
from typing import Iterable, Iterator

from .errors import ZeroPolynomialError


@dataclass(frozen=True)
class IntPolynomial:
    coeffs: tuple[int, ...]  # coeffs[i] multiplies x**i; trimmed

    def __init__(self, coeffs: Iterable[int] = ()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    # -- basic structure ---------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree of a nonzero polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        if self.is_zero:
            raise ZeroPolynomialError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __bool__(self) -> bool:
        return not self.is_zero

    def __iter__(self) -> Iterator[int]:
        return iter(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(self[i] + other[i] for i in range(n))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(self[i] - other[i] for i in range(n))

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self.coeffs)

    def __mul__(self, other: "IntPolynomial | int") -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial(c * other for c in self.coeffs)
        if self.is_zero or other.is_zero:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "IntPolynomial":
        if e < 0:
            raise ValueError("negative exponent")
        result = IntPolynomial([1])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- evaluation --------------------------------------------------------

    def evaluate(self, x: int) -> int:
        """Exact value at an integer point, Horner order."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def evaluate_mod(self, x: int, m: int) -> int:
        """Value mod m in [0, m-1]; intermediates stay reduced mod m."""
        if m < 2:
            raise ValueError(f"modulus must be >= 2, got {m}")
        acc = 0
        x %= m
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % m
        return acc

    # -- calculus / substitution -------------------------------------------

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def affine_substitute(self, a: int, b: int) -> "IntPolynomial":
        """The polynomial R with R(k) = self(a*k + b), computed exactly."""
        inner = IntPolynomial([b, a])
        result = IntPolynomial()
        for c in reversed(self.coeffs):
            result = result * inner + IntPolynomial([c])
        return result

    # -- content and normalization -----------------------------------------

    def content(self) -> int:
        """gcd of the coefficients (0 for the zero polynomial)."""
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def primitive_part(self) -> "IntPolynomial":
        """self divided by its content, leading coefficient made positive."""
        if self.is_zero:
            return self
        g = self.content()
        if self.leading < 0:
            g = -g
        return IntPolynomial(c // g for c in self.coeffs)

    def exact_scalar_div(self, d: int) -> "IntPolynomial":
        """Divide every coefficient by d; each division must be exact."""
        out = []
        for c in self.coeffs:
            q, r = divmod(c, d)
            if r:
                raise ValueError(f"coefficient {c} not divisible by {d}")
            out.append(q)
        return IntPolynomial(out)

    # -- text form ---------------------------------------------------------

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)!r})"


X = IntPolynomial([0, 1])
ONE = IntPolynomial([1])
ZERO = IntPolynomial()


def format_poly(q: IntPolynomial) -> str:
    """Canonical text form: descending degree, e.g. "x^5+2*x^3+3"."""
    if q.is_zero:
        return "0"
    parts: list[str] = []
    for k in range(q.degree, -1, -1):
        c = q[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else ("+" if parts else "")
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            var = "x" if k == 1 else f"x^{k}"
            body = var if mag == 1 else f"{mag}*{var}"
        parts.append(sign + body)
    return "".join(parts)


def _pseudo_rem(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Remainder of lc(b)^k * a by b for some k >= 0, exact over Z.

    The stray lc power is harmless: callers immediately take the
    primitive part.
    """
    lc = b.leading
    db = b.degree
    r = a
    while not r.is_zero and r.degree >= db:
        shift = r.degree - db
        t = IntPolynomial([0] * shift + [r.leading])
        r = r * lc - t * b
    return r


def integer_poly_gcd(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Primitive gcd in Z[x], positive leading coefficient.

    Uses the primitive pseudo-remainder sequence: exact, and canonical by
    construction.
    """
    if a.is_zero and b.is_zero:
        raise ZeroPolynomialError("gcd of two zero polynomials")
    if a.is_zero:
        return b.primitive_part()
    if b.is_zero:
        return a.primitive_part()
    a, b = a.primitive_part(), b.primitive_part()
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero:
        r = _pseudo_rem(a, b)
        a, b = b, r.primitive_part()
    return a.primitive_part()


def poly_divexact(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Quotient a / b when b divides a exactly in Z[x]; raises otherwise."""
    if b.is_zero:
        raise ZeroPolynomialError("division by zero polynomial")
    from fractions import Fraction

    r = [Fraction(c) for c in a.coeffs]
    db = b.degree
    lc = Fraction(b.leading)
    q = [Fraction(0)] * max(len(r) - db, 0)
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i] / lc
        if c:
            q[i - db] = c
            for j in range(db + 1):
                r[i - db + j] -= c * b[j]
    if any(r) or any(c.denominator != 1 for c in q):
        raise ValueError(f"{b} does not divide {a} exactly")
    return IntPolynomial(int(c) for c in q)


def _positive_divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def nonneg_integer_roots(q: IntPolynomial) -> set[int]:
    """Exact set of roots of q in the nonnegative integers.

    Any integer root divides the constant term once powers of x are
    factored out, so only divisors need testing.
    """
    if q.is_zero:
        raise ZeroPolynomialError("zero polynomial vanishes everywhere")
    coeffs = q.coeffs
    shift = 0
    while coeffs[shift] == 0:
        shift += 1
    roots: set[int] = set()
    if shift > 0:
        roots.add(0)
    reduced = IntPolynomial(coeffs[shift:])
    if reduced.degree >= 1:
        for d in _positive_divisors(reduced.coeffs[0]):
            if reduced.evaluate(d) == 0:
                roots.add(d)
    return roots
