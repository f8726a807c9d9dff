"""Exact arithmetic in the real cyclotomic field Q(2cos(pi/N)).

Elements are stored as coefficient tuples ``(c_0, ..., c_{d-1})`` in the power
basis of ``theta = 2cos(pi/N)``, reduced modulo its minimal polynomial.  The
coefficients are Python ints or Fractions.  Because the minimal polynomial is
monic with integer coefficients, values built from the Coxeter data stay in
``Z[theta]`` and the arithmetic never leaves the integers.

Zero tests are exact (a reduced tuple is zero iff every coefficient is zero).
Signs of nonzero values come from a floating point evaluation with a safety
margin, falling back to interval arithmetic with doubling precision.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

import threading

from mpmath.ctx_iv import MPIntervalContext

__all__ = [
    "MAX_N",
    "NumberField",
    "ExactScalar",
    "cyclotomic_polynomial",
    "minimal_polynomial_2cos",
]

# minimal polynomials are tabulated up to this conductor
MAX_N = 60

# private interval context; its precision is mutable state
_IV = MPIntervalContext()
_IV_LOCK = threading.Lock()


def _poly_divexact(num, den):
    """Exact division of integer polynomials (low-to-high coefficients)."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    lead = den[-1]
    for k in range(len(out) - 1, -1, -1):
        q, r = divmod(num[k + len(den) - 1], lead)
        if r:
            raise ArithmeticError("inexact polynomial division")
        out[k] = q
        for j, c in enumerate(den):
            num[k + j] -= q * c
    if any(num):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients (low to high) of the n-th cyclotomic polynomial."""
    if n < 1:
        raise ValueError("n must be positive")
    poly = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_divexact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, y in enumerate(b):
        out[i] += y
    return out


def _poly_scale(a, c):
    return [c * x for x in a]


@lru_cache(maxsize=None)
def minimal_polynomial_2cos(N: int) -> tuple[int, ...]:
    """Monic minimal polynomial of ``2cos(pi/N)`` over Q, low to high.

    Obtained from the palindromic cyclotomic polynomial of order 2N by the
    substitution ``x = z + 1/z``.
    """
    if not 1 <= N <= MAX_N:
        raise ValueError(f"conductor N={N} outside the supported range 1..{MAX_N}")
    if N == 1:
        return (2, 1)  # 2cos(pi) = -2
    if N == 2:
        return (0, 1)  # 2cos(pi/2) = 0
    phi = cyclotomic_polynomial(2 * N)
    d = (len(phi) - 1) // 2
    # z^k + z^-k as a polynomial in x: C_0 = 2, C_1 = x, C_{k+1} = x C_k - C_{k-1}
    cheb = [[2], [0, 1]]
    for _ in range(2, d + 1):
        cheb.append(_poly_add(_poly_mul([0, 1], cheb[-1]), _poly_scale(cheb[-2], -1)))
    poly = [phi[d]]
    for k in range(1, d + 1):
        poly = _poly_add(poly, _poly_scale(cheb[k], phi[d + k]))
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    assert poly[-1] == 1
    return tuple(poly)


class NumberField:
    """The field Q(theta) with theta = 2cos(pi/N)."""

    def __init__(self, N: int):
        self.N = N
        self.modulus = minimal_polynomial_2cos(N)
        self.degree = len(self.modulus) - 1
        self.theta_float = 2.0 * math.cos(math.pi / N)
        self._powers = [self.theta_float**i for i in range(self.degree)]
        self.zero = (0,) * self.degree
        self.one = (1,) + (0,) * (self.degree - 1)

    def __repr__(self):
        return f"NumberField(N={self.N}, degree={self.degree})"

    def __eq__(self, other):
        return isinstance(other, NumberField) and other.N == self.N

    def __hash__(self):
        return hash(("NumberField", self.N))

    # raw tuple arithmetic

    def from_int(self, k) -> tuple:
        return (k,) + (0,) * (self.degree - 1)

    def add(self, a: tuple, b: tuple) -> tuple:
        return tuple(x + y for x, y in zip(a, b))

    def sub(self, a: tuple, b: tuple) -> tuple:
        return tuple(x - y for x, y in zip(a, b))

    def neg(self, a: tuple) -> tuple:
        return tuple(-x for x in a)

    def scale(self, a: tuple, k) -> tuple:
        return tuple(k * x for x in a)

    def mul(self, a: tuple, b: tuple) -> tuple:
        d = self.degree
        if d == 1:
            return (a[0] * b[0],)
        prod = [0] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        p = self.modulus
        for k in range(2 * d - 2, d - 1, -1):
            c = prod[k]
            if c:
                base = k - d
                for j in range(d):
                    prod[base + j] -= c * p[j]
        return tuple(prod[:d])

    def is_zero(self, a: tuple) -> bool:
        return not any(a)

    def theta_exact(self):
        # degree-1 fields: theta is the rational root of x + c
        if self.degree != 1:
            raise ValueError("theta is irrational in this field")
        return -self.modulus[0]

    def two_cos(self, m: int) -> tuple:
        """2cos(pi/m) as a field element; requires m | N (or m == 2)."""
        if m == 2:
            return self.zero
        if self.N % m:
            raise ValueError(f"2cos(pi/{m}) does not lie in {self!r}")
        k = self.N // m
        if self.degree == 1:
            t = self.theta_exact()
            c_prev, c = 2, t
            for _ in range(k - 1):
                c_prev, c = c, t * c - c_prev
            return (c,)
        theta = (0, 1) + (0,) * (self.degree - 2)
        c_prev, c = self.from_int(2), theta
        for _ in range(k - 1):
            c_prev, c = c, self.sub(self.mul(theta, c), c_prev)
        return c

    def to_float(self, a: tuple) -> float:
        return sum(float(x) * p for x, p in zip(a, self._powers))

    def sign(self, a: tuple) -> int:
        """Exact sign of a reduced element."""
        if not any(a):
            return 0
        if self.degree == 1:
            x = a[0]
            return (x > 0) - (x < 0)
        value = 0.0
        scale = 0.0
        for x, p in zip(a, self._powers):
            fx = float(x)
            value += fx * p
            scale += abs(fx) * p
        # float rounding error is far below this margin
        if abs(value) > 1e-9 * (scale + 1.0):
            return 1 if value > 0 else -1
        return self._interval_sign(a)

    def _interval_sign(self, a: tuple) -> int:
        prec = 64
        with _IV_LOCK:
            try:
                while True:
                    _IV.prec = prec
                    theta = 2 * _IV.cos(_IV.pi / self.N)
                    total = _IV.mpf(0)
                    power = _IV.mpf(1)
                    for x in a:
                        if isinstance(x, Fraction):
                            coeff = _IV.mpf(x.numerator) / x.denominator
                        else:
                            coeff = _IV.mpf(x)
                        total += coeff * power
                        power *= theta
                    if total.a > 0:
                        return 1
                    if total.b < 0:
                        return -1
                    prec *= 2
                    if prec > 1 << 16:  # pragma: no cover - the exact zero test rules this out
                        raise ArithmeticError("sign refinement did not terminate")
            finally:
                _IV.prec = 53

    def element(self, coeffs) -> "ExactScalar":
        coeffs = tuple(coeffs)
        if len(coeffs) > self.degree:
            coeffs = _reduce(coeffs, self.modulus)
        coeffs = coeffs + (0,) * (self.degree - len(coeffs))
        return ExactScalar(self, coeffs)


def _reduce(coeffs, modulus):
    d = len(modulus) - 1
    work = list(coeffs)
    for k in range(len(work) - 1, d - 1, -1):
        c = work[k]
        if c:
            for j in range(d):
                work[k - d + j] -= c * modulus[j]
    return tuple(work[:d])


class ExactScalar:
    """A value of a :class:`NumberField`, with operator overloading.

    The group machinery works on the raw coefficient tuples; this wrapper is
    the public face of those values.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: NumberField, coeffs: tuple):
        self.field = field
        self.coeffs = coeffs

    def _coerce(self, other):
        if isinstance(other, ExactScalar):
            if other.field != self.field:
                raise ValueError("scalars from different fields")
            return other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.field.from_int(other)
        return NotImplemented

    def __add__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return ExactScalar(self.field, self.field.add(self.coeffs, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return ExactScalar(self.field, self.field.sub(self.coeffs, b))

    def __rsub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return ExactScalar(self.field, self.field.sub(b, self.coeffs))

    def __mul__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return ExactScalar(self.field, self.field.mul(self.coeffs, b))

    __rmul__ = __mul__

    def __neg__(self):
        return ExactScalar(self.field, self.field.neg(self.coeffs))

    def __eq__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return False
        return self.coeffs == b

    def __hash__(self):
        return hash((self.field.N, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def __float__(self):
        return self.field.to_float(self.coeffs)

    def sign(self) -> int:
        return self.field.sign(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if i == 0 else f"{c}*t^{i}" if i > 1 else f"{c}*t")
        body = " + ".join(terms) or "0"
        return f"ExactScalar({body}; t=2cos(pi/{self.field.N}))"
