"""Dense integer polynomials, cyclotomic polynomials and a few number-theory helpers.

A polynomial is stored as a tuple of Python ints, constant term first, with
trailing zeros removed. The zero polynomial is the empty tuple.

>>> str(IntPolynomial.from_exponents([1, 3]))
'x + x^3'
"""
from __future__ import annotations

import cmath
import math
import threading
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InvalidDivisorError

__all__ = [
    "IntPolynomial",
    "add",
    "subtract",
    "multiply",
    "reduce_mod_xn_minus_1",
    "cyclotomic",
    "divides",
    "exact_quotient",
    "divisors",
    "euler_totient",
    "evaluate_at_unit_roots",
]

NEG_INF = float("-inf")


@dataclass(frozen=True, init=False)
class IntPolynomial:
    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(v) for v in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def zero(cls) -> IntPolynomial:
        return cls(())

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> IntPolynomial:
        return cls([0] * exponent + [coefficient])

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> IntPolynomial:
        """Sum of x^e over the given exponents (repeats accumulate)."""
        exponents = list(exponents)
        if not exponents:
            return cls.zero()
        c = [0] * (max(exponents) + 1)
        for e in exponents:
            c[e] += 1
        return cls(c)

    @property
    def degree(self) -> int | float:
        """Degree; the zero polynomial has degree ``-inf``."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def coefficient(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def padded(self, length: int) -> list[int]:
        """Coefficient list of exactly ``length`` entries (must not truncate)."""
        if len(self.coeffs) > length:
            raise ValueError(f"degree {self.degree} does not fit in {length} coefficients")
        return list(self.coeffs) + [0] * (length - len(self.coeffs))

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        return add(self, other)

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return subtract(self, other)

    def __mul__(self, other: IntPolynomial | int) -> IntPolynomial:
        if isinstance(other, int):
            return IntPolynomial(c * other for c in self.coeffs)
        return multiply(self, other)

    __rmul__ = __mul__

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(-c for c in self.coeffs)

    def to_json(self) -> list[int]:
        return list(self.coeffs)

    @classmethod
    def from_json(cls, data: Sequence[int]) -> IntPolynomial:
        return cls(data)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        out = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                term = str(abs(c))
            else:
                mono = "x" if i == 1 else f"x^{i}"
                term = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
            if not out:
                out.append(term if c > 0 else f"-{term}")
            else:
                out.append(("+ " if c > 0 else "- ") + term)
        return " ".join(out)

    def __repr__(self) -> str:
        return f"IntPolynomial('{self}')"


def add(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    n = max(len(p.coeffs), len(q.coeffs))
    return IntPolynomial(p.coefficient(i) + q.coefficient(i) for i in range(n))


def subtract(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    n = max(len(p.coeffs), len(q.coeffs))
    return IntPolynomial(p.coefficient(i) - q.coefficient(i) for i in range(n))


def multiply(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    if p.is_zero() or q.is_zero():
        return IntPolynomial.zero()
    out = [0] * (len(p.coeffs) + len(q.coeffs) - 1)
    for i, a in enumerate(p.coeffs):
        if a:
            for j, b in enumerate(q.coeffs):
                out[i + j] += a * b
    return IntPolynomial(out)


def reduce_mod_xn_minus_1(p: IntPolynomial, n: int) -> IntPolynomial:
    """Fold x^(kn+r) onto x^r, giving the representative of degree < n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    out = [0] * n
    for i, c in enumerate(p.coeffs):
        out[i % n] += c
    return IntPolynomial(out)


def _long_division(q: IntPolynomial, p: IntPolynomial):
    """Divide q by p over the integers.

    Returns ``(quotient, remainder)``, or ``None`` if a step would need a
    non-integer quotient coefficient (only possible when p is not monic).
    """
    if p.is_zero():
        raise InvalidDivisorError("division by the zero polynomial")
    rem = list(q.coeffs)
    dp = len(p.coeffs) - 1
    lead = p.coeffs[-1]
    quot = [0] * max(len(rem) - dp, 0)
    for shift in range(len(rem) - 1 - dp, -1, -1):
        top = rem[shift + dp]
        if top == 0:
            continue
        f, r = divmod(top, lead)
        if r:
            return None
        quot[shift] = f
        for k, c in enumerate(p.coeffs):
            rem[shift + k] -= f * c
    return IntPolynomial(quot), IntPolynomial(rem)


def exact_quotient(q: IntPolynomial, p: IntPolynomial) -> IntPolynomial | None:
    """The integer polynomial s with q = p*s, or None if there is none."""
    res = _long_division(q, p)
    if res is None or not res[1].is_zero():
        return None
    return res[0]


def divides(p: IntPolynomial, q: IntPolynomial) -> bool:
    """True iff p divides q in Z[x]. Every nonzero p divides 0."""
    return exact_quotient(q, p) is not None


_cyclotomic_table: dict[int, IntPolynomial] = {}
_cyclotomic_lock = threading.Lock()


def cyclotomic(d: int) -> IntPolynomial:
    """The d-th cyclotomic polynomial, by exact division of x^d - 1."""
    if d < 1:
        raise ValueError("cyclotomic index must be >= 1")
    hit = _cyclotomic_table.get(d)
    if hit is not None:
        return hit
    num = IntPolynomial([-1] + [0] * (d - 1) + [1])
    for e in divisors(d)[:-1]:
        num = exact_quotient(num, cyclotomic(e))
        assert num is not None, f"Phi_{e} failed to divide x^{d}-1"
    with _cyclotomic_lock:
        return _cyclotomic_table.setdefault(d, num)


def divisors(n: int) -> list[int]:
    if n < 1:
        raise ValueError("n must be >= 1")
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i * i != n:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def euler_totient(d: int) -> int:
    if d < 1:
        raise ValueError("d must be >= 1")
    result, m, p = d, d, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def evaluate_at_unit_roots(p: IntPolynomial, n: int) -> list[complex]:
    # Floating point; for display only, never for verdicts.
    if n < 1:
        raise ValueError("n must be >= 1")
    return [p(cmath.exp(2j * math.pi * k / n)) for k in range(n)]
