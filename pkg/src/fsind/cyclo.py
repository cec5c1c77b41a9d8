"""Exact arithmetic in cyclotomic fields Q(zeta_N).

An element is a coefficient vector over ``1, x, ..., x^(phi(N)-1)`` modulo the
N-th cyclotomic polynomial, so equality is plain coefficient equality once two
values share a conductor.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Union

Rational = Union[int, Fraction]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first."""
    num = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            num = _exact_div(num, list(cyclotomic_polynomial(d)))
    return tuple(num)


def _exact_div(num: list[int], den: list[int]) -> list[int]:
    num = num[:]
    q = [0] * (len(num) - len(den) + 1)
    for i in range(len(q) - 1, -1, -1):
        c = num[i + len(den) - 1] // den[-1]
        q[i] = c
        for j, d in enumerate(den):
            num[i + j] -= c * d
    if any(num):
        raise ArithmeticError("inexact polynomial division")
    return q


@lru_cache(maxsize=None)
def _powers_table(n: int) -> tuple[tuple[int, ...], ...]:
    """Row k holds x^k mod Phi_n for 0 <= k < n."""
    phi = cyclotomic_polynomial(n)
    d = len(phi) - 1
    rows = []
    cur = [1] + [0] * (d - 1) if d else []
    for _ in range(n):
        rows.append(tuple(cur))
        top = cur[-1] if d else 0
        cur = [0] + cur[:-1] if d else []
        if top:
            for j in range(d):
                cur[j] -= top * phi[j]
    return tuple(rows)


def totient(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


class NotIntegral(ArithmeticError):
    """Raised when a value expected to be a rational integer is not one."""

    def __init__(self, value: "Cyclotomic"):
        super().__init__(f"value is not a rational integer: {value}")
        self.value = value


class Cyclotomic:
    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor: int, coeffs):
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != totient(conductor):
            raise ValueError("coefficient vector has the wrong length")
        self.conductor = conductor
        self.coeffs = coeffs

    @classmethod
    def _make(cls, n: int, coeffs: tuple) -> "Cyclotomic":
        c = object.__new__(cls)
        c.conductor = n
        c.coeffs = coeffs
        return c

    @classmethod
    def from_exponents(cls, n: int, terms: Mapping[int, Rational]) -> "Cyclotomic":
        """Reduce ``sum c_k zeta_n^k``; exponents are taken mod n."""
        table = _powers_table(n)
        acc = [Fraction(0)] * totient(n)
        for k, c in terms.items():
            if not c:
                continue
            row = table[k % n]
            for j, r in enumerate(row):
                if r:
                    acc[j] += c * r
        return cls._make(n, tuple(acc))

    @classmethod
    def rational(cls, q: Rational) -> "Cyclotomic":
        return cls._make(1, (Fraction(q),))

    @classmethod
    def zero(cls) -> "Cyclotomic":
        return cls.rational(0)

    @classmethod
    def one(cls) -> "Cyclotomic":
        return cls.rational(1)

    # -- conductor handling

    def embed(self, m: int) -> "Cyclotomic":
        """The same number viewed in Q(zeta_m), where the conductor divides m."""
        if m == self.conductor:
            return self
        if m % self.conductor:
            raise ValueError(f"conductor {self.conductor} does not divide {m}")
        step = m // self.conductor
        return Cyclotomic.from_exponents(m, {i * step: c for i, c in enumerate(self.coeffs) if c})

    def _pair(self, other) -> tuple["Cyclotomic", "Cyclotomic"]:
        if not isinstance(other, Cyclotomic):
            other = Cyclotomic.rational(other)
        m = math.lcm(self.conductor, other.conductor)
        return self.embed(m), other.embed(m)

    # -- field operations

    def __add__(self, other) -> "Cyclotomic":
        a, b = self._pair(other)
        return Cyclotomic._make(a.conductor, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "Cyclotomic":
        return Cyclotomic._make(self.conductor, tuple(-x for x in self.coeffs))

    def __sub__(self, other) -> "Cyclotomic":
        return self + (-other if isinstance(other, Cyclotomic) else -Fraction(other))

    def __rsub__(self, other) -> "Cyclotomic":
        return (-self) + other

    def __mul__(self, other) -> "Cyclotomic":
        if not isinstance(other, Cyclotomic):
            q = Fraction(other)
            return Cyclotomic._make(self.conductor, tuple(x * q for x in self.coeffs))
        a, b = self._pair(other)
        terms: dict[int, Fraction] = {}
        for i, x in enumerate(a.coeffs):
            if not x:
                continue
            for j, y in enumerate(b.coeffs):
                if y:
                    terms[i + j] = terms.get(i + j, 0) + x * y
        return Cyclotomic.from_exponents(a.conductor, terms)

    __rmul__ = __mul__

    def __truediv__(self, q: Rational) -> "Cyclotomic":
        if isinstance(q, Cyclotomic):
            r = q.as_rational()
            if r is None:
                raise TypeError("division only by rationals")
            q = r
        return self * (1 / Fraction(q))

    def galois(self, k: int) -> "Cyclotomic":
        """Apply zeta -> zeta^k (k coprime to the conductor)."""
        n = self.conductor
        if math.gcd(k, n) != 1:
            raise ValueError("exponent must be coprime to the conductor")
        return Cyclotomic.from_exponents(n, {(i * k) % n: c for i, c in enumerate(self.coeffs) if c})

    def conj(self) -> "Cyclotomic":
        return self.galois(-1 % self.conductor) if self.conductor > 2 else self

    # -- comparison and extraction

    def __eq__(self, other) -> bool:
        if not isinstance(other, (Cyclotomic, int, Fraction)):
            return NotImplemented
        a, b = self._pair(other)
        return a.coeffs == b.coeffs

    __hash__ = None  # equal values can have different conductors

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def as_rational(self) -> Fraction | None:
        if any(self.coeffs[1:]):
            return None
        return self.coeffs[0]

    def as_integer(self) -> int:
        q = self.as_rational()
        if q is None or q.denominator != 1:
            raise NotIntegral(self)
        return q.numerator

    def key(self, m: int) -> tuple[Fraction, ...]:
        """Coefficient tuple in Q(zeta_m), usable as a sort key."""
        return self.embed(m).coeffs

    def __complex__(self) -> complex:
        import cmath
        z = cmath.exp(2j * cmath.pi / self.conductor)
        return sum((float(c) * z ** i for i, c in enumerate(self.coeffs)), 0j)

    # -- text form

    def __str__(self) -> str:
        return to_text(self)

    def __repr__(self) -> str:
        return f"Cyclotomic<{to_text(self)}>"


def root_of_unity(n: int, k: int = 1) -> Cyclotomic:
    return Cyclotomic.from_exponents(n, {k % n: 1})


def E(n: int) -> Cyclotomic:
    return root_of_unity(n, 1)


def add(a: Cyclotomic, b: Cyclotomic) -> Cyclotomic:
    return a + b


def mul(a: Cyclotomic, b: Cyclotomic) -> Cyclotomic:
    return a * b


def conj(a: Cyclotomic) -> Cyclotomic:
    return a.conj()


def as_integer(a: Cyclotomic) -> int:
    return a.as_integer()


def sum_terms(terms: Mapping[int, Mapping[int, Rational]]) -> Cyclotomic:
    """Sum of ``{conductor: {exponent: coefficient}}`` with a single reduction per conductor."""
    total = Cyclotomic.zero()
    for n, t in terms.items():
        total = total + Cyclotomic.from_exponents(n, t)
    return total


def _fmt_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _root_text(n: int, k: int) -> str:
    g = math.gcd(n, k)
    n, k = n // g, k // g
    return f"E({n})" if k == 1 else f"E({n})^{k}"


def to_text(a: Cyclotomic) -> str:
    """Text in ``E(N)^k`` notation, preferring a single scaled root of least order."""
    q = a.as_rational()
    if q is not None:
        return _fmt_rational(q)
    n = a.conductor
    best = None
    for k in range(1, n):
        r = root_of_unity(n, k)
        lead = next(c for c in r.coeffs if c)
        idx = r.coeffs.index(lead)
        scale = a.coeffs[idx] / lead
        if scale and r * scale == a:
            rank = (n // math.gcd(n, k), scale != 1, abs(scale), k)
            if best is None or rank < best[0]:
                best = (rank, k, scale)
    if best is not None:
        _, k, scale = best
        body = _root_text(n, k)
        if scale == 1:
            return body
        if scale == -1:
            return "-" + body
        return f"{_fmt_rational(scale)}*{body}"
    parts = []
    for i, c in enumerate(a.coeffs):
        if not c:
            continue
        body = "1" if i == 0 else _root_text(n, i)
        if i == 0:
            t = _fmt_rational(c)
        elif c == 1:
            t = body
        elif c == -1:
            t = "-" + body
        else:
            t = f"{_fmt_rational(c)}*{body}"
        parts.append(t)
    out = parts[0]
    for t in parts[1:]:
        out += t if t.startswith("-") else "+" + t
    return out


_TERM = re.compile(r"([+-]?)(?:(\d+(?:/\d+)?)\*?)?(?:E\((\d+)\)(?:\^(\d+))?)?")


def parse(text: str) -> Cyclotomic:
    """Parse a rational combination of ``E(N)^k`` terms, e.g. ``-1-2*E(3)^2``."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty cyclotomic text")
    total = Cyclotomic.zero()
    pos = 0
    while pos < len(s):
        mo = _TERM.match(s, pos)
        if not mo or mo.end() == pos or not (mo.group(2) or mo.group(3)):
            raise ValueError(f"cannot parse cyclotomic text {text!r} at {pos}")
        sign = -1 if mo.group(1) == "-" else 1
        coef = Fraction(mo.group(2)) if mo.group(2) else Fraction(1)
        if mo.group(3):
            n = int(mo.group(3))
            k = int(mo.group(4)) if mo.group(4) else 1
            total = total + root_of_unity(n, k) * (sign * coef)
        else:
            total = total + sign * coef
        pos = mo.end()
    return total
