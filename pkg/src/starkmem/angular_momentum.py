"""Wigner 3j/6j symbols and reduced dipole matrix elements.

Half-integer angular momenta are carried as doubled integers so selection
rules are exact integer arithmetic, never float comparisons.  The Racah sums
are evaluated in exact rational arithmetic (``fractions.Fraction`` over an
exact factorial table) and converted to float only at the very end, which
keeps cancellation error at the few-ulp level for the argument sizes used
here (j up to ~10).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

__all__ = ["HalfInteger", "wigner3j", "wigner6j", "reduced_dipole"]

# Largest 2j supported; factorial arguments stay below this bound.
_MAX_TWICE = 60
_FACT = [math.factorial(n) for n in range(2 * _MAX_TWICE + 2)]


@dataclass(frozen=True)
class HalfInteger:
    """An exact half-integer, stored as twice its value."""

    twice: int

    @classmethod
    def of(cls, value) -> "HalfInteger":
        if isinstance(value, HalfInteger):
            return value
        if isinstance(value, int):
            return cls(2 * value)
        doubled = 2 * Fraction(value)
        if doubled.denominator != 1:
            raise ValueError(f"{value!r} is not a half-integer")
        return cls(int(doubled))

    @property
    def value(self) -> float:
        return self.twice / 2.0

    def __repr__(self) -> str:
        return f"HalfInteger({self.twice / 2:g})"


def _twice(value) -> int:
    return HalfInteger.of(value).twice


def _fact(n: int) -> int:
    if n < 0:
        raise ValueError("negative factorial argument (triangle check missed)")
    if n >= len(_FACT):
        raise ValueError(f"factorial argument {n} exceeds precomputed bound")
    return _FACT[n]


def _triangle_ok(a: int, b: int, c: int) -> bool:
    # a, b, c doubled; triangle inequality plus integer perimeter
    return abs(a - b) <= c <= a + b and (a + b + c) % 2 == 0


def _triangle_coeff_sq(a: int, b: int, c: int) -> Fraction:
    # squared Delta(abc); arguments doubled
    return Fraction(
        _fact((a + b - c) // 2) * _fact((a - b + c) // 2) * _fact((-a + b + c) // 2),
        _fact((a + b + c) // 2 + 1),
    )


@lru_cache(maxsize=None)
def _wigner3j_doubled(j1: int, j2: int, j3: int, m1: int, m2: int, m3: int) -> float:
    if m1 + m2 + m3 != 0:
        return 0.0
    if not _triangle_ok(j1, j2, j3):
        return 0.0
    for j, m in ((j1, m1), (j2, m2), (j3, m3)):
        if abs(m) > j or (j - m) % 2 != 0:
            return 0.0

    # Racah's single-sum formula, exact arithmetic throughout.
    kmin = max(0, (j2 - j3 - m1) // 2, (j1 - j3 + m2) // 2)
    kmax = min((j1 + j2 - j3) // 2, (j1 - m1) // 2, (j2 + m2) // 2)
    total = Fraction(0)
    for k in range(kmin, kmax + 1):
        den = (
            _fact(k)
            * _fact((j1 + j2 - j3) // 2 - k)
            * _fact((j1 - m1) // 2 - k)
            * _fact((j2 + m2) // 2 - k)
            * _fact((j3 - j2 + m1) // 2 + k)
            * _fact((j3 - j1 - m2) // 2 + k)
        )
        total += Fraction(-1 if k % 2 else 1, den)
    if total == 0:
        return 0.0

    rad = _triangle_coeff_sq(j1, j2, j3) * (
        _fact((j1 + m1) // 2) * _fact((j1 - m1) // 2)
        * _fact((j2 + m2) // 2) * _fact((j2 - m2) // 2)
        * _fact((j3 + m3) // 2) * _fact((j3 - m3) // 2)
    )
    sign = -1 if ((j1 - j2 - m3) // 2) % 2 else 1
    return sign * math.sqrt(float(rad)) * float(total)


@lru_cache(maxsize=None)
def _wigner6j_doubled(j1: int, j2: int, j3: int, j4: int, j5: int, j6: int) -> float:
    triads = ((j1, j2, j3), (j1, j5, j6), (j4, j2, j6), (j4, j5, j3))
    for a, b, c in triads:
        if not _triangle_ok(a, b, c):
            return 0.0

    rad = Fraction(1)
    for a, b, c in triads:
        rad *= _triangle_coeff_sq(a, b, c)

    t1 = (j1 + j2 + j3) // 2
    t2 = (j1 + j5 + j6) // 2
    t3 = (j4 + j2 + j6) // 2
    t4 = (j4 + j5 + j3) // 2
    q1 = (j1 + j2 + j4 + j5) // 2
    q2 = (j2 + j3 + j5 + j6) // 2
    q3 = (j3 + j1 + j6 + j4) // 2
    total = Fraction(0)
    for k in range(max(t1, t2, t3, t4), min(q1, q2, q3) + 1):
        den = (
            _fact(k - t1) * _fact(k - t2) * _fact(k - t3) * _fact(k - t4)
            * _fact(q1 - k) * _fact(q2 - k) * _fact(q3 - k)
        )
        total += Fraction((-1 if k % 2 else 1) * _fact(k + 1), den)
    if total == 0:
        return 0.0
    return math.sqrt(float(rad)) * float(total)


def wigner3j(j1, j2, j3, m1, m2, m3) -> float:
    """Wigner 3j symbol; returns 0 for any violated selection rule."""
    return _wigner3j_doubled(
        _twice(j1), _twice(j2), _twice(j3), _twice(m1), _twice(m2), _twice(m3)
    )


def wigner6j(j1, j2, j3, j4, j5, j6) -> float:
    """Wigner 6j symbol {j1 j2 j3; j4 j5 j6}; 0 when any triad fails."""
    return _wigner6j_doubled(
        _twice(j1), _twice(j2), _twice(j3), _twice(j4), _twice(j5), _twice(j6)
    )


def reduced_dipole(f, f_prime, j, j_prime, i_nuc, d_jj: float = 1.0) -> float:
    """Hyperfine-basis reduced dipole element <F||d||F'> from the J-basis one.

    <F||d||F'> = d_JJ' (-1)^(F'+J+1+I) sqrt((2F'+1)(2J+1)) {J J' 1; F' F I}

    Selection-rule-violating (F, F') pairs give 0.  ``d_jj`` sets the unit
    (pass 1.0 to get the dimensionless ratio to the J-basis element).
    """
    f2, fp2 = _twice(f), _twice(f_prime)
    j2, jp2 = _twice(j), _twice(j_prime)
    i2 = _twice(i_nuc)
    sixj = _wigner6j_doubled(j2, jp2, 2, fp2, f2, i2)
    if sixj == 0.0:
        return 0.0
    # F' + J + 1 + I is an integer for physical arguments; doubled sum is even
    exponent = (fp2 + j2 + 2 + i2) // 2
    sign = -1 if exponent % 2 else 1
    return d_jj * sign * math.sqrt((fp2 + 1) * (j2 + 1)) * sixj
