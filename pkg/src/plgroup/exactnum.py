"""Exact scalar arithmetic on top of :class:`fractions.Fraction`.

Every coordinate, slope and base in the package is a ``Fraction``.  This
module adds the few number-theoretic helpers the group code needs: exact
logarithms to a rational base, dyadic odd-part extraction and the
``xi * a**-j`` normal form used for base-``a`` orbit invariants.
"""

from __future__ import annotations

import math
import operator
import re
from fractions import Fraction
from typing import Optional, Union

Rational = Fraction
RationalLike = Union[Fraction, int, str]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


class ExactArithmeticError(ValueError):
    """Raised for domain violations in the scalar layer."""


def Q(value: RationalLike) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a reduced Fraction.

    Floats are refused: they would silently smuggle rounding into exact code.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ExactArithmeticError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        m = _RATIONAL_RE.match(value)
        if not m:
            raise ExactArithmeticError(f"malformed rational {value!r}; expected 'p' or 'p/q'")
        den = int(m.group(2)) if m.group(2) is not None else 1
        if den == 0:
            raise ExactArithmeticError(f"zero denominator in {value!r}")
        return Fraction(int(m.group(1)), den)
    raise ExactArithmeticError(f"cannot interpret {value!r} as an exact rational")


def fmt(x: Fraction) -> str:
    """Canonical text form: ``num/den``, or just ``num`` when den == 1."""
    return str(x)


_OPS = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


def arith(x: RationalLike, y: RationalLike, op: str):
    """Apply ``op`` in {add, sub, mul, div, cmp}; ``cmp`` returns -1, 0 or 1."""
    x, y = Q(x), Q(y)
    if op == "cmp":
        return (x > y) - (x < y)
    if op == "div" and y == 0:
        raise ExactArithmeticError("division by zero")
    try:
        return _OPS[op](x, y)
    except KeyError:
        raise ExactArithmeticError(f"unknown operation {op!r}") from None


def _int_log(base: int, value: int) -> Optional[int]:
    # n with base**n == value, for base >= 2 and value >= 1
    n = 0
    while value % base == 0:
        value //= base
        n += 1
    return n if value == 1 else None


def log_exact(base: RationalLike, value: RationalLike) -> Optional[int]:
    """Return ``n`` with ``value == base**n`` exactly, or None.

    For reduced ``base = p/q`` the powers are ``p**n/q**n`` (n >= 0) and
    ``q**m/p**m`` (n = -m), both already reduced, so the test reduces to
    integer power checks on numerator and denominator.
    """
    base, value = Q(base), Q(value)
    if base <= 1:
        raise ExactArithmeticError(f"log base must exceed 1, got {base}")
    if value <= 0:
        return None
    if value == 1:
        return 0
    p, q = base.numerator, base.denominator
    s, t = value.numerator, value.denominator
    if value > 1:
        n = _int_log(p, s)
        if n is None or t != q**n:
            return None
        return n
    m = _int_log(p, t)
    if m is None or s != q**m:
        return None
    return -m


def is_power(base: RationalLike, value: RationalLike) -> bool:
    return log_exact(base, value) is not None


def is_dyadic(x: RationalLike) -> bool:
    d = Q(x).denominator
    return d & (d - 1) == 0


def odd_part(value: RationalLike) -> tuple[int, int]:
    """Split a positive dyadic rational as ``k * 2**-j`` with ``k`` odd.

    >>> odd_part(Fraction(3, 8))
    (3, 3)
    """
    value = Q(value)
    if value <= 0:
        raise ExactArithmeticError(f"odd_part needs a positive value, got {value}")
    if not is_dyadic(value):
        raise ExactArithmeticError(f"{value} is not dyadic")
    k, d = value.numerator, value.denominator
    j = d.bit_length() - 1
    # integers with trailing factors of two give negative j
    while k % 2 == 0:
        k //= 2
        j -= 1
    return k, j


def _log_estimate(x: Fraction) -> float:
    # natural log of a positive Fraction without float overflow
    shift_n = max(x.numerator.bit_length() - 900, 0)
    shift_d = max(x.denominator.bit_length() - 900, 0)
    num = x.numerator >> shift_n
    den = x.denominator >> shift_d
    return math.log(num) - math.log(den) + (shift_n - shift_d) * math.log(2)


def xi_decompose(base: RationalLike, value: RationalLike) -> tuple[Fraction, int]:
    """Write ``value`` in (0, 1) as ``xi * base**-j`` with ``1/base < xi <= 1``.

    ``j`` is the largest integer with ``value * base**j <= 1``.  A float
    logarithm gives the starting guess; the final answer is settled by
    exact comparisons only.
    """
    a, v = Q(base), Q(value)
    if a <= 1:
        raise ExactArithmeticError(f"base must exceed 1, got {a}")
    if not 0 < v < 1:
        raise ExactArithmeticError(f"value must lie in (0, 1), got {v}")
    j = max(int(math.floor(-_log_estimate(v) / _log_estimate(a))), 0)
    xi = v * a**j
    while xi > 1:
        j -= 1
        xi /= a
    while xi * a <= 1:
        j += 1
        xi *= a
    return xi, j
