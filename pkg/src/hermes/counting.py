"""Exact sphere and ball sizes in H_n(q^2) and their power-of-q brackets.

Everything here is integer (or :class:`fractions.Fraction`) arithmetic.  The
field size ``q`` may be any integer >= 2 for formula evaluation; a
:class:`NotPrimePowerWarning` is issued when it is not a prime power, since
the counts then have no matrix interpretation.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction

from .errors import NonIntegralResult, RadiusOutOfRange, UnsupportedRadius
from .field import is_prime_power


class NotPrimePowerWarning(UserWarning):
    pass


@dataclass(frozen=True)
class BoundBracket:
    """Closed interval ``[lower, upper]`` of exact integers or fractions."""

    lower: int | Fraction
    upper: int | Fraction

    def __post_init__(self):
        if self.lower > self.upper:
            raise ValueError(f"empty bracket [{self.lower}, {self.upper}]")

    def __contains__(self, value):
        return self.lower <= value <= self.upper

    def clipped(self, ceiling=1):
        return BoundBracket(min(self.lower, ceiling), min(self.upper, ceiling))


def _flag(q):
    if q < 2:
        raise ValueError(f"q must be at least 2, got {q}")
    if not is_prime_power(q):
        warnings.warn(f"q = {q} is not a prime power", NotPrimePowerWarning, stacklevel=3)


def _radius(n, t):
    if not 0 <= t <= n:
        raise RadiusOutOfRange(f"radius {t} outside 0..{n}")


def _exact_div(num, den):
    quo, rem = divmod(num, den)
    if rem:
        raise NonIntegralResult(f"{num}/{den} is not an integer")
    return quo


def gaussian_binomial(base, n, m):
    """``[n choose m]_base``; zero when m lies outside 0..n."""
    if base < 2:
        raise ValueError(f"base must be at least 2, got {base}")
    if not 0 <= m <= n:
        return 0
    num = den = 1
    for i in range(1, m + 1):
        num *= base ** (n - i + 1) - 1
        den *= base**i - 1
    return _exact_div(num, den)


def binomial_bounds(q, n, m):
    """Bracket ``[q^{2m(n-m)}, q^{2m(n-m)+2}]`` around ``[n choose m]_{q^2}``."""
    if not 0 <= m <= n:
        raise ValueError(f"m = {m} outside 0..{n}")
    k = 2 * m * (n - m)
    return BoundBracket(q**k, q ** (k + 2))


def sphere_size(q, n, t):
    """Number of rank-t matrices in H_n(q^2) (Carlitz)."""
    _flag(q)
    _radius(n, t)
    prod = 1
    for s in range(1, t + 1):
        prod *= q**s + (-1) ** s
    return gaussian_binomial(q * q, n, t) * q ** (t * (t - 1) // 2) * prod


def ball_size(q, n, t):
    """Number of matrices in H_n(q^2) of rank at most t."""
    _flag(q)
    _radius(n, t)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", NotPrimePowerWarning)
        return sum(sphere_size(q, n, r) for r in range(t + 1))


def ball_size_closed_form(q, n, t):
    """B_1 and B_2 from their rational closed forms; integrality is asserted."""
    if t not in (1, 2):
        raise UnsupportedRadius(f"closed form only for t in {{1, 2}}, got {t}")
    _radius(n, t)
    a = q ** (2 * n) - 1
    value = 1 + Fraction(a, q + 1)
    if t == 2:
        value += Fraction(a * (q ** (2 * (n - 1)) - 1) * q, (q + 1) * (q * q - 1))
    if value.denominator != 1:
        raise NonIntegralResult(f"closed form B_{t} = {value} is not an integer")
    return value.numerator


def sphere_bounds(q, n, t):
    """``[q^{t(2n-t-1)}, q^{t(2n-t+1)+2}]``, containing S_t."""
    _radius(n, t)
    return BoundBracket(q ** (t * (2 * n - t - 1)), q ** (t * (2 * n - t + 1) + 2))


def ball_bounds(q, n, t):
    """``[q^{t(2n-t-1)}, q^{t(2n-t+1)+3}]``, containing B_t."""
    _radius(n, t)
    return BoundBracket(q ** (t * (2 * n - t - 1)), q ** (t * (2 * n - t + 1) + 3))


def packing_radius(d):
    """``floor((d - 1) / 2)``."""
    if d < 1:
        raise ValueError(f"minimum distance must be at least 1, got {d}")
    return (d - 1) // 2


def power_of(value, q):
    """``k`` with ``q**k == value``, or None."""
    if value < 1:
        return None
    k = 0
    while value % q == 0:
        value //= q
        k += 1
    return k if value == 1 else None
