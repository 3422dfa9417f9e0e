"""Arbitrary-precision rational scalars.

All coefficient arithmetic in this package is exact.  We use gmpy2's mpq
when it is importable (much faster for the big verification sweeps) and
fall back to the stdlib Fraction, which has the same arithmetic surface.
Both keep gcd(numerator, denominator) = 1 and denominator > 0.
"""

from __future__ import annotations

try:
    from gmpy2 import mpq as Rat
except ImportError:  # pragma: no cover - gmpy2 is present in normal installs
    from fractions import Fraction as Rat

R0 = Rat(0)
R1 = Rat(1)


def rat(num, den=1):
    """Build a rational from integers (or anything Rat accepts)."""
    return Rat(num, den)


def is_integer(x) -> bool:
    return x.denominator == 1
