"""Coercion into exact rationals.  Floats are rejected on purpose."""

from __future__ import annotations

from fractions import Fraction


def exact(value) -> Fraction:
    """Coerce ``value`` (int, Fraction, or a ``"p/q"`` string) to a Fraction.

    Floats are refused: every identity in this package is checked with
    ``==`` on rationals, and a binary float smuggled into a coefficient
    would silently break that.
    """
    if isinstance(value, float):
        raise TypeError(
            f"float {value!r} rejected: use int, Fraction, or a 'p/q' string"
        )
    return Fraction(value)
