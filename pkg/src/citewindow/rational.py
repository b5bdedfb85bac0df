"""Exact-arithmetic helpers.

Index values, percentages and thresholds are kept as :class:`Fraction`
internally so equality properties hold exactly; floats only appear at
the rendering boundary.
"""

from fractions import Fraction

__all__ = ["as_fraction", "format_fixed"]


def as_fraction(value) -> Fraction:
    """Convert to Fraction, reading floats as their decimal literal.

    ``as_fraction(0.9) == Fraction(9, 10)``, not the binary approximation
    that ``Fraction(0.9)`` would produce.  Ints, strings like ``"0.15"``
    and existing Fractions pass through exactly.
    """
    if isinstance(value, float):
        return Fraction(str(value))
    return Fraction(value)


def format_fixed(value, places: int) -> str:
    """Render an exact rational with a fixed number of decimal places.

    Rounding is exact (ties to even); no float ever enters the path, so
    output bytes are stable across platforms.
    """
    scale = 10**places
    scaled = Fraction(value) * scale
    n = round(scaled)
    sign = "-" if n < 0 else ""
    n = abs(n)
    if places == 0:
        return f"{sign}{n}"
    return f"{sign}{n // scale}.{n % scale:0{places}d}"
