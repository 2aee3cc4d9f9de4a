"""Exact decimal weights stored as integers scaled by 10**9."""

from __future__ import annotations

import re

SCALE = 10**9
FRACTION_DIGITS = 9

_DECIMAL = re.compile(r"^(-?)(\d+)(?:\.(\d+))?$")


class WeightFormatError(ValueError):
    pass


def parse_weight(text: str) -> int:
    """Convert a decimal literal like ``"1.5"`` to scaled units (``1500000000``).

    Signs are accepted so that validation can report non-positive weights
    instead of failing on syntax.
    """
    match = _DECIMAL.match(text.strip())
    if match is None:
        raise WeightFormatError(f"not a decimal number: {text!r}")
    sign, whole, frac = match.groups()
    frac = frac or ""
    if len(frac) > FRACTION_DIGITS:
        raise WeightFormatError(
            f"weight {text!r} has more than {FRACTION_DIGITS} fractional digits"
        )
    value = int(whole) * SCALE + int(frac.ljust(FRACTION_DIGITS, "0"))
    return -value if sign else value


def format_weight(value: int) -> str:
    """Inverse of :func:`parse_weight`, using the fewest decimal digits."""
    sign = "-" if value < 0 else ""
    whole, frac = divmod(abs(value), SCALE)
    if frac == 0:
        return f"{sign}{whole}"
    digits = str(frac).rjust(FRACTION_DIGITS, "0").rstrip("0")
    return f"{sign}{whole}.{digits}"


def to_units(value: int) -> int:
    """Scale an integer given in input units."""
    return value * SCALE
