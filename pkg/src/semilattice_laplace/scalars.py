"""Scalar modes: exact rationals (``Fraction``/``int``) and float64."""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational
from typing import Iterable

import numpy as np

from .errors import ScalarModeError

RATIONAL = "rational"
FLOAT = "float"
KINDS = (RATIONAL, FLOAT)
_EXACT_TYPES = frozenset({int, Fraction})


def check_kind(kind: str) -> str:
    if kind not in KINDS:
        raise ScalarModeError(f"scalar kind must be one of {KINDS}, got {kind!r}")
    return kind


def coerce(value, kind: str):
    """Validate ``value`` as a scalar of ``kind``; returns the normalized value."""
    if isinstance(value, (bool, np.bool_)):
        raise ScalarModeError(f"boolean {value!r} is not a scalar")
    if kind == RATIONAL:
        if isinstance(value, (int, np.integer)):
            return int(value)
        if isinstance(value, Rational):
            return Fraction(value)
        raise ScalarModeError(f"{value!r} is not an exact rational")
    if kind == FLOAT:
        if isinstance(value, (float, np.floating, int, np.integer)):
            x = float(value)
            if not math.isfinite(x):
                raise ScalarModeError(f"non-finite float {value!r}")
            return x
        raise ScalarModeError(f"{value!r} is not a float64 scalar")
    check_kind(kind)


def kind_of_array(values: np.ndarray) -> str:
    if values.dtype.kind == "f":
        return FLOAT
    if values.dtype.kind in "iu":
        return RATIONAL
    if values.dtype == object:
        kinds = {FLOAT if isinstance(v, (float, np.floating)) else RATIONAL for v in values}
        if len(kinds) > 1:
            raise ScalarModeError("array mixes float and rational entries")
        return kinds.pop() if kinds else RATIONAL
    raise ScalarModeError(f"unsupported dtype {values.dtype}")


def as_dense(values, kind: str | None = None) -> tuple[np.ndarray, str]:
    """Return ``(array, kind)``: float64 for float mode, object for rational mode."""
    if isinstance(values, np.ndarray):
        arr = values
    else:
        arr = np.empty(len(values), dtype=object)
        arr[:] = list(values)
    if kind is None:
        kind = kind_of_array(arr)
    check_kind(kind)
    if kind == FLOAT:
        if arr.dtype == object:
            arr = np.array([coerce(v, FLOAT) for v in arr], dtype=np.float64)
        else:
            arr = arr.astype(np.float64)
        if not np.all(np.isfinite(arr)):
            raise ScalarModeError("dense float input contains NaN or Inf")
        return arr, kind
    if arr.dtype.kind == "f":
        raise ScalarModeError("float array given in rational mode")
    if arr.dtype.kind in "iu":
        out = np.empty(arr.shape, dtype=object)
        out[:] = arr.tolist()
        return out, kind
    if not all(type(v) in _EXACT_TYPES for v in arr):
        for v in arr:
            coerce(v, RATIONAL)
    return arr, kind


def to_scaled_ints(values: np.ndarray) -> tuple[list[int], int]:
    """Write rationals as ``ints / denominator`` over their least common denominator."""
    dens = {v.denominator for v in values if isinstance(v, Fraction)}
    den = math.lcm(*dens) if dens else 1
    if den == 1:
        return [int(v) for v in values], 1
    return [v.numerator * (den // v.denominator) for v in values], den


if hasattr(Fraction, "_from_coprime_ints"):
    _coprime = Fraction._from_coprime_ints
else:
    def _coprime(num: int, den: int) -> Fraction:
        return Fraction(num, den, _normalize=False)


def from_scaled_ints(ints: Iterable[int] | np.ndarray, den: int) -> np.ndarray:
    """Inverse of :func:`to_scaled_ints`; an int64 array is reduced in bulk."""
    if isinstance(ints, np.ndarray) and ints.dtype == np.int64 and den > 1:
        g = np.gcd(ints, den)
        out = np.empty(len(ints), dtype=object)
        # gcd-reduced pairs are coprime, so skip Fraction's own normalisation
        out[:] = [p if q == 1 else _coprime(p, q)
                  for p, q in zip((ints // g).tolist(), (den // g).tolist())]
        return out
    ints = list(ints)
    out = np.empty(len(ints), dtype=object)
    if den == 1:
        out[:] = ints
    else:
        out[:] = [Fraction(x, den) for x in ints]
    return out


def fmt(value) -> str:
    """Canonical text form: ``p/q`` or ``p`` for rationals, ``repr`` for floats."""
    if isinstance(value, (float, np.floating)):
        return repr(float(value))
    if isinstance(value, Fraction):
        return str(value)
    return str(int(value))


def parse(text: str, kind: str):
    text = text.strip()
    try:
        if kind == RATIONAL:
            v = Fraction(text)
            return int(v) if v.denominator == 1 else v
        x = float(Fraction(text)) if "/" in text else float(text)
    except (ValueError, ZeroDivisionError):
        raise ScalarModeError(f"cannot parse {text!r} as a {kind} scalar") from None
    return coerce(x, FLOAT)
