"""Exact Gaussian-rational scalars and a thin approximate complex backend.

Every parameter of the algebra (t^{1/2}, t_0^{1/2}, t_k^{1/2}, q, z, ...) and
every matrix entry of an exact module is a :class:`ScalarValue`, i.e. a number
``re + i*im`` with ``re`` and ``im`` in :class:`fractions.Fraction`.

Half-integer exponents never appear here: callers store the base t^{1/2}
(or q) and raise it to doubled integer exponents with :func:`int_power`.
"""

from __future__ import annotations

import cmath
import re
from fractions import Fraction
from numbers import Rational
from typing import Union

from .errors import DivisionByZero, DomainError

__all__ = [
    "ScalarValue",
    "ApproxScalar",
    "S",
    "ZERO",
    "ONE",
    "I",
    "int_power",
    "to_complex",
    "coerce",
    "parse_scalar",
]

Number = Union["ScalarValue", int, Fraction]


class ScalarValue:
    """An exact element of Q(i)."""

    __slots__ = ("re", "im")

    def __init__(self, re: Union[int, Fraction, str] = 0, im: Union[int, Fraction, str] = 0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("ScalarValue is immutable")

    # -- construction helpers -------------------------------------------------
    @staticmethod
    def _raw(re: Fraction, im: Fraction) -> "ScalarValue":
        obj = object.__new__(ScalarValue)
        object.__setattr__(obj, "re", re)
        object.__setattr__(obj, "im", im)
        return obj

    # -- field operations -----------------------------------------------------
    def __add__(self, other: Number) -> "ScalarValue":
        o = coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return ScalarValue._raw(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other: Number) -> "ScalarValue":
        o = coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return ScalarValue._raw(self.re - o.re, self.im - o.im)

    def __rsub__(self, other: Number) -> "ScalarValue":
        o = coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return ScalarValue._raw(o.re - self.re, o.im - self.im)

    def __mul__(self, other: Number) -> "ScalarValue":
        o = coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if not self.im and not o.im:
            return ScalarValue._raw(self.re * o.re, _FZERO)
        return ScalarValue._raw(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def __neg__(self) -> "ScalarValue":
        return ScalarValue._raw(-self.re, -self.im)

    def __pos__(self) -> "ScalarValue":
        return self

    def inv(self) -> "ScalarValue":
        if not self.im:
            if not self.re:
                raise DivisionByZero("inverse of zero")
            return ScalarValue._raw(1 / self.re, _FZERO)
        norm = self.re * self.re + self.im * self.im
        return ScalarValue._raw(self.re / norm, -self.im / norm)

    def __truediv__(self, other: Number) -> "ScalarValue":
        o = coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other: Number) -> "ScalarValue":
        o = coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inv()

    def __pow__(self, n: int) -> "ScalarValue":
        return int_power(self, n)

    def conjugate(self) -> "ScalarValue":
        return ScalarValue._raw(self.re, -self.im)

    # -- comparisons ----------------------------------------------------------
    def __eq__(self, other: object) -> bool:
        o = coerce(other)  # type: ignore[arg-type]
        if o is NotImplemented:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self) -> int:
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def is_real(self) -> bool:
        return not self.im

    # -- presentation ---------------------------------------------------------
    def __repr__(self) -> str:
        return f"S({_fmt(self.re)!r}, {_fmt(self.im)!r})" if self.im else f"S({_fmt(self.re)!r})"

    def __str__(self) -> str:
        if not self.im:
            return _fmt(self.re)
        if not self.re:
            return f"{_fmt(self.im)}i"
        sign = "+" if self.im > 0 else "-"
        return f"{_fmt(self.re)}{sign}{_fmt(abs(self.im))}i"

    def to_json(self) -> dict:
        return {"re": _fmt(self.re), "im": _fmt(self.im)}

    @staticmethod
    def from_json(obj: dict) -> "ScalarValue":
        return ScalarValue(Fraction(obj["re"]), Fraction(obj.get("im", "0")))

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))


_FZERO = Fraction(0)


def _fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def coerce(x) -> ScalarValue:
    """Convert ints/Fractions to :class:`ScalarValue`; returns NotImplemented otherwise."""
    if isinstance(x, ScalarValue):
        return x
    if isinstance(x, (int, Rational)) and not isinstance(x, bool):
        return ScalarValue._raw(Fraction(x), _FZERO)
    if isinstance(x, bool):
        return ScalarValue._raw(Fraction(int(x)), _FZERO)
    return NotImplemented


def S(re: Union[int, Fraction, str] = 0, im: Union[int, Fraction, str] = 0) -> ScalarValue:
    """Short constructor: ``S(1, 2)`` is 1 + 2i, ``S("3/2")`` is 3/2."""
    return ScalarValue(re, im)


ZERO = S(0)
ONE = S(1)
I = S(0, 1)


def int_power(a: Number, n: int) -> ScalarValue:
    """Exact integer power; negative exponents invert first."""
    base = coerce(a)
    if n < 0:
        if not base:
            raise DivisionByZero("zero raised to a negative power")
        base = base.inv()
        n = -n
    result = ONE
    while n:
        if n & 1:
            result = result * base
        base = base * base
        n >>= 1
    return result


_SCALAR_RE = re.compile(
    r"^(?P<re>[+-]?\d+(?:/\d+)?)?(?:(?P<isign>[+-])?(?P<im>\d+(?:/\d+)?)?i)?$"
)


def parse_scalar(text: str) -> ScalarValue:
    """Parse ``"a"``, ``"a,b"`` (real and imaginary parts) or the ``str`` form ``"a+bi"``."""
    text = text.strip().replace(" ", "")
    try:
        if "," in text:
            re_part, im_part = text.split(",", 1)
            return S(Fraction(re_part), Fraction(im_part))
        m = _SCALAR_RE.match(text)
        if not text or m is None:
            raise ValueError
        re_val = Fraction(m.group("re")) if m.group("re") else Fraction(0)
        im_val = Fraction(0)
        if text.endswith("i"):
            if m.group("isign") is None:
                # a purely imaginary literal such as "3i", "-i" or "i"
                body = text[:-1]
                re_val, im_val = Fraction(0), Fraction(body + "1" if body in ("", "+", "-") else body)
            else:
                im_val = Fraction(m.group("im")) if m.group("im") else Fraction(1)
                if m.group("isign") == "-":
                    im_val = -im_val
        return S(re_val, im_val)
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"cannot parse scalar {text!r}") from exc


# -- approximate backend ---------------------------------------------------------

ApproxScalar = complex
"""The float backend uses Python's double-precision :class:`complex`."""


def to_complex(x: Union[ScalarValue, int, Fraction, complex]) -> complex:
    if isinstance(x, complex):
        return x
    if isinstance(x, ScalarValue):
        return complex(x)
    return complex(float(x))


def approx_sqrt(x: complex) -> complex:
    """Principal square root used by the symmetric normalization."""
    return cmath.sqrt(x)


def approx_close(a: complex, b: complex, rel: float = 1e-9) -> bool:
    scale = max(1.0, abs(a), abs(b))
    return abs(a - b) <= rel * scale
