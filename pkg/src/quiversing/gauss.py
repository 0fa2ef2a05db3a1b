"""Exact complex numbers with rational real and imaginary parts.

Values compare with the lexicographic order on the complex plane: real part
first, imaginary part as tie-breaker.  The order is total and additive, which
is what the dominance algorithm needs.
"""
from __future__ import annotations

import re
from fractions import Fraction
from functools import total_ordering
from math import lcm
from typing import Iterable, Sequence, Union

Number = Union[int, Fraction, "GaussianRational"]

_RATIONAL = r"[+-]?\d+(?:/\d+)?"
_PARSE = re.compile(
    rf"^(?:(?P<re>{_RATIONAL})(?P<im>[+-](?:\d+(?:/\d+)?)?\s*i)?|(?P<pure>[+-]?(?:\d+(?:/\d+)?)?\s*i))$"
)


@total_ordering
class GaussianRational:
    __slots__ = ("re", "im")

    def __init__(self, re: int | Fraction = 0, im: int | Fraction = 0) -> None:
        self.re = Fraction(re)
        self.im = Fraction(im)

    @classmethod
    def coerce(cls, value: Number) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(value, 0)
        if isinstance(value, str):
            return cls.parse(value)
        raise TypeError(f"cannot interpret {value!r} as a Gaussian rational")

    @classmethod
    def parse(cls, text: str) -> "GaussianRational":
        """Parse ``"a/b"``, ``"a/b+c/d i"`` or ``"c/d i"`` (signs allowed)."""
        s = text.strip().replace(" ", "")
        m = _PARSE.match(s)
        if not m:
            raise ValueError(f"malformed Gaussian rational: {text!r}")
        if m.group("pure") is not None:
            return cls(0, _imag_coefficient(m.group("pure")))
        re_part = Fraction(m.group("re"))
        im_text = m.group("im")
        return cls(re_part, _imag_coefficient(im_text) if im_text else 0)

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __add__(self, other: Number) -> "GaussianRational":
        if not isinstance(other, GaussianRational):
            if isinstance(other, (int, Fraction)):
                return GaussianRational(self.re + other, self.im)
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other: Number) -> "GaussianRational":
        if not isinstance(other, (GaussianRational, int, Fraction)):
            return NotImplemented
        return self + (-GaussianRational.coerce(other))

    def __rsub__(self, other: Number) -> "GaussianRational":
        return GaussianRational.coerce(other) - self

    def __mul__(self, other: Number) -> "GaussianRational":
        if not isinstance(other, GaussianRational):
            if isinstance(other, (int, Fraction)):
                return GaussianRational(self.re * other, self.im * other)
            return NotImplemented
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: Number) -> "GaussianRational":
        if not isinstance(other, (GaussianRational, int, Fraction)):
            return NotImplemented
        other = GaussianRational.coerce(other)
        n = other.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        num = self * other.conjugate()
        return GaussianRational(num.re / n, num.im / n)

    def __rtruediv__(self, other: Number) -> "GaussianRational":
        return GaussianRational.coerce(other) / self

    def __eq__(self, other: object) -> bool:
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __lt__(self, other: Number) -> bool:
        other = GaussianRational.coerce(other)
        return (self.re, self.im) < (other.re, other.im)

    def __hash__(self) -> int:
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self) -> str:
        return f"GaussianRational({self})"

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        im = f"{self.im}i"
        if self.re == 0:
            return im
        sign = "+" if self.im > 0 else ""
        return f"{self.re}{sign}{im}"


def _imag_coefficient(text: str) -> Fraction:
    body = text[:-1].strip()
    if body in ("", "+"):
        return Fraction(1)
    if body == "-":
        return Fraction(-1)
    return Fraction(body)


def parse_vector(text: str) -> tuple[GaussianRational, ...]:
    """Parse a comma separated list of Gaussian rationals."""
    parts = [p for p in text.split(",")]
    if not text.strip() or any(not p.strip() for p in parts):
        raise ValueError(f"malformed parameter vector: {text!r}")
    return tuple(GaussianRational.parse(p) for p in parts)


def as_parameter(values: Iterable[Number]) -> tuple[GaussianRational, ...]:
    return tuple(GaussianRational.coerce(v) for v in values)


def pair(theta: Sequence[int], tau: Sequence[GaussianRational]) -> GaussianRational:
    """Standard dot product of an integer vector with a complex parameter."""
    if len(theta) != len(tau):
        raise ValueError("length mismatch")
    re = Fraction(0)
    im = Fraction(0)
    for a, z in zip(theta, tau):
        if a:
            re += a * z.re
            im += a * z.im
    return GaussianRational(re, im)


def integer_components(tau: Sequence[GaussianRational]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Real and imaginary parts of ``tau`` scaled to primitive integer vectors.

    Orthogonality of an integer vector to ``tau`` is equivalent to vanishing
    integer dot products against both returned vectors.
    """
    out = []
    for part in ([z.re for z in tau], [z.im for z in tau]):
        den = lcm(*(q.denominator for q in part)) if part else 1
        out.append(tuple(int(q * den) for q in part))
    return out[0], out[1]
