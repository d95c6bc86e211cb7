"""Exact scalars: arbitrary-precision rationals and Gaussian rationals Q(i).

A Gaussian rational is stored as two independent reduced rationals (real and
imaginary part).  gmpy2's mpq is used when available; fractions.Fraction is a
drop-in fallback with the same semantics.

The text grammar for Gaussian rationals (used by every file format):

    RAT := ['-'] DIGITS ['/' DIGITS]
    GR  := RAT | [RAT] ('+'|'-') [RAT] 'i' | ['-'] [RAT] 'i'

Examples: "0", "-3/2", "1/2+1/2i", "i", "2-3i".  Parsing is exact and
serialisation round-trips bit-identically.
"""

from __future__ import annotations

import math
import re as _re
from typing import Union

try:
    from gmpy2 import mpq as Rat
except ImportError:  # pragma: no cover - gmpy2 is normally installed
    from fractions import Fraction as Rat

RatLike = Union[int, "Rat"]

_RAT0 = Rat(0)
_RAT1 = Rat(1)


class ParseError(ValueError):
    """Raised when a Gaussian-rational string does not match the grammar."""

    def __init__(self, text: str, token: str):
        super().__init__(f"cannot parse {text!r}: offending token {token!r}")
        self.token = token


class GaussianRational:
    """An element of Q(i), immutable, always stored in lowest terms."""

    __slots__ = ("re", "im")

    def __init__(self, re: RatLike = 0, im: RatLike = 0):
        object.__setattr__(self, "re", Rat(re))
        object.__setattr__(self, "im", Rat(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    # -- predicates ---------------------------------------------------------

    def __bool__(self) -> bool:
        return self.re != 0 or self.im != 0

    def is_rational(self) -> bool:
        return self.im == 0

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other) -> "GaussianRational":
        other = _try_coerce(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other) -> "GaussianRational":
        other = _try_coerce(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other) -> "GaussianRational":
        other = _try_coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other) -> "GaussianRational":
        other = _try_coerce(other)
        if other is None:
            return NotImplemented
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other) -> "GaussianRational":
        other = _try_coerce(other)
        if other is None:
            return NotImplemented
        n = other.re * other.re + other.im * other.im
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        return GaussianRational(
            (self.re * other.re + self.im * other.im) / n,
            (self.im * other.re - self.re * other.im) / n,
        )

    def __rtruediv__(self, other) -> "GaussianRational":
        other = _try_coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, n: int) -> "GaussianRational":
        if n < 0:
            return (ONE / self) ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm(self):
        """Field norm re^2 + im^2 (a nonnegative rational)."""
        return self.re * self.re + self.im * self.im

    # -- comparison and hashing --------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, int):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def sort_key(self):
        """Total order on Q(i): compare real part, then imaginary part."""
        return (self.re, self.im)

    def canonical_key(self):
        """The order used to pick canonical class parameters: real part
        first, ranking positive values (ascending) before zero before
        negative, then the imaginary part the same way."""
        return _part_key(self.re) + _part_key(self.im)

    # -- text ---------------------------------------------------------------

    def __str__(self) -> str:
        return format_gr(self)

    def __repr__(self) -> str:
        return f"GR({format_gr(self)!r})"


def _part_key(q):
    if q > 0:
        return (0, q)
    if q == 0:
        return (1, q)
    return (2, -q)


def _try_coerce(value):
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, int) or type(value) is type(_RAT0):
        return GaussianRational(value)
    return None


def _coerce(value) -> GaussianRational:
    out = _try_coerce(value)
    if out is None:
        raise TypeError(f"cannot coerce {value!r} into Q(i)")
    return out


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)


def gr(re: RatLike = 0, im: RatLike = 0) -> GaussianRational:
    """Shorthand constructor."""
    return GaussianRational(re, im)


# ---------------------------------------------------------------------------
# text grammar


_RAT_RE = _re.compile(r"-?\d+(?:/\d+)?")


def _parse_rat(token: str, whole: str):
    if not _RAT_RE.fullmatch(token):
        raise ParseError(whole, token)
    if "/" in token:
        num, den = token.split("/")
        if int(den) == 0:
            raise ParseError(whole, token)
        return Rat(int(num), int(den))
    return Rat(int(token))


def parse_gr(text: str) -> GaussianRational:
    """Parse the Gaussian-rational grammar exactly."""
    s = text.strip()
    if not s:
        raise ParseError(text, text)
    if s.endswith("i"):
        body = s[:-1]
        # split off the real part, if any: find the last '+'/'-' that is not
        # the leading sign and not part of a fraction
        split_at = None
        for k in range(len(body) - 1, 0, -1):
            if body[k] in "+-":
                split_at = k
                break
        if split_at is None:
            # pure imaginary: "i", "-i", "3i", "-2/5i"
            if body in ("", "-"):
                return GaussianRational(0, Rat(-1) if body == "-" else Rat(1))
            return GaussianRational(0, _parse_rat(body, text))
        re_part = body[:split_at]
        im_sign = -1 if body[split_at] == "-" else 1
        im_body = body[split_at + 1 :]
        im = _RAT1 if im_body == "" else _parse_rat(im_body, text)
        return GaussianRational(_parse_rat(re_part, text), im_sign * im)
    return GaussianRational(_parse_rat(s, text))


def _format_rat(q) -> str:
    return str(q)


def format_gr(z: GaussianRational) -> str:
    """Canonical serialisation; parse_gr(format_gr(z)) == z bit-identically."""
    re_, im_ = z.re, z.im
    if im_ == 0:
        return _format_rat(re_)
    if re_ == 0:
        if im_ == 1:
            return "i"
        if im_ == -1:
            return "-i"
        return _format_rat(im_) + "i"
    sign = "+" if im_ > 0 else "-"
    mag = im_ if im_ > 0 else -im_
    im_str = "" if mag == 1 else _format_rat(mag)
    return f"{_format_rat(re_)}{sign}{im_str}i"


# ---------------------------------------------------------------------------
# exact square roots


def rat_sqrt(q):
    """Exact square root of a rational, or None if it is not a perfect square."""
    if q < 0:
        return None
    if q == 0:
        return _RAT0
    num, den = int(q.numerator), int(q.denominator)
    rn = math.isqrt(num)
    rd = math.isqrt(den)
    if rn * rn != num or rd * rd != den:
        return None
    return Rat(rn, rd)


def gr_sqrt(z: GaussianRational):
    """A square root of z in Q(i), or None if none exists there.

    Uses |w|^2 = |z| and 2*re(w)^2 = re(z) + |z|; every step must stay a
    perfect square in Q.
    """
    if not z:
        return ZERO
    if z.im == 0 and z.re > 0:
        r = rat_sqrt(z.re)
        return GaussianRational(r) if r is not None else None
    if z.im == 0 and z.re < 0:
        r = rat_sqrt(-z.re)
        return GaussianRational(0, r) if r is not None else None
    n = rat_sqrt(z.norm())
    if n is None:
        return None
    c2 = (z.re + n) / 2
    c = rat_sqrt(c2)
    if c is None:
        return None
    if c == 0:
        d = rat_sqrt(n - (z.re + n) / 2)
        return GaussianRational(0, d) if d is not None else None
    d = z.im / (2 * c)
    w = GaussianRational(c, d)
    return w if w * w == z else None
