"""Exact Hamilton quaternions over the rationals and integers.

Two representations live here:

* :class:`Quaternion` -- immutable rational quaternion used at API boundaries.
* plain ``tuple[int, int, int, int]`` -- the integer fast path used by the
  word evaluator and the square builder (``imul``, ``iconj``, ``inorm``).

A :class:`GroupElement` is the class of a nonzero quaternion modulo the
rational scalars, stored as its primitive integer representative with the
first nonzero coordinate positive.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from numbers import Rational
from typing import Iterable, Tuple, Union

from .errors import ParseError, RealQuaternion, ZeroQuaternion

IntQuat = Tuple[int, int, int, int]
Scalar = Union[int, Fraction]

IDENTITY: IntQuat = (1, 0, 0, 0)


# ---------------------------------------------------------------------------
# integer fast path
# ---------------------------------------------------------------------------

def imul(a: IntQuat, b: IntQuat) -> IntQuat:
    a0, a1, a2, a3 = a
    b0, b1, b2, b3 = b
    return (
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    )


def iconj(a: IntQuat) -> IntQuat:
    return (a[0], -a[1], -a[2], -a[3])


def inorm(a: IntQuat) -> int:
    return a[0] * a[0] + a[1] * a[1] + a[2] * a[2] + a[3] * a[3]


def iproduct(factors: Iterable[IntQuat]) -> IntQuat:
    return reduce(imul, factors, IDENTITY)


def primitive(a: IntQuat) -> IntQuat:
    """Divide by content and make the first nonzero coordinate positive."""
    g = gcd(*a)
    if g == 0:
        raise ZeroQuaternion("the zero quaternion has no canonical form")
    for c in a:
        if c:
            if c < 0:
                g = -g
            break
    return (a[0] // g, a[1] // g, a[2] // g, a[3] // g)


# ---------------------------------------------------------------------------
# rational quaternions
# ---------------------------------------------------------------------------

class Quaternion:
    """Immutable quaternion ``x0 + x1 i + x2 j + x3 k`` with rational coordinates."""

    __slots__ = ("_c",)

    def __init__(self, x0: Scalar = 0, x1: Scalar = 0, x2: Scalar = 0, x3: Scalar = 0):
        coords = []
        for x in (x0, x1, x2, x3):
            if isinstance(x, float):
                raise TypeError("floating point coordinates are not allowed")
            if not isinstance(x, Rational):
                raise TypeError(f"coordinate {x!r} is not an exact rational")
            coords.append(x if isinstance(x, int) else Fraction(x))
        self._c = tuple(int(c) if isinstance(c, Fraction) and c.denominator == 1 else c
                        for c in coords)

    @classmethod
    def from_tuple(cls, t: Iterable[Scalar]) -> "Quaternion":
        return cls(*t)

    @property
    def coords(self) -> tuple:
        return self._c

    x0 = property(lambda self: self._c[0])
    x1 = property(lambda self: self._c[1])
    x2 = property(lambda self: self._c[2])
    x3 = property(lambda self: self._c[3])

    @property
    def imag(self) -> tuple:
        return self._c[1:]

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self._c)

    def as_ints(self) -> IntQuat:
        if not self.is_integral():
            raise ValueError(f"{self} has non-integer coordinates")
        return self._c  # type: ignore[return-value]

    def __iter__(self):
        return iter(self._c)

    def __eq__(self, other):
        if isinstance(other, Quaternion):
            return self._c == other._c
        if isinstance(other, Rational):
            return self._c == (other, 0, 0, 0)
        return NotImplemented

    def __hash__(self):
        return hash(self._c)

    def __add__(self, other):
        other = _coerce(other)
        return Quaternion(*(a + b for a, b in zip(self._c, other._c)))

    __radd__ = __add__

    def __neg__(self):
        return Quaternion(*(-a for a in self._c))

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, Rational):
            return Quaternion(*(a * other for a in self._c))
        if not isinstance(other, Quaternion):
            return NotImplemented
        return mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, Rational):
            return Quaternion(*(other * a for a in self._c))
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, Rational):
            if other == 0:
                raise ZeroQuaternion("division by zero")
            return Quaternion(*(Fraction(a) / other for a in self._c))
        return self * inverse(_coerce(other))

    def __pow__(self, n: int):
        if n < 0:
            return inverse(self) ** (-n)
        result = Quaternion(1)
        base = self
        while n:
            if n & 1:
                result = mul(result, base)
            base = mul(base, base)
            n >>= 1
        return result

    def __repr__(self):
        return f"Quaternion({', '.join(str(c) for c in self._c)})"

    def __str__(self):
        return format_quaternion(self)


def _coerce(x) -> Quaternion:
    if isinstance(x, Quaternion):
        return x
    if isinstance(x, Rational):
        return Quaternion(x)
    if isinstance(x, tuple) and len(x) == 4:
        return Quaternion(*x)
    raise TypeError(f"cannot interpret {x!r} as a quaternion")


def as_quaternion(x) -> Quaternion:
    """Accept a Quaternion, a rational, a 4-tuple or a :class:`GroupElement`."""
    if isinstance(x, GroupElement):
        return Quaternion(*x.rep)
    return _coerce(x)


def format_quaternion(q) -> str:
    """Whitespace-free literal such as ``3+2i+2j`` or ``-5+j+k``."""
    coords = q.coords if isinstance(q, Quaternion) else tuple(q)
    parts = []
    for c, unit in zip(coords, ("", "i", "j", "k")):
        if c == 0:
            continue
        if unit and abs(c) == 1:
            body = unit
        else:
            body = f"{abs(c)}{unit}" if not isinstance(c, Fraction) or not unit else f"({abs(c)}){unit}"
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    if not parts:
        return "0"
    text = "".join(s + b for s, b in parts)
    return text[1:] if text[0] == "+" else text


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------

def mul(a: Quaternion, b: Quaternion) -> Quaternion:
    """Hamilton product with ``ij = -ji = k``."""
    a0, a1, a2, a3 = a.coords
    b0, b1, b2, b3 = b.coords
    return Quaternion(
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    )


def conj(q: Quaternion) -> Quaternion:
    x0, x1, x2, x3 = q.coords
    return Quaternion(x0, -x1, -x2, -x3)


def norm_sq(q: Quaternion) -> Scalar:
    return sum(c * c for c in q.coords)


def inverse(q: Quaternion) -> Quaternion:
    n = norm_sq(q)
    if n == 0:
        raise ZeroQuaternion("the zero quaternion is not invertible")
    return Quaternion(*(Fraction(c) / n for c in conj(q).coords))


def cross(u, v) -> tuple:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def commutes(a, b) -> bool:
    """True iff the imaginary parts are linearly dependent over Q.

    ``ab - ba`` is twice the cross product of the imaginary parts, so this
    coincides with ``a*b == b*a``.
    """
    ua = a.imag if isinstance(a, Quaternion) else tuple(a)[1:]
    ub = b.imag if isinstance(b, Quaternion) else tuple(b)[1:]
    return cross(ua, ub) == (0, 0, 0)


def _primitive_vector(v) -> tuple:
    den = lcm(*(Fraction(c).denominator for c in v))
    ints = [int(Fraction(c) * den) for c in v]
    g = gcd(*ints)
    if g == 0:
        raise RealQuaternion("imaginary part is zero")
    for c in ints:
        if c:
            if c < 0:
                g = -g
            break
    return tuple(c // g for c in ints)


def tau_direction(q) -> Tuple[int, int, int]:
    """Primitive integer vector spanning the line through the imaginary part."""
    return _primitive_vector(as_quaternion(q).imag)


def is_central(q) -> bool:
    q = as_quaternion(q)
    return q.imag == (0, 0, 0) and q.x0 != 0


# ---------------------------------------------------------------------------
# group elements
# ---------------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class GroupElement:
    """Nonzero quaternion modulo rational scalars.

    ``rep`` is primitive with positive first nonzero coordinate, so equality
    of dataclasses is equality of the classes.
    """

    rep: IntQuat

    def __post_init__(self):
        if primitive(self.rep) != tuple(self.rep):
            raise ValueError(f"{self.rep} is not a canonical representative")

    @classmethod
    def identity(cls) -> "GroupElement":
        return cls(IDENTITY)

    @property
    def quaternion(self) -> Quaternion:
        return Quaternion(*self.rep)

    def is_identity(self) -> bool:
        return self.rep == IDENTITY

    def norm(self) -> int:
        return inorm(self.rep)

    def exponents(self, p: int, l: int):
        """``(r, s)`` with ``norm == p**r * l**s``, or None if other primes divide it."""
        n = self.norm()
        r = s = 0
        while n % p == 0:
            n //= p
            r += 1
        while n % l == 0:
            n //= l
            s += 1
        return (r, s) if n == 1 else None

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return GroupElement(primitive(imul(self.rep, other.rep)))

    def inverse(self) -> "GroupElement":
        return GroupElement(primitive(iconj(self.rep)))

    def __pow__(self, n: int) -> "GroupElement":
        base = self.rep if n >= 0 else iconj(self.rep)
        result = IDENTITY
        for _ in range(abs(n)):
            result = primitive(imul(result, base))
        return GroupElement(result)

    def __str__(self):
        return format_quaternion(self.rep)


def reduce_canonical(q) -> GroupElement:
    """Canonical representative of the ray ``{lambda*q : lambda in Q*}``."""
    q = as_quaternion(q)
    coords = q.coords
    if all(c == 0 for c in coords):
        raise ZeroQuaternion("the zero quaternion has no canonical form")
    den = lcm(*(Fraction(c).denominator for c in coords))
    return GroupElement(primitive(tuple(int(Fraction(c) * den) for c in coords)))


_TERM = re.compile(r"([+-]?)(\d*)([ijk]?)")


def parse_quaternion(text: str) -> Quaternion:
    """Parse integer literals like ``3+2i+2j``, ``-5+j+k`` or ``1+4k``.

    Terms may come in any order but each unit at most once.  Only integer
    coefficients are accepted.
    """
    s = text.replace(" ", "")
    if not s:
        raise ParseError("empty quaternion literal")
    coords = {}
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        sign, digits, unit = m.groups()
        if m.end() == pos or (not digits and not unit) or (pos > 0 and not sign):
            raise ParseError(f"malformed quaternion literal {text!r}")
        if unit in coords:
            raise ParseError(f"repeated term {unit or 'real'!r} in {text!r}")
        value = int(digits) if digits else 1
        coords[unit] = -value if sign == "-" else value
        pos = m.end()
    return Quaternion(*(coords.get(u, 0) for u in ("", "i", "j", "k")))
