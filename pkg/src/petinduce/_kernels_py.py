"""Pure-Python kernels: exact arithmetic in Q(phi) and point location.

This module is the reference implementation.  ``_kernels.pyx`` compiles the
same algorithms; :mod:`petinduce.exactfield` picks one at import time.

An element is stored as three integers ``(a, b, d)`` meaning ``(a + b*phi)/d``
with ``d > 0`` and ``gcd(a, b, d) == 1``.  Most coordinates met in practice are
in Z[phi] (``d == 1``), so every operation has a fast path for that case.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd

BACKEND = "python"

# 10**20 * phi rounded down; only used to seed floor(), which then corrects
# itself with the exact sign test.
_PHI_NUM = 161803398874989484820
_PHI_DEN = 10**20


def sign_ab(a: int, b: int) -> int:
    """Sign of the real number a + b*phi for integers a, b."""
    # 2(a + b*phi) = (2a + b) + b*sqrt(5)
    s = 2 * a + b
    if s >= 0 and b >= 0:
        return 0 if (s == 0 and b == 0) else 1
    if s <= 0 and b <= 0:
        return -1
    d = s * s - 5 * b * b
    if s > 0:
        return 1 if d > 0 else -1
    return -1 if d > 0 else 1


def _make(a: int, b: int, d: int) -> "FieldElem":
    if d != 1:
        if d < 0:
            a, b, d = -a, -b, -d
        g = gcd(a, b, d)
        if g != 1:
            a //= g
            b //= g
            d //= g
    x = object.__new__(FieldElem)
    x._a = a
    x._b = b
    x._d = d
    return x


def _coerce(other):
    if isinstance(other, FieldElem):
        return other
    if isinstance(other, int):
        return _make(other, 0, 1)
    if isinstance(other, Fraction):
        return _make(other.numerator, 0, other.denominator)
    return None


class FieldElem:
    """Immutable element a + b*phi of Q(phi), phi = (1 + sqrt 5)/2."""

    __slots__ = ("_a", "_b", "_d")

    def __init__(self, a=0, b=0):
        fa = Fraction(a)
        fb = Fraction(b)
        d = fa.denominator * fb.denominator // gcd(fa.denominator, fb.denominator)
        na = fa.numerator * (d // fa.denominator)
        nb = fb.numerator * (d // fb.denominator)
        g = gcd(na, nb, d)
        self._a = na // g
        self._b = nb // g
        self._d = d // g

    @classmethod
    def from_raw(cls, a: int, b: int, d: int = 1) -> "FieldElem":
        if d == 0:
            raise ZeroDivisionError("zero denominator")
        return _make(a, b, d)

    @property
    def raw(self) -> tuple[int, int, int]:
        return (self._a, self._b, self._d)

    @property
    def a(self) -> Fraction:
        return Fraction(self._a, self._d)

    @property
    def b(self) -> Fraction:
        return Fraction(self._b, self._d)

    # arithmetic

    def __add__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if self._d == 1 and o._d == 1:
            return _make(self._a + o._a, self._b + o._b, 1)
        d1, d2 = self._d, o._d
        return _make(self._a * d2 + o._a * d1, self._b * d2 + o._b * d1, d1 * d2)

    __radd__ = __add__

    def __sub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if self._d == 1 and o._d == 1:
            return _make(self._a - o._a, self._b - o._b, 1)
        d1, d2 = self._d, o._d
        return _make(self._a * d2 - o._a * d1, self._b * d2 - o._b * d1, d1 * d2)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        a1, b1, a2, b2 = self._a, self._b, o._a, o._b
        bb = b1 * b2
        return _make(a1 * a2 + bb, a1 * b2 + a2 * b1 + bb, self._d * o._d)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        """Field norm x * conj(x), a rational number."""
        a, b = self._a, self._b
        return Fraction(a * a + a * b - b * b, self._d * self._d)

    def conjugate(self) -> "FieldElem":
        # phi -> 1 - phi
        return _make(self._a + self._b, -self._b, self._d)

    def inverse(self) -> "FieldElem":
        a, b, d = self._a, self._b, self._d
        n = a * a + a * b - b * b
        if n == 0:
            raise ZeroDivisionError("inverse of zero")
        # 1/((a + b phi)/d) = d (a + b - b phi) / n
        return _make(d * (a + b), -d * b, n)

    def __truediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __neg__(self):
        return _make(-self._a, -self._b, self._d)

    def __pos__(self):
        return self

    def __abs__(self):
        return -self if self.sign() < 0 else self

    # order

    def sign(self) -> int:
        return sign_ab(self._a, self._b)

    def _cmp(self, o) -> int:
        if self._d == 1 and o._d == 1:
            return sign_ab(self._a - o._a, self._b - o._b)
        d1, d2 = self._d, o._d
        return sign_ab(self._a * d2 - o._a * d1, self._b * d2 - o._b * d1)

    def __eq__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self._a == o._a and self._b == o._b and self._d == o._d

    def __ne__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return not (self._a == o._a and self._b == o._b and self._d == o._d)

    def __lt__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self._cmp(o) < 0

    def __le__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self._cmp(o) <= 0

    def __gt__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self._cmp(o) > 0

    def __ge__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self._cmp(o) >= 0

    def __hash__(self):
        if self._b == 0:
            return hash(Fraction(self._a, self._d))
        return hash((self._a, self._b, self._d))

    def __bool__(self):
        return self._a != 0 or self._b != 0

    def __floor__(self) -> int:
        return self.floor()

    def floor(self) -> int:
        a, b, d = self._a, self._b, self._d
        n = (a * _PHI_DEN + b * _PHI_NUM) // (d * _PHI_DEN)
        # correct the seed with exact comparisons
        while sign_ab(a - n * d, b) < 0:
            n -= 1
        while sign_ab(a - (n + 1) * d, b) >= 0:
            n += 1
        return n

    def __float__(self) -> float:
        return (self._a + self._b * 1.618033988749895) / self._d

    def __repr__(self) -> str:
        return f"FieldElem({self.a!s}, {self.b!s})"

    def __reduce__(self):
        return (FieldElem.from_raw, (self._a, self._b, self._d))


def prepare_table(table):
    """Pack a cell table for repeated point location (a no-op here)."""
    return tuple(tuple(tuple(e) for e in cell) for cell in table)


def locate(table, x, y) -> int:
    """Index of the cell whose interior holds (x, y).

    ``table`` is a sequence of cells, each a sequence of edges
    ``(a0, b0, a1, b1, a2, b2)`` standing for the affine form
    ``(a0 + b0 phi) + (a1 + b1 phi) x + (a2 + b2 phi) y`` which is positive
    on the interior.  ``y`` may be None for one-dimensional cells.
    Returns -1 if no cell contains the point, -2 if it lies on a boundary.
    """
    xa, xb, xd = x._a, x._b, x._d
    if y is None:
        ya, yb, yd = 0, 0, 1
    else:
        ya, yb, yd = y._a, y._b, y._d
    dd = xd * yd
    for k, cell in enumerate(table):
        zero = False
        for a0, b0, a1, b1, a2, b2 in cell:
            # (a1 + b1 phi)(xa + xb phi) * yd + (a2 + b2 phi)(ya + yb phi) * xd + (a0 + b0 phi) * xd * yd
            q1 = b1 * xb
            q2 = b2 * yb
            ra = (a1 * xa + q1) * yd + (a2 * ya + q2) * xd + a0 * dd
            rb = (a1 * xb + b1 * xa + q1) * yd + (a2 * yb + b2 * ya + q2) * xd + b0 * dd
            s = sign_ab(ra, rb)
            if s < 0:
                break
            if s == 0:
                zero = True
        else:
            return -2 if zero else k
    return -1
