# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels: exact arithmetic in Q(phi) and point location.

Mirrors ``_kernels_py.py`` operation for operation.  Integers stay Python
objects (arbitrary precision is required), but attribute access, dispatch and
the sign/locate loops run in C.  Point location additionally has a machine
integer path: when every edge coefficient and every numerator and denominator
of the query point is below 2**16 in absolute value, the affine forms fit in
64 bits and their squares in 128 bits, so the sign is still exact.
"""
from fractions import Fraction
from math import gcd

from libc.stdlib cimport malloc, free

cdef extern from *:
    ctypedef long long i128 "__int128"

BACKEND = "cython"

cdef object _PHI_NUM = 161803398874989484820
cdef object _PHI_DEN = 10**20


cpdef int sign_ab(object a, object b):
    """Sign of the real number a + b*phi for integers a, b."""
    cdef object s = 2 * a + b
    cdef int ss = (s > 0) - (s < 0)
    cdef int sb = (b > 0) - (b < 0)
    if ss >= 0 and sb >= 0:
        return 0 if (ss == 0 and sb == 0) else 1
    if ss <= 0 and sb <= 0:
        return -1
    cdef object d = s * s - 5 * b * b
    if ss > 0:
        return 1 if d > 0 else -1
    return -1 if d > 0 else 1


cdef inline FieldElem _make(object a, object b, object d):
    cdef object g
    if d != 1:
        if d < 0:
            a = -a
            b = -b
            d = -d
        g = gcd(a, b, d)
        if g != 1:
            a = a // g
            b = b // g
            d = d // g
    cdef FieldElem x = FieldElem.__new__(FieldElem)
    x._a = a
    x._b = b
    x._d = d
    return x


cdef FieldElem _coerce(object other):
    if isinstance(other, FieldElem):
        return <FieldElem>other
    if isinstance(other, int):
        return _make(other, 0, 1)
    if isinstance(other, Fraction):
        return _make(other.numerator, 0, other.denominator)
    return None


def _rebuild(a, b, d):
    return _make(a, b, d)


cdef class FieldElem:
    """Immutable element a + b*phi of Q(phi), phi = (1 + sqrt 5)/2."""

    cdef object _a
    cdef object _b
    cdef object _d

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
    def from_raw(cls, a, b, d=1):
        if d == 0:
            raise ZeroDivisionError("zero denominator")
        return _make(a, b, d)

    @property
    def raw(self):
        return (self._a, self._b, self._d)

    @property
    def a(self):
        return Fraction(self._a, self._d)

    @property
    def b(self):
        return Fraction(self._b, self._d)

    def __add__(self, other):
        cdef FieldElem o = _coerce(other)
        if o is None:
            return NotImplemented
        if self._d == 1 and o._d == 1:
            return _make(self._a + o._a, self._b + o._b, 1)
        return _make(self._a * o._d + o._a * self._d,
                     self._b * o._d + o._b * self._d, self._d * o._d)

    def __radd__(self, other):
        return self.__add__(other)

    def __sub__(self, other):
        cdef FieldElem o = _coerce(other)
        if o is None:
            return NotImplemented
        if self._d == 1 and o._d == 1:
            return _make(self._a - o._a, self._b - o._b, 1)
        return _make(self._a * o._d - o._a * self._d,
                     self._b * o._d - o._b * self._d, self._d * o._d)

    def __rsub__(self, other):
        cdef FieldElem o = _coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        cdef FieldElem o = _coerce(other)
        if o is None:
            return NotImplemented
        bb = self._b * o._b
        return _make(self._a * o._a + bb, self._a * o._b + o._a * self._b + bb,
                     self._d * o._d)

    def __rmul__(self, other):
        return self.__mul__(other)

    def norm(self):
        a, b = self._a, self._b
        return Fraction(a * a + a * b - b * b, self._d * self._d)

    def conjugate(self):
        return _make(self._a + self._b, -self._b, self._d)

    def inverse(self):
        a, b, d = self._a, self._b, self._d
        n = a * a + a * b - b * b
        if n == 0:
            raise ZeroDivisionError("inverse of zero")
        return _make(d * (a + b), -d * b, n)

    def __truediv__(self, other):
        cdef FieldElem o = _coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        cdef FieldElem o = _coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __neg__(self):
        return _make(-self._a, -self._b, self._d)

    def __pos__(self):
        return self

    def __abs__(self):
        return -self if sign_ab(self._a, self._b) < 0 else self

    cpdef int sign(self):
        return sign_ab(self._a, self._b)

    cdef int _cmp(self, FieldElem o):
        if self._d == 1 and o._d == 1:
            return sign_ab(self._a - o._a, self._b - o._b)
        return sign_ab(self._a * o._d - o._a * self._d,
                       self._b * o._d - o._b * self._d)

    def __richcmp__(self, other, int op):
        cdef FieldElem o = _coerce(other)
        if o is None:
            return NotImplemented
        if op == 2:
            return self._a == o._a and self._b == o._b and self._d == o._d
        if op == 3:
            return not (self._a == o._a and self._b == o._b and self._d == o._d)
        cdef int c = self._cmp(o)
        if op == 0:
            return c < 0
        if op == 1:
            return c <= 0
        if op == 4:
            return c > 0
        return c >= 0

    def __hash__(self):
        if self._b == 0:
            return hash(Fraction(self._a, self._d))
        return hash((self._a, self._b, self._d))

    def __bool__(self):
        return self._a != 0 or self._b != 0

    def __floor__(self):
        return self.floor()

    def floor(self):
        a, b, d = self._a, self._b, self._d
        n = (a * _PHI_DEN + b * _PHI_NUM) // (d * _PHI_DEN)
        while sign_ab(a - n * d, b) < 0:
            n -= 1
        while sign_ab(a - (n + 1) * d, b) >= 0:
            n += 1
        return n

    def __float__(self):
        return (self._a + self._b * 1.618033988749895) / self._d

    def __repr__(self):
        return f"FieldElem({self.a!s}, {self.b!s})"

    def __reduce__(self):
        return (_rebuild, (self._a, self._b, self._d))


cdef long long SMALL = 1 << 16


cdef inline int _sign128(i128 a, i128 b):
    cdef i128 s = 2 * a + b
    cdef i128 d
    if s >= 0 and b >= 0:
        return 0 if (s == 0 and b == 0) else 1
    if s <= 0 and b <= 0:
        return -1
    d = s * s - 5 * b * b
    if s > 0:
        return 1 if d > 0 else -1
    return -1 if d > 0 else 1


cdef class PackedTable:
    """Edge rows of a cell table copied into a flat C array."""
    cdef long long *rows
    cdef int *starts          # cell k uses rows starts[k] .. starts[k + 1] - 1
    cdef int ncells
    cdef bint small
    cdef readonly tuple table

    def __cinit__(self, table):
        self.table = tuple(tuple(tuple(e) for e in cell) for cell in table)
        self.ncells = len(self.table)
        cdef int nrows = sum(len(c) for c in self.table)
        self.rows = <long long *> malloc(6 * max(nrows, 1) * sizeof(long long))
        self.starts = <int *> malloc((self.ncells + 1) * sizeof(int))
        if self.rows == NULL or self.starts == NULL:
            raise MemoryError()
        self.small = all(-SMALL < v < SMALL for c in self.table for e in c for v in e)
        cdef int r = 0, k = 0, j
        for k in range(self.ncells):
            self.starts[k] = r
            if self.small:
                for e in self.table[k]:
                    for j in range(6):
                        self.rows[6 * r + j] = e[j]
                    r += 1
            else:
                r += len(self.table[k])
        self.starts[self.ncells] = r

    def __dealloc__(self):
        free(self.rows)
        free(self.starts)

    def __len__(self):
        return self.ncells

    def __reduce__(self):
        return (PackedTable, (self.table,))


def prepare_table(table):
    """Pack a cell table for repeated point location."""
    return PackedTable(table)


cdef inline bint _fits(object v):
    return -SMALL < v < SMALL


cdef int _locate_small(PackedTable t, long long xa, long long xb, long long xd,
                       long long ya, long long yb, long long yd):
    cdef long long dd = xd * yd
    cdef long long q1, q2, ra, rb
    cdef long long *e
    cdef int k, r, s
    cdef bint zero, inside
    for k in range(t.ncells):
        zero = False
        inside = True
        for r in range(t.starts[k], t.starts[k + 1]):
            e = t.rows + 6 * r
            q1 = e[3] * xb
            q2 = e[5] * yb
            ra = (e[2] * xa + q1) * yd + (e[4] * ya + q2) * xd + e[0] * dd
            rb = (e[2] * xb + e[3] * xa + q1) * yd + (e[4] * yb + e[5] * ya + q2) * xd + e[1] * dd
            s = _sign128(ra, rb)
            if s < 0:
                inside = False
                break
            if s == 0:
                zero = True
        if inside:
            return -2 if zero else k
    return -1


def locate(table, FieldElem x, y):
    """Index of the cell whose interior holds (x, y); -1 outside, -2 on a boundary.

    Same table layout as the pure-Python kernel; ``table`` may also be the
    result of :func:`prepare_table`.
    """
    cdef PackedTable pt
    cdef FieldElem fy0
    if isinstance(table, PackedTable):
        pt = <PackedTable>table
        if pt.small and _fits(x._a) and _fits(x._b) and _fits(x._d):
            if y is None:
                return _locate_small(pt, x._a, x._b, x._d, 0, 0, 1)
            fy0 = <FieldElem>y
            if _fits(fy0._a) and _fits(fy0._b) and _fits(fy0._d):
                return _locate_small(pt, x._a, x._b, x._d, fy0._a, fy0._b, fy0._d)
        table = pt.table
    cdef object xa = x._a, xb = x._b, xd = x._d
    cdef object ya, yb, yd, dd, q1, q2, ra, rb
    cdef FieldElem fy
    if y is None:
        ya, yb, yd = 0, 0, 1
    else:
        fy = <FieldElem>y
        ya, yb, yd = fy._a, fy._b, fy._d
    dd = xd * yd
    cdef Py_ssize_t k = 0
    cdef bint zero, inside
    cdef int s
    cdef tuple e
    for cell in table:
        zero = False
        inside = True
        for e in cell:
            q1 = e[3] * xb
            q2 = e[5] * yb
            ra = (e[2] * xa + q1) * yd + (e[4] * ya + q2) * xd + e[0] * dd
            rb = (e[2] * xb + e[3] * xa + q1) * yd + (e[4] * yb + e[5] * ya + q2) * xd + e[1] * dd
            s = sign_ab(ra, rb)
            if s < 0:
                inside = False
                break
            if s == 0:
                zero = True
        if inside:
            return -2 if zero else k
        k += 1
    return -1
