"""Exact arithmetic in the quadratic field Q(phi), phi = (1 + sqrt 5)/2.

Elements are written in the basis (1, phi).  Every comparison is decided
exactly: the sign of a + b*phi is the sign of (2a + b) + b*sqrt(5), which
reduces to integer comparisons.

The arithmetic kernel is compiled with Cython when the extension is built;
otherwise, or when the environment variable ``PETINDUCE_PURE`` is set to a
non-empty value, the pure-Python implementation is used.  Both behave
identically.
"""
from __future__ import annotations

import os
import re
from fractions import Fraction
from typing import Union

from . import _kernels_py
from .errors import ParseError


def _select_backend():
    if os.environ.get("PETINDUCE_PURE"):
        return _kernels_py
    try:
        from . import _kernels  # type: ignore[attr-defined]
    except ImportError:
        return _kernels_py
    return _kernels


_k = _select_backend()
BACKEND: str = _k.BACKEND
FieldElem = _k.FieldElem
sign_ab = _k.sign_ab
locate_kernel = _k.locate
prepare_table = _k.prepare_table

Number = Union[int, Fraction, "FieldElem"]

ZERO = FieldElem(0)
ONE = FieldElem(1)
PHI = FieldElem(0, 1)
PHI_INV = FieldElem(-1, 1)  # phi - 1


class FieldParseError(ParseError):
    """Malformed field-element string; ``position`` is the 0-based offset."""

    def __init__(self, text: str, position: int, reason: str):
        self.text = text
        self.position = position
        self.reason = reason
        pointer = " " * position + "^"
        super().__init__(f"cannot parse {text!r} at position {position}: {reason}\n  {text}\n  {pointer}")


def as_field(x) -> "FieldElem":
    """Coerce an int, Fraction, FieldElem or field string to a FieldElem."""
    if isinstance(x, FieldElem):
        return x
    if isinstance(x, (int, Fraction)):
        return FieldElem(x)
    if isinstance(x, str):
        return parse(x)
    raise TypeError(f"cannot convert {type(x).__name__} to FieldElem")


def add(x, y) -> "FieldElem":
    return as_field(x) + as_field(y)


def mul(x, y) -> "FieldElem":
    return as_field(x) * as_field(y)


def sign(x) -> int:
    return as_field(x).sign()


def floor(x) -> int:
    return as_field(x).floor()


def inverse(x) -> "FieldElem":
    return as_field(x).inverse()


def phi_power(n: int) -> "FieldElem":
    """phi**n for any integer n (phi is a unit, so this stays in Z[phi])."""
    base = PHI if n >= 0 else PHI_INV
    r = ONE
    for _ in range(abs(n)):
        r = r * base
    return r


# Serialization --------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<op>[-+*/])|(?P<phi>phi))")


def parse(text: str) -> "FieldElem":
    """Parse strings such as ``"186/55+3/55*phi"``, ``"-phi"``, ``"2-phi"``.

    Grammar: a signed sum of terms, each term ``q``, ``q*phi`` or ``phi``
    where ``q`` is ``p`` or ``p/r`` with non-negative integers.
    """
    if not isinstance(text, str):
        raise FieldParseError(str(text), 0, "expected a string")
    tokens: list[tuple[str, str, int]] = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if m is None:
            bad = pos + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise FieldParseError(text, bad, f"unexpected character {text[bad]!r}")
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append((kind, m.group(kind), start))
        pos = m.end()
    if not tokens:
        raise FieldParseError(text, 0, "empty string")

    i = 0
    total_a = Fraction(0)
    total_b = Fraction(0)

    def peek():
        return tokens[i] if i < len(tokens) else ("end", "", len(text))

    first = True
    while True:
        kind, val, p = peek()
        sgn = 1
        if kind == "op" and val in "+-":
            sgn = -1 if val == "-" else 1
            i += 1
        elif not first:
            if kind == "end":
                break
            raise FieldParseError(text, p, "expected '+' or '-'")
        first = False
        kind, val, p = peek()
        if kind == "phi":
            i += 1
            total_b += sgn
        elif kind == "int":
            i += 1
            q = Fraction(int(val))
            kind, val, p = peek()
            if kind == "op" and val == "/":
                i += 1
                kind, val, p = peek()
                if kind != "int":
                    raise FieldParseError(text, p, "expected a denominator")
                if int(val) == 0:
                    raise FieldParseError(text, p, "zero denominator")
                q = q / int(val)
                i += 1
                kind, val, p = peek()
            if kind == "op" and val == "*":
                i += 1
                kind, val, p = peek()
                if kind != "phi":
                    raise FieldParseError(text, p, "expected 'phi' after '*'")
                i += 1
                total_b += sgn * q
            else:
                total_a += sgn * q
        else:
            raise FieldParseError(text, p, "expected a number or 'phi'")
        if peek()[0] == "end":
            break
    return FieldElem(total_a, total_b)


def _frac_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_elem(x) -> str:
    """Inverse of :func:`parse`: ``"p/q+r/s*phi"`` with zero terms omitted."""
    x = as_field(x)
    a, b = x.a, x.b
    parts = []
    if a != 0:
        parts.append(_frac_str(a))
    if b != 0:
        mag = abs(b)
        term = "phi" if mag == 1 else f"{_frac_str(mag)}*phi"
        if b < 0:
            parts.append("-" + term)
        elif parts:
            parts.append("+" + term)
        else:
            parts.append(term)
    return "".join(parts) if parts else "0"


def to_float(x) -> float:
    return float(as_field(x))


def vec(*coords) -> tuple:
    """Build a point/vector of FieldElems from numbers or strings."""
    return tuple(as_field(c) for c in coords)
