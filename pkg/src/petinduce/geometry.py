"""Exact convex polytopes in dimension 1 (intervals) and 2 (convex polygons).

Polytopes are stored by their closures and interpreted as open sets: an
operation whose result has zero length/area returns ``None`` (the empty
polytope).  A polygon is kept in canonical form: counterclockwise, starting
at its lexicographically least vertex, without collinear vertices.  Canonical
form makes ``==`` a test of equality of point sets.
"""
from __future__ import annotations

from math import lcm
from typing import Iterable, Optional, Sequence

from .errors import GeometryError, ZeroScale
from .exactfield import FieldElem, ZERO, as_field, format_elem, locate_kernel, parse

Point = tuple  # tuple of FieldElem


class HalfSpace:
    """The closed half-space ``{x : v0 + v1 x1 + ... + vd xd >= 0}``."""

    __slots__ = ("v",)

    def __init__(self, v: Sequence):
        v = tuple(as_field(c) for c in v)
        if len(v) not in (2, 3):
            raise GeometryError("half-space needs d+1 coefficients with d in {1, 2}")
        if all(c.sign() == 0 for c in v[1:]):
            raise GeometryError("half-space normal vector is zero")
        self.v = v

    @property
    def dim(self) -> int:
        return len(self.v) - 1

    def evaluate(self, p: Point) -> FieldElem:
        v = self.v
        r = v[0] + v[1] * p[0]
        if len(v) == 3:
            r = r + v[2] * p[1]
        return r

    def complement(self) -> "HalfSpace":
        """Closure of the complementary half-space."""
        return HalfSpace(tuple(-c for c in self.v))

    def __eq__(self, other):
        return isinstance(other, HalfSpace) and self.v == other.v

    def __hash__(self):
        return hash(self.v)

    def __repr__(self):
        return "HalfSpace([" + ", ".join(format_elem(c) for c in self.v) + "])"


def _cross(o: Point, a: Point, b: Point) -> FieldElem:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _edge_row(c0: FieldElem, c1: FieldElem, c2: FieldElem) -> tuple:
    """Integer form of the affine inequality c0 + c1 x + c2 y > 0 for the locate kernel."""
    r0, r1, r2 = c0.raw, c1.raw, c2.raw
    m = lcm(r0[2], r1[2], r2[2])
    return (r0[0] * (m // r0[2]), r0[1] * (m // r0[2]),
            r1[0] * (m // r1[2]), r1[1] * (m // r1[2]),
            r2[0] * (m // r2[2]), r2[1] * (m // r2[2]))


class ConvexPolytope:
    """Full-dimensional convex polytope with exact vertices, in canonical form.

    Build instances with :func:`polytope`, :func:`box` or the operations of
    this module; the constructor trusts its input.
    """

    __slots__ = ("dim", "vertices", "_bbox", "_edges", "_table", "_hash")

    def __init__(self, dim: int, vertices: tuple):
        self.dim = dim
        self.vertices = vertices
        self._bbox = None
        self._edges = None
        self._table = None
        self._hash = None

    # cached derived data

    @property
    def bbox(self) -> tuple:
        """``((xmin, xmax), (ymin, ymax))``; one pair for d = 1."""
        if self._bbox is None:
            if self.dim == 1:
                self._bbox = ((self.vertices[0][0], self.vertices[1][0]),)
            else:
                xs = [p[0] for p in self.vertices]
                ys = [p[1] for p in self.vertices]
                self._bbox = ((xs[0], max(xs)), (min(ys), max(ys)))
        return self._bbox

    @property
    def edges(self) -> tuple:
        """Facet half-spaces, as coefficient triples (or pairs for d = 1), inward."""
        if self._edges is None:
            vs = self.vertices
            if self.dim == 1:
                lo, hi = vs[0][0], vs[1][0]
                self._edges = ((-lo, FieldElem(1)), (hi, FieldElem(-1)))
            else:
                out = []
                n = len(vs)
                for i in range(n):
                    p = vs[i]
                    q = vs[(i + 1) % n]
                    dx = q[0] - p[0]
                    dy = q[1] - p[1]
                    out.append((dy * p[0] - dx * p[1], -dy, dx))
                self._edges = tuple(out)
        return self._edges

    @property
    def table(self) -> tuple:
        """Integer edge rows consumed by the locate kernel."""
        if self._table is None:
            if self.dim == 1:
                self._table = tuple(_edge_row(c0, c1, ZERO) for c0, c1 in self.edges)
            else:
                self._table = tuple(_edge_row(*e) for e in self.edges)
        return self._table

    def halfspaces(self) -> list[HalfSpace]:
        return [HalfSpace(e) for e in self.edges]

    # comparison

    def __eq__(self, other):
        if not isinstance(other, ConvexPolytope):
            return NotImplemented
        return self.dim == other.dim and self.vertices == other.vertices

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.dim, self.vertices))
        return self._hash

    def __repr__(self):
        pts = ", ".join("(" + ", ".join(format_elem(c) for c in p) + ")" for p in self.vertices)
        return f"ConvexPolytope(dim={self.dim}, [{pts}])"

    # convenience wrappers

    def volume(self) -> FieldElem:
        return volume(self)

    def contains(self, p: Point) -> int:
        """1 if p is interior, 0 if on the boundary, -1 if outside."""
        r = locate_kernel((self.table,), p[0], p[1] if self.dim == 2 else None)
        return 1 if r == 0 else (0 if r == -2 else -1)

    def to_json(self) -> dict:
        return {"dim": self.dim,
                "vertices": [[format_elem(c) for c in p] for p in self.vertices]}


# construction ---------------------------------------------------------------

def _from_ccw(pts: list) -> Optional[ConvexPolytope]:
    """Canonicalize a convex cyclic vertex list (either orientation)."""
    # drop repeated points
    q = []
    for p in pts:
        if not q or p != q[-1]:
            q.append(p)
    while len(q) > 1 and q[0] == q[-1]:
        q.pop()
    # drop collinear points until stable
    changed = True
    while changed and len(q) >= 3:
        changed = False
        n = len(q)
        for i in range(n):
            if _cross(q[i - 1], q[i], q[(i + 1) % n]).sign() == 0:
                del q[i]
                changed = True
                break
    if len(q) < 3:
        return None
    area2 = ZERO
    n = len(q)
    for i in range(n):
        p, r = q[i], q[(i + 1) % n]
        area2 = area2 + (p[0] * r[1] - r[0] * p[1])
    s = area2.sign()
    if s == 0:
        return None
    if s < 0:
        q.reverse()
    k = min(range(len(q)), key=lambda i: q[i])
    return ConvexPolytope(2, tuple(q[k:] + q[:k]))


def convex_hull(points: Iterable[Point]) -> list:
    """Counterclockwise extreme points (monotone chain, exact predicates)."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts
    lower: list = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p).sign() <= 0:
            lower.pop()
        lower.append(p)
    upper: list = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p).sign() <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def polytope(vertices: Iterable[Sequence]) -> Optional[ConvexPolytope]:
    """Convex hull of the given points; None when not full-dimensional."""
    pts = [tuple(as_field(c) for c in p) for p in vertices]
    if not pts:
        return None
    dim = len(pts[0])
    if dim == 1:
        lo = min(p[0] for p in pts)
        hi = max(p[0] for p in pts)
        if lo >= hi:
            return None
        return ConvexPolytope(1, ((lo,), (hi,)))
    if dim != 2:
        raise GeometryError("only dimensions 1 and 2 are supported")
    hull = convex_hull(pts)
    if len(hull) < 3:
        return None
    return _from_ccw(hull)


def box(lo: Sequence, hi: Sequence) -> ConvexPolytope:
    """Axis-aligned box ``[lo0, hi0] x [lo1, hi1]`` (or an interval)."""
    lo = tuple(as_field(c) for c in lo)
    hi = tuple(as_field(c) for c in hi)
    if any(a >= b for a, b in zip(lo, hi)):
        raise GeometryError("box is not full-dimensional")
    if len(lo) == 1:
        return ConvexPolytope(1, (lo, hi))
    return ConvexPolytope(2, ((lo[0], lo[1]), (hi[0], lo[1]), (hi[0], hi[1]), (lo[0], hi[1])))


def from_json(obj: dict) -> ConvexPolytope:
    verts = [[parse(c) for c in p] for p in obj["vertices"]]
    P = polytope(verts)
    if P is None:
        raise GeometryError("polytope in JSON is not full-dimensional")
    if P.dim != obj.get("dim", P.dim):
        raise GeometryError("declared dimension does not match the vertices")
    return P


# operations -----------------------------------------------------------------

def _clip_coeffs(P: ConvexPolytope, v: tuple) -> Optional[ConvexPolytope]:
    if P.dim == 1:
        v0, v1 = v[0], v[1]
        lo, hi = P.vertices[0][0], P.vertices[1][0]
        s = v1.sign()
        r = -v0 / v1
        if s > 0:
            if r > lo:
                lo = r
        elif r < hi:
            hi = r
        if lo >= hi:
            return None
        if lo is P.vertices[0][0] and hi is P.vertices[1][0]:
            return P
        return ConvexPolytope(1, ((lo,), (hi,)))
    v0, v1, v2 = v
    vs = P.vertices
    vals = [v0 + v1 * p[0] + v2 * p[1] for p in vs]
    sg = [x.sign() for x in vals]
    if min(sg) >= 0:
        return P
    if max(sg) <= 0:
        return None
    out = []
    n = len(vs)
    for i in range(n):
        j = (i + 1) % n
        si, sj = sg[i], sg[j]
        if si >= 0:
            out.append(vs[i])
        if si * sj < 0:
            p, q = vs[i], vs[j]
            t = vals[i] / (vals[i] - vals[j])
            out.append((p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])))
    return _from_ccw(out)


def clip(P: Optional[ConvexPolytope], H: HalfSpace) -> Optional[ConvexPolytope]:
    """Closure of interior(P) intersected with the open side of H; None if empty."""
    if P is None:
        return None
    if H.dim != P.dim:
        raise GeometryError("dimension mismatch between polytope and half-space")
    return _clip_coeffs(P, H.v)


def _bbox_disjoint(P: ConvexPolytope, Q: ConvexPolytope) -> bool:
    for (a0, a1), (b0, b1) in zip(P.bbox, Q.bbox):
        if a1 <= b0 or b1 <= a0:
            return True
    return False


def intersect(P: Optional[ConvexPolytope], Q: Optional[ConvexPolytope]) -> Optional[ConvexPolytope]:
    """Full-dimensional intersection of two polytopes, or None."""
    if P is None or Q is None:
        return None
    if P.dim != Q.dim:
        raise GeometryError("dimension mismatch")
    if P is Q:
        return P
    if _bbox_disjoint(P, Q):
        return None
    R = P
    for e in Q.edges:
        R = _clip_coeffs(R, e)
        if R is None:
            return None
    return R


def translate(P: Optional[ConvexPolytope], t: Sequence) -> Optional[ConvexPolytope]:
    if P is None:
        return None
    t = tuple(as_field(c) for c in t)
    if all(not c for c in t):
        return P
    verts = tuple(tuple(a + b for a, b in zip(p, t)) for p in P.vertices)
    return ConvexPolytope(P.dim, verts)


def scale(P: Optional[ConvexPolytope], c) -> Optional[ConvexPolytope]:
    """Image of P under x -> c x."""
    c = as_field(c)
    if c.sign() == 0:
        raise ZeroScale("scale factor is zero")
    if P is None:
        return None
    verts = [tuple(c * a for a in p) for p in P.vertices]
    if P.dim == 1:
        if c.sign() < 0:
            verts.reverse()
        return ConvexPolytope(1, tuple(verts))
    return _from_ccw(verts)


def affine_image(P: Optional[ConvexPolytope], c, u: Sequence) -> Optional[ConvexPolytope]:
    """Image of P under x -> c x + u."""
    return translate(scale(P, c), u)


def diagonal_image(P: Optional[ConvexPolytope], factors: Sequence, u: Sequence) -> Optional[ConvexPolytope]:
    """Image of P under x -> (f1 x1, ..., fd xd) + u."""
    factors = tuple(as_field(f) for f in factors)
    if any(f.sign() == 0 for f in factors):
        raise ZeroScale("scale factor is zero")
    if P is None:
        return None
    verts = [tuple(f * a for f, a in zip(factors, p)) for p in P.vertices]
    negative = sum(f.sign() < 0 for f in factors) % 2 == 1
    if negative:
        verts.reverse()
    if P.dim == 1:
        return translate(ConvexPolytope(1, tuple(verts)), u)
    return translate(_from_ccw(verts), u)


def volume(P: Optional[ConvexPolytope]) -> FieldElem:
    """Length (d = 1) or area (d = 2); zero for the empty polytope."""
    if P is None:
        return ZERO
    vs = P.vertices
    if P.dim == 1:
        return vs[1][0] - vs[0][0]
    s = ZERO
    n = len(vs)
    for i in range(n):
        p, q = vs[i], vs[(i + 1) % n]
        s = s + (p[0] * q[1] - q[0] * p[1])
    return s / 2


def centroid(P: ConvexPolytope) -> Point:
    """Exact center of mass."""
    vs = P.vertices
    if P.dim == 1:
        return ((vs[0][0] + vs[1][0]) / 2,)
    cx = ZERO
    cy = ZERO
    a6 = ZERO
    n = len(vs)
    for i in range(n):
        p, q = vs[i], vs[(i + 1) % n]
        w = p[0] * q[1] - q[0] * p[1]
        cx = cx + (p[0] + q[0]) * w
        cy = cy + (p[1] + q[1]) * w
        a6 = a6 + w
    a6 = a6 * 3
    return (cx / a6, cy / a6)


def union_if_convex(P: ConvexPolytope, Q: ConvexPolytope) -> Optional[ConvexPolytope]:
    """The union of two interior-disjoint polytopes if it is convex, else None."""
    if P.dim == 1:
        (a,), (b,) = P.vertices
        (c,), (d,) = Q.vertices
        if b == c:
            return ConvexPolytope(1, ((a,), (d,)))
        if d == a:
            return ConvexPolytope(1, ((c,), (b,)))
        return None
    H = polytope(P.vertices + Q.vertices)
    if H is not None and volume(H) == volume(P) + volume(Q):
        return H
    return None


def interior_point(P: ConvexPolytope) -> Point:
    """A point strictly inside P (the centroid)."""
    return centroid(P)
