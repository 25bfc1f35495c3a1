"""Polytope exchange transformations (piecewise translations).

A :class:`Pet` is a labeled partition of its domain plus one translation
vector per label.  Toral translations ``x -> x + t mod L`` on a fundamental
box are the main source of PETs; generators of a Z^2-action are kept as a
pair of PETs on the same domain.
"""
from __future__ import annotations

from typing import Sequence

from . import geometry as geo
from .errors import DomainMismatch, GeometryError, OnBoundary, ParseError
from .exactfield import ZERO, as_field, format_elem, parse
from .geometry import ConvexPolytope
from .partition import LabeledPartition


def _vadd(p, q) -> tuple:
    return tuple(a + b for a, b in zip(p, q))


def _vsub(p, q) -> tuple:
    return tuple(a - b for a, b in zip(p, q))


class Pet:
    """Piecewise translation: on the atom labeled ``a``, ``x -> x + translations[a]``."""

    __slots__ = ("partition", "translations", "_inverse")

    def __init__(self, partition: LabeledPartition, translations: dict):
        self.partition = partition
        self.translations = {lab: tuple(as_field(c) for c in t) for lab, t in translations.items()}
        missing = set(partition.labels()) - set(self.translations)
        if missing:
            raise GeometryError(f"no translation for labels {sorted(missing)}")
        self._inverse = None

    @property
    def domain(self) -> ConvexPolytope:
        return self.partition.domain

    @property
    def dim(self) -> int:
        return self.domain.dim

    def __len__(self) -> int:
        return len(self.partition)

    def __repr__(self):
        return f"Pet({len(self.partition)} atoms, {len(self.translations)} translations)"

    def __call__(self, x):
        return apply(self, x)

    def translation_at(self, x) -> tuple:
        return self.translations[self.partition.code(x)]

    def power_apply(self, x, n: int):
        """T^n(x); negative n uses the inverse PET."""
        T = self if n >= 0 else inverse(self)
        for _ in range(abs(n)):
            x = apply(T, x)
        return x

    def inverse(self) -> "Pet":
        return inverse(self)

    def image_partition(self) -> LabeledPartition:
        """The translated atoms, which again partition the domain."""
        return LabeledPartition(self.domain, [(lab, geo.translate(c, self.translations[lab]))
                                              for lab, c in self.partition.atoms])

    def validate(self) -> None:
        """Check that atoms and their translates both tile the domain."""
        self.partition.validate()
        self.image_partition().validate()

    def to_json(self) -> dict:
        d = self.partition.to_json()
        d["translations"] = {str(lab): [format_elem(c) for c in t]
                             for lab, t in self.translations.items()}
        return d

    @classmethod
    def from_json(cls, obj: dict) -> "Pet":
        part = LabeledPartition.from_json(obj)
        try:
            raw = obj["translations"]
            trans = {}
            for key, t in raw.items():
                lab = int(key) if key.lstrip("-").isdigit() else key
                trans[lab] = tuple(parse(c) for c in t)
        except (KeyError, AttributeError, TypeError) as exc:
            raise ParseError(f"malformed PET JSON: {exc}") from exc
        return cls(part, trans)


def identity(domain: ConvexPolytope) -> Pet:
    zero = tuple(ZERO for _ in range(domain.dim))
    return Pet(LabeledPartition(domain, [(0, domain)]), {0: zero})


class LatticeSpec:
    """A lattice given by a basis together with an axis-aligned fundamental box."""

    def __init__(self, basis: Sequence[Sequence], fundamental_domain: ConvexPolytope):
        self.basis = tuple(tuple(as_field(c) for c in b) for b in basis)
        self.fundamental_domain = fundamental_domain
        d = fundamental_domain.dim
        if len(self.basis) != d or any(len(b) != d for b in self.basis):
            raise GeometryError("basis does not match the dimension of the fundamental domain")
        if abs(self.det()) != geo.volume(fundamental_domain):
            raise GeometryError("fundamental domain volume differs from |det(basis)|")

    def det(self):
        if len(self.basis) == 1:
            return self.basis[0][0]
        (p, q), (r, s) = self.basis
        return p * s - q * r

    def coefficients(self, v: Sequence) -> tuple:
        """Coordinates of v in the basis."""
        if len(self.basis) == 1:
            return (v[0] / self.basis[0][0],)
        (p, q), (r, s) = self.basis
        det = self.det()
        return ((s * v[0] - r * v[1]) / det, (p * v[1] - q * v[0]) / det)

    def vector(self, coeffs: Sequence[int]) -> tuple:
        out = [ZERO] * len(self.basis)
        for c, b in zip(coeffs, self.basis):
            out = [o + c * x for o, x in zip(out, b)]
        return tuple(out)

    def reduce(self, x: Sequence) -> tuple:
        """The representative of x in the (half-open) fundamental box, for boxes
        whose edges are aligned with a sub-basis; falls back to a bounded search."""
        D = self.fundamental_domain
        x = tuple(as_field(c) for c in x)
        for gamma in self._candidates(x, D):
            y = _vsub(x, gamma)
            if all(lo <= c < hi for c, (lo, hi) in zip(y, D.bbox)):
                return y
        raise GeometryError("could not reduce point into the fundamental domain")

    def _candidates(self, center: Sequence, D: ConvexPolytope) -> list:
        """Lattice vectors gamma with D + gamma possibly meeting a box around center.

        Coefficients are enumerated in increasing order, first basis vector outermost.
        """
        spans = [hi - lo for lo, hi in D.bbox]
        corners = [[]]
        for c, w in zip(center, spans):
            corners = [k + [c - w] for k in corners] + [k + [c + w] for k in corners]
        coeffs = [self.coefficients(k) for k in corners]
        ranges = []
        for i in range(len(self.basis)):
            vals = [c[i] for c in coeffs]
            ranges.append(range(min(vals).floor() - 1, -(-max(vals)).floor() + 2))
        out = []
        if len(ranges) == 1:
            for m in ranges[0]:
                out.append(self.vector((m,)))
        else:
            for m in ranges[0]:
                for n in ranges[1]:
                    out.append(self.vector((m, n)))
        return out


def toral_translation(L: LatticeSpec, t: Sequence) -> Pet:
    """The PET on L's fundamental box realizing x -> x + t mod L.

    One atom per lattice vector gamma with ``{x in D : x + t - gamma in D}``
    full-dimensional; labels follow the enumeration order of gamma.
    """
    D = L.fundamental_domain
    t = tuple(as_field(c) for c in t)
    atoms = []
    trans = {}
    for gamma in L._candidates(t, D):
        shift = _vsub(t, gamma)
        cell = geo.intersect(D, geo.translate(D, tuple(-c for c in shift)))
        if cell is not None:
            lab = len(atoms)
            atoms.append((lab, cell))
            trans[lab] = shift
    total = ZERO
    for _, c in atoms:
        total = total + geo.volume(c)
    if total != geo.volume(D):
        raise GeometryError("toral translation pieces do not tile the fundamental domain")
    return Pet(LabeledPartition(D, atoms), trans)


def apply(T: Pet, x: Sequence) -> tuple:
    """x + the translation of the atom containing x (OnBoundary on cut points)."""
    lab = T.partition.atoms[T.partition.locate(x)][0]
    return _vadd(x, T.translations[lab])


def compose(T2: Pet, T1: Pet) -> Pet:
    """The PET x -> T2(T1(x)); atoms are labeled 0, 1, ... in creation order."""
    if T1.domain != T2.domain:
        raise DomainMismatch("compose needs PETs on the same domain")
    atoms = []
    trans = {}
    for a, p in T1.partition.atoms:
        t1 = T1.translations[a]
        for b, q in T2.partition.atoms:
            # points of p whose image lies in q
            c = geo.intersect(p, geo.translate(q, tuple(-x for x in t1)))
            if c is not None:
                lab = len(atoms)
                atoms.append((lab, c))
                trans[lab] = _vadd(t1, T2.translations[b])
    return Pet(LabeledPartition(T1.domain, atoms), trans)


def inverse(T: Pet) -> Pet:
    if T._inverse is None:
        atoms = [(lab, geo.translate(c, T.translations[lab])) for lab, c in T.partition.atoms]
        trans = {lab: tuple(-x for x in t) for lab, t in T.translations.items()}
        inv = Pet(LabeledPartition(T.domain, atoms), trans)
        inv._inverse = T
        T._inverse = inv
    return T._inverse


def merge_atoms_with_same_translation(T: Pet) -> Pet:
    """One label per distinct translation (first-occurrence order); cells of a
    label are merged pairwise while their union stays convex."""
    groups: dict = {}
    for lab, c in T.partition.atoms:
        groups.setdefault(T.translations[lab], []).append(c)
    atoms = []
    trans = {}
    for k, (t, cells) in enumerate(groups.items()):
        cells = list(cells)
        merged = True
        while merged:
            merged = False
            for i in range(len(cells)):
                for j in range(i + 1, len(cells)):
                    u = geo.union_if_convex(cells[i], cells[j])
                    if u is not None:
                        cells[i] = u
                        del cells[j]
                        merged = True
                        break
                if merged:
                    break
        for c in cells:
            atoms.append((k, c))
        trans[k] = t
    return Pet(LabeledPartition(T.domain, atoms), trans)


def conjugate_affine(T: Pet, c, u: Sequence) -> Pet:
    """h o T o h^-1 for h(x) = c x + u; translations are multiplied by c."""
    c = as_field(c)
    part = T.partition.affine_image(c, u)
    trans = {lab: tuple(c * x for x in t) for lab, t in T.translations.items()}
    return Pet(part, trans)


def _orbit_point(gens: Sequence[Pet], x, n: Sequence[int]):
    """T1^n1 ... Td^nd x (generators applied last-to-first)."""
    for T, k in reversed(list(zip(gens, n))):
        x = T.power_apply(x, k)
    return x


def code_config(T_list: Sequence[Pet], P: LabeledPartition, x: Sequence,
                window: Sequence[tuple[int, int]]):
    """Labels of P along the orbit: ``c[n1 - s1][n2 - s2] = Code(T1^n1 T2^n2 x)``.

    ``window`` lists half-open ranges ``(start, stop)`` per direction.  For a
    single generator a flat list is returned.
    """
    x = tuple(as_field(c) for c in x)
    d = len(T_list)
    if d != len(window):
        raise GeometryError("window and generator list disagree in dimension")
    if d == 1:
        (s, e), = window
        T = T_list[0]
        try:
            y = T.power_apply(x, s)
        except OnBoundary as exc:
            raise OnBoundary(f"orbit hits a boundary before n={s}", point=x, n=(s,)) from exc
        out = []
        for n in range(s, e):
            try:
                out.append(P.code(y))
                if n + 1 < e:
                    y = apply(T, y)
            except OnBoundary as exc:
                raise OnBoundary(f"orbit hits a boundary at n={n}", point=x, n=(n,)) from exc
        return out
    if d != 2:
        raise GeometryError("only one or two generators are supported")
    T1, T2 = T_list
    (s1, e1), (s2, e2) = window
    out = [[None] * (e2 - s2) for _ in range(e1 - s1)]
    try:
        z = T2.power_apply(x, s2)
    except OnBoundary as exc:
        raise OnBoundary(f"orbit hits a boundary before n=(0, {s2})", point=x, n=(0, s2)) from exc
    for n2 in range(s2, e2):
        n1 = s1
        try:
            w = T1.power_apply(z, s1)
            for n1 in range(s1, e1):
                out[n1 - s1][n2 - s2] = P.code(w)
                if n1 + 1 < e1:
                    w = apply(T1, w)
            if n2 + 1 < e2:
                z = apply(T2, z)
        except OnBoundary as exc:
            raise OnBoundary(f"orbit hits a boundary at n=({n1}, {n2})", point=x, n=(n1, n2)) from exc
    return out


def action_apply(gens: Sequence[Pet], x, n: Sequence[int]):
    """The Z^d action of the generators: T1^n1 T2^n2 x."""
    return _orbit_point(gens, tuple(as_field(c) for c in x), n)
