"""Labeled topological partitions of a convex domain.

A partition is a list of ``(label, cell)`` atoms whose cells are convex
polytopes with pairwise disjoint interiors covering the domain.  The same
label may sit on several cells.  Labels are integers, or tuples of integers
(return words) while an induction is in progress.
"""
from __future__ import annotations

from collections import Counter
from typing import Callable, Hashable, Iterable, Optional, Sequence
from xml.sax.saxutils import escape

from . import geometry as geo
from .errors import DomainMismatch, GeometryError, NotEquivalent, OnBoundary, ParseError
from .exactfield import as_field, locate_kernel, prepare_table
from .geometry import ConvexPolytope

Label = Hashable


class LabeledPartition:
    __slots__ = ("domain", "atoms", "_table")

    def __init__(self, domain: ConvexPolytope, atoms: Iterable[tuple[Label, ConvexPolytope]]):
        self.domain = domain
        self.atoms = tuple((lab, cell) for lab, cell in atoms)
        self._table = None

    # basic queries

    def __len__(self) -> int:
        return len(self.atoms)

    def __iter__(self):
        return iter(self.atoms)

    @property
    def dim(self) -> int:
        return self.domain.dim

    def labels(self) -> list:
        """Distinct labels in order of first appearance."""
        seen = {}
        for lab, _ in self.atoms:
            seen.setdefault(lab, None)
        return list(seen)

    def cells(self) -> list[ConvexPolytope]:
        return [c for _, c in self.atoms]

    def cells_of(self, label: Label) -> list[ConvexPolytope]:
        return [c for lab, c in self.atoms if lab == label]

    def regions(self) -> dict:
        """label -> frozenset of its cells."""
        out: dict = {}
        for lab, c in self.atoms:
            out.setdefault(lab, []).append(c)
        return {lab: frozenset(cs) for lab, cs in out.items()}

    def volume(self):
        total = as_field(0)
        for _, c in self.atoms:
            total = total + geo.volume(c)
        return total

    def cell_multiset(self) -> Counter:
        return Counter(c for _, c in self.atoms)

    def same_cells(self, other: "LabeledPartition") -> bool:
        """Equality as sets of cells, labels ignored."""
        return self.domain == other.domain and self.cell_multiset() == other.cell_multiset()

    def __eq__(self, other):
        if not isinstance(other, LabeledPartition):
            return NotImplemented
        return (self.domain == other.domain
                and Counter(self.atoms) == Counter(other.atoms))

    def __hash__(self):
        return hash((self.domain, frozenset(Counter(self.atoms).items())))

    def __repr__(self):
        return f"LabeledPartition({len(self.atoms)} atoms, {len(self.labels())} labels)"

    # point location

    def locate(self, p: Sequence) -> int:
        """Index of the atom whose interior contains p."""
        if self._table is None:
            self._table = prepare_table([c.table for _, c in self.atoms])
        r = locate_kernel(self._table, p[0], p[1] if len(p) > 1 else None)
        if r >= 0:
            return r
        if r == -2:
            raise OnBoundary(f"point {_fmt_point(p)} lies on an atom boundary", point=p)
        raise OnBoundary(f"point {_fmt_point(p)} is outside the domain", point=p)

    def code(self, p: Sequence) -> Label:
        return self.atoms[self.locate(p)][0]

    # constructions

    def relabel(self, f) -> "LabeledPartition":
        """Map labels through a dict or a callable."""
        g = f.__getitem__ if isinstance(f, dict) else f
        return LabeledPartition(self.domain, [(g(lab), c) for lab, c in self.atoms])

    def translate(self, t: Sequence) -> "LabeledPartition":
        return LabeledPartition(geo.translate(self.domain, t),
                                [(lab, geo.translate(c, t)) for lab, c in self.atoms])

    def scale(self, c) -> "LabeledPartition":
        return LabeledPartition(geo.scale(self.domain, c),
                                [(lab, geo.scale(cell, c)) for lab, cell in self.atoms])

    def affine_image(self, c, u: Sequence) -> "LabeledPartition":
        """Image under x -> c x + u."""
        return self.scale(c).translate(u)

    def diagonal_image(self, factors: Sequence, u: Sequence) -> "LabeledPartition":
        """Image under x -> diag(factors) x + u."""
        return LabeledPartition(geo.diagonal_image(self.domain, factors, u),
                                [(lab, geo.diagonal_image(c, factors, u)) for lab, c in self.atoms])

    def refine(self, other: "LabeledPartition", combine: Callable = lambda a, b: (a, b)) -> "LabeledPartition":
        return refine(self, other, combine)

    def validate(self) -> None:
        """Raise GeometryError unless the atoms tile the domain."""
        cells = self.cells()
        for c in cells:
            if geo.intersect(c, self.domain) != c:
                raise GeometryError(f"cell {c!r} is not inside the domain")
        for i in range(len(cells)):
            for j in range(i + 1, len(cells)):
                if geo.intersect(cells[i], cells[j]) is not None:
                    raise GeometryError(f"cells {i} and {j} overlap")
        if self.volume() != geo.volume(self.domain):
            raise GeometryError("cells do not cover the domain")

    # serialization

    def to_json(self) -> dict:
        return {"domain": self.domain.to_json(),
                "atoms": [{"label": _label_to_json(lab), "cell": c.to_json()} for lab, c in self.atoms]}

    @classmethod
    def from_json(cls, obj: dict) -> "LabeledPartition":
        try:
            domain = geo.from_json(obj["domain"])
            atoms = [(_label_from_json(a["label"]), geo.from_json(a["cell"])) for a in obj["atoms"]]
        except (KeyError, TypeError) as exc:
            raise ParseError(f"malformed partition JSON: {exc}") from exc
        return cls(domain, atoms)


def _label_to_json(lab):
    return list(lab) if isinstance(lab, tuple) else lab


def _label_from_json(lab):
    return tuple(lab) if isinstance(lab, list) else lab


def _fmt_point(p) -> str:
    from .exactfield import format_elem
    return "(" + ", ".join(format_elem(c) for c in p) + ")"


def refine(P: LabeledPartition, Q: LabeledPartition,
           combine: Callable = lambda a, b: (a, b)) -> LabeledPartition:
    """All full-dimensional intersections of a cell of P with a cell of Q."""
    if P.domain != Q.domain:
        raise DomainMismatch("refine needs partitions of the same domain")
    atoms = []
    for a, p in P.atoms:
        for b, q in Q.atoms:
            c = geo.intersect(p, q)
            if c is not None:
                atoms.append((combine(a, b), c))
    return LabeledPartition(P.domain, atoms)


def keys_permutation(P: LabeledPartition, Q: LabeledPartition) -> dict:
    """The label bijection pi with region_P(a) == region_Q(pi(a)) for every a.

    Regions are compared as sets of canonical cells.  Raises NotEquivalent.
    """
    if P.domain != Q.domain:
        raise NotEquivalent("partitions have different domains")
    rp = P.regions()
    rq = Q.regions()
    if len(rp) != len(rq):
        raise NotEquivalent("partitions have different numbers of labels")
    back = {}
    for lab, reg in rq.items():
        back[reg] = lab
    pi = {}
    for lab, reg in rp.items():
        if reg not in back:
            raise NotEquivalent(f"no atom of the second partition matches label {lab!r}")
        pi[lab] = back[reg]
    return pi


def image_under_pet(T, P: LabeledPartition) -> LabeledPartition:
    """Translate each cell of P refined by T's atoms by the matching translation."""
    if P.domain != T.domain:
        raise DomainMismatch("partition and PET have different domains")
    atoms = []
    for a, p in P.atoms:
        for b, g in T.partition.atoms:
            c = geo.intersect(p, g)
            if c is not None:
                atoms.append((a, geo.translate(c, T.translations[b])))
    return LabeledPartition(P.domain, atoms)


# rendering ------------------------------------------------------------------

_PALETTE = ["#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462",
            "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd", "#ccebc5", "#ffed6f"]


def _share_edge(P: ConvexPolytope, Q: ConvexPolytope) -> bool:
    """True if P and Q have boundary segments overlapping in positive length."""
    if P.dim == 1:
        return P.vertices[1] == Q.vertices[0] or Q.vertices[1] == P.vertices[0]
    pv, qv = P.vertices, Q.vertices
    for i in range(len(pv)):
        a, b = pv[i], pv[(i + 1) % len(pv)]
        for j in range(len(qv)):
            c, d = qv[j], qv[(j + 1) % len(qv)]
            if geo._cross(a, b, c).sign() != 0 or geo._cross(a, b, d).sign() != 0:
                continue
            # collinear: project on the direction of ab
            dx, dy = b[0] - a[0], b[1] - a[1]
            t = [((p[0] - a[0]) * dx + (p[1] - a[1]) * dy) for p in (a, b, c, d)]
            lo = max(min(t[0], t[1]), min(t[2], t[3]))
            hi = min(max(t[0], t[1]), max(t[2], t[3]))
            if lo < hi:
                return True
    return False


def label_groups(P: LabeledPartition) -> list[tuple[Label, list[int]]]:
    """Group atom indices into edge-connected components of equal label."""
    n = len(P.atoms)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            if P.atoms[i][0] == P.atoms[j][0] and _share_edge(P.atoms[i][1], P.atoms[j][1]):
                parent[find(j)] = find(i)
    groups: dict = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return [(P.atoms[idx[0]][0], idx) for idx in groups.values()]


def render_svg(P: LabeledPartition, style: Optional[dict] = None) -> str:
    """SVG drawing: one filled polygon per cell, one label per connected label region.

    Style keys (all optional): ``unit`` (pixels per unit length, default 150),
    ``margin`` (pixels, 10), ``stroke`` ("#000"), ``font_size`` (14),
    ``palette`` (list of fill colors), ``title``.
    """
    st = {"unit": 150.0, "margin": 10.0, "stroke": "#000", "font_size": 14,
          "palette": _PALETTE, "title": None}
    st.update(style or {})
    unit, margin = float(st["unit"]), float(st["margin"])

    def fl(x) -> float:
        return float(format(float(x), ".12g"))

    if P.dim == 1:
        dom_lo, dom_hi = (fl(c) for c in P.domain.bbox[0])
        height_units = 0.1 * (dom_hi - dom_lo)
        ylo, yhi = 0.0, height_units
    else:
        (dom_lo, dom_hi), (ylo, yhi) = ((fl(a), fl(b)) for a, b in P.domain.bbox)
    width = (dom_hi - dom_lo) * unit + 2 * margin
    height = (yhi - ylo) * unit + 2 * margin

    def sx(x: float) -> str:
        return format((x - dom_lo) * unit + margin, ".12g")

    def sy(y: float) -> str:
        return format((yhi - y) * unit + margin, ".12g")

    labels = P.labels()
    color = {lab: st["palette"][i % len(st["palette"])] for i, lab in enumerate(labels)}
    out = ['<?xml version="1.0" encoding="UTF-8"?>',
           f'<svg xmlns="http://www.w3.org/2000/svg" width="{format(width, ".12g")}" '
           f'height="{format(height, ".12g")}" viewBox="0 0 {format(width, ".12g")} {format(height, ".12g")}">']
    if st["title"]:
        out.append(f"<title>{escape(str(st['title']))}</title>")
    out.append('<g class="cells">')
    for lab, c in P.atoms:
        if P.dim == 1:
            x0, x1 = fl(c.vertices[0][0]), fl(c.vertices[1][0])
            pts = [(x0, ylo), (x1, ylo), (x1, yhi), (x0, yhi)]
        else:
            pts = [(fl(p[0]), fl(p[1])) for p in c.vertices]
        coords = " ".join(f"{sx(x)},{sy(y)}" for x, y in pts)
        out.append(f'<polygon points="{coords}" fill="{color[lab]}" stroke="{st["stroke"]}" '
                   f'stroke-width="1" data-label="{escape(_label_text(lab))}"/>')
    out.append("</g>")
    out.append('<g class="labels" text-anchor="middle" dominant-baseline="middle" '
               f'font-family="sans-serif" font-size="{st["font_size"]}">')
    for lab, idx in label_groups(P):
        big = max(idx, key=lambda i: geo.volume(P.atoms[i][1]))
        cen = geo.centroid(P.atoms[big][1])
        x = fl(cen[0])
        y = fl(cen[1]) if P.dim == 2 else (ylo + yhi) / 2
        out.append(f'<text x="{sx(x)}" y="{sy(y)}">{escape(_label_text(lab))}</text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _label_text(lab) -> str:
    if isinstance(lab, tuple):
        return ",".join(str(a) for a in lab)
    return str(lab)
