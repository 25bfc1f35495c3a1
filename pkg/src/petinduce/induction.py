"""Induced partitions and induced transformations of a PET on a half-space window.

Given a PET ``T`` on ``D``, a half-space ``H`` with window ``W = D cap H`` and
a partition ``P`` of ``D``, the induced partition splits ``W`` according to
the return word: the labels of ``P`` read along ``x, Tx, ..., T^(r-1)x`` where
``r`` is the first return time to ``W``.  It is computed by pulling the window
back through ``T`` one step at a time:

    Q <- {(empty word, W)},  K <- T(P ^ G)
    repeat:  Q <- T^-1(Q ^ K);  S <- S + (Q ^ H);  Q <- Q ^ (complement of H)
    until Q is empty

where ``G`` is a partition on whose atoms ``T`` is a single translation.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from . import geometry as geo
from .errors import EmptyWindow, GeometryError, NonTerminating
from .exactfield import ZERO
from .geometry import HalfSpace
from .partition import LabeledPartition
from .pet import Pet
from .words import Morphism2D, Word2D

DEFAULT_MAX_ITER = 10_000


def word_key(w: Sequence[int]) -> tuple:
    """Sort key of the return-word order: shorter first, then lexicographic."""
    return (len(w), tuple(w))


@dataclass
class InductionResult:
    partition: LabeledPartition
    substitution: Morphism2D
    return_words: list
    orientation: str
    iterations: int = 0
    window: Optional[geo.ConvexPolytope] = None
    words_by_letter: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"orientation": self.orientation,
                "return_words": [list(w) for w in self.return_words],
                "partition": self.partition.to_json(),
                "substitution": self.substitution.to_json()}


def _as_halfspace(v) -> HalfSpace:
    return v if isinstance(v, HalfSpace) else HalfSpace(v)


def _continuity_pieces(T: Pet, G: Optional[LabeledPartition]) -> list:
    """(cell, translation) pairs on which T is a single translation."""
    if G is None:
        return [(c, T.translations[lab]) for lab, c in T.partition.atoms]
    out = []
    for _, g in G.atoms:
        p = geo.interior_point(g)
        out.append((g, T.translation_at(p)))
    return out


def induced_partition(T: Pet, v, P: Optional[LabeledPartition] = None,
                      orientation: str = "column", G: Optional[LabeledPartition] = None,
                      max_iter: int = DEFAULT_MAX_ITER) -> InductionResult:
    """Partition of the window by return words over the labels of P."""
    if orientation not in ("row", "column"):
        raise ValueError("orientation must be 'row' or 'column'")
    H = _as_halfspace(v)
    Hc = H.complement()
    if P is None:
        P = T.partition
    if P.domain != T.domain:
        raise GeometryError("partition and PET have different domains")
    W = geo.clip(T.domain, H)
    if W is None:
        raise EmptyWindow("the half-space cuts no full-dimensional window out of the domain")

    # K = T(P ^ G), remembering the translation so that T^-1 is a plain shift
    K = []
    for a, p in P.atoms:
        for g, t in _continuity_pieces(T, G):
            c = geo.intersect(p, g)
            if c is not None:
                K.append((a, geo.translate(c, t), tuple(-x for x in t)))

    Q = [((), W)]
    S = []
    it = 0
    while Q:
        if it >= max_iter:
            raise NonTerminating(f"induction did not terminate within {max_iter} iterations")
        it += 1
        pulled = []
        for u, q in Q:
            for a, k, back in K:
                c = geo.intersect(q, k)
                if c is not None:
                    pulled.append(((a,) + u, geo.translate(c, back)))
        Q = []
        for w, c in pulled:
            inside = geo.clip(c, H)
            if inside is not None:
                S.append((w, inside))
            outside = geo.clip(c, Hc)
            if outside is not None:
                Q.append((w, outside))

    words = sorted({w for w, _ in S}, key=word_key)
    index = {w: i for i, w in enumerate(words)}
    atoms = sorted(((index[w], c) for w, c in S), key=lambda t: t[0])
    part = LabeledPartition(W, atoms)
    make = Word2D.column if orientation == "column" else Word2D.row
    sub = Morphism2D({i: make(w) for i, w in enumerate(words)})
    return InductionResult(part, sub, words, orientation, it, W, {i: w for i, w in enumerate(words)})


def induced_transformation(T: Pet, v, orientation: str = "column",
                           max_iter: int = DEFAULT_MAX_ITER) -> tuple[Pet, Morphism2D]:
    """First-return map of T on the window, with its return-word substitution."""
    res = induced_partition(T, v, T.partition, orientation, max_iter=max_iter)
    zero = tuple(ZERO for _ in range(T.dim))
    trans = {}
    for b, w in res.words_by_letter.items():
        t = zero
        for a in w:
            t = tuple(x + y for x, y in zip(t, T.translations[a]))
        trans[b] = t
    return Pet(res.partition, trans), res.substitution


def return_time(T: Pet, W: geo.ConvexPolytope, x, max_iter: int = DEFAULT_MAX_ITER) -> int:
    """Least k >= 1 with T^k x in the interior of W (OnBoundary if the orbit
    touches a cut or the window boundary)."""
    from .errors import OnBoundary
    from .pet import apply
    y = x
    for k in range(1, max_iter + 1):
        y = apply(T, y)
        s = W.contains(y)
        if s == 1:
            return k
        if s == 0:
            raise OnBoundary("orbit meets the window boundary", point=x, n=k)
    raise NonTerminating("no return within the iteration cap")
