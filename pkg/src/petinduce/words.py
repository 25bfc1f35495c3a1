"""Two-dimensional words and morphisms.

A :class:`Word2D` of shape ``(n1, n2)`` is indexed by ``(i, j)`` with
``0 <= i < n1`` growing to the right and ``0 <= j < n2`` growing upward
(Cartesian convention).  Entries are kept as a tuple of columns.
"""
from __future__ import annotations

from typing import Iterable, Mapping, Optional, Sequence

import numpy as np

from .errors import NotAPermutation, NotEndomorphism, ParseError, ShapeMismatch, UnknownLetter


class Word2D:
    __slots__ = ("shape", "cols")

    def __init__(self, cols: Iterable[Sequence[int]], n2: Optional[int] = None):
        cols = tuple(tuple(c) for c in cols)
        if n2 is None:
            n2 = len(cols[0]) if cols else 0
        if any(len(c) != n2 for c in cols):
            raise ShapeMismatch("columns of a 2-dimensional word must have equal height")
        self.cols = cols
        self.shape = (len(cols), n2)

    @classmethod
    def letter(cls, a: int) -> "Word2D":
        return cls(((a,),))

    @classmethod
    def column(cls, letters: Sequence[int]) -> "Word2D":
        """Vertical word, position 0 at the bottom."""
        return cls((tuple(letters),))

    @classmethod
    def row(cls, letters: Sequence[int]) -> "Word2D":
        """Horizontal word, position 0 at the left."""
        return cls(tuple((a,) for a in letters), 1 if letters else 0)

    @classmethod
    def from_rows_top_down(cls, rows: Sequence[Sequence[int]]) -> "Word2D":
        """Build from a matrix as printed on paper (first row is the top)."""
        rows = [tuple(r) for r in rows]
        if not rows:
            return cls((), 0)
        n1 = len(rows[0])
        if any(len(r) != n1 for r in rows):
            raise ShapeMismatch("ragged matrix")
        n2 = len(rows)
        return cls(tuple(tuple(rows[n2 - 1 - j][i] for j in range(n2)) for i in range(n1)), n2)

    @classmethod
    def from_array(cls, arr: Sequence[Sequence[int]]) -> "Word2D":
        """From ``arr[i][j]`` nested lists (as returned by ``code_config``)."""
        arr = [tuple(c) for c in arr]
        return cls(arr, len(arr[0]) if arr else 0)

    @classmethod
    def empty(cls, n1: int = 0, n2: int = 0) -> "Word2D":
        if n1 and n2:
            raise ShapeMismatch("an empty word has a zero side")
        return cls(tuple(() for _ in range(n1)), n2)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.cols[i][j]

    def rows_top_down(self) -> list[tuple]:
        n1, n2 = self.shape
        return [tuple(self.cols[i][j] for i in range(n1)) for j in reversed(range(n2))]

    def letters(self) -> set:
        return {a for c in self.cols for a in c}

    def entries(self) -> list[int]:
        """Column-major, j ascending."""
        return [a for c in self.cols for a in c]

    def is_empty(self) -> bool:
        return self.shape[0] == 0 or self.shape[1] == 0

    def __eq__(self, other):
        if not isinstance(other, Word2D):
            return NotImplemented
        if self.is_empty() and other.is_empty():
            return True
        return self.shape == other.shape and self.cols == other.cols

    def __hash__(self):
        return hash((self.shape, self.cols)) if not self.is_empty() else hash("empty-word")

    def __repr__(self):
        return f"Word2D(shape={self.shape}, rows_top_down={self.rows_top_down()})"

    def __str__(self):
        rows = self.rows_top_down()
        if not rows:
            return "()"
        width = max(len(str(a)) for r in rows for a in r)
        return "\n".join(" ".join(str(a).rjust(width) for a in r) for r in rows)

    def to_json(self) -> dict:
        return {"shape": list(self.shape), "entries": self.entries()}

    @classmethod
    def from_json(cls, obj: Mapping) -> "Word2D":
        try:
            n1, n2 = obj["shape"]
            e = list(obj["entries"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"malformed word JSON: {exc}") from exc
        if len(e) != n1 * n2:
            raise ParseError("entries count differs from n1*n2")
        return cls(tuple(tuple(e[i * n2:(i + 1) * n2]) for i in range(n1)), n2)


def concat(u: Word2D, v: Word2D, direction: int) -> Word2D:
    """u followed by v along e1 (direction 1) or e2 (direction 2)."""
    if direction == 1:
        if v.shape[0] == 0 and (v.shape[1] == u.shape[1] or v.is_empty()):
            return u
        if u.shape[0] == 0 and (u.shape[1] == v.shape[1] or u.is_empty()):
            return v
        if u.shape[1] != v.shape[1]:
            raise ShapeMismatch(f"cannot concatenate shapes {u.shape} and {v.shape} in direction 1")
        return Word2D(u.cols + v.cols, u.shape[1])
    if direction == 2:
        if v.shape[1] == 0 and (v.shape[0] == u.shape[0] or v.is_empty()):
            return u
        if u.shape[1] == 0 and (u.shape[0] == v.shape[0] or u.is_empty()):
            return v
        if u.shape[0] != v.shape[0]:
            raise ShapeMismatch(f"cannot concatenate shapes {u.shape} and {v.shape} in direction 2")
        return Word2D(tuple(a + b for a, b in zip(u.cols, v.cols)), u.shape[1] + v.shape[1])
    raise ValueError("direction must be 1 or 2")


class Morphism2D:
    """Letter -> Word2D map extended to words by block substitution."""

    __slots__ = ("images",)

    def __init__(self, images: Mapping[int, Word2D]):
        imgs = {}
        for a, w in images.items():
            if not isinstance(w, Word2D):
                w = Word2D.column(w) if isinstance(w, (list, tuple)) else w
            if w.is_empty():
                raise ShapeMismatch(f"image of {a} has a zero side")
            imgs[a] = w
        self.images = dict(sorted(imgs.items()))

    @classmethod
    def identity(cls, alphabet: Iterable[int]) -> "Morphism2D":
        return cls({a: Word2D.letter(a) for a in alphabet})

    @classmethod
    def from_columns(cls, images: Mapping[int, Sequence[int]]) -> "Morphism2D":
        return cls({a: Word2D.column(w) for a, w in images.items()})

    @classmethod
    def from_rows(cls, images: Mapping[int, Sequence[int]]) -> "Morphism2D":
        return cls({a: Word2D.row(w) for a, w in images.items()})

    def domain(self) -> list[int]:
        return list(self.images)

    def codomain_letters(self) -> set:
        out = set()
        for w in self.images.values():
            out |= w.letters()
        return out

    def __call__(self, u):
        if isinstance(u, Word2D):
            return apply(self, u)
        return self.image(u)

    def image(self, a) -> Word2D:
        try:
            return self.images[a]
        except KeyError:
            raise UnknownLetter(f"letter {a!r} is not in the morphism's domain") from None

    def __len__(self):
        return len(self.images)

    def __eq__(self, other):
        if not isinstance(other, Morphism2D):
            return NotImplemented
        return self.images == other.images

    def __hash__(self):
        return hash(tuple(self.images.items()))

    def __mul__(self, other: "Morphism2D") -> "Morphism2D":
        return compose(self, other)

    def __repr__(self):
        return f"Morphism2D({len(self.images)} letters)"

    def __str__(self):
        return format_morphism(self)

    def differences(self, other: "Morphism2D") -> list:
        """Letters whose images differ (including letters present on one side only)."""
        keys = sorted(set(self.images) | set(other.images))
        return [a for a in keys if self.images.get(a) != other.images.get(a)]

    def to_json(self) -> dict:
        return {"images": {str(a): w.to_json() for a, w in self.images.items()}}

    @classmethod
    def from_json(cls, obj: Mapping) -> "Morphism2D":
        try:
            return cls({int(a): Word2D.from_json(w) for a, w in obj["images"].items()})
        except (KeyError, AttributeError, TypeError, ValueError) as exc:
            if isinstance(exc, ParseError):
                raise
            raise ParseError(f"malformed morphism JSON: {exc}") from exc


def apply(m: Morphism2D, u: Word2D) -> Word2D:
    """Block substitution: each column is substituted and stacked upward, then
    the resulting columns are joined left to right."""
    result = None
    for col in u.cols:
        block = None
        for a in col:
            w = m.image(a)
            block = w if block is None else concat(block, w, 2)
        if block is None:
            continue
        result = block if result is None else concat(result, block, 1)
    return result if result is not None else Word2D.empty()


def compose(*ms: Morphism2D) -> Morphism2D:
    """compose(m1, m2, ..., mk): a -> m1(m2(...mk(a))); the rightmost acts first."""
    if not ms:
        raise ValueError("compose needs at least one morphism")
    out = ms[-1]
    for m in reversed(ms[:-1]):
        out = Morphism2D({a: apply(m, w) for a, w in out.images.items()})
    return out


def from_permutation(p: Mapping[int, int]) -> Morphism2D:
    if len(set(p.values())) != len(p):
        raise NotAPermutation("letter map is not injective")
    return Morphism2D({a: Word2D.letter(b) for a, b in p.items()})


def inverse_permutation(m: Morphism2D) -> Morphism2D:
    inv = {}
    for a, w in m.images.items():
        if w.shape != (1, 1):
            raise NotAPermutation(f"image of {a} is not a single letter")
        b = w.cols[0][0]
        if b in inv:
            raise NotAPermutation(f"letter {b} has two preimages")
        inv[b] = a
    return from_permutation(inv)


def conjugating_permutations(m: Morphism2D, n: Morphism2D, limit: int = 2) -> list[dict]:
    """Letter bijections pi with pi^-1 m pi = n, i.e. m(pi(a)) = pi(n(a)) letterwise.

    Backtracking search: choosing pi(a) = b forces pi on every letter of n(a),
    since n(a) and m(b) must agree position by position.  At most ``limit``
    solutions are returned.
    """
    A, B = list(n.images), list(m.images)
    if len(A) != len(B):
        return []
    found: list[dict] = []

    def assign(pi: dict, used: set, a, b) -> bool:
        stack = [(a, b)]
        while stack:
            x, y = stack.pop()
            if x in pi:
                if pi[x] != y:
                    return False
                continue
            if y in used or x not in n.images or y not in m.images:
                return False
            wx, wy = n.images[x], m.images[y]
            if wx.shape != wy.shape:
                return False
            pi[x] = y
            used.add(y)
            stack.extend(zip(wx.entries(), wy.entries()))
        return True

    def search(pi: dict, used: set) -> None:
        if len(found) >= limit:
            return
        free = [a for a in A if a not in pi]
        if not free:
            found.append(dict(sorted(pi.items())))
            return
        a = free[0]
        for b in B:
            if b in used:
                continue
            p2, u2 = dict(pi), set(used)
            if assign(p2, u2, a, b):
                search(p2, u2)

    search({}, set())
    return found


def incidence_matrix(m: Morphism2D, alphabet: Optional[Sequence[int]] = None) -> np.ndarray:
    """M[b, a] = number of occurrences of b in m(a) (rows: target letters)."""
    src = list(m.images)
    tgt = list(alphabet) if alphabet is not None else sorted(set(src) | m.codomain_letters())
    index = {b: i for i, b in enumerate(tgt)}
    M = np.zeros((len(tgt), len(src)), dtype=object)
    for j, a in enumerate(src):
        for b in m.images[a].entries():
            M[index[b], j] += 1
    return M


def _check_endomorphism(m: Morphism2D) -> list[int]:
    dom = list(m.images)
    if not m.codomain_letters() <= set(dom):
        raise NotEndomorphism("images use letters outside the domain")
    return dom


def primitivity_witness(m: Morphism2D, m_max: Optional[int] = None) -> Optional[int]:
    """Least k <= m_max with every entry of M^k positive, or None."""
    dom = _check_endomorphism(m)
    n = len(dom)
    if m_max is None:
        m_max = 2 * n * n
    M = (incidence_matrix(m, dom) > 0).astype(np.int64)
    P = M.copy()
    for k in range(1, m_max + 1):
        if P.all():
            return k
        P = ((P @ M) > 0).astype(np.int64)
    return None


def is_primitive(m: Morphism2D, m_max: Optional[int] = None) -> bool:
    return primitivity_witness(m, m_max) is not None


def _next_shapes(m: Morphism2D, dom: list, shapes: dict) -> dict:
    """Shapes of m^(k+1)(a) from the shapes of m^k(b): widths add along the bottom
    row of m(a), heights add along its first column."""
    new = {}
    for a in dom:
        w = m.images[a]
        width = sum(shapes[w.cols[i][0]][0] for i in range(w.shape[0]))
        height = sum(shapes[b][1] for b in w.cols[0])
        new[a] = (width, height)
    return new


def power_shapes(m: Morphism2D, k: int) -> dict:
    """Shape of m^k(a) for every letter a, without building the words."""
    dom = _check_endomorphism(m)
    shapes = {a: (1, 1) for a in dom}
    for _ in range(k):
        shapes = _next_shapes(m, dom, shapes)
    return shapes


def expansivity_witness(m: Morphism2D, m_max: int = 20, K: int = 10) -> Optional[int]:
    """Least k <= m_max with min(shape(m^k(a))) > K for all a, or None."""
    dom = _check_endomorphism(m)
    shapes = {a: (1, 1) for a in dom}
    for k in range(1, m_max + 1):
        shapes = _next_shapes(m, dom, shapes)
        if all(min(s) > K for s in shapes.values()):
            return k
    return None


def is_expansive(m: Morphism2D, m_max: int = 20, K: int = 10) -> bool:
    return expansivity_witness(m, m_max, K) is not None


def format_morphism(m: Morphism2D) -> str:
    """Text table mirroring printed substitutions (matrices shown top row first)."""
    lines = []
    for a, w in m.images.items():
        rows = w.rows_top_down()
        head = f"{a} |-> "
        if w.shape == (1, 1):
            lines.append(head + f"({rows[0][0]})")
            continue
        pad = " " * len(head)
        for k, r in enumerate(rows):
            lines.append((head if k == 0 else pad) + "(" + " ".join(str(x) for x in r) + ")")
    return "\n".join(lines)
