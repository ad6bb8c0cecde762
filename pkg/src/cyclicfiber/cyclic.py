"""Cyclic polytopes C(n,d): realizations, Gale evenness, face classification.

Vertices are indexed 1..n and realized on the moment curve
t -> (t, t^2, ..., t^d) at strictly increasing rational parameters.  All face
tests here are purely combinatorial (Gale's Evenness Criterion); the
geometric counterparts used as oracles in the test suite live alongside.

Upper/lower convention: a facet is Upper when the outer normal of its
supporting hyperplane has positive last coordinate, equivalently when the
trailing contiguous block containing n has odd length.  Under this convention
the only upper facet of the polygon C(n,2) is the top chord {1,n}.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .linalg import Vector, frac, rank

FaceSet = tuple[int, ...]


@dataclass(frozen=True)
class ParamVector:
    """Strictly increasing rational parameters realizing C(n,d)."""

    n: int
    d: int
    t: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.t) != self.n:
            raise ValueError("len(t) != n")
        if not 1 <= self.d < self.n:
            raise ValueError("need 1 <= d < n")
        if any(a >= b for a, b in zip(self.t, self.t[1:])):
            raise ValueError("parameters must be strictly increasing")

    def param(self, i: int) -> Fraction:
        """Parameter of vertex i (1-based)."""
        return self.t[i - 1]

    def sub(self, indices: Iterable[int], d: int | None = None) -> "ParamVector":
        """Parameter vector of the subconfiguration spanned by `indices`."""
        idx = sorted(indices)
        return ParamVector(len(idx), self.d if d is None else d, tuple(self.t[i - 1] for i in idx))

    def with_dimension(self, d: int) -> "ParamVector":
        return ParamVector(self.n, d, self.t)


def params(ts: Sequence, d: int) -> ParamVector:
    return ParamVector(len(ts), d, tuple(frac(x) for x in ts))


def standard_params(n: int, d: int) -> ParamVector:
    """The paper-standard realization t = (1, 2, ..., n)."""
    return params(range(1, n + 1), d)


def symmetric_params(n: int, d: int) -> ParamVector:
    """Odd integers symmetric about 0, e.g. (-5,-3,-1,1,3,5) for n = 6."""
    return params(range(-(n - 1), n, 2), d)


def moment_points(pv: ParamVector) -> list[Vector]:
    """Point i is (t_i, t_i^2, ..., t_i^d); returned as n columns."""
    return [tuple(ti**k for k in range(1, pv.d + 1)) for ti in pv.t]


def homogenized_matrix(pv: ParamVector) -> list[Vector]:
    """(d+1) x n matrix: a row of ones on top of the moment points."""
    return [tuple(ti**k for ti in pv.t) for k in range(pv.d + 1)]


def homogenized_rank(pv: ParamVector) -> int:
    return rank(homogenized_matrix(pv))


def as_face(indices: Iterable[int], n: int) -> FaceSet:
    raw = tuple(indices)
    s = tuple(sorted(set(raw)))
    if s and (s[0] < 1 or s[-1] > n):
        raise ValueError(f"indices out of range 1..{n}: {s}")
    if len(s) != len(raw):
        raise ValueError(f"repeated indices in {raw}")
    return s


def _blocks(s: FaceSet) -> list[list[int]]:
    """Maximal runs of consecutive integers."""
    blocks: list[list[int]] = []
    for i in s:
        if blocks and i == blocks[-1][-1] + 1:
            blocks[-1].append(i)
        else:
            blocks.append([i])
    return blocks


def gale_evenness_is_face(s: Iterable[int], n: int, d: int) -> bool:
    """Does S span a proper boundary (|S|-1)-face of C(n,d)?

    Gale's Evenness Criterion: in the decomposition of S into contiguous
    blocks Y1 X1 ... Xt Y2 (only Y1 may contain 1, only Y2 may contain n),
    the number of interior blocks of odd length is at most d - |S|.
    """
    s = as_face(s, n)
    if not s:
        return True
    if len(s) > d:
        return False
    odd_interior = sum(
        1 for b in _blocks(s) if len(b) % 2 == 1 and b[0] != 1 and b[-1] != n
    )
    return odd_interior <= d - len(s)


@lru_cache(maxsize=None)
def enumerate_facets(n: int, d: int) -> tuple[FaceSet, ...]:
    """All facets (d-element Gale faces), in lexicographic order."""
    if not 1 <= d < n:
        raise ValueError("need 1 <= d < n")
    return tuple(
        s for s in combinations(range(1, n + 1), d) if gale_evenness_is_face(s, n, d)
    )


@lru_cache(maxsize=None)
def enumerate_faces(n: int, d: int, min_size: int = 1) -> tuple[FaceSet, ...]:
    """All proper boundary faces with at least `min_size` vertices."""
    out = []
    for k in range(min_size, d + 1):
        out.extend(
            s for s in combinations(range(1, n + 1), k) if gale_evenness_is_face(s, n, d)
        )
    return tuple(out)


class FaceClass(Enum):
    UPPER = "upper"
    LOWER = "lower"
    CONTOUR = "contour"


def classify_facet(s: Iterable[int], n: int, d: int) -> FaceClass:
    """Upper iff the trailing block containing n has odd length (empty = even)."""
    s = as_face(s, n)
    if len(s) != d or not gale_evenness_is_face(s, n, d):
        raise ValueError(f"{s} is not a facet of C({n},{d})")
    tail = _blocks(s)[-1] if s else []
    tail_len = len(tail) if tail and tail[-1] == n else 0
    return FaceClass.UPPER if tail_len % 2 == 1 else FaceClass.LOWER


def facet_upper_by_geometry(s: Iterable[int], pv: ParamVector) -> bool:
    """Geometric ground truth for classify_facet, from any realization.

    The supporting hyperplane of facet S is the graph of h(t) = prod(t - t_i),
    i in S; the outer normal has positive last coordinate exactly when h is
    negative at the remaining parameters.
    """
    s = as_face(s, pv.n)
    others = [i for i in range(1, pv.n + 1) if i not in s]
    signs = set()
    for j in others:
        val = Fraction(1)
        for i in s:
            val *= pv.param(j) - pv.param(i)
        signs.add(val > 0)
    if len(signs) != 1:
        raise ValueError(f"{s} is not a facet: points on both sides")
    return not signs.pop()


def classify_face(s: Iterable[int], n: int, d: int) -> FaceClass:
    """Upper/Lower if all containing facets agree, Contour otherwise."""
    s = as_face(s, n)
    if not gale_evenness_is_face(s, n, d):
        raise ValueError(f"{s} is not a face of C({n},{d})")
    classes = {
        classify_facet(f, n, d) for f in enumerate_facets(n, d) if set(s) <= set(f)
    }
    if len(classes) == 1:
        return classes.pop()
    return FaceClass.CONTOUR


def vandermonde_volume(s: Iterable[int], pv: ParamVector) -> Fraction:
    """d!-scaled simplex volume prod_{i<j in S}(t_j - t_i); |S| must be d+1."""
    s = as_face(s, pv.n)
    if len(s) != pv.d + 1:
        raise ValueError(f"need d+1 = {pv.d + 1} distinct indices, got {s}")
    vol = Fraction(1)
    for a, b in combinations(s, 2):
        vol *= pv.param(b) - pv.param(a)
    return vol


# ---------------------------------------------------------------------------
# text formats:  faces as digit strings for n <= 9, params as p/q lists
# ---------------------------------------------------------------------------


def format_face(s: FaceSet, n: int) -> str:
    if n <= 9:
        return "".join(str(i) for i in s)
    return ",".join(str(i) for i in s)


def parse_face(text: str, n: int) -> FaceSet:
    text = text.strip()
    if "," in text:
        return as_face((int(x) for x in text.split(",")), n)
    if n > 9:
        raise ValueError("digit-string faces are only defined for n <= 9")
    return as_face((int(c) for c in text), n)


def format_params(pv: ParamVector) -> str:
    return ",".join(str(x) for x in pv.t)


def parse_params(text: str, d: int) -> ParamVector:
    return params([frac(x.strip()) for x in text.strip().split(",")], d)
