"""Cellular strings, monotone edge paths and cyclic zonotopes.

Sign vectors over {+, 0, -} encode both the faces of the cyclic zonotope
Z(n,d) and the cellular strings on C(n,d) for the projection to the first
coordinate.  The statistic m(lambda) = even gaps + odd gaps + zeros controls
everything: proper zonotope faces satisfy m <= d-1, coherent strings
m <= d-2.

String coherence is decided two independent ways: the m-statistic criterion
and a strict feasibility system over the coefficients of a degree-<=d
polynomial lifting whose lower hull must reproduce the string.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Sequence

from . import lp
from .cyclic import FaceSet, ParamVector, enumerate_faces
from .linalg import Vector, frac, rank, vec

PLUS, MINUS, NULL = 1, -1, 0

SignVector = tuple[int, ...]


def sign_vector(text: str) -> SignVector:
    table = {"+": PLUS, "-": MINUS, "0": NULL}
    return tuple(table[c] for c in text.strip())


def format_sign_vector(lam: Sequence[int]) -> str:
    table = {PLUS: "+", MINUS: "-", NULL: "0"}
    return "".join(table[x] for x in lam)


def m_stat(lam: Sequence[int]) -> int:
    """Even gaps + odd gaps + zero entries.

    A gap is a pair of consecutive nonzero entries: an even gap has opposite
    signs separated by an even number of zeros (possibly none), an odd gap
    equal signs separated by an odd number.
    """
    lam = tuple(lam)
    zeros = sum(1 for x in lam if x == NULL)
    gaps = 0
    nz = [(i, x) for i, x in enumerate(lam) if x != NULL]
    for (i, a), (j, b) in zip(nz, nz[1:]):
        between = j - i - 1
        if (a != b and between % 2 == 0) or (a == b and between % 2 == 1):
            gaps += 1
    return gaps + zeros


def run_count(lam: Sequence[int]) -> int:
    """Number of maximal constant runs of a zero-free sign vector."""
    lam = tuple(lam)
    if NULL in lam:
        raise ValueError("run count is defined for zero-free vectors")
    return 1 + sum(1 for a, b in zip(lam, lam[1:]) if a != b)


def sign_leq(a: Sequence[int], b: Sequence[int]) -> bool:
    """Componentwise order generated by + < 0 and - < 0."""
    return all(x == y or y == NULL for x, y in zip(a, b)) and len(a) == len(b)


@lru_cache(maxsize=None)
def zonotope_face_poset(n: int, d: int) -> tuple[SignVector, ...]:
    """Proper faces of Z(n,d): nonzero sign vectors with m(lambda) <= d-1."""
    from itertools import product

    return tuple(
        sorted(
            lam
            for lam in product((PLUS, NULL, MINUS), repeat=n)
            if any(lam) and m_stat(lam) <= d - 1
        )
    )


# ---------------------------------------------------------------------------
# cellular strings
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CellularString:
    """Monotone sequence of boundary faces from vertex 1 to vertex n."""

    n: int
    d: int
    faces: tuple[FaceSet, ...]

    def __post_init__(self):
        if not self.faces:
            raise ValueError("empty string")
        if 1 not in self.faces[0] or self.n not in self.faces[-1]:
            raise ValueError("string must start at vertex 1 and end at vertex n")
        for f in self.faces:
            if len(f) < 2:
                raise ValueError("string faces need at least two vertices")
            if not enumerate_faces_contains(self.n, self.d, f):
                raise ValueError(f"{f} is not a boundary face of C({self.n},{self.d})")
        for a, b in zip(self.faces, self.faces[1:]):
            if max(a) != min(b):
                raise ValueError("consecutive faces must share their break vertex")

    @property
    def junctions(self) -> tuple[int, ...]:
        return (1,) + tuple(max(f) for f in self.faces)

    def is_tight(self) -> bool:
        return all(len(f) == 2 for f in self.faces)

    def leq(self, other: "CellularString") -> bool:
        """Baues refinement: every face contained in a face of `other`."""
        return all(
            any(set(f) <= set(g) for g in other.faces) for f in self.faces
        )

    def __str__(self) -> str:
        if self.is_tight():
            return "-".join(str(f[0]) for f in self.faces) + f"-{self.n}"
        return ";".join("".join(str(v) for v in f) for f in self.faces)


def enumerate_faces_contains(n: int, d: int, f: FaceSet) -> bool:
    from .cyclic import gale_evenness_is_face

    return gale_evenness_is_face(f, n, d)


def lambda_of_string(sigma: CellularString) -> SignVector:
    """The length n-2 encoding over interior vertices 2..n-1.

    + when the vertex appears in no face, - when it is the initial or
    terminal vertex of some face, 0 otherwise.
    """
    n = sigma.n
    ends = set()
    members = set()
    for f in sigma.faces:
        ends.add(min(f))
        ends.add(max(f))
        members.update(f)
    out = []
    for i in range(2, n):
        if i not in members:
            out.append(PLUS)
        elif i in ends:
            out.append(MINUS)
        else:
            out.append(NULL)
    return tuple(out)


def string_of_lambda(lam: Sequence[int], n: int, d: int) -> CellularString:
    """Reconstruct the string with a given encoding (inverse of lambda_of_string)."""
    lam = tuple(lam)
    if len(lam) != n - 2:
        raise ValueError("encoding must have length n-2")
    junctions = [1] + [i for i in range(2, n) if lam[i - 2] == MINUS] + [n]
    faces = []
    for a, b in zip(junctions, junctions[1:]):
        face = [a] + [i for i in range(a + 1, b) if lam[i - 2] == NULL] + [b]
        faces.append(tuple(face))
    return CellularString(n, d, tuple(faces))


@lru_cache(maxsize=None)
def enumerate_cellular_strings(n: int, d: int) -> tuple[CellularString, ...]:
    """All cellular strings, composed from boundary faces bucketed by span."""
    buckets: dict[int, list[FaceSet]] = {}
    for f in enumerate_faces(n, d, min_size=2):
        buckets.setdefault(min(f), []).append(f)
    out: list[CellularString] = []

    def grow(chain: list[FaceSet]):
        last = max(chain[-1])
        if last == n:
            out.append(CellularString(n, d, tuple(chain)))
            return
        for f in buckets.get(last, ()):
            chain.append(f)
            grow(chain)
            chain.pop()

    for f in buckets.get(1, ()):
        grow([f])
    return tuple(out)


def enumerate_monotone_paths(n: int, d: int) -> tuple[CellularString, ...]:
    return tuple(s for s in enumerate_cellular_strings(n, d) if s.is_tight())


def is_coherent_string(lam: Sequence[int], d: int) -> bool:
    """The m-statistic criterion: coherent iff m(lambda) <= d-2."""
    return m_stat(lam) <= d - 2


def string_coherence_system(sigma: CellularString, pv: ParamVector) -> lp.StrictSystem:
    """Feasibility system over polynomial coefficients a_0..a_d.

    The lower hull of {(t_i, f(t_i))} must consist exactly of the string's
    faces: members of a face lift onto its chord, absent vertices lift
    strictly above the chord spanning them, and the hull folds strictly at
    every interior junction.
    """
    n, d = pv.n, pv.d
    if sigma.n != n or sigma.d != d:
        raise ValueError("string does not match the parameter vector")

    def poly_row(indices: tuple[int, int, int], middle_sign: int) -> Vector:
        a, m, b = indices
        ta, tm, tb = pv.param(a), pv.param(m), pv.param(b)
        dep = {a: tb - tm, m: -(tb - ta), b: tm - ta}  # vanishes on deg <= 1
        if middle_sign > 0:
            dep = {k: -v for k, v in dep.items()}
        # compose with the moment lift: row_k = sum_i dep_i t_i^k
        return tuple(
            sum((c * pv.param(i) ** k for i, c in dep.items()), Fraction(0))
            for k in range(d + 1)
        )

    strict: list[Vector] = []
    eqs: list[Vector] = []
    junctions = sigma.junctions
    spans = list(zip(junctions, junctions[1:]))
    for f, (a, b) in zip(sigma.faces, spans):
        for i in f:
            if a < i < b:
                eqs.append(poly_row((a, i, b), middle_sign=0))
    members = {i for f in sigma.faces for i in f}
    for i in range(2, n):
        if i not in members:
            a, b = next(sp for sp in spans if sp[0] < i < sp[1])
            strict.append(poly_row((a, i, b), middle_sign=+1))
    for j in range(1, len(junctions) - 1):
        strict.append(
            poly_row((junctions[j - 1], junctions[j], junctions[j + 1]), middle_sign=-1)
        )
    return lp.StrictSystem(tuple(strict), tuple(eqs), d + 1)


def is_coherent_string_lp(sigma: CellularString, pv: ParamVector) -> lp.FeasibilityResult:
    return lp.solve_strict(string_coherence_system(sigma, pv))


def count_coherent_paths(n: int, d: int) -> int:
    """Closed form 2 * sum_{j<=d-2} C(n-3, j)."""
    if n < 3 or d < 2:
        raise ValueError("need n >= 3 and d >= 2")
    return 2 * sum(comb(n - 3, j) for j in range(0, d - 1))


def path_count_upper_bound(n: int, d: int) -> int:
    """2 * q_{d-2}(C(n,3) - 1), the hyperplane-arrangement region bound."""
    if n < 3 or d < 2:
        raise ValueError("need n >= 3 and d >= 2")
    m = comb(n, 3) - 1
    return 2 * sum(comb(m, j) for j in range(0, d - 1))


# ---------------------------------------------------------------------------
# monotone paths of a general polytope (the UBC counterexample machinery)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GeneralPolytope:
    """Full-dimensional polytope given by exact vertex columns."""

    vertices: tuple[Vector, ...]
    dim: int

    @staticmethod
    def from_columns(matrix: Sequence[Sequence]) -> "GeneralPolytope":
        rows = [vec(r) for r in matrix]
        d = len(rows)
        nv = len(rows[0])
        verts = tuple(tuple(rows[k][j] for k in range(d)) for j in range(nv))
        p = GeneralPolytope(verts, d)
        p.validate()
        return p

    def validate(self):
        n, d = len(self.vertices), self.dim
        diffs = [
            tuple(v[k] - self.vertices[0][k] for k in range(d))
            for v in self.vertices[1:]
        ]
        if rank(diffs) != d:
            raise ValueError("vertex set is not full-dimensional")
        for j, v in enumerate(self.vertices):
            others = [u for i, u in enumerate(self.vertices) if i != j]
            homog_eqs = []
            for k in range(d):
                homog_eqs.append(tuple(u[k] for u in others) + (-v[k],))
            homog_eqs.append(tuple(Fraction(1) for _ in others) + (Fraction(-1),))
            nn = [
                tuple(Fraction(int(i == m)) for i in range(len(others) + 1))
                for m in range(len(others))
            ]
            strict = [tuple(Fraction(int(i == len(others))) for i in range(len(others) + 1))]
            if lp.feasible(strict, nn, homog_eqs, len(others) + 1) is not None:
                raise ValueError(f"vertex {j + 1} is not extreme")


def polytope_edges(p: GeneralPolytope) -> list[tuple[int, int]]:
    """1-based vertex pairs spanning edges, by exact supporting-functional LPs."""
    n, d = len(p.vertices), p.dim
    out = []
    for a, b in combinations(range(n), 2):
        u, v = p.vertices[a], p.vertices[b]
        eq = [tuple(u[k] - v[k] for k in range(d))]
        strict = []
        for j in range(n):
            if j not in (a, b):
                x = p.vertices[j]
                strict.append(tuple(u[k] - x[k] for k in range(d)))
        res = lp.solve_strict(lp.StrictSystem(tuple(strict), tuple(eq), d))
        if isinstance(res, lp.Witness):
            out.append((a + 1, b + 1))
    return out


def monotone_edge_paths(p: GeneralPolytope, direction: int) -> list[tuple[int, ...]]:
    """Vertex index paths from the direction-min to the direction-max vertex."""
    n = len(p.vertices)
    key = [v[direction - 1] for v in p.vertices]
    if len(set(key)) != n:
        raise ValueError("direction is not generic: tied coordinate values")
    lo = min(range(n), key=lambda j: key[j]) + 1
    hi = max(range(n), key=lambda j: key[j]) + 1
    adj: dict[int, list[int]] = {j: [] for j in range(1, n + 1)}
    for a, b in polytope_edges(p):
        if key[a - 1] < key[b - 1]:
            adj[a].append(b)
        else:
            adj[b].append(a)
    out: list[tuple[int, ...]] = []

    def dfs(v: int, acc: list[int]):
        if v == hi:
            out.append(tuple(acc))
            return
        for w in sorted(adj[v], key=lambda j: key[j - 1]):
            acc.append(w)
            dfs(w, acc)
            acc.pop()

    dfs(lo, [lo])
    return out


def path_coherence_system(
    p: GeneralPolytope, path: Sequence[int], direction: int
) -> lp.StrictSystem:
    """Every non-edge vertex strictly above every path edge's lifted line.

    Unknowns are the coefficients of a functional f with f_direction = 0; for
    a generic direction the system is feasible exactly when the lower hull of
    {(x_direction, f(x))} is the path.
    """
    d = p.dim
    strict = []
    for u_i, v_i in zip(path, path[1:]):
        u, v = p.vertices[u_i - 1], p.vertices[v_i - 1]
        a, b = u[direction - 1], v[direction - 1]
        for j in range(1, len(p.vertices) + 1):
            if j in (u_i, v_i):
                continue
            x = p.vertices[j - 1]
            xi = x[direction - 1]
            row = tuple(
                (b - a) * x[k] - (b - xi) * u[k] - (xi - a) * v[k] for k in range(d)
            )
            strict.append(row)
    eqs = [tuple(Fraction(int(k == direction - 1)) for k in range(d))]
    return lp.StrictSystem(tuple(strict), tuple(eqs), d)


def coherent_paths_of_general_polytope(
    p: GeneralPolytope, direction: int
) -> list[tuple[int, ...]]:
    out = []
    for path in monotone_edge_paths(p, direction):
        res = lp.solve_strict(path_coherence_system(p, path, direction))
        if isinstance(res, lp.Witness):
            out.append(path)
    return out


def cyclic_as_general_polytope(pv: ParamVector) -> GeneralPolytope:
    from .cyclic import moment_points

    return GeneralPolytope(tuple(moment_points(pv)), pv.d)


def parse_matrix(text: str) -> GeneralPolytope:
    rows = []
    for line in text.strip().splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        rows.append([frac(tok) for tok in line.replace(",", " ").split()])
    if len({len(r) for r in rows}) != 1:
        raise ValueError("ragged matrix")
    return GeneralPolytope.from_columns(rows)
