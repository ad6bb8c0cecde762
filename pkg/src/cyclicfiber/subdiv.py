"""Subdivisions and triangulations of C(n,d).

Triangulations are frozensets of cells; a cell is a sorted tuple of vertex
indices.  Flip enumeration is purely combinatorial: the circuits of C(n,d)
are exactly the (d+2)-subsets with alternating signs along the sorted order,
so a bistellar flip swaps one alternating half for the other whenever a half
is fully present.  Geometry (volumes, visibility, interior-disjointness)
enters only through exact rational predicates.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterable, Sequence

from . import lp
from .cyclic import (
    ParamVector,
    as_face,
    format_face,
    gale_evenness_is_face,
    parse_face,
    standard_params,
    vandermonde_volume,
)

Cell = tuple[int, ...]
Triangulation = frozenset[Cell]


# ---------------------------------------------------------------------------
# basic cell geometry
# ---------------------------------------------------------------------------


def cell_param_sign(pv: ParamVector, wall: Sequence[int], j: int) -> int:
    """Sign of prod_{g in wall}(t_j - t_g): which side of aff(wall) is j on."""
    val = Fraction(1)
    for g in wall:
        val *= pv.param(j) - pv.param(g)
    return (val > 0) - (val < 0)


def triangulate_cell(cell: Sequence[int], pv: ParamVector) -> Triangulation:
    """Placing triangulation of the subconfiguration, in increasing order."""
    cell = as_face(cell, pv.n)
    if len(cell) == pv.d + 1:
        return frozenset({cell})
    sub = placing_triangulation(pv.sub(cell))
    return frozenset(tuple(cell[i - 1] for i in simplex) for simplex in sub)


def cell_volume(cell: Sequence[int], pv: ParamVector) -> Fraction:
    """d!-scaled volume of conv(cell)."""
    return sum(
        (vandermonde_volume(s, pv) for s in triangulate_cell(cell, pv)), Fraction(0)
    )


@lru_cache(maxsize=None)
def _total_volume_cached(n: int, d: int, t: tuple) -> Fraction:
    pv = ParamVector(n, d, t)
    return cell_volume(tuple(range(1, n + 1)), pv)


def total_volume(pv: ParamVector) -> Fraction:
    return _total_volume_cached(pv.n, pv.d, pv.t)


def subconfig_face(subset: Iterable[int], cell: Sequence[int], d: int) -> bool:
    """Does `subset` span a proper face of the cyclic subpolytope conv(cell)?"""
    cell = tuple(sorted(cell))
    pos = {v: i + 1 for i, v in enumerate(cell)}
    subset = tuple(sorted(subset))
    if any(v not in pos for v in subset):
        raise ValueError("subset not within cell")
    return gale_evenness_is_face([pos[v] for v in subset], len(cell), d)


# ---------------------------------------------------------------------------
# placing (pushing) triangulations
# ---------------------------------------------------------------------------


def placing_triangulation(pv: ParamVector, order: Sequence[int] | None = None) -> Triangulation:
    """Insert points in `order`, joining each new point to its visible facets."""
    n, d = pv.n, pv.d
    order = list(order) if order is not None else list(range(1, n + 1))
    if sorted(order) != list(range(1, n + 1)):
        raise ValueError("insertion order must be a permutation of 1..n")
    cells = {tuple(sorted(order[: d + 1]))}
    for step in range(d + 1, n):
        p = order[step]
        for wall, owners in _walls(cells).items():
            if len(owners) != 1:
                continue
            apex = next(v for v in owners[0] if v not in wall)
            if cell_param_sign(pv, wall, p) == -cell_param_sign(pv, wall, apex):
                cells.add(tuple(sorted(wall + (p,))))
    return frozenset(cells)


def _walls(cells: Iterable[Cell]) -> dict[Cell, list[Cell]]:
    walls: dict[Cell, list[Cell]] = {}
    for c in cells:
        for i in range(len(c)):
            walls.setdefault(c[:i] + c[i + 1 :], []).append(c)
    return walls


def extend_by_placing(tri: Iterable[Cell], pv_ext: ParamVector) -> Triangulation:
    """Extend a triangulation of the first n points by placing point n+1."""
    cells = set(tuple(sorted(c)) for c in tri)
    p = pv_ext.n
    if any(p in c for c in cells):
        raise ValueError("triangulation already uses the new point")
    out = set(cells)
    for wall, owners in _walls(cells).items():
        if len(owners) != 1:
            continue
        apex = next(v for v in owners[0] if v not in wall)
        if cell_param_sign(pv_ext, wall, p) == -cell_param_sign(pv_ext, wall, apex):
            out.add(tuple(sorted(wall + (p,))))
    return frozenset(out)


# ---------------------------------------------------------------------------
# bistellar flips and exhaustive enumeration
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def circuits(n: int, d: int) -> tuple[tuple[Triangulation, Triangulation], ...]:
    """For each (d+2)-subset, the two triangulations of the circuit.

    The affine dependence alternates sign along the sorted subset, so the
    positive part sits at even positions and the negative at odd ones (0-based).
    A side's triangulation drops one element of that side from the subset.
    """
    out = []
    for z in combinations(range(1, n + 1), d + 2):
        plus = frozenset(z[:i] + z[i + 1 :] for i in range(0, d + 2, 2))
        minus = frozenset(z[:i] + z[i + 1 :] for i in range(1, d + 2, 2))
        out.append((plus, minus))
    return tuple(out)


def bistellar_flips(tri: Iterable[Cell], n: int, d: int) -> list[Triangulation]:
    """All triangulations one flip away."""
    tri = frozenset(tuple(sorted(c)) for c in tri)
    out = []
    for plus, minus in circuits(n, d):
        if plus <= tri:
            out.append(tri - plus | minus)
        elif minus <= tri:
            out.append(tri - minus | plus)
    return out


@lru_cache(maxsize=None)
def enumerate_triangulations(n: int, d: int) -> frozenset[Triangulation]:
    """Breadth-first flip closure from the placing triangulation.

    Complete because the flip graph of C(n,d) is connected.  Desk scale is
    n <= 10; n = 11 runs in minutes and sits behind the CLI --stretch flag.
    """
    if not 2 <= d < n:
        raise ValueError("enumeration supports 2 <= d < n")
    seed = placing_triangulation(standard_params(n, d))
    seen = {seed}
    frontier = [seed]
    while frontier:
        nxt = []
        for tri in frontier:
            for other in bistellar_flips(tri, n, d):
                if other not in seen:
                    seen.add(other)
                    nxt.append(other)
        frontier = nxt
    return frozenset(seen)


def flip_graph_stats(n: int, d: int) -> tuple[int, int]:
    """(number of triangulations, number of flip edges)."""
    tris = enumerate_triangulations(n, d)
    degree_sum = sum(len(bistellar_flips(t, n, d)) for t in tris)
    assert degree_sum % 2 == 0
    return len(tris), degree_sum // 2


# ---------------------------------------------------------------------------
# validity
# ---------------------------------------------------------------------------


def is_valid_triangulation(tri: Iterable[Cell], pv: ParamVector) -> bool:
    """Exact check: simplex cells, volume additivity, matching walls."""
    n, d = pv.n, pv.d
    cells = {tuple(sorted(c)) for c in tri}
    if not cells or any(len(c) != d + 1 for c in cells):
        return False
    vol = sum((vandermonde_volume(c, pv) for c in cells), Fraction(0))
    if vol != total_volume(pv):
        return False
    for wall, owners in _walls(cells).items():
        if len(owners) == 1:
            if not gale_evenness_is_face(wall, n, d):
                return False
        elif len(owners) == 2:
            a = next(v for v in owners[0] if v not in wall)
            b = next(v for v in owners[1] if v not in wall)
            if cell_param_sign(pv, wall, a) != -cell_param_sign(pv, wall, b):
                return False
        else:
            return False
    return True


def cells_compatible(a: Sequence[int], b: Sequence[int], pv: ParamVector) -> bool:
    """Can conv(a) and conv(b) be distinct cells of one subdivision?

    True iff conv(a) n conv(b) = conv(a n b) and the common part spans a face
    of both.  Because moment-curve points are in convex and general position,
    it is enough that the shared index set is a Gale face of each cell and
    that no common point of the hulls puts positive weight outside it.
    """
    a = as_face(a, pv.n)
    b = as_face(b, pv.n)
    shared = tuple(sorted(set(a) & set(b)))
    if set(a) <= set(b) or set(b) <= set(a):
        return False
    if pv.param(a[-1]) < pv.param(b[0]) or pv.param(b[-1]) < pv.param(a[0]):
        return True  # hulls live over disjoint parameter ranges
    if shared:
        if not subconfig_face(shared, a, pv.d) or not subconfig_face(shared, b, pv.d):
            return False
    # one common point with support outside the shared face would be a witness
    # against conv(a) n conv(b) = conv(shared); search for it exactly.
    dim = len(a) + len(b)
    homog = lambda i: [Fraction(1)] + [pv.param(i) ** k for k in range(1, pv.d + 1)]
    eqs = []
    for coord in range(pv.d + 1):
        eqs.append(
            tuple(homog(i)[coord] for i in a) + tuple(-homog(j)[coord] for j in b)
        )
    nonneg = [tuple(Fraction(int(i == j)) for i in range(dim)) for j in range(dim)]
    outside = tuple(
        Fraction(int(i not in shared)) for i in a
    ) + (Fraction(0),) * len(b)
    return lp.feasible([outside], nonneg, eqs, dim) is None


def is_valid_subdivision(cells: Iterable[Iterable[int]], pv: ParamVector) -> bool:
    """Exact validity: pairwise face-to-face cells covering C(n,d) once."""
    n, d = pv.n, pv.d
    cs = [as_face(c, n) for c in cells]
    if len(set(cs)) != len(cs) or not cs:
        return False
    for c in cs:
        if len(c) <= d:
            raise ValueError(f"cell {c} is lower-dimensional (needs > d = {d} vertices)")
    if sum((cell_volume(c, pv) for c in cs), Fraction(0)) != total_volume(pv):
        return False
    for x, y in combinations(cs, 2):
        if not cells_compatible(x, y, pv):
            return False
    return True


# ---------------------------------------------------------------------------
# ranking, type, census
# ---------------------------------------------------------------------------


def ranking(cells: Iterable[Iterable[int]], d: int) -> int:
    """Sum over non-simplex cells of their secondary-polytope dimensions."""
    return sum(len(c) - d - 1 for c in (tuple(c) for c in cells) if len(c) > d + 1)


def subdivision_type(cells: Iterable[Iterable[int]], d: int) -> tuple[int, ...]:
    """Sorted sizes of the non-simplex cells; () for a triangulation."""
    return tuple(sorted((len(c) for c in (tuple(c) for c in cells) if len(c) > d + 1)))


def format_type(sizes: Sequence[int], d: int) -> str:
    from collections import Counter

    if not sizes:
        return "[]"
    parts = []
    for s, r in sorted(Counter(sizes).items(), reverse=True):
        parts.append(f"{r}C({s},{d})" if r > 1 else f"C({s},{d})")
    return "[" + ",".join(parts) + "]"


@dataclass(frozen=True)
class Subdivision:
    """A polytopal subdivision of C(n,d) as a canonical tuple of cells."""

    n: int
    d: int
    cells: tuple[Cell, ...]

    @staticmethod
    def make(cells: Iterable[Iterable[int]], n: int, d: int) -> "Subdivision":
        return Subdivision(n, d, tuple(sorted(as_face(c, n) for c in cells)))

    @property
    def is_trivial(self) -> bool:
        return len(self.cells) == 1 and len(self.cells[0]) == self.n

    @property
    def is_triangulation(self) -> bool:
        return all(len(c) == self.d + 1 for c in self.cells)

    def ranking(self) -> int:
        return ranking(self.cells, self.d)

    def type_sizes(self) -> tuple[int, ...]:
        return subdivision_type(self.cells, self.d)

    def refines(self, coarser: "Subdivision") -> bool:
        """Baues order: every cell of self is contained in a cell of coarser."""
        return all(
            any(set(c) <= set(big) for big in coarser.cells) for c in self.cells
        )

    def __str__(self) -> str:
        return ",".join(format_face(c, self.n) for c in self.cells)


_compat_cache: dict[tuple, bool] = {}


def _tuples_of_copies(candidates: dict[int, list[Cell]], sizes: Sequence[int], compat):
    """All pairwise-compatible choices of one vertex set per requested size."""

    def extend(chosen: list[Cell], remaining: list[int]):
        if not remaining:
            yield list(chosen)
            return
        s = remaining[0]
        pool = candidates[s]
        start = 0
        if chosen and len(chosen[-1]) == s:
            start = pool.index(chosen[-1]) + 1  # same-size copies chosen in order
        for v in pool[start:]:
            if all(compat(v, c) for c in chosen):
                chosen.append(v)
                yield from extend(chosen, remaining[1:])
                chosen.pop()

    yield from extend([], sorted(sizes, reverse=True))


def enumerate_subdivisions_by_type(
    n: int,
    d: int,
    sizes: Sequence[int],
    pv: ParamVector | None = None,
) -> list[Subdivision]:
    """All subdivisions whose non-simplex cells are cyclic copies of `sizes`.

    Mirrors the census: fix one triangulation of every copy, then count the
    enumerated triangulations of C(n,d) containing all of them; merging the
    copies back yields each subdivision of the type exactly once.
    """
    sizes = sorted(sizes)
    if any(not d + 2 <= s <= n - 1 for s in sizes):
        raise ValueError("type sizes must lie in d+2 .. n-1")
    pv = pv or standard_params(n, d)
    tris = enumerate_triangulations(n, d)
    candidates = {
        s: list(combinations(range(1, n + 1), s)) for s in set(sizes)
    }

    def compat(x: Cell, y: Cell) -> bool:
        key = (pv.t, pv.d) + ((x, y) if x <= y else (y, x))
        if key not in _compat_cache:
            _compat_cache[key] = cells_compatible(key[2], key[3], pv)
        return _compat_cache[key]

    out: list[Subdivision] = []
    for copies in _tuples_of_copies(candidates, sizes, compat):
        fixed: set[Cell] = set()
        for v in copies:
            fixed |= triangulate_cell(v, pv)
        fixed_f = frozenset(fixed)
        for tri in tris:
            if fixed_f <= tri:
                rest = [c for c in tri if c not in fixed_f]
                out.append(Subdivision.make(list(copies) + rest, n, d))
    assert len(set(out)) == len(out)
    return out


def enumerate_proper_subdivisions(n: int, d: int, pv: ParamVector | None = None) -> list[Subdivision]:
    """Every proper subdivision: triangulations plus the full type census.

    Rankings are scanned in increasing order; once a ranking level is empty
    the scan stops, since any coarser subdivision refines into that level.
    """
    pv = pv or standard_params(n, d)
    out = [Subdivision.make(t, n, d) for t in enumerate_triangulations(n, d)]
    r = 1
    max_part = n - d - 2
    while max_part >= 1:
        level = 0
        for sizes in _partitions_as_sizes(r, max_part, d):
            subs = enumerate_subdivisions_by_type(n, d, sizes, pv)
            out.extend(subs)
            level += len(subs)
        if level == 0:
            break
        r += 1
    return out


def _partitions_as_sizes(r: int, max_part: int, d: int):
    """Multisets of cell sizes with total ranking r (parts s-d-1 <= max_part)."""

    def parts(rem: int, biggest: int):
        if rem == 0:
            yield []
            return
        for p in range(min(rem, biggest), 0, -1):
            for rest in parts(rem - p, p):
                yield [p] + rest

    for partition in parts(r, max_part):
        yield [p + d + 1 for p in partition]


# ---------------------------------------------------------------------------
# polygon dissections (d = 2) and Baues posets
# ---------------------------------------------------------------------------


def polygon_dissections(n: int) -> list[tuple[Cell, ...]]:
    """All dissections of the convex n-gon by non-crossing diagonals."""
    diagonals = [
        (i, j)
        for i in range(1, n + 1)
        for j in range(i + 2, n + 1)
        if not (i == 1 and j == n)
    ]

    def crossing(p, q):
        (a, b), (c, d2) = sorted((p, q))
        return a < c < b < d2

    out: list[tuple[Cell, ...]] = []

    def split(regions: list[Cell], diag) -> list[Cell]:
        a, b = diag
        for k, reg in enumerate(regions):
            if a in reg and b in reg:
                inner = tuple(v for v in reg if a <= v <= b)
                outer = tuple(v for v in reg if v <= a or v >= b)
                return regions[:k] + [inner, outer] + regions[k + 1 :]
        raise AssertionError("diagonal endpoints not in one region")

    def rec(start: int, chosen: list, regions: list[Cell]):
        out.append(tuple(sorted(regions)))
        for k in range(start, len(diagonals)):
            dk = diagonals[k]
            if all(not crossing(dk, c) for c in chosen):
                chosen.append(dk)
                rec(k + 1, chosen, split(regions, dk))
                chosen.pop()

    rec(0, [], [tuple(range(1, n + 1))])
    return out


def is_pi_induced(cells: Iterable[Iterable[int]], n: int, d: int, d_prime: int) -> bool:
    """Does every proper cell span a boundary face of C(n,d')?"""
    if not d < d_prime < n:
        raise ValueError("need d < d' < n")
    for c in cells:
        c = as_face(c, n)
        if len(c) == n:
            continue  # the trivial cell corresponds to the whole upper polytope
        if not gale_evenness_is_face(c, n, d_prime):
            return False
    return True


def pi_induced_violating_cell(cells, n, d, d_prime) -> Cell | None:
    for c in cells:
        c = as_face(c, n)
        if len(c) < n and not gale_evenness_is_face(c, n, d_prime):
            return c
    return None


def pi_compatibility_holds(sub: Subdivision, pv: ParamVector, d_prime: int) -> bool:
    """Literal fiber-compatibility condition on the face family, exactly.

    For every cell c and every face w of the subdivision complex inside c,
    no point of the upstairs face over c may project into conv(w) while
    carrying weight outside w.  Faces of cyclic polytopes are simplices with
    unique barycentric coordinates, which reduces the condition to a strict
    feasibility question downstairs.
    """
    faces: set[Cell] = set()
    for c in sub.cells:
        if len(c) == sub.n:
            return True  # trivial subdivision: nothing to check
        for k in range(1, min(len(c), pv.d) + 1):
            for w in combinations(c, k):
                if subconfig_face(w, c, pv.d):
                    faces.add(w)
    homog = lambda i: [Fraction(1)] + [pv.param(i) ** k for k in range(1, pv.d + 1)]
    for c in sub.cells:
        for w in faces:
            if set(w) <= set(c):
                dim = len(c) + len(w)
                eqs = []
                for coord in range(pv.d + 1):
                    eqs.append(
                        tuple(homog(i)[coord] for i in c)
                        + tuple(-homog(j)[coord] for j in w)
                    )
                nonneg = [
                    tuple(Fraction(int(i == j)) for i in range(dim)) for j in range(dim)
                ]
                outside = tuple(Fraction(int(i not in w)) for i in c) + (
                    Fraction(0),
                ) * len(w)
                if lp.feasible([outside], nonneg, eqs, dim) is not None:
                    return False
    return True


@dataclass
class BauesPoset:
    """pi-induced subdivisions of C(n,d) under refinement, top included last."""

    n: int
    d: int
    d_prime: int
    elements: tuple[Subdivision, ...]
    coherent: list[bool | None] = field(default_factory=list)

    def __post_init__(self):
        if not self.coherent:
            self.coherent = [None] * len(self.elements)

    @property
    def proper(self) -> tuple[Subdivision, ...]:
        return tuple(s for s in self.elements if not s.is_trivial)

    def leq(self, i: int, j: int) -> bool:
        return self.elements[i].refines(self.elements[j])

    def minimal_proper(self) -> list[int]:
        prop = [i for i, s in enumerate(self.elements) if not s.is_trivial]
        return [
            i
            for i in prop
            if not any(j != i and self.leq(j, i) for j in prop)
        ]

    def proper_euler_characteristic(self) -> int:
        prop = [i for i, s in enumerate(self.elements) if not s.is_trivial]
        return order_complex_euler(prop, self.leq)


def enumerate_baues_poset(n: int, d: int, d_prime: int, pv: ParamVector | None = None) -> BauesPoset:
    """All pi-induced subdivisions for C(n,d') -> C(n,d), ordered by refinement.

    For d = 2 this enumerates polygon dissections directly; otherwise it runs
    the type census, which is complete at the desk scales supported here.
    """
    if d == 2:
        families = [Subdivision.make(c, n, d) for c in polygon_dissections(n)]
    else:
        pv = pv or standard_params(n, d)
        families = enumerate_proper_subdivisions(n, d, pv)
        families.append(Subdivision.make([range(1, n + 1)], n, d))
    kept = [s for s in families if is_pi_induced(s.cells, n, d, d_prime)]
    kept.sort(key=lambda s: (s.ranking(), len(s.cells), s.cells))
    trivial = [s for s in kept if s.is_trivial]
    proper = [s for s in kept if not s.is_trivial]
    return BauesPoset(n, d, d_prime, tuple(proper + trivial))


def order_complex_euler(items: Sequence, leq: Callable) -> int:
    """Euler characteristic of the order complex: sum (-1)^k (#k-chains)."""
    m = len(items)
    strictly_below = [
        [j for j in range(m) if j != i and leq(items[j], items[i])] for i in range(m)
    ]
    # chains counted by dynamic programming over chain length
    chi = 0
    counts = [1] * m  # chains of a given length ending at each element
    sign = 1
    while any(counts):
        chi += sign * sum(counts)
        sign = -sign
        counts = [sum(counts[j] for j in strictly_below[i]) for i in range(m)]
    return chi


# ---------------------------------------------------------------------------
# symmetries, links, I/O
# ---------------------------------------------------------------------------


def relabel_triangulation(tri: Iterable[Cell], perm: dict[int, int]) -> Triangulation:
    return frozenset(tuple(sorted(perm[v] for v in c)) for c in tri)


def dihedral_group(n: int) -> list[dict[int, int]]:
    """The 2n relabelings generated by rotation i->i+1 and reflection i->n+1-i."""
    base = list(range(1, n + 1))
    perms = []
    for shift in range(n):
        rot = {i: base[(i - 1 + shift) % n] for i in base}
        perms.append(rot)
        perms.append({i: n + 1 - rot[i] for i in base})
    return perms


def reflection_group(n: int) -> list[dict[int, int]]:
    ident = {i: i for i in range(1, n + 1)}
    return [ident, {i: n + 1 - i for i in range(1, n + 1)}]


def symmetry_orbits(
    tris: Iterable[Triangulation], perms: Sequence[dict[int, int]]
) -> list[set[Triangulation]]:
    remaining = set(tris)
    orbits = []
    while remaining:
        t = remaining.pop()
        orbit = {relabel_triangulation(t, p) for p in perms}
        remaining -= orbit
        orbits.append(orbit)
    return orbits


def link_of_vertex(cells: Iterable[Cell], v: int) -> list[Cell]:
    return sorted(tuple(x for x in c if x != v) for c in cells if v in c)


def good_link_vertex(tri: Iterable[Cell], n: int, d: int, v: int) -> bool:
    """Is the link of v contained in the boundary complex of C(n-1,d)?"""
    relabel = {i: (i if i < v else i - 1) for i in range(1, n + 1) if i != v}
    for c in link_of_vertex(tri, v):
        if not gale_evenness_is_face([relabel[x] for x in c], n - 1, d):
            return False
    return True


def format_triangulation(tri: Iterable[Cell], n: int) -> str:
    return ",".join(format_face(c, n) for c in sorted(tri))


def parse_triangulation_line(line: str, n: int) -> Triangulation:
    return frozenset(parse_face(tok, n) for tok in line.strip().split(",") if tok)


def triangulations_to_json(tris: Iterable[Iterable[Cell]], n: int, d: int) -> list[dict]:
    return [
        {"n": n, "d": d, "cells": [list(c) for c in sorted(t)]} for t in tris
    ]


def read_triangulation_file(text: str, n: int) -> list[Triangulation]:
    """Digit-string lines for n <= 9, or the JSON export for any n."""
    import json

    stripped = text.lstrip()
    if stripped.startswith("[") or stripped.startswith("{"):
        payload = json.loads(text)
        if isinstance(payload, dict):
            payload = [payload]
        return [
            frozenset(as_face(c, entry["n"]) for c in entry["cells"])
            for entry in payload
        ]
    return [
        parse_triangulation_line(line, n)
        for line in text.splitlines()
        if line.strip()
    ]
