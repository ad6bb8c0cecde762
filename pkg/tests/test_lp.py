import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cyclicfiber import lp

entries = st.integers(min_value=-6, max_value=6)


def build(strict, eqs, dim):
    return lp.StrictSystem.build(strict, eqs, dim)


def test_single_positive():
    res = lp.solve_strict(build([[1]], [], 1))
    assert isinstance(res, lp.Witness) and res.x[0] > 0


def test_contradiction_yields_certificate():
    res = lp.solve_strict(build([[1], [-1]], [], 1))
    assert isinstance(res, lp.Certificate)
    assert res.y == (Fraction(1), Fraction(1))


def test_empty_system_is_witnessed_by_zero():
    res = lp.solve_strict(build([], [[1, 1]], 2))
    assert isinstance(res, lp.Witness) and res.x == (0, 0)


def test_equality_rows_respected():
    res = lp.solve_strict(build([[1, 0]], [[1, 1]], 2))
    assert isinstance(res, lp.Witness)
    assert res.x[0] > 0 and res.x[0] + res.x[1] == 0


def test_row_killed_by_equalities():
    res = lp.solve_strict(build([[1, 1]], [[1, 1]], 2))
    assert isinstance(res, lp.Certificate)


def test_dimension_mismatch_rejected():
    with pytest.raises(ValueError):
        build([[1, 2, 3]], [], 2)


def test_mixed_feasibility():
    # x > 0, y >= 0, x + y = 0 forces y = -x < 0: infeasible
    assert lp.feasible([[1, 0]], [[0, 1]], [[1, 1]], 2) is None
    w = lp.feasible([[1, 0]], [[0, 1]], [], 2)
    assert w is not None and w[0] > 0 and w[1] >= 0


@settings(max_examples=150, deadline=None)
@given(
    st.lists(
        st.lists(entries, min_size=3, max_size=3), min_size=1, max_size=6
    ),
    st.lists(st.lists(entries, min_size=3, max_size=3), max_size=2),
)
def test_exactly_one_outcome_and_it_verifies(strict, eqs):
    system = build(strict, eqs, 3)
    res = lp.solve_strict(system)
    assert lp.verify(system, res)
    if isinstance(res, lp.Certificate):
        # a certificate rules out any witness: re-solving must agree
        assert isinstance(lp.solve_strict(system), lp.Certificate)


def test_randomized_consistency_with_brute_force_search():
    rng = random.Random(7)
    for _ in range(120):
        dim = rng.randint(1, 3)
        strict = [
            [rng.randint(-3, 3) for _ in range(dim)] for _ in range(rng.randint(1, 4))
        ]
        system = build(strict, [], dim)
        res = lp.solve_strict(system)
        # crude grid search for a witness
        grid = [Fraction(k) for k in range(-4, 5)]
        found = None
        if dim == 1:
            pts = ((a,) for a in grid)
        elif dim == 2:
            pts = ((a, b) for a in grid for b in grid)
        else:
            pts = ((a, b, c) for a in grid for b in grid for c in grid)
        for p in pts:
            if all(sum(r * x for r, x in zip(row, p)) > 0 for row in strict):
                found = p
                break
        if found is not None:
            assert isinstance(res, lp.Witness)
