import random
from itertools import product

import pytest

from conftest import random_params
from cyclicfiber import catalog, lp
from cyclicfiber.cyclic import params, standard_params
from cyclicfiber.paths import (
    MINUS,
    NULL,
    PLUS,
    CellularString,
    GeneralPolytope,
    coherent_paths_of_general_polytope,
    count_coherent_paths,
    cyclic_as_general_polytope,
    enumerate_cellular_strings,
    enumerate_monotone_paths,
    format_sign_vector,
    is_coherent_string,
    is_coherent_string_lp,
    lambda_of_string,
    m_stat,
    monotone_edge_paths,
    parse_matrix,
    path_count_upper_bound,
    polytope_edges,
    run_count,
    sign_leq,
    sign_vector,
    string_of_lambda,
    zonotope_face_poset,
)

def test_m_stat_worked_example():
    assert m_stat(sign_vector("++0--0--++-")) == 5


def test_m_stat_small_cases():
    assert m_stat(sign_vector("++++")) == 0
    assert m_stat(sign_vector("+-")) == 1
    assert m_stat(sign_vector("+0+")) == 2
    assert m_stat(sign_vector("0")) == 1


def test_m_equals_runs_minus_one_when_zero_free_exhaustive():
    for length in range(1, 13):
        for lam in product((PLUS, MINUS), repeat=length):
            assert m_stat(lam) == run_count(lam) - 1


def test_sign_order():
    assert sign_leq(sign_vector("+-"), sign_vector("+0"))
    assert sign_leq(sign_vector("+-"), sign_vector("00"))
    assert not sign_leq(sign_vector("+-"), sign_vector("-0"))
    assert not sign_leq(sign_vector("0-"), sign_vector("+-"))


def test_lambda_of_string_worked_example():
    s = CellularString(10, 4, ((1, 3, 4), (4, 7), (7, 8, 10)))
    assert format_sign_vector(lambda_of_string(s)) == "+0-++-0+"


def test_lambda_of_edge_path_is_all_minus():
    s = CellularString(6, 2, ((1, 2), (2, 3), (3, 4), (4, 5), (5, 6)))
    assert lambda_of_string(s) == (MINUS,) * 4


def test_lambda_encoding_of_coarse_face():
    # a single 2-face covering 1..6 on C(6,3): members 0, absentees +
    s = CellularString(6, 3, ((1, 2, 6),))
    assert format_sign_vector(lambda_of_string(s)) == "0+++"


def test_string_validation():
    with pytest.raises(ValueError):
        CellularString(6, 2, ((2, 3), (3, 6)))  # does not start at 1
    with pytest.raises(ValueError):
        CellularString(6, 2, ((1, 3), (4, 6)))  # junction mismatch
    with pytest.raises(ValueError):
        CellularString(6, 4, ((1, 3, 5), (5, 6)))  # 135 is not a face of C(6,4)


def test_string_lambda_round_trip_is_injective():
    for n, d in [(6, 3), (6, 4), (7, 4)]:
        strs = enumerate_cellular_strings(n, d)
        lams = {lambda_of_string(s): s for s in strs}
        assert len(lams) == len(strs)
        for lam, s in lams.items():
            assert string_of_lambda(lam, n, d).faces == s.faces


def test_monotone_path_counts():
    for n in (5, 6, 7, 8):
        assert len(enumerate_monotone_paths(n, 4)) == 2 ** (n - 2)
        assert len(enumerate_monotone_paths(n, n - 1)) == 2 ** (n - 2)
    assert len(enumerate_monotone_paths(4, 2)) == 2


def test_count_coherent_paths_formula():
    assert count_coherent_paths(8, 4) == 32
    assert count_coherent_paths(6, 4) == 14
    for n in range(4, 10):
        assert count_coherent_paths(n, 2) == 2
        assert count_coherent_paths(n, n - 1) == 2 ** (n - 2)


def test_path_count_upper_bound():
    assert path_count_upper_bound(8, 4) == 3082
    for n in range(4, 9):
        assert path_count_upper_bound(n, 2) == 2


def test_string_order_matches_lambda_order():
    for n, d in [(6, 3), (7, 4), (6, 4)]:
        strs = enumerate_cellular_strings(n, d)
        for s1 in strs:
            l1 = lambda_of_string(s1)
            for s2 in strs:
                assert s1.leq(s2) == sign_leq(l1, lambda_of_string(s2)), (s1, s2)


def test_coherence_criterion_against_lp():
    rng = random.Random(47)
    for n, d in [(6, 3), (6, 4), (7, 3)]:
        strs = enumerate_cellular_strings(n, d)
        for trial in range(2):
            pv = random_params(n, d, rng)
            for s in strs:
                want = is_coherent_string(lambda_of_string(s), d)
                got = isinstance(is_coherent_string_lp(s, pv), lp.Witness)
                assert got == want, (n, d, s.faces, pv.t)


def test_zonotope_poset():
    faces = zonotope_face_poset(4, 3)
    verts = [lam for lam in faces if NULL not in lam]
    assert len(verts) == 14
    assert zonotope_face_poset(5, 1) == ((MINUS,) * 5, (PLUS,) * 5)


def test_zonotope_iso_with_coherent_strings():
    for n, d in [(5, 3), (6, 3), (6, 4), (7, 4), (7, 5)]:
        coherent = {
            lambda_of_string(s)
            for s in enumerate_cellular_strings(n, d)
            if is_coherent_string(lambda_of_string(s), d)
        }
        assert coherent == set(zonotope_face_poset(n - 2, d - 1))


def test_cyclic_general_polytope_agrees_with_formula():
    for n in range(5, 9):
        for d in range(4, n):
            p = cyclic_as_general_polytope(standard_params(n, d))
            coh = coherent_paths_of_general_polytope(p, 1)
            assert len(coh) == count_coherent_paths(n, d), (n, d)


def test_ubc_counterexample():
    p = GeneralPolytope.from_columns(catalog.UBC_COUNTEREXAMPLE_MATRIX)
    coh = coherent_paths_of_general_polytope(p, 1)
    assert len(coh) == 34
    assert count_coherent_paths(8, 4) == 32


def test_simplex_paths_all_coherent():
    simplex = GeneralPolytope.from_columns(
        [[0, 1, 2, 4], [0, 0, 1, 0], [0, 0, 0, 1]]
    )
    allp = monotone_edge_paths(simplex, 1)
    coh = coherent_paths_of_general_polytope(simplex, 1)
    assert len(allp) == len(coh) == 4


def test_upper_bound_dominates_random_polytopes():
    rng = random.Random(19)
    found = 0
    while found < 30:
        nv = rng.choice([7, 8])
        cols = [[rng.randint(-50, 50) for _ in range(nv)] for _ in range(4)]
        if len(set(cols[0])) != nv:
            continue
        try:
            p = GeneralPolytope.from_columns(cols)
        except ValueError:
            continue
        found += 1
        coh = coherent_paths_of_general_polytope(p, 1)
        assert len(coh) <= path_count_upper_bound(nv, 4)


def test_general_polytope_validation():
    with pytest.raises(ValueError):  # middle point not extreme
        GeneralPolytope.from_columns([[0, 1, 2], [0, 1, 2]])
    with pytest.raises(ValueError):  # not full-dimensional
        GeneralPolytope.from_columns([[0, 1, 2], [0, 0, 0]])
    with pytest.raises(ValueError):  # tied direction values
        monotone_edge_paths(
            GeneralPolytope.from_columns([[0, 0, 1], [0, 1, 0]]), 1
        )


def test_parse_matrix():
    p = parse_matrix("0 1 2 4\n0 0 1 0\n0 0 0 1\n")
    assert p.dim == 3 and len(p.vertices) == 4
    assert len(polytope_edges(p)) == 6
