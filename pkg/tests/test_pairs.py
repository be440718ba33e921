"""Pivotal pairs: snakes, transposes against brute-force contraction."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from pivcat.exact import ExactMatrix, SingularMatrix, random_invertible, random_matrix
from pivcat.pairs import (
    NotADuality, PivotalPair, check_pair, dual_pair, from_braided, from_matrix,
    is_pivotal_morphism, left_transpose, random_pair, right_transpose,
    standard_pair, tensor_pairs,
)


def _contract_left_transpose(f, pair1, pair2):
    """Index-loop oracle for the left transpose, written independently."""
    n1, n2 = pair1.n, pair2.n
    out = ExactMatrix.zeros(n1, n2)
    for b in range(n2):
        for j in range(n1):
            s = Fraction(0)
            for i in range(n1):
                for k in range(n2):
                    s += (pair2.evl.data[b * n2 + k] * f[k, i]
                          * pair1.cvl.data[i * n1 + j])
            out[j, b] = s
    return out


def _contract_right_transpose(f, pair1, pair2):
    """Index-loop oracle for the right transpose."""
    n1, n2 = pair1.n, pair2.n
    out = ExactMatrix.zeros(n1, n2)
    for b in range(n2):
        for i in range(n1):
            s = Fraction(0)
            for j in range(n1):
                for k in range(n2):
                    s += (pair1.cvr.data[i * n1 + j] * f[k, j]
                          * pair2.evr.data[k * n2 + b])
            out[i, b] = s
    return out


def test_standard_pair_data():
    pp = standard_pair(2)
    assert pp.cvl.column_list(0) == [1, 0, 0, 1]
    assert pp.evl.row_list(0) == [1, 0, 0, 1]
    assert pp.cvr.column_list(0) == [1, 0, 0, 1]
    assert pp.evr.row_list(0) == [1, 0, 0, 1]
    assert check_pair(pp).passed


def test_from_matrix_snakes_seeded():
    rng = random.Random(7)
    for _ in range(20):
        n = rng.randint(1, 4)
        pp = random_pair(n, rng)
        assert check_pair(pp).passed


def test_from_matrix_singular():
    q = ExactMatrix.from_rows([[1, 1], [1, 1]])
    with pytest.raises(SingularMatrix):
        from_matrix(2, q)


def test_broken_pair_reports_failure():
    pp = standard_pair(2)
    bad = PivotalPair(pp.cvl, pp.evl, pp.cvr,
                      pp.evr + ExactMatrix.from_rows([[0, 1, 0, 0]]))
    rep = check_pair(bad)
    assert not rep.passed
    assert any(c.residual is not None for c in rep.failures())


def test_from_braided_standard_matches_from_matrix():
    for n in (1, 2, 3):
        std = standard_pair(n)
        pp = from_braided(std.cvl, std.evl)
        assert pp.cvr == std.cvr
        assert pp.evr == std.evr
        assert check_pair(pp).passed


def test_from_braided_general_left_data():
    # skew the standard left duality by an invertible coefficient matrix g:
    # cvl carries g, evl carries g^{-1}, the left snakes still hold
    rng = random.Random(19)
    n = 3
    g = random_invertible(n, rng)
    eye = ExactMatrix.identity(n)
    std = standard_pair(n)
    cvl = g.tensor(eye) * std.cvl
    evl = std.evl * eye.tensor(g.invert())
    pp = from_braided(cvl, evl)
    assert check_pair(pp).passed


def test_from_braided_rejects_non_duality():
    n = 2
    cvl = ExactMatrix.column([1, 0, 0, 0])
    evl = ExactMatrix.row([1, 0, 0, 1])
    with pytest.raises(NotADuality):
        from_braided(cvl, evl)


def test_scalar_transposes_frozen():
    # n=1 with Gram scalars q1=2, q2=3 and f=[[5]]:
    # left transpose is [[5]], right transpose is [[q1*5/q2]] = [[10/3]]
    p1 = from_matrix(1, ExactMatrix.from_rows([[2]]))
    p2 = from_matrix(1, ExactMatrix.from_rows([[3]]))
    f = ExactMatrix.from_rows([[5]])
    lt = left_transpose(f, p1, p2)
    rt = right_transpose(f, p1, p2)
    assert lt == ExactMatrix.from_rows([[5]])
    assert rt == ExactMatrix.from_rows([[Fraction(10, 3)]])
    assert lt == _contract_left_transpose(f, p1, p2)
    assert rt == _contract_right_transpose(f, p1, p2)
    assert not is_pivotal_morphism(f, p1, p2)
    assert is_pivotal_morphism(f, p1, p1)


def test_transposes_match_contraction_oracle_seeded():
    rng = random.Random(29)
    for _ in range(15):
        n1 = rng.randint(1, 3)
        n2 = rng.randint(1, 3)
        p1 = random_pair(n1, rng)
        p2 = random_pair(n2, rng)
        f = random_matrix(n2, n1, rng)
        assert left_transpose(f, p1, p2) == _contract_left_transpose(f, p1, p2)
        assert right_transpose(f, p1, p2) == _contract_right_transpose(f, p1, p2)


def test_identity_gram_transposes_are_ordinary():
    rng = random.Random(31)
    p3 = standard_pair(3)
    for _ in range(10):
        f = random_matrix(3, 3, rng)
        assert left_transpose(f, p3, p3) == f.transpose()
        assert right_transpose(f, p3, p3) == f.transpose()
        assert is_pivotal_morphism(f, p3, p3)


def test_pivotal_criterion_gram_conjugation_seeded():
    # f is pivotal between Gram pairs iff f^T q2 = q1 f^T
    rng = random.Random(43)
    for _ in range(15):
        n = rng.randint(1, 3)
        q1 = random_invertible(n, rng)
        q2 = random_invertible(n, rng)
        p1 = from_matrix(n, q1)
        p2 = from_matrix(n, q2)
        f = random_matrix(n, n, rng)
        ft = f.transpose()
        assert is_pivotal_morphism(f, p1, p2) == (ft * q2 == q1 * ft)


def test_left_transpose_contravariant():
    rng = random.Random(47)
    p1 = random_pair(2, rng)
    p2 = random_pair(3, rng)
    p3 = random_pair(2, rng)
    f = random_matrix(3, 2, rng)
    g = random_matrix(2, 3, rng)
    lhs = left_transpose(g * f, p1, p3)
    rhs = left_transpose(f, p1, p2) * left_transpose(g, p2, p3)
    assert lhs == rhs


def test_tensor_pairs_scalar():
    p1 = from_matrix(1, ExactMatrix.from_rows([[2]]))
    p2 = from_matrix(1, ExactMatrix.from_rows([[Fraction(1, 3)]]))
    pp = tensor_pairs(p1, p2)
    assert pp.cvr == ExactMatrix.from_rows([[Fraction(2, 3)]])
    assert check_pair(pp).passed


def test_tensor_pairs_seeded():
    rng = random.Random(53)
    for _ in range(8):
        p1 = random_pair(rng.randint(1, 2), rng)
        p2 = random_pair(rng.randint(1, 3), rng)
        pp = tensor_pairs(p1, p2)
        assert pp.n == p1.n * p2.n
        assert check_pair(pp).passed


def test_dual_pair_swaps_and_involutes():
    rng = random.Random(59)
    pp = random_pair(3, rng)
    dd = dual_pair(pp)
    assert check_pair(dd).passed
    assert dd.cvl == pp.cvr and dd.evl == pp.evr
    back = dual_pair(dd)
    assert back.cvl == pp.cvl and back.evl == pp.evl
    assert back.cvr == pp.cvr and back.evr == pp.evr


def test_pair_json_round_trip():
    rng = random.Random(61)
    pp = random_pair(2, rng)
    back = PivotalPair.from_json(pp.to_json())
    assert back.cvl == pp.cvl and back.evl == pp.evl
    assert back.cvr == pp.cvr and back.evr == pp.evr
