import itertools

import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from partial_lift.field import FieldError, divisors, make_field
from partial_lift.lift import (
    ClassIndex,
    PartialLiftCode,
    binomial_cancels,
    build_basis,
    class_index,
    e_st,
    eij_table,
    evaluation_points,
    exact_dimension,
    generator_matrix,
    line_sums,
    not_good_by_class,
    point_index,
    unpunctured_dimension,
    verify_basis,
)
from partial_lift.linalg import rank, row_echelon
from partial_lift.monomial import BasisPoly, good_mask, is_good
from partial_lift.parity import shadow_leq

from oracles import slow_rank


def brute_eij(f, s, t):
    counts = {}
    for m, n in itertools.product(range(f.q), repeat=2):
        if shadow_leq(n, m):
            key = (m % s, n % t)
            counts[key] = counts.get(key, 0) + 1
    return counts


CONFIGS = [(2, 1, 3), (2, 3, 3), (3, 1, 7), (3, 7, 7), (4, 3, 15), (4, 5, 15), (4, 15, 15), (4, 5, 3), (4, 1, 1)]


def test_class_index():
    assert class_index(0, 0, 3, 15) == ClassIndex(0, 0)
    for s, t in [(3, 15), (5, 5), (15, 1)]:
        assert class_index(15, 15, s, t) == (0, 0)
    assert class_index(7, 10, 3, 5) == (1, 2)


@pytest.mark.parametrize("ell,s,t", CONFIGS)
def test_eij_table_matches_filter(ell, s, t):
    f = make_field(ell)
    table = eij_table(f, s, t)
    assert {tuple(k): v for k, v in table.items()} == brute_eij(f, s, t)
    assert sum(table.values()) == 3**ell
    assert table[(0, 0)] >= 2
    assert e_st(f, s, t) == len(table) <= s * t
    assert e_st(f, s, t) <= 3**ell - 1 or ell == 1


@pytest.mark.parametrize("ell,s,t", CONFIGS)
def test_not_good_counts_per_class(ell, s, t):
    f = make_field(ell)
    table = eij_table(f, s, t)
    groups = not_good_by_class(f, s, t)
    for key in set(table) | set(groups):
        expected = table.get(key, 0) - (1 if key == (0, 0) else 0)
        assert len(groups.get(key, [])) == expected


def test_e_trivial():
    assert e_st(make_field(4), 1, 1) == 1


@pytest.mark.parametrize("ell", [3, 4, 5])
def test_e_with_full_intercepts_at_most_s_times_order(ell):
    f = make_field(ell)
    for s in divisors(f.order):
        assert e_st(f, s, f.order) <= s * f.order


@pytest.mark.parametrize("ell,s,t", CONFIGS)
def test_basis_structure(ell, s, t):
    f = make_field(ell)
    basis = build_basis(f, s, t)
    e = e_st(f, s, t)
    mask = good_mask(f)
    monos = [p for p in basis if p.kind == "monomial"]
    bins = [p for p in basis if p.kind == "binomial"]
    assert all(mask[a, b] for (a, b), in (p.terms for p in monos))
    assert len(monos) == int(mask.sum())
    for p in bins:
        (a1, b1), (a2, b2) = p.terms
        assert not is_good(f, (a1, b1)) and not is_good(f, (a2, b2))
        assert (a1 - a2) % s == 0
        assert (a1 + b1 - a2 - b2) % t == 0
        assert (a1, b1) < (a2, b2)
    assert len(basis) >= f.q**2 - e
    groups = not_good_by_class(f, s, t)
    assert len(basis) == int(mask.sum()) + sum(len(g) - 1 for g in groups.values())
    assert len(set(basis)) == len(basis)


def test_basis_is_deterministic():
    f = make_field(4)
    assert build_basis(f, 3, 15) == build_basis(f, 3, 15)


def test_full_lift_basis_count():
    f = make_field(4)
    basis = build_basis(f, 15, 15)
    assert len(basis) >= 256 - 80
    assert sum(p.kind == "monomial" for p in basis) == 176


def test_build_basis_rejects_non_divisor():
    with pytest.raises(FieldError):
        build_basis(make_field(4), 4, 15)


@pytest.mark.parametrize("ell,s,t", CONFIGS)
def test_binomials_cancel_on_every_family_line(ell, s, t):
    code = PartialLiftCode(ell, s, t, compute_rank=False).fit()
    f = code.field_
    for p in code.basis_:
        if p.kind == "binomial":
            assert all(binomial_cancels(f, p, line) for line in code.family_)
    assert verify_basis(code)
    assert not line_sums(code).any()


def test_bad_binomial_detected(caplog):
    f = make_field(4)
    bad = BasisPoly.binomial((0, 0), (0, 15))  # good + not good
    assert is_good(f, (0, 0)) and not is_good(f, (0, 15))
    code = PartialLiftCode(4, 3, 15, basis=[bad], compute_rank=False).fit()
    assert not verify_basis(code)
    assert "X^0Y^0 + X^0Y^15" in caplog.text


def test_points_and_index():
    f = make_field(3)
    pts = evaluation_points(f)
    assert len(pts) == 63
    assert tuple(pts[0]) == (0, 1)
    for k, (x, y) in enumerate(pts):
        assert point_index(f, int(x), int(y)) == k
    with pytest.raises(ValueError):
        point_index(f, 0, 0)


def test_generator_rows():
    code = PartialLiftCode(4, 3, 15, compute_rank=False).fit()
    G = generator_matrix(code)
    assert G.shape == (len(code.basis_), 255)
    assert code.basis_[0] == BasisPoly.monomial(0, 0)
    assert (G[0] == 1).all()
    xs = code.points_[:, 0]
    for r, p in enumerate(code.basis_):
        if p.kind == "monomial" and p.terms[0].a > 0:
            assert (G[r][xs == 0] == 0).all()
    # spot-check against scalar evaluation
    f = code.field_
    for r in range(0, len(code.basis_), 17):
        for k in range(0, 255, 13):
            x, y = (int(v) for v in code.points_[k])
            assert G[r, k] == code.basis_[r].evaluate(f, x, y)


def test_rank_against_independent_elimination():
    rng = np.random.default_rng(1)
    for ell in (2, 3, 4):
        f = make_field(ell)
        for shape in [(5, 7), (8, 4), (6, 6)]:
            M = rng.integers(0, f.q, size=shape)
            # force some dependency
            M[-1] = M[0] ^ M[1] if shape[0] > 2 else M[-1]
            assert rank(f, M) == slow_rank(M.tolist(), f.modulus, ell)


def test_row_echelon_shape():
    f = make_field(3)
    M = np.array([[0, 2, 4], [0, 4, 1], [3, 0, 0]])
    R, piv = row_echelon(f, M)
    assert piv == [0, 1, 2]
    assert all(R[i, p] == 1 for i, p in enumerate(piv))
    assert rank(f, np.zeros((3, 4), dtype=int)) == 0


def test_small_code_rank_independent_oracle():
    code = PartialLiftCode(3, 7, 7).fit()
    f = code.field_
    assert code.dimension_ == slow_rank(code.generator_matrix_.tolist(), f.modulus, 3)


@pytest.mark.parametrize("ell,s,t", CONFIGS)
def test_dimension_bounds(ell, s, t):
    code = PartialLiftCode(ell, s, t).fit()
    K = exact_dimension(code)
    assert K >= len(code.basis_) - 1
    assert K >= code.dimension_bound_ - 1
    assert K <= code.n_points_
    if ell <= 4:
        assert unpunctured_dimension(code) == len(code.basis_)


def test_trivial_family_is_large():
    code = PartialLiftCode(4, 1, 1).fit()
    assert code.dimension_ >= 256 - 1 - 1


# -- estimator conventions -------------------------------------------------


def test_get_params_and_clone():
    est = PartialLiftCode(ell=4, s=3, t=15)
    assert est.get_params() == {
        "ell": 4,
        "s": 3,
        "t": 15,
        "basis": None,
        "modulus": None,
        "compute_rank": True,
    }
    other = clone(est).set_params(s=5)
    assert other.s == 5 and est.s == 3


def test_not_fitted():
    with pytest.raises(NotFittedError):
        PartialLiftCode().transform([[0]])


def test_defaults_are_full_lift():
    code = PartialLiftCode(ell=3, compute_rank=False).fit()
    assert (code.family_.s, code.family_.t) == (7, 7)


@pytest.mark.parametrize("kwargs", [{"s": 4}, {"t": 2}, {"ell": 0}, {"ell": 17}])
def test_bad_params(kwargs):
    with pytest.raises(FieldError):
        PartialLiftCode(**{"ell": 4, **kwargs}).fit()


def test_transform_encodes_linear_combinations():
    code = PartialLiftCode(3, 7, 1, compute_rank=False).fit()
    msgs = code.random_messages(4, random_state=0)
    words = code.transform(msgs)
    assert words.shape == (4, 63)
    # sum of two encodings is the encoding of the sum
    both = code.transform(msgs[:1] ^ msgs[1:2])
    assert (both[0] == words[0] ^ words[1]).all()
    unit = np.zeros((1, len(code.basis_)), dtype=int)
    unit[0, 5] = 1
    assert (code.transform(unit)[0] == code.generator_matrix_[5]).all()


def test_transform_validates_input():
    code = PartialLiftCode(3, 7, 7, compute_rank=False).fit()
    with pytest.raises(ValueError):
        code.transform(np.zeros((1, 3), dtype=int))
    with pytest.raises(ValueError):
        code.transform(np.full((1, len(code.basis_)), 8))
