"""Partially lifted bivariate codes: potentially-canceling classes, the
monomial/binomial basis, and the punctured evaluation code."""

from __future__ import annotations

import logging
from collections import defaultdict
from typing import NamedTuple

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from ._validation import check_divisor, check_ell, check_field_array
from .field import PRIMITIVE_POLYS, FieldSpec, power, power_table, vmul, xor_sum
from .lines import SimpleLine, family
from .linalg import rank
from .monomial import BasisPoly, Monomial, check_monomial, good_mask
from .parity import submasks

logger = logging.getLogger(__name__)

POINT_ORDER_VERSION = "row-major-xy-v1"


class ClassIndex(NamedTuple):
    i: int
    j: int


def class_index(a: int, b: int, s: int, t: int) -> ClassIndex:
    """Class of ``X^a Y^b``: ``(a mod s, (a + b) mod t)``."""
    return ClassIndex(a % s, (a + b) % t)


def eij_table(spec: FieldSpec, s: int, t: int) -> dict[ClassIndex, int]:
    """Sizes of the nonempty ``E_{i,j}``, found by walking submasks ``n`` of every ``m``."""
    check_divisor(s, spec.order, "s")
    check_divisor(t, spec.order, "t")
    counts: dict[ClassIndex, int] = defaultdict(int)
    for m in range(spec.q):
        i = m % s
        for n in submasks(m):
            counts[ClassIndex(i, n % t)] += 1
    return dict(sorted(counts.items()))


def e_st(spec: FieldSpec, s: int, t: int) -> int:
    """Number of classes ``(i, j)`` with ``E_{i,j}`` nonempty."""
    return len(eij_table(spec, s, t))


def not_good_by_class(spec: FieldSpec, s: int, t: int) -> dict[ClassIndex, list[Monomial]]:
    mask = good_mask(spec)
    groups: dict[ClassIndex, list[Monomial]] = defaultdict(list)
    for a, b in zip(*np.nonzero(~mask)):
        a, b = int(a), int(b)
        groups[class_index(a, b, s, t)].append(Monomial(a, b))
    return dict(sorted(groups.items()))


def build_basis(spec: FieldSpec, s: int, t: int) -> list[BasisPoly]:
    """Good monomials (lexicographic), then per class the binomials pairing the
    lexicographically smallest not-good member with each other member."""
    check_divisor(s, spec.order, "s")
    check_divisor(t, spec.order, "t")
    mask = good_mask(spec)
    basis = [BasisPoly.monomial(int(a), int(b)) for a, b in zip(*np.nonzero(mask))]
    for members in not_good_by_class(spec, s, t).values():
        rep = members[0]
        basis.extend(BasisPoly.binomial(rep, other) for other in members[1:])
    return basis


def evaluation_points(spec: FieldSpec, punctured: bool = True) -> np.ndarray:
    """``(n, 2)`` array of points in row-major ``(x, y)`` order, origin dropped if punctured."""
    q = spec.q
    xs, ys = np.divmod(np.arange(q * q, dtype=np.int64), q)
    pts = np.stack([xs, ys], axis=1)
    return pts[1:] if punctured else pts


def point_index(spec: FieldSpec, x: int, y: int) -> int:
    """Column of ``(x, y)`` in the punctured generator matrix."""
    if x == 0 and y == 0:
        raise ValueError("the origin is punctured")
    return x * spec.q + y - 1


def evaluation_matrix(spec: FieldSpec, basis, points: np.ndarray) -> np.ndarray:
    """Row ``r`` holds basis polynomial ``r`` evaluated at each point."""
    pw = power_table(spec)
    xs, ys = points[:, 0], points[:, 1]
    out = np.zeros((len(basis), len(points)), dtype=np.int64)
    for r, poly in enumerate(basis):
        for a, b in poly.terms:
            out[r] ^= vmul(spec, pw[a][xs], pw[b][ys])
    return out


class PartialLiftCode(TransformerMixin, BaseEstimator):
    """Punctured evaluation code of the partial lift over the lines L_{s,t}.

    Parameters
    ----------
    ell : int, default=4
        Extension degree; the field is GF(2^ell) with ``q = 2^ell``.
    s, t : int or None
        Orders of the slope and intercept subgroups; each must divide
        ``q - 1``. ``None`` means ``q - 1``.
    basis : sequence of BasisPoly or None
        Explicit basis, e.g. from a stored descriptor. ``None`` builds the
        canonical monomial/binomial basis.
    modulus : int or None
        Field modulus; ``None`` uses the documented primitive polynomial.
    compute_rank : bool, default=True
        Whether ``fit`` runs exact elimination to obtain ``dimension_``.

    Attributes
    ----------
    field_ : FieldSpec
    family_ : LineFamily
    basis_ : list of BasisPoly
    points_ : ndarray of shape (q^2 - 1, 2)
    generator_matrix_ : ndarray of shape (len(basis_), q^2 - 1)
    n_points_ : int
        Block length ``N = q^2 - 1``.
    e_st_ : int
    dimension_bound_ : int
        ``q^2 - e_st_``.
    dimension_ : int or None
        Exact rank of ``generator_matrix_``.
    """

    def __init__(self, ell=4, s=None, t=None, basis=None, modulus=None, compute_rank=True):
        self.ell = ell
        self.s = s
        self.t = t
        self.basis = basis
        self.modulus = modulus
        self.compute_rank = compute_rank

    def fit(self, X=None, y=None):
        """Build the field, line family, basis and generator matrix. ``X`` is ignored."""
        ell = check_ell(self.ell)
        modulus = PRIMITIVE_POLYS[ell] if self.modulus is None else int(self.modulus)
        spec = FieldSpec.from_modulus(ell, modulus)
        s = spec.order if self.s is None else check_divisor(self.s, spec.order, "s")
        t = spec.order if self.t is None else check_divisor(self.t, spec.order, "t")

        if self.basis is None:
            basis = build_basis(spec, s, t)
        else:
            basis = [p if isinstance(p, BasisPoly) else BasisPoly(tuple(p)) for p in self.basis]
            for p in basis:
                for m in p.terms:
                    check_monomial(spec, m)

        self.field_ = spec
        self.family_ = family(spec, s, t)
        self.basis_ = basis
        self.points_ = evaluation_points(spec)
        self.generator_matrix_ = evaluation_matrix(spec, basis, self.points_)
        self.n_points_ = spec.q**2 - 1
        self.e_st_ = e_st(spec, s, t)
        self.dimension_bound_ = spec.q**2 - self.e_st_
        self.dimension_ = rank(spec, self.generator_matrix_) if self.compute_rank else None
        return self

    @property
    def q(self) -> int:
        check_is_fitted(self, "field_")
        return self.field_.q

    @property
    def n_basis_(self) -> int:
        return len(self.basis_)

    def transform(self, X):
        """Encode message rows (coefficients over ``basis_``) into codewords."""
        check_is_fitted(self, "generator_matrix_")
        X = check_field_array(X, self.field_.q, n_features=self.n_basis_)
        G = self.generator_matrix_
        out = np.zeros((X.shape[0], G.shape[1]), dtype=np.int64)
        for r in range(G.shape[0]):
            col = X[:, r]
            if col.any():
                out ^= vmul(self.field_, col[:, None], G[r][None, :])
        return out

    def random_messages(self, n, random_state=None) -> np.ndarray:
        check_is_fitted(self, "generator_matrix_")
        rng = np.random.default_rng(random_state)
        return rng.integers(0, self.field_.q, size=(n, self.n_basis_), dtype=np.int64)


def generator_matrix(code: PartialLiftCode) -> np.ndarray:
    check_is_fitted(code, "generator_matrix_")
    return code.generator_matrix_


def exact_dimension(code: PartialLiftCode) -> int:
    """Rank over GF(q) of the punctured generator matrix."""
    check_is_fitted(code, "generator_matrix_")
    if code.dimension_ is None:
        code.dimension_ = rank(code.field_, code.generator_matrix_)
    return code.dimension_


def unpunctured_dimension(code: PartialLiftCode) -> int:
    check_is_fitted(code, "basis_")
    spec = code.field_
    return rank(spec, evaluation_matrix(spec, code.basis_, evaluation_points(spec, punctured=False)))


def line_columns(spec: FieldSpec, lines) -> np.ndarray:
    """``(len(lines), q)`` unpunctured column indices ``x*q + y`` of each line's points."""
    ts = np.arange(spec.q, dtype=np.int64)
    rows = []
    for alpha, beta in lines:
        ys = vmul(spec, alpha, ts) ^ beta
        rows.append(ts * spec.q + ys)
    return np.array(rows, dtype=np.int64).reshape(len(rows), spec.q)


def line_sums(code: PartialLiftCode) -> np.ndarray:
    """``S[r, k]``: sum of basis polynomial ``r`` over family line ``k``."""
    check_is_fitted(code, "basis_")
    spec = code.field_
    full = evaluation_matrix(spec, code.basis_, evaluation_points(spec, punctured=False))
    cols = line_columns(spec, code.family_.lines)
    return xor_sum(full[:, cols], axis=2)


def first_violation(code: PartialLiftCode) -> tuple[BasisPoly, SimpleLine] | None:
    """First ``(poly, line)`` in basis/family order whose line sum is nonzero."""
    sums = line_sums(code)
    bad = np.argwhere(sums != 0)
    if bad.size == 0:
        return None
    r, k = (int(v) for v in bad[0])
    return code.basis_[r], code.family_.lines[k]


def verify_basis(code: PartialLiftCode) -> bool:
    """Whether every basis polynomial restricts nicely on every family line."""
    hit = first_violation(code)
    if hit is not None:
        poly, line = hit
        logger.warning("basis polynomial %s does not restrict nicely on line %s", poly, tuple(line))
        return False
    return True


def binomial_cancels(spec: FieldSpec, poly: BasisPoly, line: SimpleLine) -> bool:
    """Whether ``alpha^(a2-a1) == beta^(b2-b1+a2-a1)`` for a binomial on ``line``."""
    (a1, b1), (a2, b2) = poly.terms
    alpha, beta = line
    return power(spec, alpha, a2 - a1) == power(spec, beta, b2 - b1 + a2 - a1)
