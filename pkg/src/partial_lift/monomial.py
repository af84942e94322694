"""Good monomials and restrictions of bivariate polynomials to simple lines."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .field import FieldSpec, mul, power, vmul, xor_sum
from .lines import SimpleLine, check_simple
from .parity import binom_parity, shadow_leq


class Monomial(NamedTuple):
    a: int
    b: int


@dataclass(frozen=True)
class BasisPoly:
    """A monomial or a sum of two distinct monomials, all coefficients 1."""

    terms: tuple[Monomial, ...]

    def __post_init__(self):
        terms = tuple(Monomial(*m) for m in self.terms)
        if len(terms) not in (1, 2):
            raise ValueError("basis polynomials have one or two terms")
        if len(terms) == 2 and terms[0] == terms[1]:
            raise ValueError("binomial terms must be distinct")
        object.__setattr__(self, "terms", terms)

    @classmethod
    def monomial(cls, a: int, b: int) -> "BasisPoly":
        return cls((Monomial(a, b),))

    @classmethod
    def binomial(cls, first: Monomial, second: Monomial) -> "BasisPoly":
        return cls((Monomial(*first), Monomial(*second)))

    @property
    def kind(self) -> str:
        return "monomial" if len(self.terms) == 1 else "binomial"

    def evaluate(self, spec: FieldSpec, x: int, y: int) -> int:
        out = 0
        for a, b in self.terms:
            out ^= mul(spec, power(spec, x, a), power(spec, y, b))
        return out

    def __str__(self) -> str:
        return " + ".join(f"X^{a}Y^{b}" for a, b in self.terms)


def check_monomial(spec: FieldSpec, m) -> Monomial:
    a, b = m
    if not (0 <= a < spec.q and 0 <= b < spec.q):
        raise ValueError(f"exponents {a, b} out of range [0, {spec.q - 1}]")
    return Monomial(a, b)


def is_good(spec: FieldSpec, m) -> bool:
    """Whether ``X^a Y^b`` restricts to degree < q-1 on every simple line."""
    a, b = check_monomial(spec, m)
    top = spec.q - 1
    if a == top and b == top:
        # both the i=0 and i=q-1 terms hit T^{q-1}; they cancel
        return True
    return not shadow_leq(top - a, b)


def good_mask(spec: FieldSpec) -> np.ndarray:
    """Boolean ``(q, q)`` array, ``mask[a, b] == is_good(spec, (a, b))``."""
    q = spec.q
    a = np.arange(q)[:, None]
    b = np.arange(q)[None, :]
    comp = (q - 1) - a
    mask = (comp & b) != comp
    mask[q - 1, q - 1] = True
    return mask


def count_good(spec: FieldSpec) -> int:
    """Number of good monomials, ``q^2 - 3^ell + 1``."""
    return spec.q**2 - 3**spec.ell + 1


def leading_coeff(spec: FieldSpec, m, line: SimpleLine) -> int:
    """Coefficient of ``T^{q-1}`` in ``X^a Y^b`` restricted to ``line``."""
    a, b = check_monomial(spec, m)
    alpha, beta = check_simple(spec, line)
    top = spec.q - 1
    if a == top and b == top:
        return 0
    if not binom_parity(b, top - a):
        return 0
    return mul(spec, power(spec, alpha, -a), power(spec, beta, a + b))


def line_sum(spec: FieldSpec, poly: BasisPoly, line: SimpleLine) -> int:
    """Sum of ``poly`` over the ``q`` points of ``line``.

    In characteristic 2 this equals the ``T^{q-1}`` coefficient of the
    restriction, so zero means the polynomial restricts nicely.
    """
    alpha, beta = check_simple(spec, line)
    total = 0
    for t in range(spec.q):
        total ^= poly.evaluate(spec, t, mul(spec, alpha, t) ^ beta)
    return total


def restricts_nicely(spec: FieldSpec, poly: BasisPoly, line: SimpleLine) -> bool:
    return line_sum(spec, poly, line) == 0


def interpolate(spec: FieldSpec, values) -> list[int]:
    """Coefficients ``c_0..c_{q-1}`` of the unique degree <= q-1 polynomial
    taking ``values[t]`` at each ``t`` in ``[0, q)``."""
    q = spec.q
    values = [int(v) for v in values]
    if len(values) != q:
        raise ValueError(f"need {q} values, got {len(values)}")
    coeffs = [0] * q
    coeffs[0] = values[0]
    if q == 1:
        return coeffs
    for k in range(1, q - 1):
        acc = 0
        for t in range(1, q):
            acc ^= mul(spec, values[t], power(spec, t, q - 1 - k))
        coeffs[k] = acc
    coeffs[q - 1] = xor_sum(values).item()
    return coeffs


def restrict(spec: FieldSpec, poly: BasisPoly, line: SimpleLine) -> list[int]:
    """Coefficient vector (length q, constant term first) of ``poly`` on ``line``."""
    alpha, beta = check_simple(spec, line)
    values = [poly.evaluate(spec, t, mul(spec, alpha, t) ^ beta) for t in range(spec.q)]
    return interpolate(spec, values)


def line_sum_table(spec: FieldSpec, line: SimpleLine) -> np.ndarray:
    """``S[a, b]`` = sum of ``X^a Y^b`` over ``line`` for every monomial at once.

    Works in the log domain: each nonzero term ``x^a y^b`` is
    ``g^(a*log x + b*log y)``. Points with a zero coordinate are added
    separately since they only contribute for ``a == 0`` or ``b == 0``.
    """
    alpha, beta = check_simple(spec, line)
    q, order = spec.q, spec.order
    ts = np.arange(q, dtype=np.int64)
    ys = vmul(spec, alpha, ts) ^ beta
    inner = (ts != 0) & (ys != 0)
    lx = spec.log_table[ts[inner]]
    ly = spec.log_table[ys[inner]]
    exps = np.arange(q, dtype=np.int64)[:, None]
    ax = (exps * lx[None, :]) % order  # (q, n)
    by = (exps * ly[None, :]) % order
    table = np.empty((q, q), dtype=np.int64)
    for a in range(q):
        table[a] = xor_sum(spec.exp_table[ax[a][None, :] + by], axis=1)
    # T = 0 gives the point (0, beta): contributes beta^b when a == 0
    table[0] ^= np.array([power(spec, beta, b) for b in range(q)], dtype=np.int64)
    # the unique T with alpha*T + beta == 0 gives (T0, 0): contributes T0^a when b == 0
    t0 = int(ts[ys == 0][0])
    table[:, 0] ^= np.array([power(spec, t0, a) for a in range(q)], dtype=np.int64)
    return table
