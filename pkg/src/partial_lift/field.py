"""Arithmetic in GF(2^ell) with exp/log tables.

Elements are plain integers in ``[0, q)`` read as coefficient bits of the
polynomial basis, so ``add`` is XOR. Each degree uses one fixed primitive
modulus (``PRIMITIVE_POLYS``); the integer encoding of elements is part of
the on-disk contract, so the table must not change.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

# Fixed primitive polynomials, bit i = coefficient of x^i.
PRIMITIVE_POLYS: dict[int, int] = {
    1: 0b11,  # x + 1
    2: 0b111,  # x^2 + x + 1
    3: 0b1011,  # x^3 + x + 1
    4: 0b10011,  # x^4 + x + 1
    5: 0b100101,  # x^5 + x^2 + 1
    6: 0b1000011,  # x^6 + x + 1
    7: 0b10001001,  # x^7 + x^3 + 1
    8: 0x11D,  # x^8 + x^4 + x^3 + x^2 + 1
    9: 0x211,  # x^9 + x^4 + 1
    10: 0x409,  # x^10 + x^3 + 1
    11: 0x805,  # x^11 + x^2 + 1
    12: 0x1053,  # x^12 + x^6 + x^4 + x + 1
    13: 0x201B,  # x^13 + x^4 + x^3 + x + 1
    14: 0x4443,  # x^14 + x^10 + x^6 + x + 1
    15: 0x8003,  # x^15 + x + 1
    16: 0x1100B,  # x^16 + x^12 + x^3 + x + 1
}

MAX_ELL = 16


class FieldError(ValueError):
    """Invalid field parameters or an undefined field operation."""


@dataclass(frozen=True, eq=False)
class FieldSpec:
    """GF(2^ell) parameters plus discrete exp/log tables over the element ``x``.

    ``exp_table`` has length ``2 * (q - 1)`` so a sum of two logs indexes it
    without a modulo. ``log_table[0]`` is a sentinel and must never be read.
    """

    ell: int
    q: int
    modulus: int
    exp_table: np.ndarray = field(repr=False)
    log_table: np.ndarray = field(repr=False)

    @classmethod
    def from_modulus(cls, ell: int, modulus: int) -> "FieldSpec":
        if not 1 <= ell <= MAX_ELL:
            raise FieldError(f"extension degree must be in [1, {MAX_ELL}], got {ell}")
        q = 1 << ell
        if modulus >> ell != 1:
            raise FieldError(f"modulus {modulus:#x} does not have degree {ell}")
        order = q - 1
        exp_table = np.zeros(2 * order, dtype=np.int64)
        log_table = np.full(q, -1, dtype=np.int64)
        x = 1
        for k in range(order):
            if log_table[x] != -1:
                raise FieldError(f"modulus {modulus:#x} is not primitive for ell={ell}")
            exp_table[k] = x
            log_table[x] = k
            x <<= 1
            if x & q:
                x ^= modulus
        if x != 1:
            raise FieldError(f"modulus {modulus:#x} is not primitive for ell={ell}")
        exp_table[order:] = exp_table[:order]
        exp_table.flags.writeable = False
        log_table.flags.writeable = False
        return cls(ell, q, modulus, exp_table, log_table)

    @property
    def order(self) -> int:
        """Order of the multiplicative group, ``q - 1``."""
        return self.q - 1

    def elements(self) -> range:
        return range(self.q)

    def check_element(self, a: int) -> int:
        if not 0 <= a < self.q:
            raise FieldError(f"{a} is not an element of GF({self.q})")
        return a

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldSpec):
            return NotImplemented
        return (self.ell, self.modulus) == (other.ell, other.modulus)

    def __hash__(self) -> int:
        return hash((self.ell, self.modulus))


def make_field(ell: int) -> FieldSpec:
    """Build GF(2^ell) over the documented primitive modulus for ``ell``."""
    if ell not in PRIMITIVE_POLYS:
        raise FieldError(f"extension degree must be in [1, {MAX_ELL}], got {ell}")
    return FieldSpec.from_modulus(ell, PRIMITIVE_POLYS[ell])


def add(a: int, b: int) -> int:
    return a ^ b


def mul(spec: FieldSpec, a: int, b: int) -> int:
    if a == 0 or b == 0:
        return 0
    return int(spec.exp_table[spec.log_table[a] + spec.log_table[b]])


def inv(spec: FieldSpec, a: int) -> int:
    if a == 0:
        raise ZeroDivisionError("inverse of zero in GF(2^ell)")
    return int(spec.exp_table[(spec.order - spec.log_table[a]) % spec.order])


def power(spec: FieldSpec, a: int, e: int) -> int:
    """``a ** e`` with ``0 ** 0 == 1``; negative ``e`` needs ``a != 0``."""
    if a == 0:
        if e < 0:
            raise ZeroDivisionError("negative power of zero in GF(2^ell)")
        return 1 if e == 0 else 0
    return int(spec.exp_table[(int(spec.log_table[a]) * e) % spec.order])


def subgroup(spec: FieldSpec, d: int) -> list[int]:
    """The multiplicative subgroup ``{x : x^d = 1}`` of order ``d``, sorted."""
    if d <= 0 or spec.order % d:
        raise FieldError(f"{d} does not divide q - 1 = {spec.order}")
    step = spec.order // d
    return sorted(int(spec.exp_table[k * step]) for k in range(d))


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


# -- vectorised helpers -----------------------------------------------------


def vmul(spec: FieldSpec, a, b) -> np.ndarray:
    """Elementwise product of broadcastable integer arrays."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    nz = (a != 0) & (b != 0)
    out = spec.exp_table[spec.log_table[a] + spec.log_table[b]]
    return np.where(nz, out, 0)


def vpow(spec: FieldSpec, a, e: int) -> np.ndarray:
    a = np.asarray(a, dtype=np.int64)
    if e == 0:
        return np.ones_like(a)
    if e < 0 and np.any(a == 0):
        raise ZeroDivisionError("negative power of zero in GF(2^ell)")
    out = spec.exp_table[(spec.log_table[a] * e) % spec.order]
    return np.where(a == 0, 0, out)


def power_table(spec: FieldSpec) -> np.ndarray:
    """``T[e, v] = v ** e`` for ``e, v`` in ``[0, q)``, with ``0 ** 0 = 1``."""
    q = spec.q
    e = np.arange(q, dtype=np.int64)[:, None]
    v = np.arange(q, dtype=np.int64)[None, :]
    logs = np.where(v == 0, 0, spec.log_table[np.maximum(v, 1)])
    table = spec.exp_table[(e * logs) % spec.order]
    table = np.where(v == 0, (e == 0).astype(np.int64), table)
    return table


def xor_sum(values, axis=None):
    """Field sum (XOR reduction) of an integer array."""
    return np.bitwise_xor.reduce(np.asarray(values, dtype=np.int64), axis=axis)
