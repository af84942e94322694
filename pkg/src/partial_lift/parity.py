"""Binary-expansion utilities: bit sets, the 2-shadow order and Lucas parity."""

from __future__ import annotations

from collections.abc import Iterator


def bit_set(m: int) -> set[int]:
    """Indices of the one bits of ``m``."""
    return {i for i in range(m.bit_length()) if m >> i & 1}


def shadow_leq(m: int, n: int) -> bool:
    """True iff every set bit of ``m`` is also set in ``n``."""
    if m < 0 or n < 0:
        raise ValueError("shadow order is defined on nonnegative integers")
    return m & n == m


def binom_parity(n: int, k: int) -> int:
    """``C(n, k) mod 2`` via Lucas: odd iff ``k`` lies in the 2-shadow of ``n``."""
    if n < 0 or k < 0:
        raise ValueError("binom_parity needs nonnegative arguments")
    if k > n:
        return 0
    return 1 if k & n == k else 0


def submasks(m: int) -> Iterator[int]:
    """All ``n`` with ``n & m == n``, from ``m`` down to 0."""
    n = m
    while True:
        yield n
        if n == 0:
            return
        n = (n - 1) & m


def complement(a: int, ell: int) -> int:
    """Bitwise complement of ``a`` within ``ell`` bits (equals ``2^ell - 1 - a``)."""
    return ~a & ((1 << ell) - 1)
