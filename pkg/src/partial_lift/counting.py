"""Valid pairs, valid triples and the carry transfer matrix.

Counts the classes that govern the codimension of the ``s = 2^(ell/2) - 1,
t = q - 1`` construction, both by enumeration and through the 3x3 carry
recursion. All counting is exact Python integer arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._validation import check_even_ell
from .parity import submasks

# rows act on (noCarry, yesCarry, maybeCarry)
CARRY_MATRIX: tuple[tuple[int, int, int], ...] = (
    (3, 0, 0),
    (3, 6, 4),
    (1, 1, 4),
)

GROWTH_RATE = 5 + math.sqrt(5)
MAX_TRIPLE_LENGTH = 6
MAX_PAIR_ELL = 20


@dataclass(frozen=True)
class TripleCounts:
    r: int
    no_carry: int
    yes_carry: int
    maybe_carry: int

    @property
    def total(self) -> int:
        return self.no_carry + self.yes_carry + self.maybe_carry

    def as_tuple(self) -> tuple[int, int, int]:
        return self.no_carry, self.yes_carry, self.maybe_carry

    def step(self) -> "TripleCounts":
        n, y, m = self.as_tuple()
        (a, b, c), (d, e, f), (g, h, i) = CARRY_MATRIX
        return TripleCounts(
            self.r + 1, a * n + b * y + c * m, d * n + e * y + f * m, g * n + h * y + i * m
        )


def valid_pair_set(ell: int) -> set[tuple[int, int]]:
    """All valid pairs ``(i, c)`` with ``i < 2^(ell/2) - 1`` and ``c < q - 1``."""
    ell = check_even_ell(ell)
    if ell > MAX_PAIR_ELL:
        raise ValueError(f"enumeration limited to ell <= {MAX_PAIR_ELL}")
    q = 1 << ell
    s = (1 << (ell // 2)) - 1
    pairs = set()
    for a in range(q):
        i = a % s
        for c in submasks(a):
            if c < q - 1:
                pairs.add((i, c))
    return pairs


def brute_valid_pairs(ell: int) -> int:
    """Number of valid pairs, by enumerating every ``a < q`` and ``c`` in its 2-shadow."""
    return len(valid_pair_set(ell))


def triple_classes(r: int) -> dict[tuple[int, int, int], str]:
    """Classify each valid triple ``(y, c0, c1)`` of length ``r`` by scanning all witnesses.

    Values are ``"no"``, ``"yes"`` or ``"maybe"`` according to whether the
    witnesses' sums ``a0 + a1`` stay below ``2^r``, all reach it, or both.
    """
    if r < 0:
        raise ValueError("length must be nonnegative")
    if r > MAX_TRIPLE_LENGTH:
        raise ValueError(f"enumeration limited to r <= {MAX_TRIPLE_LENGTH}")
    size = 1 << r
    full = size - 1
    seen: dict[tuple[int, int, int], int] = {}  # bit 1: low sum seen, bit 2: high sum seen
    for c0 in range(size):
        # witnesses a0 >= c0 in the shadow order are supersets of c0's bits
        supers0 = [full ^ x for x in submasks(full ^ c0)]
        for c1 in range(size):
            supers1 = [full ^ x for x in submasks(full ^ c1)]
            for a0 in supers0:
                for a1 in supers1:
                    total = a0 + a1
                    key = (total & full, c0, c1)
                    seen[key] = seen.get(key, 0) | (1 if total <= full else 2)
    names = {1: "no", 2: "yes", 3: "maybe"}
    return {key: names[flags] for key, flags in sorted(seen.items())}


def brute_valid_triples(r: int) -> TripleCounts:
    classes = triple_classes(r)
    values = list(classes.values())
    return TripleCounts(r, values.count("no"), values.count("yes"), values.count("maybe"))


def recurse_counts(r: int) -> TripleCounts:
    """``M^r (1, 0, 0)`` for the carry matrix ``M``."""
    if r < 0:
        raise ValueError("length must be nonnegative")
    counts = TripleCounts(0, 1, 0, 0)
    for _ in range(r):
        counts = counts.step()
    return counts


def pairs_bound(ell: int) -> int:
    """Upper bound ``noCarry + yesCarry + 2 maybeCarry`` at length ``ell/2`` on valid pairs."""
    ell = check_even_ell(ell)
    c = recurse_counts(ell // 2)
    return c.no_carry + c.yes_carry + 2 * c.maybe_carry


def supported_pairs(ell: int) -> dict[tuple[int, int, int], set[tuple[int, int]]]:
    """Pairs supported by each valid triple of length ``ell/2``.

    A triple ``(y, c0, c1)`` supports ``(i, c)`` when ``c = c0 * 2^(ell/2) + c1``
    and some witness has ``a0 + a1 = i mod (2^(ell/2) - 1)``.
    """
    ell = check_even_ell(ell)
    r = ell // 2
    size = 1 << r
    full = size - 1
    s = full
    q = 1 << ell
    out: dict[tuple[int, int, int], set[tuple[int, int]]] = {}
    for c0 in range(size):
        supers0 = [full ^ x for x in submasks(full ^ c0)]
        for c1 in range(size):
            supers1 = [full ^ x for x in submasks(full ^ c1)]
            c = c0 * size + c1
            for a0 in supers0:
                for a1 in supers1:
                    key = ((a0 + a1) & full, c0, c1)
                    bucket = out.setdefault(key, set())
                    if c < q - 1:
                        bucket.add(((a0 + a1) % s, c))
    return out


@dataclass(frozen=True)
class GrowthRow:
    ell: int
    bound: int
    ratio: float


def growth_check(ell_max: int) -> list[GrowthRow]:
    """``pairs_bound(ell) / (5 + sqrt 5)^(ell/2)`` for even ``ell`` up to ``ell_max``.

    Ratios are for reporting; the bounds themselves are exact integers.
    """
    ell_max = check_even_ell(ell_max)
    rows = []
    for ell in range(2, ell_max + 1, 2):
        bound = pairs_bound(ell)
        ratio = math.exp(math.log(bound) - (ell / 2) * math.log(GROWTH_RATE))
        rows.append(GrowthRow(ell, bound, ratio))
    return rows


def codimension_exponent() -> float:
    """``log2(5 + sqrt 5) / 4``, the exponent in ``N - K = O(N^x)``."""
    return math.log2(GROWTH_RATE) / 4


def dominant_eigenvalue() -> float:
    return float(max(np.linalg.eigvals(np.array(CARRY_MATRIX, dtype=float)).real))
