"""Disjoint repair groups from family lines, and erasure repair."""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field

import numpy as np
from sklearn.utils.validation import check_is_fitted

from .field import vmul, xor_sum
from .lift import PartialLiftCode, point_index
from .lines import SimpleLine, lines_through

logger = logging.getLogger(__name__)


class ErasedSymbolError(ValueError):
    """A repair group member is erased."""


@dataclass(frozen=True)
class RepairGroup:
    target: int
    members: frozenset[int]
    line: SimpleLine


@dataclass(frozen=True)
class DrgpReport:
    s_min: int
    per_point: dict[int, int] = field(default_factory=dict)  # group count -> number of points
    disjoint: bool = True


@dataclass(frozen=True)
class RepairAttempt:
    target: int
    line: SimpleLine | None
    value: int | None

    @property
    def success(self) -> bool:
        return self.line is not None

    def trace_line(self) -> str:
        if self.line is None:
            return f"target={self.target} line=- outcome=fail"
        a, b = self.line
        return f"target={self.target} line=({a},{b}) outcome=ok value={self.value}"


def _point_of(code: PartialLiftCode, index: int) -> tuple[int, int]:
    check_is_fitted(code, "points_")
    if not 0 <= index < code.n_points_:
        raise IndexError(f"point index {index} out of range [0, {code.n_points_})")
    x, y = code.points_[index]
    return int(x), int(y)


def repair_groups(code: PartialLiftCode, index: int) -> list[RepairGroup]:
    """One group per family line through point ``index``: the line's other ``q - 1`` points."""
    x, y = _point_of(code, index)
    spec = code.field_
    ts = np.arange(spec.q, dtype=np.int64)
    groups = []
    for line in lines_through(spec, code.family_, x, y):
        ys = vmul(spec, line.alpha, ts) ^ line.beta
        members = frozenset(
            point_index(spec, int(t), int(v)) for t, v in zip(ts, ys) if t != x
        )
        groups.append(RepairGroup(index, members, line))
    return groups


def groups_disjoint(groups) -> bool:
    seen: set[int] = set()
    for g in groups:
        if seen & g.members:
            return False
        seen |= g.members
    return True


def repair_value(codeword, group: RepairGroup, erased=frozenset()) -> int:
    """Field sum of the group's member symbols."""
    hit = group.members & set(erased)
    if hit:
        raise ErasedSymbolError(f"member {min(hit)} of the group for {group.target} is erased")
    word = np.asarray(codeword, dtype=np.int64)
    return int(xor_sum(word[sorted(group.members)]))


def min_drgp(code: PartialLiftCode) -> DrgpReport:
    """Minimum number of pairwise-disjoint repair groups over all points."""
    check_is_fitted(code, "points_")
    hist: Counter[int] = Counter()
    disjoint = True
    for index in range(code.n_points_):
        groups = repair_groups(code, index)
        if not groups_disjoint(groups):
            disjoint = False
            logger.warning("repair groups at point %d overlap", index)
        hist[len(groups)] += 1
    return DrgpReport(min(hist), dict(sorted(hist.items())), disjoint)


def check_repair_identity(code: PartialLiftCode, codewords) -> list[tuple[int, int, SimpleLine]]:
    """Every ``(codeword row, point, line)`` whose repair value disagrees with the symbol."""
    words = np.atleast_2d(np.asarray(codewords, dtype=np.int64))
    failures = []
    for index in range(code.n_points_):
        for g in repair_groups(code, index):
            cols = np.fromiter(sorted(g.members), dtype=np.int64)
            sums = xor_sum(words[:, cols], axis=1)
            for r in np.flatnonzero(sums != words[:, index]):
                failures.append((int(r), index, g.line))
    return failures


def simulate_erasures(code: PartialLiftCode, codeword, erased, target: int) -> RepairAttempt:
    """Repair ``target`` from the first group (family order) avoiding ``erased``."""
    erased = set(erased)
    for g in repair_groups(code, target):
        if not g.members & erased:
            return RepairAttempt(target, g.line, repair_value(codeword, g))
    return RepairAttempt(target, None, None)
