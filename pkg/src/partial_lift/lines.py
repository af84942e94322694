"""Simple lines ``T -> (T, alpha*T + beta)`` and the families L_{s,t}."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .field import FieldError, FieldSpec, mul, subgroup


class SimpleLine(NamedTuple):
    alpha: int
    beta: int

    def point(self, spec: FieldSpec, t: int) -> tuple[int, int]:
        return t, mul(spec, self.alpha, t) ^ self.beta


@dataclass(frozen=True)
class LineFamily:
    """All simple lines with slope in G_s and intercept in G_t.

    Lines are ordered by ``(alpha, beta)`` in integer order; repair traces
    and group scans rely on that ordering.
    """

    s: int
    t: int
    lines: tuple[SimpleLine, ...]
    slopes: tuple[int, ...]
    intercepts: frozenset[int]

    def __len__(self) -> int:
        return len(self.lines)

    def __iter__(self):
        return iter(self.lines)


def check_simple(spec: FieldSpec, line: SimpleLine) -> SimpleLine:
    alpha, beta = line
    spec.check_element(alpha)
    spec.check_element(beta)
    if alpha == 0 or beta == 0:
        raise FieldError(f"line {tuple(line)} is not simple (alpha and beta must be nonzero)")
    return SimpleLine(alpha, beta)


def family(spec: FieldSpec, s: int, t: int) -> LineFamily:
    slopes = subgroup(spec, s)
    intercepts = subgroup(spec, t)
    lines = tuple(SimpleLine(a, b) for a in slopes for b in intercepts)
    return LineFamily(s, t, lines, tuple(slopes), frozenset(intercepts))


def all_simple_lines(spec: FieldSpec) -> LineFamily:
    return family(spec, spec.order, spec.order)


def points_of(spec: FieldSpec, line: SimpleLine) -> list[tuple[int, int]]:
    """The ``q`` points of ``line`` in increasing order of the parameter ``T``."""
    return [line.point(spec, t) for t in range(spec.q)]


def lines_through(spec: FieldSpec, fam: LineFamily, x: int, y: int) -> list[SimpleLine]:
    """Family members passing through ``(x, y)``, in family order."""
    spec.check_element(x)
    spec.check_element(y)
    if x == 0 and y == 0:
        raise FieldError("no simple line passes through the origin")
    out = []
    for alpha in fam.slopes:
        beta = y ^ mul(spec, alpha, x)
        if beta in fam.intercepts:
            out.append(SimpleLine(alpha, beta))
    return out
