"""Versioned JSON descriptor of a built code, and CSV matrix export."""

from __future__ import annotations

import io
import json
from dataclasses import dataclass
from pathlib import Path

from .lift import POINT_ORDER_VERSION, PartialLiftCode
from .monomial import BasisPoly

FORMAT_NAME = "partial-lift-code"
FORMAT_VERSION = 1


class DescriptorError(ValueError):
    """Malformed or inconsistent descriptor."""


@dataclass(frozen=True)
class CodeDescriptor:
    ell: int
    modulus: int
    s: int
    t: int
    basis: tuple[BasisPoly, ...]
    point_order: str = POINT_ORDER_VERSION

    @classmethod
    def from_code(cls, code: PartialLiftCode) -> "CodeDescriptor":
        spec = code.field_
        return cls(spec.ell, spec.modulus, code.family_.s, code.family_.t, tuple(code.basis_))

    def to_code(self, compute_rank: bool = True) -> PartialLiftCode:
        if self.point_order != POINT_ORDER_VERSION:
            raise DescriptorError(f"unsupported point order {self.point_order!r}")
        return PartialLiftCode(
            ell=self.ell,
            s=self.s,
            t=self.t,
            basis=list(self.basis),
            modulus=self.modulus,
            compute_rank=compute_rank,
        ).fit()

    def to_dict(self) -> dict:
        return {
            "format": FORMAT_NAME,
            "version": FORMAT_VERSION,
            "ell": self.ell,
            "modulus": self.modulus,
            "s": self.s,
            "t": self.t,
            "point_order": self.point_order,
            "basis": [
                {"kind": p.kind, "terms": [[m.a, m.b] for m in p.terms]} for p in self.basis
            ],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "CodeDescriptor":
        if data.get("format") != FORMAT_NAME:
            raise DescriptorError("not a partial-lift code descriptor")
        if data.get("version") != FORMAT_VERSION:
            raise DescriptorError(f"unsupported descriptor version {data.get('version')!r}")
        try:
            basis = []
            for entry in data["basis"]:
                poly = BasisPoly(tuple(tuple(int(v) for v in term) for term in entry["terms"]))
                if poly.kind != entry["kind"]:
                    raise DescriptorError(f"basis entry {entry} has the wrong kind tag")
                basis.append(poly)
            return cls(
                int(data["ell"]),
                int(data["modulus"]),
                int(data["s"]),
                int(data["t"]),
                tuple(basis),
                str(data["point_order"]),
            )
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, DescriptorError):
                raise
            raise DescriptorError(f"corrupted descriptor: {exc}") from exc

    def dumps(self) -> str:
        # one basis element per line keeps diffs readable
        d = self.to_dict()
        basis = d.pop("basis")
        head = json.dumps(d, indent=2)[:-2]
        rows = ",\n".join("    " + json.dumps(b) for b in basis)
        return f'{head},\n  "basis": [\n{rows}\n  ]\n}}\n'

    @classmethod
    def loads(cls, text: str) -> "CodeDescriptor":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DescriptorError(f"corrupted descriptor: {exc}") from exc
        return cls.from_dict(data)

    def save(self, path) -> None:
        Path(path).write_text(self.dumps())

    @classmethod
    def load(cls, path) -> "CodeDescriptor":
        return cls.loads(Path(path).read_text())


def matrix_csv(matrix) -> str:
    buf = io.StringIO()
    for row in matrix:
        buf.write(",".join(str(int(v)) for v in row))
        buf.write("\n")
    return buf.getvalue()
