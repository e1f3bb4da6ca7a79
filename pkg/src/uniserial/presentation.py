"""Algebras KQ/I given by quiver, relations and a Loewy bound."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .quiver import Path, Quiver


@dataclass(frozen=True)
class Relation:
    """A linear combination of parallel paths, stored as ``((coeff, path), ...)``."""

    terms: tuple[tuple[Fraction, Path], ...]

    def __post_init__(self):
        if not self.terms:
            raise ValueError("zero relation")
        paths = [p for _, p in self.terms]
        if len(set(paths)) != len(paths):
            raise ValueError("repeated path in relation")
        if any(c == 0 for c, _ in self.terms):
            raise ValueError("zero coefficient in relation")
        if len({(p.source, p.target) for p in paths}) != 1:
            raise ValueError("relation terms must share source and target")

    @property
    def source(self) -> str:
        return self.terms[0][1].source

    @property
    def target(self) -> str:
        return self.terms[0][1].target

    def __str__(self):
        out = []
        for c, p in self.terms:
            neg = c < 0
            mag = -c if neg else c
            body = str(p) if mag == 1 else f"{mag} {p}"
            if not out:
                out.append(f"-{body}" if neg else body)
            else:
                out.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(out)


@dataclass
class AlgebraPresentation:
    quiver: Quiver
    relations: list[Relation]
    loewy_bound: int

    def __post_init__(self):
        if self.loewy_bound < 1:
            raise ValueError("loewy bound must be at least 1")
        for rel in self.relations:
            for _, p in rel.terms:
                if p.length < 2:
                    raise ValueError(f"relation {rel} has a monomial of length < 2")
                if p.length >= self.loewy_bound:
                    raise ValueError(f"relation {rel} has a monomial beyond the loewy bound")

    def relations_from(self, vertex: str) -> list[Relation]:
        return [r for r in self.relations if r.source == vertex]
