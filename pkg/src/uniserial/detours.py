"""Combinatorics of a mast candidate: right subpaths, routes and detours."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .polynomial import Var
from .quiver import Path, Quiver


@dataclass(frozen=True)
class SimpleSequence:
    """A composition-series pattern, written as the vertex word (e(0), ..., e(l))."""

    vertices: tuple[str, ...]

    def __post_init__(self):
        if not self.vertices:
            raise ValueError("a sequence of simples needs at least one entry")

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def top(self) -> str:
        return self.vertices[0]

    @property
    def mu(self) -> int:
        """Multiplicity of the top simple."""
        return self.vertices.count(self.vertices[0])

    def __str__(self):
        return " ".join(self.vertices)


@dataclass(frozen=True)
class Detour:
    arrow: str
    m: int
    indices: tuple[int, ...]


@dataclass
class MastContext:
    quiver: Quiver
    p: Path
    detours: list[Detour]
    dead_ends: list[tuple[str, int]]
    variables: list[Var]
    right_subpaths: list[Path] = field(init=False)
    _detour_at: dict = field(init=False, repr=False)

    def __post_init__(self):
        self.right_subpaths = [self.p.right_subpath(i) for i in range(self.p.length + 1)]
        self._detour_at = {(d.arrow, d.m): d for d in self.detours}

    @property
    def l(self) -> int:
        return self.p.length

    @property
    def sequence(self) -> tuple[str, ...]:
        return self.p.vertices

    @property
    def N(self) -> int:
        return len(self.variables)

    @property
    def w_indices(self) -> list[int]:
        """Indices s >= 1 of right subpaths ending at the start vertex."""
        e0 = self.p.source
        return [s for s in range(1, self.l + 1) if self.p.vertices[s] == e0]

    @property
    def w_list(self) -> list[Path]:
        return [self.right_subpaths[s] for s in self.w_indices]

    @property
    def t(self) -> int:
        return len(self.w_indices)

    @property
    def mu(self) -> int:
        return self.t + 1

    def detour(self, arrow: str, m: int) -> Detour | None:
        return self._detour_at.get((arrow, m))

    def step(self, arrow: str, m: int) -> str:
        """Classify ``arrow`` applied after ``p_m``: 'mast', 'detour' or 'dead'."""
        if m < self.l and self.p.arrows[m] == arrow:
            return "mast"
        if (arrow, m) in self._detour_at:
            return "detour"
        return "dead"


def build_mast_context(p: Path, quiver: Quiver) -> MastContext:
    if p.length < 1:
        raise ValueError("a mast must have positive length")
    l = p.length
    detours, dead = [], []
    for m in range(l + 1):
        for a in quiver.arrows_from(p.vertices[m]):
            if m < l and p.arrows[m] == a.name:
                continue
            idx = tuple(s for s in range(m + 1, l + 1) if p.vertices[s] == a.target)
            if idx:
                detours.append(Detour(a.name, m, idx))
            else:
                dead.append((a.name, m))
    detours.sort(key=lambda d: (d.m, d.arrow))
    variables = [Var(d.m, d.arrow, i) for d in detours for i in d.indices]
    return MastContext(quiver, p, detours, dead, variables)


def embeds(word, target) -> bool:
    """Whether ``word`` is an order-preserving subsequence of ``target`` (greedy)."""
    it = iter(target)
    return all(any(v == w for w in it) for v in word)


def is_route(v: Path, ctx: MastContext) -> bool:
    if v.source != ctx.p.source:
        return False
    if v.length > ctx.l:
        return False
    return embeds(v.vertices, ctx.p.vertices)


def paths_through(seq: SimpleSequence, quiver: Quiver) -> list[Path]:
    """Every path whose vertex word is exactly ``seq``."""
    verts = seq.vertices
    for v in verts:
        if v not in quiver.vertices:
            raise KeyError(f"unknown vertex {v!r}")
    choices = [[a.name for a in quiver.arrows_between(u, w)] for u, w in zip(verts, verts[1:])]
    return [Path(verts, tuple(combo)) for combo in itertools.product(*choices)]


def condition_N(presentation, masts) -> list[tuple[str, Path]]:
    """Violations of condition (N): pairs (arrow, mast) where a mast parallel to the
    arrow neither starts nor ends with it.

    Accepts a presentation or a bare quiver.
    """
    quiver = getattr(presentation, "quiver", presentation)
    out = []
    for a in quiver.arrows:
        for p in masts:
            if p.length < 1 or p.source != a.source or p.target != a.target:
                continue
            if p.arrows[0] != a.name and p.arrows[-1] != a.name:
                out.append((a.name, p))
    return out
