"""Quivers and paths.

Paths compose right to left: ``compose(q, p)`` is "q after p".  A path stores
its arrows in application order, so ``Path(arrows=("a1", "a2"))`` is the
product ``a2 a1`` and renders as ``"a2*a1"``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, NamedTuple


class Arrow(NamedTuple):
    name: str
    source: str
    target: str


@dataclass(frozen=True)
class Path:
    vertices: tuple[str, ...]
    arrows: tuple[str, ...] = ()

    def __post_init__(self):
        if len(self.vertices) != len(self.arrows) + 1:
            raise ValueError("vertex word must be one longer than the arrow list")

    @classmethod
    def trivial(cls, vertex: str) -> "Path":
        return cls((vertex,), ())

    @property
    def source(self) -> str:
        return self.vertices[0]

    @property
    def target(self) -> str:
        return self.vertices[-1]

    @property
    def length(self) -> int:
        return len(self.arrows)

    def __len__(self):
        return len(self.arrows)

    @property
    def is_trivial(self) -> bool:
        return not self.arrows

    def right_subpath(self, i: int) -> "Path":
        """The length-``i`` initial segment (the first ``i`` arrows applied)."""
        return Path(self.vertices[: i + 1], self.arrows[:i])

    def left_factor(self, i: int) -> "Path":
        """The path ``q`` with ``self == compose(q, self.right_subpath(i))``."""
        return Path(self.vertices[i:], self.arrows[i:])

    def __str__(self):
        if not self.arrows:
            return f"e_{self.vertices[0]}"
        return "*".join(reversed(self.arrows))

    def sort_key(self):
        return (len(self.arrows), tuple(reversed(self.arrows)), self.vertices)


def compose(q: Path, p: Path) -> Path | None:
    """``q`` after ``p``, or ``None`` when the endpoints do not match."""
    if q.source != p.target:
        return None
    return Path(p.vertices + q.vertices[1:], p.arrows + q.arrows)


@dataclass
class Quiver:
    vertices: list[str]
    arrows: list[Arrow] = field(default_factory=list)

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("duplicate vertex identifier")
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise ValueError("duplicate arrow name")
        vs = set(self.vertices)
        for a in self.arrows:
            if a.source not in vs or a.target not in vs:
                raise ValueError(f"arrow {a.name} has an undeclared endpoint")
        if set(names) & vs:
            raise ValueError("arrow names and vertex identifiers must be distinct")
        self._by_name = {a.name: a for a in self.arrows}

    def arrow(self, name: str) -> Arrow:
        try:
            return self._by_name[name]
        except KeyError:
            raise KeyError(f"unknown arrow {name!r}") from None

    def has_arrow(self, name: str) -> bool:
        return name in self._by_name

    def arrows_from(self, v: str) -> list[Arrow]:
        return sorted((a for a in self.arrows if a.source == v), key=lambda a: a.name)

    def arrows_between(self, u: str, v: str) -> list[Arrow]:
        return sorted((a for a in self.arrows if a.source == u and a.target == v),
                      key=lambda a: a.name)

    def path(self, arrow_names) -> Path:
        """Build a path from arrow names given in application order."""
        arrow_names = list(arrow_names)
        if not arrow_names:
            raise ValueError("use Path.trivial for trivial paths")
        first = self.arrow(arrow_names[0])
        verts = [first.source, first.target]
        for name in arrow_names[1:]:
            a = self.arrow(name)
            if a.source != verts[-1]:
                raise ValueError(f"arrow {name} does not start where the path so far ends")
            verts.append(a.target)
        return Path(tuple(verts), tuple(arrow_names))

    def double_arrows(self) -> list[tuple[Arrow, Arrow]]:
        """Pairs of distinct parallel arrows (same source and target)."""
        out = []
        for i, a in enumerate(self.arrows):
            for b in self.arrows[i + 1:]:
                if a.source == b.source and a.target == b.target:
                    out.append((a, b))
        return out


def extensions(quiver: Quiver, p: Path) -> Iterator[Path]:
    for a in quiver.arrows_from(p.target):
        yield Path(p.vertices + (a.target,), p.arrows + (a.name,))


def paths_from(quiver: Quiver, v: str, max_len: int) -> list[Path]:
    """All paths starting at ``v`` of length at most ``max_len``, trivial one included.

    Ordered by length, then lexicographically by arrow names in application order.
    """
    if max_len < 0:
        raise ValueError("max_len must be non-negative")
    if v not in quiver.vertices:
        raise KeyError(f"unknown vertex {v!r}")
    layer = [Path.trivial(v)]
    out = list(layer)
    for _ in range(max_len):
        layer = [ext for p in layer for ext in extensions(quiver, p)]
        layer.sort(key=lambda p: p.arrows)
        out.extend(layer)
    return out
