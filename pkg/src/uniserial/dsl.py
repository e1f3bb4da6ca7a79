"""Text format for quivers with relations.

    # an algebra of infinite uniserial type
    vertices 1 2 3 4
    arrow a1 : 1 -> 2
    ...
    loewy 8
    rel a5*a1*a2 - a5*a4*a3*a1*a2

``*`` composes right to left: ``a2*a1`` is a2 after a1, i.e. a1 is applied
first.  A term may carry a rational coefficient, ``3/2 a2*a1``.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .detours import MastContext, SimpleSequence
from .polynomial import Var
from .presentation import AlgebraPresentation, Relation
from .quiver import Arrow, Path, Quiver

NAME = r"[A-Za-z_][A-Za-z0-9_']*"
_TOKEN = re.compile(rf"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>{NAME})|(?P<op>[*+-]))")
_ARROW = re.compile(rf"^({NAME})\s*:\s*(\S+)\s*->\s*(\S+)$")


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _tokens(text: str, line: int | None = None) -> list[tuple[str, str]]:
    out = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos:].strip()[:1]!r}", line)
        kind = m.lastgroup
        out.append((kind, m.group(kind)))
        pos = m.end()
    return out


def _monomial(names: list[str], quiver: Quiver, line: int | None) -> Path:
    for n in names:
        if not quiver.has_arrow(n):
            raise ParseError(f"unknown arrow {n!r}", line)
    try:
        return quiver.path(reversed(names))
    except ValueError:
        raise ParseError(f"non-composable monomial {'*'.join(names)}", line) from None


def parse_linear_combination(text: str, quiver: Quiver, line: int | None = None
                             ) -> list[tuple[Fraction, Path]]:
    toks = _tokens(text, line)
    terms = []
    i = 0
    sign = 1
    signed = False
    expect_term = True
    while i < len(toks):
        kind, val = toks[i]
        if kind == "op" and val in "+-":
            if signed:
                raise ParseError("two signs in a row", line)
            expect_term = True
            signed = True
            sign = -1 if val == "-" else 1
            i += 1
            continue
        if not expect_term:
            raise ParseError(f"expected + or - before {val!r}", line)
        coeff = Fraction(1)
        if kind == "num":
            coeff = Fraction(val)
            i += 1
            if i < len(toks) and toks[i] == ("op", "*"):
                i += 1
        names = []
        while i < len(toks) and toks[i][0] == "name":
            names.append(toks[i][1])
            i += 1
            if i < len(toks) and toks[i] == ("op", "*"):
                i += 1
                if i >= len(toks) or toks[i][0] != "name":
                    raise ParseError("dangling '*'", line)
            else:
                break
        if not names:
            raise ParseError("a term needs at least one arrow", line)
        terms.append((sign * coeff, _monomial(names, quiver, line)))
        sign = 1
        signed = False
        expect_term = False
    if expect_term:
        raise ParseError("expression ends without a term", line)
    return terms


def _split(terms, loewy: int, line: int | None) -> list[Relation]:
    """Group terms by (source, target) and drop monomials implied by the loewy bound."""
    groups: dict[tuple[str, str], dict[Path, Fraction]] = {}
    for c, p in terms:
        if p.length < 2:
            raise ParseError(f"relation monomial {p} has length < 2", line)
        if p.length >= loewy:
            continue
        g = groups.setdefault((p.source, p.target), {})
        g[p] = g.get(p, Fraction(0)) + c
    rels = []
    for g in groups.values():
        kept = tuple((c, p) for p, c in g.items() if c != 0)
        if kept:
            rels.append(Relation(kept))
    return rels


def parse_presentation(text: str) -> AlgebraPresentation:
    vertices = None
    arrows: list[Arrow] = []
    loewy = None
    rel_lines: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        keyword, _, rest = line.partition(" ")
        rest = rest.strip()
        if keyword == "vertices":
            if vertices is not None:
                raise ParseError("vertices declared twice", lineno)
            vertices = rest.split()
            if not vertices:
                raise ParseError("no vertices given", lineno)
        elif keyword == "arrow":
            m = _ARROW.match(rest)
            if not m:
                raise ParseError("expected 'arrow <name> : <src> -> <dst>'", lineno)
            arrows.append((lineno, Arrow(*m.groups())))
        elif keyword == "loewy":
            if loewy is not None:
                raise ParseError("loewy bound declared twice", lineno)
            try:
                loewy = int(rest)
            except ValueError:
                raise ParseError(f"loewy bound must be an integer, got {rest!r}", lineno) from None
            if loewy < 1:
                raise ParseError("loewy bound must be at least 1", lineno)
        elif keyword == "rel":
            rel_lines.append((lineno, rest))
        else:
            raise ParseError(f"unknown keyword {keyword!r}", lineno)
    if vertices is None:
        raise ParseError("missing 'vertices' line")
    if loewy is None:
        raise ParseError("missing 'loewy' bound")
    vset = set(vertices)
    if len(vset) != len(vertices):
        raise ParseError("duplicate vertex identifier")
    seen = set()
    for lineno, a in arrows:
        for v in (a.source, a.target):
            if v not in vset:
                raise ParseError(f"unknown vertex {v!r}", lineno)
        if a.name in seen or a.name in vset:
            raise ParseError(f"arrow name {a.name!r} already in use", lineno)
        seen.add(a.name)
    quiver = Quiver(vertices, [a for _, a in arrows])
    relations = []
    for lineno, body in rel_lines:
        relations.extend(_split(parse_linear_combination(body, quiver, lineno), loewy, lineno))
    return AlgebraPresentation(quiver, relations, loewy)


def render_presentation(pres: AlgebraPresentation) -> str:
    lines = ["vertices " + " ".join(pres.quiver.vertices)]
    for a in pres.quiver.arrows:
        lines.append(f"arrow {a.name} : {a.source} -> {a.target}")
    lines.append(f"loewy {pres.loewy_bound}")
    for rel in pres.relations:
        lines.append(f"rel {rel}")
    return "\n".join(lines) + "\n"


def parse_sequence(text: str, quiver: Quiver) -> SimpleSequence:
    verts = text.replace(",", " ").split()
    for v in verts:
        if v not in quiver.vertices:
            raise ParseError(f"unknown vertex {v!r}")
    if not verts:
        raise ParseError("empty sequence")
    return SimpleSequence(tuple(verts))


def parse_path(text: str, quiver: Quiver) -> Path:
    text = text.strip()
    m = re.fullmatch(r"e_(\S+)", text)
    if m and m.group(1) in quiver.vertices:
        return Path.trivial(m.group(1))
    names = [t.strip() for t in text.split("*")]
    if not all(re.fullmatch(NAME, n) for n in names):
        raise ParseError(f"malformed path {text!r}")
    return _monomial(names, quiver, None)


def parse_point(text: str, ctx: MastContext) -> dict[Var, Fraction]:
    """``"a5,3,6=1; a3,1,4=2/3"`` -> coordinates; unmentioned ones are 0."""
    legal = set(ctx.variables)
    out = {v: Fraction(0) for v in ctx.variables}
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        m = re.fullmatch(rf"\s*({NAME})\s*,\s*(\d+)\s*,\s*(\d+)\s*=\s*(-?\d+(?:/\d+)?)\s*", chunk)
        if not m:
            raise ParseError(f"malformed coordinate {chunk!r}; expected arrow,m,i=value")
        var = Var(int(m.group(2)), m.group(1), int(m.group(3)))
        if var not in legal:
            raise ParseError(f"{var} is not a coordinate of the mast {ctx.p}")
        out[var] = Fraction(m.group(4))
    return out
