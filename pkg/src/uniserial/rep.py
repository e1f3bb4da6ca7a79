"""Uniserial points as matrix representations, and their endomorphisms.

The representation attached to a point k has basis vectors e_i = p_i x, where
x is the top element.  Arrow matrices act on columns: column j of the matrix
of an arrow b is the expansion of b p_j x.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from . import linalg
from .detours import MastContext
from .fields import Fp
from .polynomial import Var
from .presentation import AlgebraPresentation
from .quiver import Path


def _unit_of(values) -> tuple:
    for x in values:
        if isinstance(x, Fp):
            return Fp(0, x.q), Fp(1, x.q)
    return Fraction(0), Fraction(1)


@dataclass
class RepresentationPoint:
    context: MastContext
    arrows: dict
    idempotents: dict

    @property
    def dim(self) -> int:
        return self.context.l + 1

    def path_matrix(self, path: Path):
        m = self.idempotents[path.source]
        for a in path.arrows:
            m = linalg.matmul(self.arrows[a], m)
        return m

    def apply_path(self, path: Path, vec: list) -> list:
        v = linalg.matvec(self.idempotents[path.source], vec)
        for a in path.arrows:
            v = linalg.matvec(self.arrows[a], v)
        return v

    def generators(self):
        """All matrices of the representation: arrows, then vertex projections."""
        return list(self.arrows.values()) + list(self.idempotents.values())


def realize(values: Mapping, ctx: MastContext) -> RepresentationPoint:
    """The point of Uni(p) with detour coordinates ``values``.

    Values may be scalars or polynomials; points off the variety are realized
    anyway and fail :func:`verify`.
    """
    n = ctx.l + 1
    zero, one = _unit_of(values.values())
    p = ctx.p
    arrows = {}
    for a in ctx.quiver.arrows:
        mat = linalg.zeros(n, n, zero)
        for j in range(n):
            if j < ctx.l and p.arrows[j] == a.name:
                mat[j + 1][j] = one
                continue
            d = ctx.detour(a.name, j)
            if d is not None:
                for i in d.indices:
                    mat[i][j] = values.get(Var(j, a.name, i), zero)
        arrows[a.name] = mat
    idem = {}
    for v in ctx.quiver.vertices:
        mat = linalg.zeros(n, n, zero)
        for j in range(n):
            if p.vertices[j] == v:
                mat[j][j] = one
        idem[v] = mat
    return RepresentationPoint(ctx, arrows, idem)


def verify(x: RepresentationPoint, presentation: AlgebraPresentation) -> tuple[bool, list[str]]:
    """Check that ``x`` is a module over the presented algebra with mast ``p``."""
    diags = []
    n = x.dim
    for name, mat in x.arrows.items():
        if any(mat[r][c] != 0 for r in range(n) for c in range(r, n)):
            diags.append(f"arrow {name} is not strictly lower triangular")
    for k, rel in enumerate(presentation.relations, start=1):
        total = linalg.zeros(n, n)
        for c, path in rel.terms:
            pm = x.path_matrix(path)
            total = [[t + c * y for t, y in zip(tr, pr)] for tr, pr in zip(total, pm)]
        if not linalg.is_zero(total):
            diags.append(f"relation {k} ({rel}) does not vanish")
    top = [0] * n
    top[0] = 1
    if all(v == 0 for v in x.apply_path(x.context.p, top)):
        diags.append("the mast annihilates the top element")
    return not diags, diags


def _as_rep(k, ctx: MastContext | None) -> RepresentationPoint:
    if isinstance(k, RepresentationPoint):
        return k
    if ctx is None:
        ctx = k.context
    return realize(k, ctx)


def _orbit_columns(x: RepresentationPoint, s: int) -> list[list]:
    """Matrix whose column i is p_i(x) e_s."""
    ctx = x.context
    n = x.dim
    zero, one = _unit_of(v for m in x.generators() for row in m for v in row)
    vec = [zero] * n
    vec[s] = one
    cols = [vec]
    for a in ctx.p.arrows:
        vec = linalg.matvec(x.arrows[a], vec)
        cols.append(vec)
    return linalg.transpose(cols)


def commutator(a, b):
    return linalg.matsub(linalg.matmul(a, b), linalg.matmul(b, a))


def build_A(k, ctx: MastContext | None = None) -> list[list]:
    """Coefficient matrix of the linear conditions on (c_1..c_t) for
    x -> x + sum c_j w_j x to extend to an endomorphism.

    Column j stacks the entries of the commutators [E_j, g] over all generators
    g of the representation, where E_j has columns p_i(x) w_j x.  Zero rows are
    dropped.  Entries are ring elements, so polynomial points are allowed.
    """
    x = _as_rep(k, ctx)
    ctx = x.context
    cols = []
    for s in ctx.w_indices:
        e_j = _orbit_columns(x, s)
        col = []
        for g in x.generators():
            for row in commutator(e_j, g):
                col.extend(row)
        cols.append(col)
    if not cols:
        return []
    rows = linalg.transpose(cols)
    return [r for r in rows if any(v != 0 for v in r)]


@dataclass
class FiberReport:
    t: int
    mu: int
    A: list
    rank_A: int
    delta: int
    dim_aut_u: int
    fiber_dim: int

    def as_dict(self) -> dict:
        return {"t": self.t, "mu": self.mu, "rank_A": self.rank_A, "delta": self.delta,
                "dim_aut_u": self.dim_aut_u, "fiber_dim": self.fiber_dim}


def fiber_report(k, ctx: MastContext | None = None) -> FiberReport:
    x = _as_rep(k, ctx)
    ctx = x.context
    a = build_A(x)
    r = linalg.rank(a)
    t = ctx.t
    rep = FiberReport(t=t, mu=t + 1, A=a, rank_A=r, delta=t + 1 - r, dim_aut_u=t - r, fiber_dim=r)
    assert rep.fiber_dim == rep.mu - rep.delta
    return rep


def _block_unknowns(ctx: MastContext) -> list[tuple[int, int]]:
    # commuting with the vertex projections forces E[a][b] = 0 unless e(a) == e(b)
    word = ctx.p.vertices
    n = len(word)
    return [(a, b) for a in range(n) for b in range(n) if word[a] == word[b]]


def _intertwiner_space(x: RepresentationPoint, y: RepresentationPoint) -> tuple[list, list]:
    """Basis of {T : T g(x) = g(y) T for every arrow and vertex g}, as vectors over
    the block unknowns (which solve the vertex equations)."""
    unknowns = _block_unknowns(x.context)
    index = {u: k for k, u in enumerate(unknowns)}
    n = x.dim
    rows = []
    for name in x.arrows:
        ax, ay = x.arrows[name], y.arrows[name]
        for r in range(n):
            for c in range(n):
                row = [0] * len(unknowns)
                # (T ax)[r][c] - (ay T)[r][c]
                for k in range(n):
                    if ax[k][c] != 0 and (r, k) in index:
                        row[index[(r, k)]] += ax[k][c]
                    if ay[r][k] != 0 and (k, c) in index:
                        row[index[(k, c)]] -= ay[r][k]
                if any(v != 0 for v in row):
                    rows.append(row)
    zero, one = _unit_of(v for m in x.generators() for r in m for v in r)
    basis = linalg.nullspace(rows, cols=len(unknowns), zero=zero, one=one)
    return unknowns, basis


def _to_matrix(unknowns, vec, n, zero):
    m = linalg.zeros(n, n, zero)
    for (a, b), v in zip(unknowns, vec):
        m[a][b] = v
    return m


def endo_basis_oracle(x: RepresentationPoint) -> list[list[list]]:
    """Basis of the full commutant of the representation, by exact nullspace."""
    unknowns, basis = _intertwiner_space(x, x)
    zero, _ = _unit_of(v for m in x.generators() for r in m for v in r)
    return [_to_matrix(unknowns, vec, x.dim, zero) for vec in basis]


def same_fiber(k, k2, ctx: MastContext | None = None, ctx2: MastContext | None = None) -> bool:
    """Whether two points with the same mast give isomorphic modules.

    An intertwiner with nonzero top coefficient is unipotent triangular up to a
    scalar, hence invertible; so the modules are isomorphic iff the (0,0)
    entry is not identically zero on the intertwiner space.
    """
    x = _as_rep(k, ctx)
    y = _as_rep(k2, ctx2)
    if x.context.p != y.context.p:
        raise ValueError("points on different masts never share a fiber")
    unknowns, basis = _intertwiner_space(x, y)
    top = unknowns.index((0, 0))
    return any(vec[top] != 0 for vec in basis)


def _top_change_raw(x: RepresentationPoint, c: list) -> dict:
    """New detour coordinates relative to the top element x + sum c_j w_j x.

    Works over any commutative ring containing the coefficients of ``c``: the
    change of basis is unipotent lower triangular, so forward substitution
    needs no division.
    """
    ctx = x.context
    n = x.dim
    if len(c) != ctx.t:
        raise ValueError(f"expected {ctx.t} coefficients, got {len(c)}")
    zero, one = _unit_of(v for m in x.generators() for r in m for v in r)
    y = [zero] * n
    y[0] = one
    for cj, s in zip(c, ctx.w_indices):
        y[s] = y[s] + cj
    basis = [y]
    for a in ctx.p.arrows:
        basis.append(linalg.matvec(x.arrows[a], basis[-1]))
    for i in range(n):
        if basis[i][i] != 1 or any(basis[i][r] != 0 for r in range(i)):
            raise AssertionError("change of top element is not unipotent triangular")

    def solve(u):
        # coefficients kappa with sum_i kappa_i basis[i] == u
        kappa = []
        for r in range(n):
            s = u[r]
            for i in range(r):
                if basis[i][r] != 0:
                    s = s - kappa[i] * basis[i][r]
            kappa.append(s)
        return kappa

    out = {}
    for d in ctx.detours:
        u = linalg.matvec(x.arrows[d.arrow], basis[d.m])
        kappa = solve(u)
        for i in d.indices:
            out[Var(d.m, d.arrow, i)] = kappa[i]
    return out


def top_change(k, c, ctx: MastContext | None = None):
    """Coordinates of the same module relative to the top element y(c)."""
    from .variety import UniserialPoint

    x = _as_rep(k, ctx)
    vals = _top_change_raw(x, list(c))
    if isinstance(k, UniserialPoint):
        return UniserialPoint(k.model, vals)
    return vals


class Dual:
    """First-order jet ``a + sum_j b_j eps_j`` with all products eps_i eps_j = 0."""

    __slots__ = ("a", "b")

    def __init__(self, a, b=()):
        self.a = a
        self.b = tuple(b)

    def _lift(self, other):
        if isinstance(other, Dual):
            return other
        return Dual(other, (0,) * len(self.b))

    def __add__(self, other):
        o = self._lift(other)
        return Dual(self.a + o.a, tuple(x + y for x, y in zip(self.b, o.b)))

    __radd__ = __add__

    def __neg__(self):
        return Dual(-self.a, tuple(-x for x in self.b))

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        return Dual(self.a * o.a, tuple(self.a * y + x * o.a for x, y in zip(self.b, o.b)))

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, Dual):
            return self.a == other.a and self.b == other.b
        return self.a == other and all(x == 0 for x in self.b)

    def __hash__(self):
        return hash((self.a, self.b))


def differential_rank_at_zero(k, ctx: MastContext | None = None) -> int:
    """Rank of the derivative of c -> top_change(k, c) at c = 0, via dual numbers."""
    x = _as_rep(k, ctx)
    t = x.context.t
    if t == 0:
        return 0
    c = [Dual(0, tuple(1 if i == j else 0 for i in range(t))) for j in range(t)]
    vals = _top_change_raw(x, c)
    jac = []
    for v in x.context.variables:
        d = vals[v]
        row = list(d.b) if isinstance(d, Dual) else [0] * t
        jac.append([Fraction(e) if isinstance(e, int) else e for e in row])
    return linalg.rank(jac)
