"""Defining polynomials of the variety V_p of uniserial points with mast p.

Elements of KQ e(0) with polynomial coefficients are rewritten to the normal
form ``sum_i tau_i p_i`` by substituting detours and discarding non-routes.
The resulting polynomials are classified by iterated linear elimination.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from . import linalg
from .detours import MastContext, build_mast_context, is_route
from .fields import QQ, Fp, ScalarField
from .polynomial import Polynomial, Var
from .presentation import AlgebraPresentation
from .quiver import Path, compose, paths_from

EMPTY = "empty"
AFFINE_SPACE = "affine_space"
RESIDUAL = "residual"

COUNT_LIMIT = 10**7


class MixedElement:
    """A finite sum ``sum f_v(X) v`` of paths with polynomial coefficients."""

    def __init__(self, terms: Mapping[Path, Polynomial] | None = None):
        self.terms: dict[Path, Polynomial] = {}
        for path, f in (terms or {}).items():
            self.add(path, Polynomial.lift(f))

    @classmethod
    def from_relation(cls, relation) -> "MixedElement":
        return cls({p: Polynomial.const(Fraction(c)) for c, p in relation.terms})

    def add(self, path: Path, f: Polynomial):
        g = self.terms.get(path)
        g = f if g is None else g + f
        if g.is_zero():
            self.terms.pop(path, None)
        else:
            self.terms[path] = g

    def times_path(self, q: Path) -> "MixedElement":
        """Right multiplication by a path ``q`` (each monomial taken after ``q``)."""
        out = MixedElement()
        for v, f in self.terms.items():
            w = compose(v, q)
            if w is not None:
                out.add(w, f)
        return out

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({f})*{v}" for v, f in sorted(self.terms.items(), key=lambda t: t[0].sort_key()))


def rewrite(z: MixedElement, ctx: MastContext, prune_routes: bool = True,
            rng: random.Random | None = None) -> list[Polynomial]:
    """Coefficients (tau_0, ..., tau_l) of the normal form of ``z``.

    Each monomial f*v is split as v = w * alpha * p_m with p_m the longest
    right subpath of the mast that is a suffix of v.  Then:
      * v = p_m itself contributes f to tau_m;
      * (alpha, p_m) a detour: v is replaced by sum_i f*X(alpha,m,i) * (w p_i);
      * otherwise v is a non-route (no later p_s ends at target(alpha), so the
        vertex word cannot embed) and is discarded.
    Paths longer than l are discarded; with ``prune_routes`` every non-route is
    discarded up front, which only saves work.  ``rng`` shuffles the processing
    order and must not change the result.
    """
    p, l = ctx.p, ctx.l
    e0 = p.source
    tau = [Polynomial() for _ in range(l + 1)]
    pending: dict[Path, Polynomial] = {}

    def push(v: Path, f: Polynomial):
        g = pending.get(v)
        g = f if g is None else g + f
        if g.is_zero():
            pending.pop(v, None)
        else:
            pending[v] = g

    for v, f in z.terms.items():
        if v.source != e0:
            raise ValueError(f"path {v} does not start at e({e0})")
        push(v, f)

    while pending:
        if rng is None:
            v = next(iter(pending))
        else:
            v = rng.choice(list(pending))
        f = pending.pop(v)
        if v.length > l:
            continue
        if prune_routes and not is_route(v, ctx):
            continue
        m = 0
        top = min(v.length, l)
        while m < top and v.arrows[m] == p.arrows[m]:
            m += 1
        if m == v.length:
            tau[m] = tau[m] + f
            continue
        alpha = v.arrows[m]
        d = ctx.detour(alpha, m)
        if d is None:
            continue
        for i in d.indices:
            w = Path(p.vertices[: i + 1] + v.vertices[m + 2:], p.arrows[:i] + v.arrows[m + 1:])
            push(w, f * Polynomial.var(Var(m, alpha, i)))
    return tau


@dataclass
class Generator:
    element: MixedElement
    relation: str
    multiplier: Path


def left_ideal_generators(presentation: AlgebraPresentation, ctx: MastContext) -> list[Generator]:
    """Relations times route multipliers from e(0), with dead monomials removed.

    A path having a non-route as right subpath is itself a non-route, so only
    routes (all of length <= l) are needed as multipliers.
    """
    routes = [q for q in paths_from(ctx.quiver, ctx.p.source, ctx.l) if is_route(q, ctx)]
    gens = []
    for rel in presentation.relations:
        base = MixedElement.from_relation(rel)
        for q in routes:
            if q.target != rel.source:
                continue
            z = base.times_path(q)
            for v in list(z.terms):
                if v.length > ctx.l or not is_route(v, ctx):
                    del z.terms[v]
            if z:
                gens.append(Generator(z, str(rel), q))
    return gens


@dataclass
class Classification:
    status: str
    solved: dict = field(default_factory=dict)
    free: list = field(default_factory=list)
    residual: list = field(default_factory=list)

    @property
    def dimension(self) -> int | None:
        return len(self.free) if self.status == AFFINE_SPACE else None


def simplify_system(polys, variables=None) -> Classification:
    """Classify ``V(polys)`` by repeated Gaussian elimination on the affine-linear
    members followed by substitution into the rest.

    ``variables`` is the ambient coordinate list; it defaults to the variables
    that occur.  Solved variables are always the earliest in canonical order.
    """
    current = [p for p in polys if not p.is_zero()]
    if variables is None:
        variables = sorted(set().union(*(p.variables() for p in current))) if current else []
    solved: dict = {}
    while True:
        lin = [p for p in current if p.degree() <= 1]
        if not lin:
            break
        vs = sorted(set().union(*(p.variables() for p in lin)))
        rows = []
        for poly in lin:
            coeffs = poly.linear_coefficients()
            rows.append([coeffs.get(v, 0) for v in vs] + [poly.constant_term()])
        rows = [[Fraction(x) if isinstance(x, int) else x for x in r] for r in rows]
        red, pivots = linalg.rref(rows)
        if len(vs) in pivots:
            return Classification(EMPTY)
        new = {}
        for row, pc in zip(red, pivots):
            expr = Polynomial.const(-row[-1])
            for j, v in enumerate(vs):
                if j != pc and row[j] != 0:
                    expr = expr - Polynomial.var(v, row[j])
            new[vs[pc]] = expr
        solved = {v: e.substitute(new) for v, e in solved.items()}
        solved.update(new)
        current = [q for q in (p.substitute(new) for p in current) if not q.is_zero()]
        if any(q.is_constant() for q in current):
            return Classification(EMPTY)
    solved = dict(sorted(solved.items()))
    free = [v for v in variables if v not in solved]
    if current:
        return Classification(RESIDUAL, solved, free, current)
    return Classification(AFFINE_SPACE, solved, free)


@dataclass
class VarietyModel:
    context: MastContext
    polynomials: list[Polynomial]
    provenance: list[dict]
    classification: Classification

    @property
    def status(self) -> str:
        return self.classification.status

    @property
    def dimension(self) -> int | None:
        return self.classification.dimension

    def parametrization(self) -> dict:
        """Coordinates as polynomials in the free variables (AffineSpace only)."""
        if self.status != AFFINE_SPACE:
            raise ValueError("only affine-space patches carry a parametrization")
        out = {}
        for v in self.context.variables:
            out[v] = self.classification.solved.get(v, Polynomial.var(v))
        return out


def build_variety(presentation: AlgebraPresentation, p: Path) -> VarietyModel:
    if not 1 <= p.length < presentation.loewy_bound:
        raise ValueError("mast length must be positive and below the loewy bound")
    ctx = build_mast_context(p, presentation.quiver)
    polys: list[Polynomial] = []
    provenance: list[dict] = []
    seen = set()
    for gen in left_ideal_generators(presentation, ctx):
        for i, tau in enumerate(rewrite(gen.element, ctx)):
            if tau.is_zero():
                continue
            tau = tau.monic()
            if tau in seen:
                continue
            seen.add(tau)
            polys.append(tau)
            provenance.append({"relation": gen.relation, "multiplier": str(gen.multiplier), "index": i})
    return VarietyModel(ctx, polys, provenance, simplify_system(polys, ctx.variables))


class UniserialPoint(Mapping):
    """An assignment of scalars to the detour coordinates that lies on V_p."""

    def __init__(self, model: VarietyModel, values: Mapping, check: bool = True):
        ctx = model.context
        unknown = set(values) - set(ctx.variables)
        if unknown:
            raise KeyError(f"not coordinates of this mast: {sorted(map(str, unknown))}")
        self.model = model
        self.coordinates = {v: values.get(v, 0) for v in ctx.variables}
        if check:
            bad = [str(f) for f in model.polynomials if f.evaluate(self.coordinates) != 0]
            if bad:
                raise ValueError(f"point is not on V_p; nonzero: {bad}")

    @property
    def context(self) -> MastContext:
        return self.model.context

    def __getitem__(self, v):
        return self.coordinates[v]

    def __iter__(self):
        return iter(self.coordinates)

    def __len__(self):
        return len(self.coordinates)

    def __repr__(self):
        inner = ", ".join(f"{v}={x}" for v, x in self.coordinates.items())
        return f"UniserialPoint({inner})"


def _distinct_randoms(rng: random.Random, n: int, field: ScalarField, bound: int) -> list:
    if not field.is_rational:
        return [field.random_element(rng) for _ in range(n)]
    out: list = []
    while len(out) < n:
        x = Fraction(rng.randint(-bound, bound))
        if x not in out:
            out.append(x)
    return out


def _grid(field: ScalarField):
    if field.is_rational:
        return [Fraction(x) for x in (0, 1, -1, 2, -2, 3, -3)]
    return field.elements()


def sample_point(model: VarietyModel, seed: int = 0, field: ScalarField = QQ,
                 bound: int = 10**6, grid_limit: int = 10**5) -> UniserialPoint | None:
    """A point of the patch: random free coordinates on an affine space, a small
    grid search on residual systems.  ``None`` when nothing is found."""
    cls = model.classification
    if cls.status == EMPTY:
        return None
    rng = random.Random(seed)
    conv = (lambda c: c) if field.is_rational else field
    free_vals = dict(zip(cls.free, _distinct_randoms(rng, len(cls.free), field, bound)))

    def complete(assign):
        vals = dict(assign)
        for v, expr in cls.solved.items():
            vals[v] = conv(expr.map_coefficients(conv).evaluate(assign))
        return vals

    def on_variety(vals):
        return all(f.map_coefficients(conv).evaluate(vals) == 0 for f in model.polynomials)

    if cls.status == AFFINE_SPACE:
        vals = complete(free_vals)
        return UniserialPoint(model, vals, check=False) if on_variety(vals) else None

    involved = sorted(set().union(*(f.variables() for f in cls.residual)))
    grid = _grid(field)
    if len(grid) ** len(involved) > grid_limit:
        return None
    for combo in itertools.product(grid, repeat=len(involved)):
        assign = dict(free_vals)
        assign.update(zip(involved, combo))
        vals = complete(assign)
        if on_variety(vals):
            return UniserialPoint(model, vals, check=False)
    return None


def _compile(poly: Polynomial, index: dict, q: int):
    terms = []
    for mono, c in poly.terms.items():
        c = Fp(0, q)._coerce(c)
        terms.append((c, [(index[v], e) for v, e in mono]))
    return terms


def count_points(model_or_polys, q: int, variables=None) -> int:
    """Exact number of GF(q)-points of V(polys) in the ambient affine space.

    Coordinates that occur in no polynomial contribute a factor q each; the
    others are enumerated exhaustively.
    """
    ScalarField(q)
    if isinstance(model_or_polys, VarietyModel):
        polys = model_or_polys.polynomials
        variables = model_or_polys.context.variables
    else:
        polys = list(model_or_polys)
        if variables is None:
            variables = sorted(set().union(*(f.variables() for f in polys))) if polys else []
    if len(variables) > 20:
        raise ValueError(f"refusing to count: {len(variables)} coordinates exceeds 20")
    involved = sorted(set().union(*(f.variables() for f in polys))) if polys else []
    if q ** len(involved) > COUNT_LIMIT:
        raise ValueError(f"refusing to count: {q}^{len(involved)} assignments exceeds {COUNT_LIMIT}")
    index = {v: k for k, v in enumerate(involved)}
    compiled = [_compile(f, index, q) for f in polys]
    hits = 0
    for combo in itertools.product(range(q), repeat=len(involved)):
        ok = True
        for terms in compiled:
            s = 0
            for c, mono in terms:
                t = c
                for k, e in mono:
                    t = t * pow(combo[k], e, q)
                s += t
            if s % q:
                ok = False
                break
        if ok:
            hits += 1
    return hits * q ** (len(variables) - len(involved))
