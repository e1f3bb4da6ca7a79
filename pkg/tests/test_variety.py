import itertools
import random
from fractions import Fraction

import pytest

from uniserial import (Fp, MixedElement, Polynomial, ScalarField, UniserialPoint, Var, build_mast_context,
                       build_variety, count_points, left_ideal_generators, load_example, parse_path,
                       realize, rewrite, sample_point, simplify_system, verify)
from uniserial.variety import AFFINE_SPACE, EMPTY, RESIDUAL, VarietyModel

from conftest import MAST_2, two_loops

X1, X2, X3 = Var(1, "a3", 4), Var(1, "a5", 6), Var(3, "a5", 6)


def P(v, c=1):
    return Polynomial.var(v, Fraction(c))


@pytest.fixture
def ctx2(quiver2):
    return build_mast_context(parse_path(MAST_2, quiver2), quiver2)


def _elem(quiver, *terms):
    return MixedElement({parse_path(s, quiver): Polynomial.const(Fraction(c)) for c, s in terms})


def test_rewrite_mast_subpaths(quiver2, ctx2):
    z = _elem(quiver2, (2, "a2*a1"), (-1, MAST_2))
    tau = rewrite(z, ctx2)
    assert len(tau) == 7
    assert tau[2] == 2 and tau[6] == -1
    assert all(tau[i] == 0 for i in (0, 1, 3, 4, 5))


def test_rewrite_detour(quiver2, ctx2):
    # a5*a1 leaves the mast after p_1 via a5: it becomes X(a5,1,6) p_6
    tau = rewrite(_elem(quiver2, (1, "a5*a1")), ctx2)
    assert tau[6] == P(X2)
    # a4*a3*a1: a3 at m=1 detours to p_4, then a4 follows the mast to p_5
    tau = rewrite(_elem(quiver2, (1, "a4*a3*a1")), ctx2)
    assert tau[5] == P(X1)


def test_rewrite_non_route_discarded(quiver2, ctx2):
    tau = rewrite(_elem(quiver2, (1, "a2*a4*a3*a1")), ctx2)
    assert all(t == 0 for t in tau)


def test_rewrite_wrong_source(quiver2, ctx2):
    with pytest.raises(ValueError):
        rewrite(_elem(quiver2, (1, "a1*a2")), ctx2)


def test_rewrite_order_and_pruning_do_not_matter(quiver2, ctx2):
    z = MixedElement()
    for v in [parse_path(s, quiver2) for s in
              ("a5*a1", "a4*a3*a1", "a5*a4*a3*a1", "a3*a1*a2*a1", "a2*a1", "a5*a1*a2*a1", "a1*a2*a1")]:
        z.add(v, Polynomial.const(Fraction(len(v.arrows))))
    want = rewrite(z, ctx2)
    for seed in range(20):
        assert rewrite(z, ctx2, rng=random.Random(seed)) == want
    assert rewrite(z, ctx2, prune_routes=False) == want


def test_left_ideal_generators(ex2a, ctx2):
    gens = left_ideal_generators(ex2a, ctx2)
    assert [(g.relation, str(g.multiplier)) for g in gens] == [("a5*a1*a2 - a5*a4*a3*a1*a2", "a1")]
    pres = two_loops(3)
    ctx = build_mast_context(pres.quiver.path("aab"), pres.quiver)
    assert left_ideal_generators(pres, ctx) == []


def test_variety_infinite_example(ex2a, quiver2):
    model = build_variety(ex2a, parse_path(MAST_2, quiver2))
    assert model.polynomials == [P(X3) - 1]
    assert model.status == AFFINE_SPACE and model.dimension == 2
    assert model.classification.free == [X1, X2]
    assert model.provenance[0]["multiplier"] == "a1"


def test_variety_finite_example(ex2b, quiver2):
    model = build_variety(ex2b, parse_path(MAST_2, quiver2))
    assert set(model.polynomials) == {P(X3) - 1, P(X1) - P(X2)}
    assert model.status == AFFINE_SPACE and model.dimension == 1
    par = model.parametrization()
    assert par[X3] == 1 and par[X1] == P(X2)


@pytest.mark.parametrize("l", range(1, 7))
def test_two_loop_varieties(l):
    pres = two_loops(l)
    for word in itertools.product("ab", repeat=l):
        model = build_variety(pres, pres.quiver.path(word))
        assert model.polynomials == []
        assert model.status == AFFINE_SPACE and model.dimension == l * (l + 1) // 2 == model.context.N


def test_mast_length_bounds():
    pres = two_loops(2)
    with pytest.raises(ValueError):
        build_variety(pres, pres.quiver.path("aaa"))


def test_simplify_system_examples():
    x, y, z = Var(0, "a", 1), Var(0, "a", 2), Var(0, "b", 1)
    X, Y, Z = P(x), P(y), P(z)
    cls = simplify_system([X - Y, Y * Z - 1, Y - 2])
    assert cls.status == AFFINE_SPACE and cls.free == []
    assert cls.solved == {x: 2, y: 2, z: Fraction(1, 2)}
    assert simplify_system([X - 1, X - 2]).status == EMPTY
    assert simplify_system([X * Y - 1]).status == RESIDUAL
    assert simplify_system([X * Y - 1, Y]).status == EMPTY
    assert simplify_system([], [x, y]).dimension == 2
    cls = simplify_system([X * X - Y], [x, y, z])
    assert cls.status == RESIDUAL and cls.dimension is None


def test_simplify_system_order_invariant():
    x, y, z, w = (Var(0, "a", i) for i in range(1, 5))
    X, Y, Z, W = map(P, (x, y, z, w))
    polys = [X + Y - Z, Y * W - Z, W - 1, X - 3, X * Z - Y]
    want = simplify_system(polys, [x, y, z, w])
    rng = random.Random(3)
    for _ in range(10):
        rng.shuffle(polys)
        got = simplify_system(polys, [x, y, z, w])
        assert (got.status, got.solved, got.free, sorted(map(str, got.residual))) == \
            (want.status, want.solved, want.free, sorted(map(str, want.residual)))


def test_sample_point_on_affine(ex2a, quiver2):
    model = build_variety(ex2a, parse_path(MAST_2, quiver2))
    k = sample_point(model, seed=4)
    assert k[X3] == 1 and k.context is model.context
    assert verify(realize(k, model.context), ex2a)[0]
    assert sample_point(model, seed=4) == k


def test_sample_point_residual_fields():
    pres = two_loops(1)
    model = build_variety(pres, pres.quiver.path("a"))
    # hand-built residual model on the single coordinate of the mast
    v = model.context.variables[0]
    poly = P(v) * P(v) + 1
    res = VarietyModel(model.context, [poly], [], simplify_system([poly], model.context.variables))
    assert res.status == RESIDUAL
    assert sample_point(res) is None
    k5 = sample_point(res, field=ScalarField(5))
    assert k5 is not None and k5[v] in (Fp(2, 5), Fp(3, 5))
    assert count_points(res, 5) == 2 * 5 ** (model.context.N - 1)
    assert count_points(res, 3) == 0


def test_uniserial_point_rejects_off_variety(ex2a, quiver2):
    model = build_variety(ex2a, parse_path(MAST_2, quiver2))
    with pytest.raises(ValueError):
        UniserialPoint(model, {X3: Fraction(2)})


def test_count_points():
    x, y = Var(0, "a", 1), Var(0, "a", 2)
    assert count_points([P(x) * P(y) - 1], 7) == 6
    assert count_points([P(x) - 1, P(x) - 2], 5) == 0
    assert count_points([], 3, variables=[x, y]) == 9
    assert count_points([P(x) - P(y)], 2, variables=[x, y, Var(0, "b", 1)]) == 4
    with pytest.raises(ValueError):
        count_points([P(x)], 6)
    many = [Var(0, "a", i) for i in range(21)]
    with pytest.raises(ValueError):
        count_points([], 2, variables=many)
    heavy = [Var(0, "a", i) for i in range(12)]
    with pytest.raises(ValueError):
        count_points([sum((P(v) for v in heavy), Polynomial())], 5)


@pytest.mark.parametrize("name", ["ex2a", "ex2b"])
def test_point_counts_match_dimension(name, quiver2):
    model = build_variety(load_example(name), parse_path(MAST_2, quiver2))
    for q in (2, 3, 5, 7):
        assert count_points(model, q) == q ** model.dimension


def test_sampled_points_are_modules():
    # soundness: every sampled point realizes a representation satisfying the relations
    from instances import random_triples
    for pres, model, k in random_triples(30, seed=11):
        ok, diags = verify(realize(k, model.context), pres)
        assert ok, diags
