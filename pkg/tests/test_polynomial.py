from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from uniserial import Fp, Polynomial, Var

V = [Var(0, "a", 1), Var(1, "b", 3), Var(2, "a", 4)]

monomials = st.lists(st.tuples(st.sampled_from(V), st.integers(1, 3)), max_size=2)
polys = st.lists(st.tuples(st.integers(-5, 5), monomials), max_size=4).map(
    lambda terms: sum((Polynomial.const(Fraction(c)) * _mono(m) for c, m in terms), Polynomial()))


def _mono(m):
    out = Polynomial.const(Fraction(1))
    for v, e in m:
        out = out * Polynomial.var(v) ** e
    return out


small = st.builds(Fraction, st.integers(-20, 20), st.integers(1, 5))
point = st.fixed_dictionaries({v: small for v in V})


@settings(max_examples=80)
@given(polys, polys, polys, point)
def test_ring_laws_and_evaluation(f, g, h, pt):
    assert f * (g + h) == f * g + f * h
    assert (f * g) * h == f * (g * h)
    assert f - f == 0
    assert (f * g).evaluate(pt) == f.evaluate(pt) * g.evaluate(pt)
    assert (f + g).evaluate(pt) == f.evaluate(pt) + g.evaluate(pt)


@settings(max_examples=50)
@given(polys, point)
def test_substitute_then_evaluate(f, pt):
    sub = {V[0]: Polynomial.var(V[1]) + 2}
    moved = dict(pt)
    moved[V[0]] = pt[V[1]] + 2
    assert f.substitute(sub).evaluate(pt) == f.evaluate(moved)


def test_rendering_and_queries():
    x, y = (Polynomial.var(v) for v in V[:2])
    f = x * y * 2 - x * Fraction(3, 2) + 1
    assert str(f) == "2*X(a,0,1)*X(b,1,3) - 3/2*X(a,0,1) + 1"
    assert f.degree() == 2 and f.constant_term() == 1
    assert f.variables() == {V[0], V[1]}
    assert (x - 1).linear_coefficients() == {V[0]: 1}
    assert (x * 3 - 6).monic() == x - 2
    assert str(Polynomial()) == "0" and Polynomial().is_zero()


def test_finite_field_coefficients():
    x = Polynomial.var(V[0])
    f = (x * x + 1).map_coefficients(lambda c: Fp(c, 5))
    assert [a for a in range(5) if f.evaluate({V[0]: Fp(a, 5)}) == 0] == [2, 3]
