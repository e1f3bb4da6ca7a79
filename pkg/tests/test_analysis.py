import itertools

import pytest

from uniserial import (Arrow, AlgebraPresentation, Quiver, build_variety, enumerate_masts,
                       example_text, finite_type_report, generic_fiber_dim, load_example,
                       parse_presentation, parse_sequence, paths_from, quotient_check, same_fiber,
                       sample_point, survey_masts, uniserdim)

from conftest import SEQ_2, two_loops


def _with_loewy(name, loewy):
    text = example_text(name)
    old = next(line for line in text.splitlines() if line.startswith("loewy"))
    return parse_presentation(text.replace(old, f"loewy {loewy}"))


def test_uniserdim_examples(ex2a, ex2b):
    rep = uniserdim(ex2a, parse_sequence(SEQ_2, ex2a.quiver))
    assert rep.value == 1
    (entry,) = rep.entries
    assert entry.as_dict() == {"path": "a5*a4*a3*a1*a2*a1", "status": "affine_space", "dimension": 2,
                               "generic_fiber_dim": 1, "contribution": 1}
    assert uniserdim(ex2b, parse_sequence(SEQ_2, ex2b.quiver)).value == 0


def test_uniserdim_edge_cases(ex2a):
    assert uniserdim(ex2a, parse_sequence("2", ex2a.quiver)).value == 0
    assert uniserdim(ex2a, parse_sequence("1 3", ex2a.quiver)).value == -1       # no arrow 1 -> 3
    assert uniserdim(ex2a, parse_sequence("2 1 2 1 2 1 2 1 2", ex2a.quiver)).value == -1  # beyond loewy
    # a2*a1*a2 = 0: the only path through 2 1 2 1 has empty variety
    rep = uniserdim(ex2a, parse_sequence("2 1 2 1", ex2a.quiver))
    assert rep.value == -1 and rep.entries[0].status == "empty"


@pytest.mark.parametrize("loewy", [8, 9, 10])
def test_answers_do_not_depend_on_a_larger_loewy_bound(loewy):
    pres = _with_loewy("ex2a", loewy)
    seq = parse_sequence(SEQ_2, pres.quiver)
    assert uniserdim(pres, seq).value == 1
    assert quotient_check(pres, seq).answer == "no"
    fin = _with_loewy("ex2b", loewy)
    assert uniserdim(fin, parse_sequence(SEQ_2, fin.quiver)).value == 0


def test_quotient_check(ex2a, ex2b):
    lin = load_example("a3_linear")
    res = quotient_check(lin, parse_sequence("1 2 3", lin.quiver))
    assert res.answer == "yes" and res.witness is None
    res = quotient_check(ex2a, parse_sequence(SEQ_2, ex2a.quiver))
    assert res.answer == "no" and res.witness["rank_A"] == 1
    assert res.witness["path"] == "a5*a4*a3*a1*a2*a1"
    assert quotient_check(ex2b, parse_sequence(SEQ_2, ex2b.quiver)).answer == "no"


def test_quotient_check_yes_with_repeated_vertex():
    # a 2-cycle with every length-3 path zero: mu = 2 on 1 2 1, and A vanishes
    q = Quiver(["1", "2"], [Arrow("a", "1", "2"), Arrow("b", "2", "1")])
    pres = AlgebraPresentation(q, [], 3)
    res = quotient_check(pres, parse_sequence("1 2 1", q))
    assert res.answer == "yes"
    assert any("identically" in d for d in res.details)


def test_finite_type_verdicts(ex2a, ex2b):
    rep = finite_type_report(ex2a)
    assert rep.verdict == "infinite"
    assert ["1", "2", "1", "2", "3", "2", "4"] in [w["sequence"] for w in rep.witnesses]
    assert finite_type_report(ex2b).verdict == "finite"
    assert finite_type_report(load_example("a3_linear")).verdict == "finite"
    loops = finite_type_report(two_loops(3))
    assert loops.verdict == "infinite"
    assert loops.witnesses[0]["reason"] == "double arrow"
    assert loops.condition_n_violations


def test_finite_type_double_arrow_without_masts():
    q = Quiver(["1", "2"], [Arrow("x", "1", "2"), Arrow("y", "1", "2")])
    rep = finite_type_report(AlgebraPresentation(q, [], 2), max_len=0)
    assert rep.verdict == "infinite" and rep.max_len == 0


def test_finite_type_monotone_in_max_len(ex2a):
    prev = set()
    for n in range(1, 8):
        rep = finite_type_report(ex2a, max_len=n)
        seqs = {tuple(w["sequence"]) for w in rep.witnesses}
        assert prev <= seqs
        if prev:
            assert rep.verdict == "infinite"
        prev = seqs
    assert ("1", "2", "3", "2", "4") in prev


def test_survey_and_enumeration(ex2a):
    survey = survey_masts(ex2a, 7)
    masts = enumerate_masts(ex2a, 7)
    assert [e.path for e in survey] == masts
    assert all(e.model.status != "empty" for e in survey)
    # every path of positive length that carries a uniserial appears
    for v in ex2a.quiver.vertices:
        for p in paths_from(ex2a.quiver, v, 7):
            if p.length and build_variety(ex2a, p).status != "empty":
                assert p in masts


def test_generic_fiber_dim(ex2a):
    model = build_variety(ex2a, ex2a.quiver.path(["a1", "a2", "a1", "a3", "a4", "a5"]))
    assert generic_fiber_dim(model) == 1
    assert generic_fiber_dim(build_variety(two_loops(2), two_loops(2).quiver.path("ab"))) == 1


def test_zero_uniserdim_means_one_fiber():
    """When uniserdim vanishes on an affine patch, grid points are pairwise isomorphic."""
    q = Quiver(["1", "2", "3"], [Arrow("a", "1", "2"), Arrow("b", "2", "1"), Arrow("c", "2", "3")])
    pres = AlgebraPresentation(q, [], 5)
    checked = 0
    for v in q.vertices:
        for p in paths_from(q, v, 4):
            if not p.length:
                continue
            seq = parse_sequence(" ".join(p.vertices), q)
            rep = uniserdim(pres, seq)
            if rep.value != 0:
                continue
            model = build_variety(pres, p)
            pts = [sample_point(model, s, bound=3) for s in range(4)]
            for x, y in itertools.combinations(pts, 2):
                assert same_fiber(x, y)
            checked += 1
    assert checked > 0
