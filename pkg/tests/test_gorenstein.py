import pytest

from gfhom import gorenstein as gor
from gfhom.algebra import FIXTURES, fixture
from gfhom.gorenstein import (
    INF,
    AtLeast,
    Caps,
    Tally,
    _level,
    explore_purity_question,
    findim_bounds,
    gorenstein_profile,
    in_c_class,
    le,
    level_at_least,
    verify,
    verify_all,
    verify_cokernel_family,
    verify_triple_ext,
)
from gfhom.homology import ext_lambda, grade, is_pseudo_null, purity_classify
from gfhom.modules import from_payload, simple, submodule

PROFILES = {
    # name: (id left, id right, gorenstein level, quasi AG, AG)
    "semisimple": (0, 0, INF, True, True),
    "dual_numbers": (0, 0, INF, True, True),
    "a2": (1, 1, INF, True, True),
    "fork": (1, 1, 0, True, False),
    "a3_rad2": (2, 2, INF, True, True),
}


@pytest.mark.parametrize("name", FIXTURES)
def test_profile_values(name):
    prof = gorenstein_profile(fixture(name), 6)
    idl, idr, level, qag, ag = PROFILES[name]
    assert (prof.id_left, prof.id_right, prof.gorenstein_level) == (idl, idr, level)
    assert prof.quasi_auslander_gorenstein is qag
    assert prof.auslander_gorenstein is ag
    assert prof.symmetric is True


def test_fork_profile_details():
    prof = gorenstein_profile(fixture("fork"), 6)
    assert prof.left.fd == [1, 1]
    assert prof.right.fd[0] == 1
    assert prof.left_quasi_level == INF and prof.right_quasi_level == INF
    assert prof.is_k_gorenstein(1) is False


def test_level_helper():
    assert _level([0, 1, 2], True, 0) == INF
    assert _level([0, 2], True, 0) == 1
    assert _level([0, 2], True, 1) == INF
    assert _level([0, 1], False, 0) == AtLeast(2)
    assert _level([0, AtLeast(3)], False, 0) == 1
    assert _level([0, AtLeast(1)], False, 0) == AtLeast(1)


def test_three_valued_comparisons():
    assert le(2, 3) is True and le(4, 3) is False
    assert le(AtLeast(5), 3) is False
    assert le(AtLeast(2), 3) is None
    assert level_at_least(INF, 10) is True
    assert level_at_least(AtLeast(2), 3) is None


@pytest.mark.parametrize("name", FIXTURES)
def test_verify_all_verified(name):
    verdicts = verify_all(fixture(name), Caps())
    bad = [(v.theorem, v.status, v.witness) for v in verdicts if v.status != "verified"]
    assert not bad


def test_vacuous_verdicts_on_fork():
    fork = fixture("fork")
    v = verify("purity-of-ext", fork)
    assert v.vacuous and v.status == "verified"
    v = verify("ideal-reflexivity", fork)
    assert v.vacuous


def test_fork_converse_of_auslander_condition_is_witnessed():
    v = verify("auslander-condition", fixture("fork"))
    assert v.evidence["converse"]["witnessed"] is True


def test_refutation_carries_replayable_witness(monkeypatch):
    alg = fixture("a2")
    real = gor.ext_dim

    def broken(m, i):
        return real(m, i) + (1 if i == 1 and m.dim == 1 else 0)

    monkeypatch.setattr(gor, "ext_dim", broken)
    v = gor.evaluation_sequences(alg, Caps(dim_cap=2))
    assert v.status == "refuted"
    payload = v.witness["module"]["module"]
    side = v.witness["module"]["side"]
    m = from_payload(alg if side == "left" else alg.opposite, payload)
    assert m.dim == 1


def test_tally_statuses():
    t = Tally()
    t.check("a", True)
    assert t.verdict("x", fixture("a2"), Caps()).status == "verified"
    t.check("a", None)
    assert t.verdict("x", fixture("a2"), Caps()).status == "inconclusive"
    t.check("a", False, {"k": 1})
    v = t.verdict("x", fixture("a2"), Caps())
    assert v.status == "refuted" and v.witness == {"check": "a", "k": 1}


def test_triple_ext_single_module():
    v = verify_triple_ext(simple(fixture("a2"), 0), 4)
    assert v.status == "verified"
    assert v.evidence["grade"] == 1
    assert v.evidence["triple_ext_dims"][1] > 0
    assert "isomorphism" in v.evidence


@pytest.mark.parametrize("name, lower, upper", [("dual_numbers", 0, 0), ("a2", 1, 1), ("a3_rad2", 2, 2), ("fork", 1, 1)])
def test_findim_bounds(name, lower, upper):
    bounds, verdict = findim_bounds(fixture(name))
    assert (bounds.lower, bounds.upper) == (lower, upper)
    assert verdict.status == "verified"


def test_pseudo_null_matches_c1_class(alg):
    from gfhom.modules import enumerate_modules

    for m in enumerate_modules(alg, 3):
        assert is_pseudo_null(m) == in_c_class(m, 1)


def test_cokernel_family_single():
    a3 = fixture("a3_rad2")
    from gfhom.modules import projective

    v = verify_cokernel_family(a3, projective(a3, 0), 2)
    assert v.status == "verified"
    assert v.evidence["dims"]["F"] >= 1


def test_explore_purity_question_fork():
    out = explore_purity_question(fixture("fork"))
    assert out["quasi_auslander_gorenstein"] and not out["auslander_gorenstein"]
    assert out["checked"] > 0
    assert out["counterexample_found"]


def test_fork_source_simple_has_impure_ext():
    # Ext^1(S1, A) over 2 <- 1 -> 3 has dimension vector (1, 1, 1); its socle is
    # the simple projective right module at vertex 1, which has grade 0.
    fork = fixture("fork")
    s1 = simple(fork, 0)
    e = ext_lambda(s1, 1).value
    assert grade(s1, 6) == 1
    assert list(e.dim_vector) == [1, 1, 1]
    assert grade(e, 6) == 1
    pur = purity_classify(e)
    assert pur.pure is False
    sub, _ = submodule(e, pur.witness)
    assert grade(sub, 6) == 0


def test_explore_purity_question_finds_nothing_on_a2():
    out = explore_purity_question(fixture("a2"))
    assert out["checked"] > 0
    assert not out["counterexample_found"]


def test_unknown_theorem():
    with pytest.raises(KeyError):
        verify("no-such-theorem", fixture("a2"))
