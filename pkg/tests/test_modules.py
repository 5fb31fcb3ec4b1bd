import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from gfhom import linalg as la
from gfhom.algebra import FIXTURES, fixture, regular_module
from gfhom.modules import (
    Module,
    ModuleError,
    ModuleMap,
    all_submodules,
    direct_sum,
    duality_D,
    enumerate_modules,
    find_monomorphism,
    from_payload,
    fundamental_modules,
    has_projective_summand,
    hom_space,
    injective,
    invariant,
    is_isomorphic,
    projective,
    projective_multiplicities,
    quotient,
    random_module,
    simple,
    structure,
    submodule,
    to_payload,
)

from oracles import brute_force_submodules, multiset_count

# dimensions of the indecomposables of the representation-finite fixtures
INDECOMPOSABLE_DIMS = {
    "semisimple": [1, 1],
    "dual_numbers": [1, 2],
    "a2": [1, 1, 2],
    "fork": [1, 1, 1, 2, 2, 3],
    "a3_rad2": [1, 1, 1, 2, 2],
}


@pytest.mark.parametrize("name", FIXTURES)
def test_enumeration_counts_match_indecomposables(name):
    alg = fixture(name)
    assert len(enumerate_modules(alg, 4)) == multiset_count(INDECOMPOSABLE_DIMS[name], 4)
    assert len(enumerate_modules(alg.opposite, 4)) == multiset_count(INDECOMPOSABLE_DIMS[name], 4)


@pytest.mark.parametrize("name", ["a2", "dual_numbers", "fork"])
def test_enumerated_modules_pairwise_non_isomorphic(name):
    mods = enumerate_modules(fixture(name), 3)
    for i, m in enumerate(mods):
        for n in mods[i + 1 :]:
            assert is_isomorphic(m, n).verdict == "no"


def test_fundamental_modules_a2():
    f = fundamental_modules(fixture("a2"))
    assert [m.dim for m in f.simples] == [1, 1]
    assert [m.dim for m in f.projectives] == [2, 1]
    assert [m.dim for m in f.injectives] == [1, 2]


def test_lattice_matches_brute_force(alg):
    for m in enumerate_modules(alg, 4):
        lat = all_submodules(m)
        assert lat.complete
        ref = brute_force_submodules(m)
        got = {s.tobytes() + str(len(s)).encode() for s in lat.subspaces}
        assert got == set(ref), m.name


def test_hom_from_projective_is_vertex_space(alg):
    for m in enumerate_modules(alg, 3):
        for i in range(alg.num_vertices):
            assert len(hom_space(projective(alg, i), m)) == m.dim_vector[i]


def test_homs_are_homomorphisms(alg):
    mods = enumerate_modules(alg, 2)
    for m in mods:
        for n in mods:
            for f in hom_space(m, n):
                assert f.is_homomorphism()


def test_submodule_and_quotient_maps(alg):
    reg = regular_module(alg)
    for s in all_submodules(reg).subspaces:
        sub, inc = submodule(reg, s)
        q, proj = quotient(reg, s)
        assert inc.is_homomorphism() and inc.is_injective()
        assert proj.is_homomorphism() and proj.is_surjective()
        assert sub.dim + q.dim == reg.dim
        assert not la.matmul(proj.matrix, inc.matrix, alg.p).any()


def test_duality_is_involutive(alg):
    for m in enumerate_modules(alg, 3):
        back = duality_D(duality_D(m))
        assert back.algebra is alg
        assert np.array_equal(back.mats, m.mats)


def test_simple_tops_and_socles():
    a2 = fixture("a2")
    st_ = structure(projective(a2, 0))
    assert st_.top.dim == 1
    assert len(st_.radical) == 1
    assert len(st_.socle) == 1


def test_injective_hull_of_simple():
    fork = fixture("fork")
    assert find_monomorphism(simple(fork, 1), injective(fork, 1)) is not None
    assert find_monomorphism(simple(fork, 1), injective(fork, 2)) is None


def test_projective_multiplicities():
    a2 = fixture("a2")
    m = direct_sum(projective(a2, 0), projective(a2, 0), simple(a2, 1), simple(a2, 0))
    # S2 is projective over 1 -> 2
    assert projective_multiplicities(m) == [2, 1]
    assert has_projective_summand(m)
    assert not has_projective_summand(simple(a2, 0))


def test_payload_roundtrip(alg):
    for m in enumerate_modules(alg, 4):
        back = from_payload(alg, to_payload(m))
        assert is_isomorphic(back, m).verdict == "yes"


def test_payload_errors():
    a2 = fixture("a2")
    with pytest.raises(ModuleError):
        from_payload(a2, {"dim": 1, "generators": {"zz": [[1]]}})
    with pytest.raises(ModuleError):
        from_payload(a2, {"dim": 1, "generators": {"a": [[0]]}})
    with pytest.raises(ModuleError):
        from_payload(a2, {"dim": 1, "generators": {"1": [[1]], "2": [[1]], "a": [[0]]}})


def test_isomorphism_witness_is_iso():
    fork = fixture("fork")
    m = direct_sum(simple(fork, 0), projective(fork, 1))
    n = direct_sum(projective(fork, 1), simple(fork, 0))
    r = is_isomorphic(m, n)
    assert r.verdict == "yes"
    f = ModuleMap(m, n, r.witness)
    assert f.is_homomorphism() and la.is_invertible(f.matrix, fork.p)


@given(st.sampled_from(FIXTURES), st.integers(1, 6), st.integers(0, 2**32 - 1))
def test_random_modules_are_modules(name, d, seed):
    alg = fixture(name)
    m = random_module(alg, d, np.random.default_rng(seed))
    m.verify()
    assert m.dim == d
    assert invariant(m) == invariant(from_payload(alg, to_payload(m)))


@given(st.sampled_from(["a2", "fork", "dual_numbers"]), st.integers(1, 4), st.integers(0, 2**32 - 1))
def test_lattice_closed_under_sum_and_intersection(name, d, seed):
    alg = fixture(name)
    m = random_module(alg, d, np.random.default_rng(seed))
    lat = all_submodules(m)
    keys = {s.tobytes() + str(len(s)).encode() for s in lat.subspaces}
    subs = lat.subspaces
    for u in subs[:6]:
        for v in subs[:6]:
            s = la.subspace_sum(u, v, alg.p)
            i = la.intersection(u, v, alg.p)
            assert s.tobytes() + str(len(s)).encode() in keys
            assert i.tobytes() + str(len(i)).encode() in keys


def test_module_rejects_bad_action():
    a2 = fixture("a2")
    mats = np.zeros((a2.dim, 1, 1), dtype=np.int64)
    with pytest.raises(ModuleError):
        Module(a2, mats)
