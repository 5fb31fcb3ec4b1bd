import numpy as np
import pytest

from gfhom.algebra import AlgebraError, FIXTURES, build_from_constants, fixture, quiver_algebra, regular_module

DIMS = {"semisimple": 2, "dual_numbers": 2, "a2": 3, "fork": 5, "a3_rad2": 5}


@pytest.mark.parametrize("name", FIXTURES)
def test_fixture_dimensions(name):
    assert fixture(name).dim == DIMS[name]


def test_structure_is_associative_and_unital(alg):
    n, p = alg.dim, alg.p
    basis = np.eye(n, dtype=np.int64)
    for x in basis:
        assert np.array_equal(alg.mul(alg.unit, x), x)
        assert np.array_equal(alg.mul(x, alg.unit), x)
        for y in basis:
            for z in basis:
                assert np.array_equal(alg.mul(alg.mul(x, y), z), alg.mul(x, alg.mul(y, z)))


def test_opposite_is_involutive(alg):
    op = alg.opposite
    assert op.opposite is alg
    x, y = np.eye(alg.dim, dtype=np.int64)[:2] if alg.dim > 1 else (alg.unit, alg.unit)
    assert np.array_equal(op.mul(x, y), alg.mul(y, x))


def test_right_to_left_composition():
    a2 = fixture("a2")
    gens = {g.name: g.vec for g in a2.generators}
    e1, e2, a = gens["1"], gens["2"], gens["a"]
    assert np.array_equal(a2.mul(e2, a), a)
    assert np.array_equal(a2.mul(a, e1), a)
    assert not a2.mul(e1, a).any()
    assert not a2.mul(a, e2).any()


def test_radical_is_nilpotent(alg):
    assert alg.loewy_length <= 2
    assert len(alg.radical) == alg.dim - alg.num_vertices


def test_path_of_length_two_is_killed():
    a3 = fixture("a3_rad2")
    assert a3.dim == 5
    unkilled = quiver_algebra(["1", "2", "3"], [("a", "1", "2"), ("b", "2", "3")], nilpotency=3)
    assert unkilled.dim == 6


def test_constants_match_quiver_presentation():
    dn = fixture("dual_numbers")
    consts = np.zeros((2, 2, 2), dtype=np.int64)
    consts[0, 0, 0] = consts[0, 1, 1] = consts[1, 0, 1] = 1
    built = build_from_constants(2, consts, [1, 0], [[1, 0]], 2)
    assert built.digest() == dn.digest()
    assert len(built.radical) == 1


def test_non_primitive_idempotent_rejected():
    consts = np.zeros((2, 2, 2), dtype=np.int64)
    consts[0, 0, 0] = consts[1, 1, 1] = 1
    with pytest.raises(AlgebraError):
        build_from_constants(2, consts, [1, 1], [[1, 1]], 2)


def test_invalid_presentations():
    with pytest.raises(AlgebraError):
        quiver_algebra(["1"], [("x", "1", "1")], p=4)
    with pytest.raises(AlgebraError):
        quiver_algebra(["1", "2"], [("a", "1", "3")])
    with pytest.raises(AlgebraError):
        quiver_algebra(["1", "2"], [("a", "1", "2")], ["a"], nilpotency=2)


def test_digest_distinguishes_fixtures():
    digests = {fixture(n).digest() for n in FIXTURES}
    assert len(digests) == len(FIXTURES)


def test_regular_module_dimension(alg):
    reg = regular_module(alg)
    assert reg.dim == alg.dim
    assert sum(reg.dim_vector) == alg.dim


def test_odd_characteristic_loop():
    alg = quiver_algebra(["1"], [("x", "1", "1")], ["x*x*x"], nilpotency=3, p=3)
    assert alg.dim == 3
    assert alg.loewy_length == 3
