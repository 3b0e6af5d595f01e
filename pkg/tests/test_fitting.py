import itertools
import random
from fractions import Fraction

import pytest

from sympow import (
    GREVLEX,
    Ideal,
    PolyMatrix,
    PolyRing,
    Rationals,
    StructuralError,
    check_assumptions,
    fitting_ideal,
    syzygy_matrix,
)
from sympow.groebner import module_groebner


def ring(*names):
    return PolyRing(Rationals(), names, GREVLEX)


@pytest.fixture(scope="module")
def R3():
    return ring("x", "y", "z")


def test_matrix_validation(R3):
    x, y, z = R3.gens()
    with pytest.raises(StructuralError):
        PolyMatrix(R3, ((x, y), (z,)))
    other = ring("a", "b")
    with pytest.raises(StructuralError):
        PolyMatrix(R3, ((other.gen(0),),))


def test_determinant_matches_permutation_formula(R3):
    rng = random.Random(53)
    gens = R3.gens()

    def rand_entry():
        return sum(
            (g * Fraction(rng.randint(-2, 2)) for g in gens), R3.from_const(rng.randint(-2, 2))
        )

    for _ in range(6):
        rows = tuple(tuple(rand_entry() for _ in range(3)) for _ in range(3))
        mat = PolyMatrix(R3, rows)
        det = mat.minor((0, 1, 2), (0, 1, 2))
        ref = R3.zero()
        for perm in itertools.permutations(range(3)):
            sign = 1
            for i in range(3):
                for j in range(i + 1, 3):
                    if perm[i] > perm[j]:
                        sign = -sign
            term = R3.from_const(sign)
            for i in range(3):
                term = term * rows[i][perm[i]]
            ref = ref + term
        assert det == ref


def test_minor_ideal_sizes(R3):
    x, y, z = R3.gens()
    mat = PolyMatrix(R3, ((x, y), (y, z)))
    assert mat.minor_ideal(0).is_unit
    assert mat.minor_ideal(3).is_zero
    assert mat.minor_ideal(2).equal(Ideal(R3, (x * z - y**2,)))
    assert mat.minor_ideal(1).equal(Ideal(R3, (x, y, z)))


def test_syzygy_matrix_of_coordinate_cross(R3):
    x, y, z = R3.gens()
    I = Ideal(R3, (x * y, x * z, y * z))
    pres = syzygy_matrix(I, generators=(x * y, x * z, y * z))
    assert pres.generators == (x * y, x * z, y * z)
    mat = pres.matrix
    assert mat.nrows == 3 and mat.ncols == 2
    zero = R3.zero()
    cols = [tuple(mat.entry(i, j) for i in range(3)) for j in range(mat.ncols)]
    # the columns generate the same module as the two textbook syzygies
    reference = [(z, -y, zero), (zero, y, -x)]
    assert module_groebner(R3, cols, 3) == module_groebner(R3, reference, 3)
    # each column really is a syzygy
    gens = pres.generators
    for col in cols:
        assert sum((c * g for c, g in zip(col, gens)), zero).is_zero


def test_syzygy_matrix_koszul():
    R = ring("x", "y")
    x, y = R.gens()
    pres = syzygy_matrix(Ideal(R, (x, y)), generators=(x, y))
    mat = pres.matrix
    assert (mat.nrows, mat.ncols) == (2, 1)
    col = tuple(mat.entry(i, 0) for i in range(2))
    assert col in ((y, -x), (-y, x))


def test_fitting_frozen_values(R3):
    x, y, z = R3.gens()
    I = Ideal(R3, (x * y, x * z, y * z))
    assert fitting_ideal(I, 2).equal(Ideal(R3, (x, y, z)))
    assert fitting_ideal(I, 3).is_unit
    assert fitting_ideal(I, 0).is_zero
    with pytest.raises(StructuralError):
        fitting_ideal(I, -1)


def test_fitting_of_complete_intersection():
    R = ring("x", "y")
    x, y = R.gens()
    assert fitting_ideal(Ideal(R, (x, y)), 2).is_unit


def test_fitting_of_hankel_minors():
    R = ring("x", "y", "z", "w", "t")
    x, y, z, w, t = R.gens()
    I = Ideal(
        R,
        (
            x * z - y**2,
            x * w - y * z,
            y * w - z**2,
            x * t - z**2,
            y * t - z * w,
            z * t - w**2,
        ),
    )
    m = Ideal(R, (x, y, z, w, t))
    assert fitting_ideal(I, 3).equal(m.power(3))


def test_fitting_invariant_under_redundant_generators(R3):
    x, y, z = R3.gens()
    I = Ideal(R3, (x * y, x * z, y * z))
    base = fitting_ideal(I, 2)
    padded = fitting_ideal(
        I, 2, generators=(x * y, x * z, y * z, x * y + x * z, (x + z) * y)
    )
    assert base.equal(padded)


def test_fitting_invariance_fuzz():
    rng = random.Random(71)
    R = ring("x", "y", "z")
    gens_pool = R.gens()
    for _ in range(10):
        picks = []
        for _ in range(rng.randint(2, 3)):
            f = R.zero()
            for _ in range(rng.randint(1, 2)):
                mono = R.one()
                for _ in range(rng.randint(1, 2)):
                    mono = mono * gens_pool[rng.randrange(3)]
                f = f + mono * Fraction(rng.randint(1, 3))
            picks.append(f)
        I = Ideal(R, tuple(picks))
        if I.is_unit or I.is_zero:
            continue
        mixed = tuple(picks) + (picks[0] + picks[-1],)
        for j in (1, 2):
            assert fitting_ideal(I, j).equal(fitting_ideal(I, j, generators=mixed))


def test_assumptions_on_squarefree(R3, star3):
    rep = check_assumptions(star3)
    assert rep.height_c == 2
    assert rep.mu == 3
    assert rep.fitting_height == 3
    assert rep.generically_ci_proxy
    assert rep.unmixed_status == "verified_monomial"
    assert rep.radical_status == "verified_monomial_squarefree"
    assert rep.satisfied
    d = rep.as_dict()
    assert d["satisfied"] is True


def test_assumptions_flag_mixed_heights(mixed_heights):
    rep = check_assumptions(mixed_heights)
    assert rep.unmixed_status == "failed_monomial"
    assert not rep.satisfied
    # an attestation cannot overrule a computed failure
    forced = check_assumptions(mixed_heights, attest_unmixed=True)
    assert forced.unmixed_status == "failed_monomial"
    assert not forced.satisfied


def test_assumptions_flag_not_gci(unmixed_not_gci):
    rep = check_assumptions(unmixed_not_gci, attest_unmixed=True)
    assert rep.height_c == 3
    assert rep.fitting_height == 3
    assert not rep.generically_ci_proxy
    assert not rep.satisfied


def test_assumptions_attestation_paths(fermat3):
    bare = check_assumptions(fermat3)
    assert bare.unmixed_status == "unverified"
    assert bare.radical_status == "unverified"
    assert not bare.satisfied
    attested = check_assumptions(fermat3, attest_unmixed=True, attest_radical=True)
    assert attested.unmixed_status == "attested"
    assert attested.radical_status == "attested"
    assert attested.satisfied


def test_assumptions_unit_fitting_convention():
    R = ring("x", "y")
    rep = check_assumptions(Ideal(R, R.gens()))
    assert rep.fitting_height == 3  # unit ideal: height beyond the ring
    assert rep.generically_ci_proxy
