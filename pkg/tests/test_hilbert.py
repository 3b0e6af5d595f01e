import random
from math import comb

import pytest

from sympow import (
    GREVLEX,
    HomogeneityError,
    Ideal,
    PolyRing,
    PreconditionError,
    Rationals,
    StructuralError,
    graded_quotient_mu,
    hilbert_series,
    initial_degree,
    krull_invariants,
    multiplicity,
)
from sympow.rings import mono_divides, monomials_of_degree


def ring(*names):
    return PolyRing(Rationals(), names, GREVLEX)


@pytest.fixture(scope="module")
def R3():
    return ring("x", "y", "z")


def test_series_of_coordinate_cross(R3):
    x, y, z = R3.gens()
    data = hilbert_series(Ideal(R3, (x * y, x * z, y * z)))
    assert data.numerator == (1, 2)
    assert data.dim == 1


def test_series_of_zero_ideal(R3):
    data = hilbert_series(Ideal(R3, ()))
    assert data.numerator == (1,)
    assert data.dim == 3
    assert multiplicity(Ideal(R3, ())) == 1


def test_unit_ideal_has_no_invariants(R3):
    with pytest.raises(StructuralError):
        multiplicity(Ideal(R3, (R3.one(),)))
    with pytest.raises(StructuralError):
        krull_invariants(Ideal(R3, (R3.one(),)))


def test_homogeneity_gate(R3):
    x, y, z = R3.gens()
    with pytest.raises(HomogeneityError):
        hilbert_series(Ideal(R3, (x * y - 1,)))


def test_complete_intersection_multiplicity():
    R = ring("x", "y")
    x, y = R.gens()
    I = Ideal(R, (x**2, y**3))
    assert multiplicity(I) == 6
    assert krull_invariants(I) == (0, 2)


def test_krull_invariants(R3):
    x, y, z = R3.gens()
    assert krull_invariants(Ideal(R3, (x * y, x * z, y * z))) == (1, 2)
    assert krull_invariants(Ideal(R3, ())) == (3, 0)
    assert krull_invariants(Ideal(R3, (x,))) == (2, 1)


def test_initial_degree(R3):
    x, y, z = R3.gens()
    assert initial_degree(Ideal(R3, (x * y, x * z, y * z))) == 2
    assert initial_degree(Ideal(R3, (x**3 - y**2 * z, z**4))) == 3
    with pytest.raises(StructuralError):
        initial_degree(Ideal(R3, ()))


def _graded_count(exps, nvars, d):
    return sum(
        1
        for mono in monomials_of_degree(nvars, d)
        if not any(mono_divides(e, mono) for e in exps)
    )


def test_series_expansion_matches_direct_count():
    # expand numerator / (1-t)^dim and compare with counted monomials
    R = ring("x", "y", "z")
    rng = random.Random(61)
    for _ in range(20):
        exps = {tuple(rng.randint(0, 3) for _ in range(3)) for _ in range(3)}
        exps = {e for e in exps if any(e)}
        if not exps:
            continue
        I = Ideal(R, tuple(R.monomial(e) for e in exps))
        data = hilbert_series(I)
        leads = [g.lt() for g in I.gb.elements]
        for d in range(9):
            if data.dim > 0:
                predicted = sum(
                    c * comb(d - i + data.dim - 1, data.dim - 1)
                    for i, c in enumerate(data.numerator)
                    if d - i >= 0
                )
            else:
                predicted = (
                    data.numerator[d] if d < len(data.numerator) else 0
                )
            assert predicted == _graded_count(leads, 3, d)


def test_graded_quotient_mu_symbolic_square(R3):
    x, y, z = R3.gens()
    I = Ideal(R3, (x * y, x * z, y * z))
    I2 = I.power(2)
    outer = I2.plus(Ideal(R3, (x * y * z,)))
    count, witnesses = graded_quotient_mu(outer, I2)
    assert count == 1
    assert len(witnesses) == 1
    assert I2.plus(Ideal(R3, tuple(witnesses))).equal(outer)
    assert witnesses[0].total_degree() == 3


def test_graded_quotient_mu_nakayama(R3):
    x, y, z = R3.gens()
    m = Ideal(R3, (x, y, z))
    count, witnesses = graded_quotient_mu(m, Ideal(R3, ()))
    assert count == 3
    assert sorted(str(w) for w in witnesses) == ["x", "y", "z"]
    # a minimal generating set is what the witnesses reproduce
    count, _ = graded_quotient_mu(m.power(2), Ideal(R3, ()))
    assert count == 6


def test_graded_quotient_mu_trivial_cases(R3):
    x, y, z = R3.gens()
    I = Ideal(R3, (x, y))
    assert graded_quotient_mu(I, I) == (0, [])
    assert graded_quotient_mu(Ideal(R3, ()), Ideal(R3, ())) == (0, [])


def test_graded_quotient_mu_requires_containment(R3):
    x, y, z = R3.gens()
    with pytest.raises(PreconditionError):
        graded_quotient_mu(Ideal(R3, (x,)), Ideal(R3, (y,)))


def test_graded_quotient_mu_requires_homogeneous(R3):
    x, y, z = R3.gens()
    with pytest.raises(HomogeneityError):
        graded_quotient_mu(Ideal(R3, (x * y - 1,)), Ideal(R3, ()))


def test_witness_lifts_live_in_outer(R3):
    x, y, z = R3.gens()
    I = Ideal(R3, (x**2, x * y, y**2))
    inner = I.times(Ideal(R3, (x, y, z)))
    count, witnesses = graded_quotient_mu(I, inner)
    assert count == 3
    for w in witnesses:
        assert I.contains(w)
