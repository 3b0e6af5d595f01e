import random
from fractions import Fraction
from functools import reduce

import pytest

from sympow import GREVLEX, Ideal, LEX, PolyRing, Rationals, StructuralError
from sympow.ideals import divide_exact, unit_ideal


def ring(*names, order=GREVLEX):
    return PolyRing(Rationals(), names, order)


@pytest.fixture(scope="module")
def R3():
    return ring("x", "y", "z")


def rand_poly(R, rng, max_terms=3, max_deg=2):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        e = [0] * R.nvars
        for _ in range(rng.randint(0, max_deg)):
            e[rng.randrange(R.nvars)] += 1
        c = Fraction(rng.randint(-4, 4))
        if c:
            terms[tuple(e)] = terms.get(tuple(e), Fraction(0)) + c
    return R.poly([(e, c) for e, c in terms.items() if c != 0])


def test_membership_and_equality(R3):
    x, y, z = R3.gens()
    I = Ideal(R3, (x * y - z**2, x**2 - y * z))
    assert I.contains(x * (x * y - z**2) - z * (x**2 - y * z))
    assert not I.contains(x)
    J = Ideal(R3, (x**2 - y * z, -(x * y) + z**2, x * y - z**2))
    assert I.equal(J)
    assert I.contains_ideal(J) and J.contains_ideal(I)


def test_flags(R3):
    x, y, z = R3.gens()
    assert Ideal(R3, ()).is_zero
    assert Ideal(R3, (x + 1, x)).is_unit
    assert Ideal(R3, (x * y, z)).is_monomial
    assert not Ideal(R3, (x * y - z**2,)).is_monomial
    assert Ideal(R3, (x * y - z**2,)).is_homogeneous
    assert not Ideal(R3, (x * y - 1,)).is_homogeneous
    assert unit_ideal(R3).is_unit


def test_sums_products_powers(R3):
    x, y, z = R3.gens()
    I = Ideal(R3, (x, y))
    J = Ideal(R3, (y, z))
    assert I.plus(J).equal(Ideal(R3, (x, y, z)))
    assert I.times(J).equal(Ideal(R3, (x * y, x * z, y**2, y * z)))
    assert I.power(2).equal(I.times(I))
    assert I.power(0).is_unit
    assert I.power(1).equal(I)
    with pytest.raises(StructuralError):
        I.power(-1)


def test_product_distributes_fuzz():
    R = ring("x", "y")
    rng = random.Random(3)
    for _ in range(15):
        A = Ideal(R, tuple(rand_poly(R, rng) for _ in range(2)))
        B = Ideal(R, tuple(rand_poly(R, rng) for _ in range(2)))
        C = Ideal(R, tuple(rand_poly(R, rng) for _ in range(2)))
        lhs = A.plus(B).times(C)
        rhs = A.times(C).plus(B.times(C))
        assert lhs.equal(rhs)


def test_intersection_monomial(R3):
    x, y, z = R3.gens()
    assert Ideal(R3, (x,)).intersect(Ideal(R3, (y,))).equal(Ideal(R3, (x * y,)))
    A = Ideal(R3, (x**2, y))
    B = Ideal(R3, (y**2, x))
    assert A.intersect(B).equal(Ideal(R3, (x**2, x * y, y**2)))


def test_intersection_membership_fuzz():
    R = ring("x", "y")
    rng = random.Random(17)
    for _ in range(10):
        A = Ideal(R, tuple(rand_poly(R, rng) for _ in range(2)))
        B = Ideal(R, tuple(rand_poly(R, rng) for _ in range(2)))
        C = A.intersect(B)
        assert A.contains_ideal(C) and B.contains_ideal(C)
        f = rand_poly(R, rng, max_terms=4)
        if A.contains(f) and B.contains(f):
            assert C.contains(f)


def test_colon_pinned_examples(R3):
    x, y, z = R3.gens()
    assert Ideal(R3, (x**2 * y,)).colon(y).equal(Ideal(R3, (x**2,)))
    m = Ideal(R3, (x, y, z))
    I2 = Ideal(R3, (x * y, x * z, y * z)).power(2)
    expected = I2.plus(Ideal(R3, (x * y * z,)))
    assert I2.colon(m).equal(expected)


def test_colon_with_power_argument(R3):
    x, y, z = R3.gens()
    J = Ideal(R3, (x * y, x * z, y * z)).power(3)
    m = Ideal(R3, (x, y, z))
    assert J.colon(m, power=2).equal(J.colon(m).colon(m))


def test_saturation_exponents():
    R = ring("x", "y")
    x, y = R.gens()
    sat, t = Ideal(R, (x**2 * y,)).saturate(y)
    assert sat.equal(Ideal(R, (x**2,)))
    assert t == 1
    m = Ideal(R, (x, y))
    sat, t = m.power(2).saturate(m)
    assert sat.is_unit
    assert t == 2
    # already saturated chains still report exponent 1
    sat, t = Ideal(R, (x,)).saturate(y)
    assert sat.equal(Ideal(R, (x,)))
    assert t == 1


def test_colon_dual_route_agreement():
    # the finite-dimensional engine against the generator-by-generator fold
    R = ring("x", "y", "z")
    x, y, z = R.gens()
    I = Ideal(R, (x * y, x * z, y * z))
    J = I.power(2)
    m = Ideal(R, (x, y, z))
    fold = reduce(
        lambda acc, g: acc.intersect(J.colon(g)), m.gens, unit_ideal(R)
    )
    assert J.colon(m).equal(fold)


def test_colon_membership_definition_fuzz():
    # f lies in J : g exactly when f*g lies in J, whatever route ran
    R = ring("x", "y", "z")
    rng = random.Random(29)
    for _ in range(12):
        exps = {tuple(rng.randint(0, 2) for _ in range(3)) for _ in range(3)}
        gens = tuple(R.monomial(e) for e in exps if any(e))
        if not gens:
            continue
        J = Ideal(R, gens)
        g = R.monomial(tuple(rng.randint(0, 2) for _ in range(3)))
        C = J.colon(g)
        for h in C.gb.elements:
            assert J.contains(h * g)
        f = rand_poly(R, rng)
        if not f.is_zero:
            assert C.contains(f) == J.contains(f * g)


def test_colon_by_unit_and_self(R3):
    x, y, z = R3.gens()
    I = Ideal(R3, (x * y,))
    assert I.colon(Ideal(R3, (R3.one(),))).equal(I)
    assert I.colon(I).is_unit
    assert Ideal(R3, (x,)).colon(Ideal(R3, (x,))).is_unit


def test_radical_membership(R3):
    x, y, z = R3.gens()
    I = Ideal(R3, (x**2, y**3))
    assert I.radical_contains(x)
    assert I.radical_contains(x + y)
    assert not I.radical_contains(z)
    J = Ideal(R3, (x**2 * y,))
    assert J.radical_contains(x * y)
    assert not J.radical_contains(x)


def test_radical_matches_brute_force():
    R = ring("x", "y")
    rng = random.Random(41)
    for _ in range(10):
        I = Ideal(R, tuple(rand_poly(R, rng) for _ in range(2)))
        if I.is_zero or I.is_unit:
            continue
        f = rand_poly(R, rng)
        if f.is_zero:
            continue
        brute = any(I.contains(f**t) for t in range(1, 12))
        assert I.radical_contains(f) == brute


def test_divide_exact(R3):
    x, y, z = R3.gens()
    f = x**2 - y * z
    g = x * y + z**2
    assert divide_exact(f * g, g) == f
    with pytest.raises(StructuralError):
        divide_exact(x**2 + y, x)


def test_ring_mismatch_rejected(R3):
    other = ring("a", "b")
    with pytest.raises(StructuralError):
        Ideal(R3, (other.gen(0),))


def test_lex_ideal_operations_agree_with_grevlex():
    grev = ring("x", "y", "z")
    lexr = ring("x", "y", "z", order=LEX)
    xg, yg, zg = grev.gens()
    xl, yl, zl = lexr.gens()
    A = Ideal(grev, (xg * yg - zg**2, xg**2 - yg * zg)).colon(xg)
    B = Ideal(lexr, (xl * yl - zl**2, xl**2 - yl * zl)).colon(xl)
    for g in B.gb.elements:
        assert A.contains(grev.poly(g.terms))
    for g in A.gb.elements:
        assert B.contains(lexr.poly(g.terms))
