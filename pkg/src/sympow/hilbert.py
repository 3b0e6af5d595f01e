"""Hilbert series of graded quotients and the invariants derived from it.

Everything here works through the leading-term ideal: for a homogeneous
ideal I the quotients S/I and S/LT(I) share a Hilbert function, so the
combinatorial recursion in `series` does all the counting.  Dimension
falls out of the order of the pole at t = 1 and multiplicity is the
reduced numerator evaluated there, also when the quotient is not
Cohen-Macaulay.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from . import series
from .errors import HomogeneityError, InternalError, PreconditionError, StructuralError
from .groebner import extend_basis, normal_form, reduced_groebner_basis
from .ideals import Ideal
from .rings import Polynomial, mono_divides, monomials_of_degree


@dataclass(frozen=True)
class HilbertData:
    """Reduced Hilbert numerator of S/I together with dim S/I.

    `numerator` carries the coefficients of q(t) with every (1 - t)
    factor already cancelled, so sum(numerator) is the multiplicity.
    The unit ideal gets numerator () and dim -1.
    """

    numerator: Tuple[int, ...]
    dim: int
    nvars: int


def _require_homogeneous(ideal: Ideal) -> None:
    if not ideal.is_homogeneous:
        raise HomogeneityError("Hilbert series needs homogeneous generators")


def hilbert_series(ideal: Ideal) -> HilbertData:
    _require_homogeneous(ideal)
    n = ideal.ring.nvars
    q = series.numerator(ideal.leading_exponents(), n)
    if not q:
        return HilbertData((), -1, n)
    cancelled = 0
    while True:
        quo = series.divide_one_minus_t(q)
        if quo is None:
            break
        q = quo
        cancelled += 1
    return HilbertData(tuple(q), n - cancelled, n)


def krull_invariants(ideal: Ideal) -> Tuple[int, int]:
    """(dim S/I, height I) for a proper homogeneous ideal."""
    data = hilbert_series(ideal)
    if data.dim < 0:
        raise StructuralError("the unit ideal has no Krull invariants")
    return data.dim, data.nvars - data.dim


def multiplicity(ideal: Ideal) -> int:
    data = hilbert_series(ideal)
    if data.dim < 0:
        raise StructuralError("the unit ideal has no multiplicity")
    return sum(data.numerator)


def initial_degree(ideal: Ideal) -> int:
    """Least degree of a nonzero element of a homogeneous ideal."""
    _require_homogeneous(ideal)
    if ideal.is_zero:
        raise StructuralError("the zero ideal has no initial degree")
    return min(g.total_degree() for g in ideal.gb.elements)


def _graded_dim(leads, monos) -> int:
    # dim of the degree-d piece of the ideal spanned by `leads`.
    count = 0
    for m in monos:
        if any(mono_divides(l, m) for l in leads):
            count += 1
    return count


class _LiftedEchelon:
    """Row echelon form that carries a polynomial lift along with each row."""

    def __init__(self, field):
        self.field = field
        self.rows: List[list] = []
        self.pivots: List[int] = []
        self.lifts: List[Polynomial] = []

    def insert(self, vec: list, lift: Polynomial) -> bool:
        fld = self.field
        vec = list(vec)
        for row, piv, other in zip(self.rows, self.pivots, self.lifts):
            c = vec[piv]
            if c != fld.zero():
                vec = [fld.sub(a, fld.mul(c, b)) for a, b in zip(vec, row)]
                lift = lift - other * c
        piv = next((j for j, c in enumerate(vec) if c != fld.zero()), None)
        if piv is None:
            return False
        inv = fld.inv(vec[piv])
        vec = [fld.mul(inv, c) for c in vec]
        lift = lift * inv
        for i, row in enumerate(self.rows):
            c = row[piv]
            if c != fld.zero():
                self.rows[i] = [fld.sub(a, fld.mul(c, b)) for a, b in zip(row, vec)]
                self.lifts[i] = self.lifts[i] - lift * c
        self.rows.append(vec)
        self.pivots.append(piv)
        self.lifts.append(lift)
        return True


def graded_quotient_mu(outer: Ideal, inner: Ideal) -> Tuple[int, List[Polynomial]]:
    """Minimal number of generators of outer/inner, with witness lifts.

    Both ideals must be homogeneous and inner must sit inside outer.  The
    count is sum_d [dim outer_d - dim (inner + m*outer)_d] by the graded
    Nakayama lemma; the witnesses are elements of `outer` whose classes
    give a basis of the quotient modulo inner + m*outer, listed by degree
    and then by the ambient monomial order.
    """
    ring = outer.ring
    if inner.ring != ring:
        raise StructuralError("both ideals must live in the same ring")
    _require_homogeneous(outer)
    _require_homogeneous(inner)
    if not outer.contains_ideal(inner):
        raise PreconditionError("inner ideal is not contained in the outer one")
    if outer.is_zero:
        return 0, []

    gb_outer = outer.gb
    degrees = [g.total_degree() for g in gb_outer.elements]
    alpha, top = min(degrees), max(degrees)

    scaled = [v * g for v in ring.gens() for g in gb_outer.elements]
    if inner.is_zero:
        gb_dull = reduced_groebner_basis(ring, scaled, degree_cap=top)
    else:
        gb_dull = extend_basis(inner.gb, scaled, degree_cap=top)
    leads_outer = [g.lt() for g in gb_outer.elements]
    leads_dull = [g.lt() for g in gb_dull.elements]

    count = 0
    witnesses: List[Polynomial] = []
    field = ring.field
    for d in range(alpha, top + 1):
        monos = list(monomials_of_degree(ring.nvars, d))
        gap = _graded_dim(leads_outer, monos) - _graded_dim(leads_dull, monos)
        if gap == 0:
            continue
        count += gap
        # Degree-d basis elements span outer_d modulo m*outer, so their
        # normal forms are enough to realize every witness class.
        std = [m for m in monos if not any(mono_divides(l, m) for l in leads_dull)]
        index = {m: j for j, m in enumerate(std)}
        ech = _LiftedEchelon(field)
        for g in gb_outer.elements:
            if g.total_degree() != d:
                continue
            r = normal_form(g, gb_dull)
            vec = [field.zero()] * len(std)
            for mono, c in r.terms:
                vec[index[mono]] = c
            ech.insert(vec, g)
            if len(ech.rows) == gap:
                break
        if len(ech.rows) != gap:
            raise InternalError("degree piece of the quotient was not spanned")
        witnesses.extend(ech.lifts)
    return count, witnesses
