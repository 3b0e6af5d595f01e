"""Ideal arithmetic: membership, sums, products, intersections, colons,
saturation, and radical membership.

Colon ideals are the workhorse of the whole library, so `colon` routes by
structure:

  * monomial ideal by monomial generators: exponent arithmetic only;
  * homogeneous ideal by a zero-dimensional (irrelevant-primary) ideal in
    grevlex: a saturation bound plus finite linear algebra, see
    `_finite_colon`;
  * anything else: the classical route through intersections with an
    elimination variable.

The second route rests on two facts.  First, for homogeneous J in grevlex
the saturation J : z^inf in the last variable z falls out of a single
Groebner basis of J by dividing basis elements by z.  Second, whenever F
is irrelevant-primary, J : F^t is squeezed between J and that saturation,
so once the quotient C/J is finite dimensional the colon is a kernel
computation in a small vector space.
"""

from __future__ import annotations

from itertools import combinations_with_replacement
from typing import Optional, Union

from . import series
from .errors import InternalError, StructuralError
from .groebner import (
    ReducedGB,
    extend_basis,
    interreduce,
    normal_form,
    reduced_groebner_basis,
)
from .linalg import kernel_basis, rref
from .rings import (
    GREVLEX,
    Polynomial,
    PolyRing,
    block_order,
    mono_divides,
    monomials_of_degree,
)
from .timeout import checkpoint


def _fresh_var(names, base: str) -> str:
    name = base
    while name in names:
        name = "_" + name
    return name


def _prepend_var(ring: PolyRing, base: str = "u"):
    """Ring with one fresh variable ranked above everything else."""
    name = _fresh_var(ring.vars, base)
    inner = ring.order if ring.order.kind != "block" else GREVLEX
    ext = PolyRing(ring.field, (name,) + ring.vars, block_order(1, inner))
    return ext


def _lift(ext: PolyRing, f: Polynomial, upower: int = 0) -> Polynomial:
    return ext.poly(((upower,) + e, c) for e, c in f.terms)


def _drop(ring: PolyRing, f: Polynomial) -> Polynomial:
    for e, _ in f.terms:
        if e[0]:
            raise InternalError("dropping a polynomial that still uses the aux variable")
    return ring.poly((e[1:], c) for e, c in f.terms)


def _mono_colon(leads, g) -> list:
    """Generators of (leads) : x^g, as exponents."""
    return series.minimalize(
        tuple(max(a - b, 0) for a, b in zip(e, g)) for e in leads
    )


def _mono_intersect(a, b) -> list:
    return series.minimalize(
        tuple(max(x, y) for x, y in zip(e, f)) for e in a for f in b
    )


def divide_exact(f: Polynomial, g: Polynomial) -> Polynomial:
    """Quotient f / g when g divides f exactly."""
    if g.is_zero:
        raise StructuralError("division by zero polynomial")
    ring = f.ring
    if g.is_monomial:
        ge, gc = g.terms[0]
        inv = ring.field.inv(gc)
        out = []
        for e, c in f.terms:
            q = tuple(a - b for a, b in zip(e, ge))
            if any(x < 0 for x in q):
                raise StructuralError("inexact polynomial division")
            out.append((q, ring.field.mul(c, inv)))
        return ring.poly(out)
    quotient = ring.zero()
    rest = f
    while not rest.is_zero:
        le, lc = rest.terms[0]
        ge, gc = g.terms[0]
        q = tuple(a - b for a, b in zip(le, ge))
        if any(x < 0 for x in q):
            raise StructuralError("inexact polynomial division")
        piece = ring.monomial(q, ring.field.mul(lc, ring.field.inv(gc)))
        quotient = quotient + piece
        rest = rest - piece * g
    return quotient


def unit_ideal(ring: PolyRing) -> "Ideal":
    return Ideal(ring, (ring.one(),))


class Ideal:
    """An ideal given by generators, with a lazily computed reduced basis."""

    __slots__ = ("ring", "gens", "_gb")

    def __init__(self, ring: PolyRing, gens):
        gens = tuple(gens)
        for g in gens:
            if not isinstance(g, Polynomial) or g.ring != ring:
                raise StructuralError("generators must live in the given ring")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "gens", gens)
        object.__setattr__(self, "_gb", None)

    def __setattr__(self, *a):
        raise AttributeError("Ideal is immutable")

    @classmethod
    def _from_basis(cls, rgb: ReducedGB) -> "Ideal":
        ideal = cls(rgb.ring, rgb.elements)
        object.__setattr__(ideal, "_gb", rgb)
        return ideal

    # -- basic structure

    @property
    def gb(self) -> ReducedGB:
        if self._gb is None:
            object.__setattr__(
                self, "_gb", reduced_groebner_basis(self.ring, self.gens)
            )
        return self._gb

    @property
    def nonzero_gens(self) -> list:
        return [g for g in self.gens if not g.is_zero]

    @property
    def is_zero(self) -> bool:
        return not self.nonzero_gens

    @property
    def is_unit(self) -> bool:
        return self.gb.is_unit_ideal

    @property
    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous for g in self.gens)

    @property
    def is_monomial(self) -> bool:
        return all(g.is_monomial for g in self.gb.elements)

    def leading_exponents(self) -> list:
        return [g.lt() for g in self.gb.elements]

    def contains(self, f: Polynomial) -> bool:
        if f.ring != self.ring:
            raise StructuralError("membership across different rings")
        return normal_form(f, self.gb).is_zero

    def contains_ideal(self, other: "Ideal") -> bool:
        return all(self.contains(g) for g in other.nonzero_gens)

    def equal(self, other: "Ideal") -> bool:
        if not isinstance(other, Ideal) or other.ring != self.ring:
            return False
        return self.gb.elements == other.gb.elements

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.equal(other)

    __hash__ = None

    def __repr__(self):
        inside = ", ".join(str(g) for g in self.gens[:4])
        if len(self.gens) > 4:
            inside += f", ... ({len(self.gens)} gens)"
        return f"<ideal ({inside}) in {self.ring}>"

    # -- arithmetic

    def plus(self, other: "Ideal") -> "Ideal":
        self._check_ring(other)
        return Ideal(self.ring, self.gens + other.gens)

    def times(self, other: "Ideal") -> "Ideal":
        self._check_ring(other)
        gens = []
        seen = set()
        for f in self.nonzero_gens:
            for g in other.nonzero_gens:
                p = f * g
                if p.terms not in seen:
                    seen.add(p.terms)
                    gens.append(p)
        return Ideal(self.ring, gens)

    def power(self, m: int) -> "Ideal":
        """Ordinary power I^m.  I^0 is the unit ideal by convention."""
        if not isinstance(m, int) or m < 0:
            raise StructuralError("ideal powers need a nonnegative integer")
        if m == 0:
            return unit_ideal(self.ring)
        if m == 1:
            return self
        gens = []
        seen = set()
        for combo in combinations_with_replacement(self.nonzero_gens, m):
            p = combo[0]
            for q in combo[1:]:
                p = p * q
            if p.terms not in seen:
                seen.add(p.terms)
                gens.append(p)
        return Ideal(self.ring, gens)

    def intersect(self, other: "Ideal") -> "Ideal":
        self._check_ring(other)
        if self.is_zero or other.is_zero:
            return Ideal(self.ring, ())
        if self.is_unit:
            return other
        if other.is_unit:
            return self
        if self.is_monomial and other.is_monomial:
            meet = _mono_intersect(
                self.leading_exponents(), other.leading_exponents()
            )
            return Ideal(self.ring, [self.ring.monomial(e) for e in meet])
        ext = _prepend_var(self.ring)
        u = ext.gen(0)
        gens = [u * _lift(ext, f) for f in self.nonzero_gens]
        gens += [(ext.one() - u) * _lift(ext, g) for g in other.nonzero_gens]
        basis = reduced_groebner_basis(ext, gens)
        kept = [g for g in basis.elements if g.lt()[0] == 0]
        return Ideal(self.ring, [_drop(self.ring, g) for g in kept])

    # -- colon and saturation

    def colon(self, other, power: int = 1) -> "Ideal":
        """The colon ideal self : other^power."""
        if isinstance(other, Polynomial):
            other = Ideal(self.ring, (other,))
        self._check_ring(other)
        if not isinstance(power, int) or power < 0:
            raise StructuralError("colon exponent must be a nonnegative integer")
        if power == 0 or self.is_unit:
            return self
        fgens = other.nonzero_gens
        if not fgens:
            return unit_ideal(self.ring)
        if self.is_zero:
            return self
        if other.is_unit:
            return self

        if self.is_monomial and all(g.is_monomial for g in fgens):
            leads = self.leading_exponents()
            fexps = [g.lt() for g in fgens]
            for _ in range(power):
                acc = None
                for ge in fexps:
                    q = _mono_colon(leads, ge)
                    acc = q if acc is None else _mono_intersect(acc, q)
                if acc == leads:
                    break
                leads = acc
            return Ideal(self.ring, [self.ring.monomial(e) for e in leads])

        if (
            self.ring.order == GREVLEX
            and self.is_homogeneous
            and other.is_homogeneous
        ):
            fgb = other.gb
            if _is_zero_dimensional(fgb, self.ring):
                k = _irrelevant_power(fgb, self.ring)
                if k:
                    mults = self.ring.gens()
                    depth = k * power
                else:
                    mults = list(fgb.elements)
                    depth = power
                result = self._finite_colon(mults, depth)
                if result is not None:
                    return result

        result = self
        for _ in range(power):
            step = result._colon_by_ideal_once(fgens)
            if step.equal(result):
                break
            result = step
        return result

    def saturate(self, other) -> tuple:
        """(self : other^inf, least t >= 1 with self : other^t saturated)."""
        if isinstance(other, Polynomial):
            other = Ideal(self.ring, (other,))
        current = self
        t = 0
        while True:
            checkpoint()
            step = current.colon(other)
            if step.equal(current):
                return current, max(t, 1)
            current = step
            t += 1

    def _colon_by_ideal_once(self, fgens) -> "Ideal":
        acc = None
        for g in fgens:
            cg = self._colon_single(g)
            if acc is None:
                acc = cg
            elif cg.contains_ideal(acc):
                continue
            else:
                acc = acc.intersect(cg)
        return acc

    def _colon_single(self, g: Polynomial) -> "Ideal":
        if g.is_constant:
            return self
        if self.is_monomial and g.is_monomial:
            q = _mono_colon(self.leading_exponents(), g.lt())
            return Ideal(self.ring, [self.ring.monomial(e) for e in q])
        meet = self.intersect(Ideal(self.ring, (g,)))
        return Ideal(self.ring, [divide_exact(h, g) for h in meet.nonzero_gens])

    # -- radical membership

    def radical_contains(self, f: Polynomial) -> bool:
        """Whether f lies in the radical, by the trick of inverting f."""
        if f.ring != self.ring:
            raise StructuralError("membership across different rings")
        if f.is_zero:
            return True
        ext = _prepend_var(self.ring)
        u = ext.gen(0)
        gens = [_lift(ext, g) for g in self.nonzero_gens]
        gens.append(ext.one() - u * _lift(ext, f))
        return reduced_groebner_basis(ext, gens).is_unit_ideal

    # -- the finite-dimensional colon engine

    def _finite_colon(self, mults, depth: int) -> Optional["Ideal"]:
        """self : (mults)^depth, valid when (mults) is irrelevant-primary.

        Returns None when the last-variable saturation bound is not finite
        dimensional over self, in which case the caller falls back to the
        generic route.
        """
        gbj = self.gb
        if gbj.is_zero_ideal or gbj.is_unit_ideal:
            return self
        ring = self.ring
        field = ring.field
        n = ring.nvars

        csat = _saturate_last_var(ring, gbj.elements)
        if csat == gbj.elements:
            # Already saturated, and self : F^t sits between the two.
            return self

        leads_j = [g.lt() for g in gbj.elements]
        leads_c = [g.lt() for g in csat]
        diff = series.poly_sub(
            series.numerator(leads_j, n), series.numerator(leads_c, n)
        )
        for _ in range(n):
            diff = series.divide_one_minus_t(diff)
            if diff is None:
                return None
        if any(c < 0 for c in diff):
            raise InternalError("negative graded dimension in colon bound")
        if not any(diff):
            raise InternalError("saturation changed the basis but not the series")

        vdegrees = [d for d, c in enumerate(diff) if c]
        pieces = {}
        for d in vdegrees:
            checkpoint()
            pieces[d] = _graded_piece(ring, gbj, csat, d, diff[d])

        mult_data = [(p, p.total_degree()) for p in mults]
        blocks = {}
        for d in vdegrees:
            piece = pieces[d]
            for mi, (mp, me) in enumerate(mult_data):
                target = pieces.get(d + me)
                rows = []
                for brow in piece["rows"]:
                    p = _lift_piece(ring, piece, brow)
                    q = normal_form(mp * p, gbj)
                    if target is None:
                        if not q.is_zero:
                            raise InternalError("image escaped the colon bound")
                        rows.append(None)
                    else:
                        vec = _coords(q, target)
                        rows.append(_express(vec, target, field))
                blocks[(mi, d)] = rows

        # kernel chain: U_s = {v : h v in U_{s-1} for every multiplier h}
        state = {d: ([], []) for d in vdegrees}
        for _ in range(depth):
            checkpoint()
            nxt = {}
            changed = False
            for d in vdegrees:
                dim_d = len(pieces[d]["rows"])
                cond = []
                for mi, (mp, me) in enumerate(mult_data):
                    target = pieces.get(d + me)
                    if target is None:
                        continue
                    img = blocks[(mi, d)]
                    prev_rows, prev_pivots = state[d + me]
                    residuals = [
                        _residual(img[j], prev_rows, prev_pivots, field)
                        for j in range(dim_d)
                    ]
                    width = len(pieces[d + me]["rows"])
                    for c in range(width):
                        cond.append([residuals[j][c] for j in range(dim_d)])
                ker = kernel_basis(cond, field, dim_d)
                rows, pivots = rref(ker, field) if ker else ([], [])
                nxt[d] = (rows, pivots)
                if len(rows) != len(state[d][0]):
                    changed = True
            state = nxt
            if not changed:
                break

        extras = []
        for d in vdegrees:
            piece = pieces[d]
            for alpha in state[d][0]:
                combined = [field.zero()] * len(piece["std"])
                for coeff, brow in zip(alpha, piece["rows"]):
                    if coeff != field.zero():
                        combined = [
                            field.add(a, field.mul(coeff, b))
                            for a, b in zip(combined, brow)
                        ]
                extras.append(_lift_piece(ring, piece, combined))
        if not extras:
            return self
        return Ideal._from_basis(extend_basis(gbj, extras))

    def _check_ring(self, other):
        if not isinstance(other, Ideal) or other.ring != self.ring:
            raise StructuralError("operation across different rings")


# ---------------------------------------------------------------------------
# helpers for the finite colon route


def _is_zero_dimensional(fgb: ReducedGB, ring: PolyRing) -> bool:
    """dim S/F == 0, read off pure-power leading terms."""
    seen = set()
    for g in fgb.elements:
        e = g.lt()
        support = [i for i, a in enumerate(e) if a]
        if len(support) == 1:
            seen.add(support[0])
    return len(seen) == ring.nvars


def _irrelevant_power(fgb: ReducedGB, ring: PolyRing) -> int:
    """k when F equals the k-th power of the irrelevant ideal, else 0."""
    elements = fgb.elements
    if not elements or not all(g.is_monomial for g in elements):
        return 0
    k = sum(elements[0].lt())
    expected = set(monomials_of_degree(ring.nvars, k))
    return k if {g.lt() for g in elements} == expected else 0


def _saturate_last_var(ring: PolyRing, elements) -> tuple:
    """Saturation by the last variable, for homogeneous grevlex bases.

    If the last variable divides a leading term of a homogeneous grevlex
    basis element, it divides the whole element; dividing those elements
    yields a basis of the colon by that variable.  Iterate to a fixpoint.
    """
    last = ring.nvars - 1
    current = list(elements)
    changed_any = False
    while True:
        changed = False
        for i, g in enumerate(current):
            if g.lt()[last]:
                out = []
                for e, c in g.terms:
                    if not e[last]:
                        raise InternalError(
                            "leading term divisible by the last variable "
                            "but the polynomial is not"
                        )
                    out.append((e[:last] + (e[last] - 1,), c))
                current[i] = Polynomial(ring, tuple(out))
                changed = True
        if not changed:
            break
        changed_any = True
    if not changed_any:
        return tuple(elements)
    return interreduce(ring, current)


def _graded_piece(ring, gbj, csat, d: int, target_dim: int) -> dict:
    """Echelon basis of (C/J)_d over the standard monomials of degree d."""
    field = ring.field
    leads_j = [g.lt() for g in gbj.elements]
    std = [
        m
        for m in monomials_of_degree(ring.nvars, d)
        if not any(mono_divides(l, m) for l in leads_j)
    ]
    index = {m: i for i, m in enumerate(std)}
    piece = {"std": std, "index": index, "rows": [], "pivots": []}
    zero = field.zero()
    for g in csat:
        dg = g.total_degree()
        if dg > d:
            break
        for mu in monomials_of_degree(ring.nvars, d - dg):
            q = normal_form(ring.monomial(mu) * g, gbj)
            if q.is_zero:
                continue
            vec = [zero] * len(std)
            for e, c in q.terms:
                vec[index[e]] = c
            _insert_echelon(piece, vec, field)
            if len(piece["rows"]) == target_dim:
                return piece
    if len(piece["rows"]) != target_dim:
        raise InternalError("graded piece dimension mismatch")
    return piece


def _insert_echelon(piece, vec, field) -> bool:
    zero = field.zero()
    for row, p in zip(piece["rows"], piece["pivots"]):
        c = vec[p]
        if c != zero:
            vec = [field.sub(a, field.mul(c, b)) for a, b in zip(vec, row)]
    pivot = next((i for i, c in enumerate(vec) if c != zero), None)
    if pivot is None:
        return False
    inv = field.inv(vec[pivot])
    vec = [field.mul(inv, c) for c in vec]
    for i, row in enumerate(piece["rows"]):
        c = row[pivot]
        if c != zero:
            piece["rows"][i] = [
                field.sub(a, field.mul(c, b)) for a, b in zip(row, vec)
            ]
    piece["rows"].append(vec)
    piece["pivots"].append(pivot)
    return True


def _coords(q: Polynomial, piece) -> list:
    vec = [q.ring.field.zero()] * len(piece["std"])
    for e, c in q.terms:
        vec[piece["index"][e]] = c
    return vec


def _lift_piece(ring: PolyRing, piece, row) -> Polynomial:
    """Polynomial with the given coordinates over the standard monomials."""
    zero = ring.field.zero()
    return ring.poly(
        [(piece["std"][c], v) for c, v in enumerate(row) if v != zero]
    )


def _express(vec, piece, field) -> list:
    """Coordinates of a vector in the echelon basis of a graded piece."""
    zero = field.zero()
    res = list(vec)
    coords = []
    for row, p in zip(piece["rows"], piece["pivots"]):
        c = res[p]
        coords.append(c)
        if c != zero:
            res = [field.sub(a, field.mul(c, b)) for a, b in zip(res, row)]
    if any(c != zero for c in res):
        raise InternalError("vector outside its graded piece")
    return coords


def _residual(vec, rows, pivots, field) -> list:
    """Component of a coordinate vector transverse to an echelon span."""
    zero = field.zero()
    res = list(vec)
    for row, p in zip(rows, pivots):
        c = res[p]
        if c != zero:
            res = [field.sub(a, field.mul(c, b)) for a, b in zip(res, row)]
    return res
