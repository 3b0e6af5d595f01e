"""Buchberger's algorithm with the Gebauer-Moeller pair criteria.

The same core engine serves two term universes: ring monomials (exponent
tuples) and free-module monomials (component, exponent) under the
position-over-term order.  A context object supplies the handful of
monomial operations that differ; everything else, including normal forms
and the final interreduction, is shared.

Reduced bases are canonical: minimalized, tail-reduced, monic, sorted by
ascending leading monomial.  Ring-level bases are memoized through the
cache module, keyed by a digest of the ring, order, and generators.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from heapq import heappush, heappop
from typing import Iterable, Optional

from . import cache
from .errors import HomogeneityError, StructuralError
from .rings import (
    MonomialOrder,
    Polynomial,
    PolyRing,
    mono_divides,
    mono_lcm,
    mono_mul,
    mono_quotient,
)
from .timeout import checkpoint


class _RingCtx:
    """Monomials are exponent tuples."""

    ring_like = True

    def __init__(self, order: MonomialOrder):
        self.order = order

    def sort_key(self, m):
        return self.order.sort_key(m)

    def heap_key(self, m):
        return self.order.heap_key(m)

    def divides(self, a, b):
        return mono_divides(a, b)

    def quotient(self, a, b):
        return mono_quotient(a, b)

    def mul(self, e, m):
        return mono_mul(e, m)

    def lcm(self, a, b):
        return mono_lcm(a, b)

    def degree(self, m):
        return sum(m)

    def coprime(self, a, b):
        return all(x == 0 or y == 0 for x, y in zip(a, b))


class _ModuleCtx:
    """Monomials are (component, exponent) pairs, position over term.

    Lower component index ranks higher.  The product criterion is not
    sound for modules, so `coprime` always answers False.
    """

    ring_like = False

    def __init__(self, order: MonomialOrder):
        self.order = order

    def sort_key(self, m):
        return (-m[0], self.order.sort_key(m[1]))

    def heap_key(self, m):
        return (m[0], self.order.heap_key(m[1]))

    def divides(self, a, b):
        return a[0] == b[0] and mono_divides(a[1], b[1])

    def quotient(self, a, b):
        return mono_quotient(a[1], b[1])

    def mul(self, e, m):
        return (m[0], mono_mul(e, m[1]))

    def lcm(self, a, b):
        if a[0] != b[0]:
            return None
        return (a[0], mono_lcm(a[1], b[1]))

    def degree(self, m):
        return sum(m[1])

    def coprime(self, a, b):
        return False


# ---------------------------------------------------------------------------
# core reduction


def _nf_terms(terms, divisors, ctx, field):
    """Full normal form of a term list against monic divisors.

    `divisors` holds (leading monomial, tail) pairs; tails carry the
    non-leading terms of a monic divisor.  The remainder comes back in
    strictly descending monomial order.
    """
    heap = []
    coeffs = {}
    zero = field.zero()

    def push(m, c):
        if m in coeffs:
            coeffs[m] = field.add(coeffs[m], c)
        else:
            coeffs[m] = c
            heappush(heap, (ctx.heap_key(m), m))

    for m, c in terms:
        push(m, c)

    out = []
    ticks = 0
    while heap:
        m = heap[0][1]
        c = coeffs.get(m, zero)
        if c == zero:
            heappop(heap)
            coeffs.pop(m, None)
            continue
        hit = None
        for lt, tail in divisors:
            if ctx.divides(lt, m):
                hit = (lt, tail)
                break
        heappop(heap)
        del coeffs[m]
        if hit is None:
            out.append((m, c))
            continue
        e = ctx.quotient(m, hit[0])
        nc = field.neg(c)
        for tm, tc in hit[1]:
            push(ctx.mul(e, tm), field.mul(nc, tc))
        ticks += 1
        if ticks % 128 == 0:
            checkpoint()
    return out


def _monic_terms(terms, field):
    lc = terms[0][1]
    if lc == field.one():
        return terms
    inv = field.inv(lc)
    return [(m, field.mul(inv, c)) for m, c in terms]


def _spoly_terms(f, g, L, ctx, field):
    ef = ctx.quotient(L, f[0][0])
    eg = ctx.quotient(L, g[0][0])
    acc = {}
    zero = field.zero()
    for m, c in f:
        k = ctx.mul(ef, m)
        acc[k] = field.add(acc.get(k, zero), c)
    for m, c in g:
        k = ctx.mul(eg, m)
        acc[k] = field.sub(acc.get(k, zero), c)
    return [(m, c) for m, c in acc.items() if c != zero]


# ---------------------------------------------------------------------------
# Buchberger loop


def _buchberger(
    seeds, ctx, field, degree_cap=None, product_criterion=True, complete_prefix=0
):
    # The first `complete_prefix` seeds are trusted to already form a
    # Groebner basis, so pairs among them are skipped.
    basis = []
    divisors = []
    pair_lcm = {}
    heap = []

    def update_pairs(t):
        # Gebauer-Moeller: filter the pairs (i, t) against each other, drop
        # coprime survivors, then apply the chain criterion to old pairs.
        lt_t = basis[t][0][0]
        cand = []
        for i in range(t):
            L = ctx.lcm(basis[i][0][0], lt_t)
            if L is not None:
                cop = product_criterion and ctx.coprime(basis[i][0][0], lt_t)
                cand.append((i, L, cop))
        kept = []
        for idx, (i, L, cop) in enumerate(cand):
            if cop:
                kept.append((i, L, cop))
                continue
            dominated = False
            for jdx, (_, Lj, copj) in enumerate(cand):
                if jdx == idx or not ctx.divides(Lj, L):
                    continue
                if Lj != L or copj or jdx < idx:
                    dominated = True
                    break
            if not dominated:
                kept.append((i, L, cop))
        stale = []
        for (i, j), L in pair_lcm.items():
            if ctx.divides(lt_t, L):
                if (
                    ctx.lcm(basis[i][0][0], lt_t) != L
                    and ctx.lcm(basis[j][0][0], lt_t) != L
                ):
                    stale.append((i, j))
        for p in stale:
            del pair_lcm[p]
        for i, L, cop in kept:
            if cop:
                continue
            if degree_cap is not None and ctx.degree(L) > degree_cap:
                continue
            pair_lcm[(i, t)] = L
            heappush(heap, (ctx.degree(L), ctx.sort_key(L), i, t))

    def add_element(terms, make_pairs=True):
        basis.append(terms)
        divisors.append((terms[0][0], terms[1:]))
        if make_pairs:
            update_pairs(len(basis) - 1)

    seen = set()
    for idx, s in enumerate(seeds):
        frozen = tuple(s)
        if frozen in seen:
            continue
        seen.add(frozen)
        add_element(_monic_terms(list(s), field), make_pairs=idx >= complete_prefix)
        if ctx.ring_like and ctx.degree(s[0][0]) == 0:
            return [[(s[0][0], field.one())]]

    while heap:
        checkpoint()
        _, _, i, j = heappop(heap)
        L = pair_lcm.pop((i, j), None)
        if L is None:
            continue
        s = _spoly_terms(basis[i], basis[j], L, ctx, field)
        r = _nf_terms(s, divisors, ctx, field)
        if not r:
            continue
        r = _monic_terms(r, field)
        if ctx.ring_like and ctx.degree(r[0][0]) == 0:
            return [[(r[0][0], field.one())]]
        add_element(r)

    return _final_reduce(basis, ctx, field)


def _final_reduce(basis, ctx, field):
    items = sorted(basis, key=lambda f: ctx.sort_key(f[0][0]))
    minimal = []
    for f in items:
        lt = f[0][0]
        if any(ctx.divides(g[0][0], lt) for g in minimal):
            continue
        minimal.append(f)
    # Leading monomials now form an antichain, so tail reduction cannot
    # disturb leads and a single pass yields the reduced basis.
    reduced = []
    for i, f in enumerate(minimal):
        divs = [
            (minimal[j][0][0], minimal[j][1:])
            for j in range(len(minimal))
            if j != i
        ]
        reduced.append(_nf_terms(f, divs, ctx, field))
    return reduced


# ---------------------------------------------------------------------------
# public ring-level interface


@dataclass(frozen=True)
class ReducedGB:
    """The unique reduced Groebner basis of an ideal in a fixed order."""

    ring: PolyRing
    elements: tuple
    digest: str

    @property
    def order(self) -> MonomialOrder:
        return self.ring.order

    @property
    def is_zero_ideal(self) -> bool:
        return not self.elements

    @property
    def is_unit_ideal(self) -> bool:
        return len(self.elements) == 1 and self.elements[0].is_constant

    def normal_form(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self)

    def contains(self, f: Polynomial) -> bool:
        return normal_form(f, self).is_zero

    def leading_monomials(self) -> list:
        return [g.lt() for g in self.elements]

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)


def basis_digest(ring: PolyRing, gens, degree_cap=None) -> str:
    parts = [
        str(ring.field),
        ",".join(ring.vars),
        str(ring.order),
        str(degree_cap),
        ";".join(sorted(str(g) for g in gens)),
    ]
    return hashlib.sha256("|".join(parts).encode()).hexdigest()


def reduced_groebner_basis(
    ring: PolyRing,
    gens: Iterable,
    degree_cap: Optional[int] = None,
    use_cache: bool = True,
) -> ReducedGB:
    """Reduced Groebner basis of the ideal generated by `gens`.

    With `degree_cap` (homogeneous generators only) the computation is
    truncated: the result generates the ideal in all degrees up to the cap
    and is the degree-restricted reduced basis there.
    """
    gens = list(gens)
    for g in gens:
        if not isinstance(g, Polynomial) or g.ring != ring:
            raise StructuralError("generators must live in the given ring")
    gens = [g for g in gens if not g.is_zero]
    if degree_cap is not None and not all(g.is_homogeneous for g in gens):
        raise HomogeneityError("degree-truncated bases need homogeneous input")

    key = basis_digest(ring, gens, degree_cap)
    if use_cache:
        hit = cache.lookup(key, ring)
        if hit is not None:
            return ReducedGB(ring, hit, key)

    ctx = _RingCtx(ring.order)
    result = _buchberger(
        [list(g.terms) for g in gens], ctx, ring.field, degree_cap=degree_cap
    )
    elements = tuple(Polynomial(ring, tuple(r)) for r in result)
    if use_cache:
        cache.store(key, ring, elements)
    return ReducedGB(ring, elements, key)


def normal_form(f: Polynomial, basis) -> Polynomial:
    """Unique remainder of f on division by a Groebner basis."""
    elements = basis.elements if isinstance(basis, ReducedGB) else list(basis)
    if not elements:
        return f
    ring = f.ring
    for g in elements:
        if g.ring != ring:
            raise StructuralError("normal form across different rings")
    ctx = _RingCtx(ring.order)
    divisors = []
    for g in elements:
        t = _monic_terms(list(g.terms), ring.field)
        divisors.append((t[0][0], t[1:]))
    r = _nf_terms(list(f.terms), divisors, ctx, ring.field)
    return Polynomial(ring, tuple(r))


def interreduce(ring: PolyRing, polys) -> tuple:
    """Canonicalize a set already known to be a Groebner basis.

    Minimalizes and tail-reduces without running Buchberger, so this is
    only sound when the input generates its own leading-term ideal.
    """
    ctx = _RingCtx(ring.order)
    termlists = [
        _monic_terms(list(p.terms), ring.field) for p in polys if not p.is_zero
    ]
    reduced = _final_reduce(termlists, ctx, ring.field)
    return tuple(Polynomial(ring, tuple(r)) for r in reduced)


def extend_basis(
    base: ReducedGB,
    extra,
    degree_cap: Optional[int] = None,
    use_cache: bool = True,
) -> ReducedGB:
    """Reduced basis of (base) + (extra), skipping pairs inside `base`."""
    ring = base.ring
    extra = [g for g in extra if not g.is_zero]
    for g in extra:
        if g.ring != ring:
            raise StructuralError("new elements must live in the basis ring")
    gens = list(base.elements) + extra
    if degree_cap is not None and not all(g.is_homogeneous for g in gens):
        raise HomogeneityError("degree-truncated bases need homogeneous input")
    key = basis_digest(ring, gens, degree_cap)
    if use_cache:
        hit = cache.lookup(key, ring)
        if hit is not None:
            return ReducedGB(ring, hit, key)
    ctx = _RingCtx(ring.order)
    result = _buchberger(
        [list(g.terms) for g in gens],
        ctx,
        ring.field,
        degree_cap=degree_cap,
        complete_prefix=len(base.elements),
    )
    elements = tuple(Polynomial(ring, tuple(r)) for r in result)
    if use_cache:
        cache.store(key, ring, elements)
    return ReducedGB(ring, elements, key)


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    if f.is_zero or g.is_zero:
        raise StructuralError("s-polynomial of zero")
    if f.ring != g.ring:
        raise StructuralError("s-polynomial across different rings")
    ctx = _RingCtx(f.ring.order)
    fm = _monic_terms(list(f.terms), f.ring.field)
    gm = _monic_terms(list(g.terms), f.ring.field)
    L = ctx.lcm(fm[0][0], gm[0][0])
    return f.ring.poly(_spoly_terms(fm, gm, L, ctx, f.ring.field))


# ---------------------------------------------------------------------------
# free modules under position-over-term


def module_groebner(ring: PolyRing, vectors, ncomponents: int) -> list:
    """Reduced Groebner basis of a submodule of the free module S^n.

    Vectors are tuples of polynomials of length `ncomponents`; component 0
    ranks highest.  Returns basis vectors in the same shape, monic in the
    leading component, ascending by leading module monomial.
    """
    ctx = _ModuleCtx(ring.order)
    field = ring.field
    seeds = []
    for vec in vectors:
        if len(vec) != ncomponents:
            raise StructuralError("vector of wrong length")
        terms = []
        for pos, p in enumerate(vec):
            if p.ring != ring:
                raise StructuralError("vector components must share the ring")
            for e, c in p.terms:
                terms.append(((pos, e), c))
        if terms:
            terms.sort(key=lambda t: ctx.sort_key(t[0]), reverse=True)
            seeds.append(terms)

    result = _buchberger(seeds, ctx, field, product_criterion=False)

    out = []
    for terms in result:
        comps = [[] for _ in range(ncomponents)]
        for (pos, e), c in terms:
            comps[pos].append((e, c))
        out.append(tuple(ring.poly(t) for t in comps))
    return out
