"""Combinatorial route for monomial ideals.

Minimal primes of a monomial ideal are read off the generator supports
as minimal vertex covers, and for squarefree ideals the symbolic power
is the intersection of the corresponding prime powers.  None of this
touches Groebner machinery, which is the point: it gives an oracle that
is independent of the colon formulas and can be compared against them.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from typing import List, Tuple

from . import series
from .errors import StructuralError
from .ideals import Ideal
from .rings import Exponent, mono_lcm


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal stored as the antichain of minimal generator exponents."""

    ring: object
    exponents: Tuple[Exponent, ...]

    @classmethod
    def from_ideal(cls, ideal: Ideal) -> "MonomialIdeal":
        for g in ideal.nonzero_gens:
            if not g.is_monomial:
                raise StructuralError("the combinatorial route needs monomial generators")
        exps = series.minimalize([g.lt() for g in ideal.nonzero_gens])
        return cls(ideal.ring, tuple(exps))

    def to_ideal(self) -> Ideal:
        ring = self.ring
        return Ideal(ring, [ring.monomial(e) for e in self.exponents])

    def is_squarefree(self) -> bool:
        return all(all(c <= 1 for c in e) for e in self.exponents)

    def supports(self) -> List[frozenset]:
        return [frozenset(i for i, c in enumerate(e) if c > 0) for e in self.exponents]


def _minimal_covers(supports, nvars: int) -> List[frozenset]:
    # Scanned by size, so every kept subset is minimal and the output is
    # sorted by height.
    covers: List[frozenset] = []
    for size in range(1, nvars + 1):
        for subset in combinations(range(nvars), size):
            cand = frozenset(subset)
            if any(cover <= cand for cover in covers):
                continue
            if all(cand & s for s in supports):
                covers.append(cand)
    return covers


def minimal_primes_monomial(ideal: Ideal) -> List[Tuple[str, ...]]:
    """Minimal primes of a monomial ideal, each as a tuple of variable names.

    A prime (x_i : i in A) contains the ideal exactly when A meets the
    support of every generator, so the minimal primes are the minimal
    covers of the support hypergraph.
    """
    mono = ideal if isinstance(ideal, MonomialIdeal) else MonomialIdeal.from_ideal(ideal)
    supports = mono.supports()
    ring = mono.ring
    if not supports:
        return []
    if any(not s for s in supports):
        raise StructuralError("a unit generator admits no covering prime")
    covers = _minimal_covers(supports, ring.nvars)
    return [tuple(ring.vars[i] for i in sorted(c)) for c in covers]


def _prime_power_exponents(cover, m: int, nvars: int) -> List[Exponent]:
    gens = []
    for combo in combinations_with_replacement(sorted(cover), m):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        gens.append(tuple(e))
    return gens


def symbolic_power_monomial(ideal: Ideal, m: int) -> Ideal:
    """m-th symbolic power of a squarefree monomial ideal.

    Computed as the intersection of the m-th powers of the minimal
    primes, which for squarefree ideals are exactly the associated
    primes.  Non-squarefree input is refused rather than guessed at.
    """
    if m < 1:
        raise StructuralError("symbolic powers need a positive exponent")
    mono = MonomialIdeal.from_ideal(ideal)
    if not mono.is_squarefree():
        raise StructuralError("the symbolic-power oracle covers only squarefree ideals")
    ring = mono.ring
    supports = mono.supports()
    if not supports:
        return Ideal(ring, [])
    if any(not s for s in supports):
        raise StructuralError("a unit generator admits no covering prime")
    covers = _minimal_covers(supports, ring.nvars)
    acc = None
    for cover in covers:
        gens = _prime_power_exponents(cover, m, ring.nvars)
        if acc is None:
            acc = gens
        else:
            acc = series.minimalize(
                [mono_lcm(a, b) for a in acc for b in gens]
            )
    return Ideal(ring, [ring.monomial(e) for e in acc])
