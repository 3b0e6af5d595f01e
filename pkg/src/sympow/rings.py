"""Multivariate polynomial arithmetic over exact coefficient fields.

Polynomials are immutable term lists kept in canonical descending monomial
order, so equality and hashing are structural.  Supported coefficient fields
are the rationals and prime fields ZZ/p; elements are `Fraction`s and small
ints respectively, with all arithmetic routed through the field object.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Optional, Union

from .errors import StructuralError, UnsupportedCharacteristicError

Exponent = tuple  # tuple[int, ...], one entry per ring variable


# ---------------------------------------------------------------------------
# coefficient fields


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Rationals:
    """The field QQ; elements are `fractions.Fraction`."""

    char = 0

    def coerce(self, x) -> Fraction:
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        raise StructuralError(f"cannot coerce {x!r} into QQ")

    def zero(self) -> Fraction:
        return Fraction(0)

    def one(self) -> Fraction:
        return Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero in QQ")
        return 1 / a

    def __str__(self):
        return "QQ"


@dataclass(frozen=True)
class PrimeField:
    """The field ZZ/p for prime p; elements are ints in [0, p)."""

    p: int

    def __post_init__(self):
        if not _is_prime(self.p):
            raise StructuralError(f"{self.p} is not prime")

    @property
    def char(self) -> int:
        return self.p

    def coerce(self, x) -> int:
        if isinstance(x, int):
            return x % self.p
        if isinstance(x, Fraction):
            den = x.denominator % self.p
            if den == 0:
                raise StructuralError(f"denominator of {x} vanishes mod {self.p}")
            return x.numerator % self.p * pow(den, -1, self.p) % self.p
        raise StructuralError(f"cannot coerce {x!r} into ZZ/{self.p}")

    def zero(self) -> int:
        return 0

    def one(self) -> int:
        return 1

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError(f"inverse of zero in ZZ/{self.p}")
        return pow(a, -1, self.p)

    def __str__(self):
        return f"ZZ/{self.p}"


Field = Union[Rationals, PrimeField]


# ---------------------------------------------------------------------------
# monomials

# A monomial is a bare exponent tuple; these helpers never touch coefficients.


def mono_mul(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x + y for x, y in zip(a, b))

def mono_divides(a: Exponent, b: Exponent) -> bool:
    """Whether x^a divides x^b."""
    return all(x <= y for x, y in zip(a, b))

def mono_quotient(a: Exponent, b: Exponent) -> Exponent:
    """x^a / x^b; requires divisibility."""
    q = tuple(x - y for x, y in zip(a, b))
    if any(e < 0 for e in q):
        raise StructuralError(f"{b} does not divide {a}")
    return q

def mono_lcm(a: Exponent, b: Exponent) -> Exponent:
    return tuple(max(x, y) for x, y in zip(a, b))

def mono_gcd(a: Exponent, b: Exponent) -> Exponent:
    return tuple(min(x, y) for x, y in zip(a, b))

def mono_degree(a: Exponent) -> int:
    return sum(a)


def monomials_of_degree(nvars: int, d: int) -> Iterator[Exponent]:
    """All exponent tuples of total degree exactly d, in a fixed order."""
    if nvars == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in monomials_of_degree(nvars - 1, d - first):
            yield (first,) + rest


# ---------------------------------------------------------------------------
# monomial orders


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order: grevlex, lex, or a block order.

    A block order compares the first `eliminated_count` exponents with the
    inner order and breaks ties on the remaining block, so the leading block
    dominates.  Both blocks reuse the same inner order.
    """

    kind: str
    eliminated_count: int = 0
    inner: Optional["MonomialOrder"] = None

    def __post_init__(self):
        if self.kind not in ("grevlex", "lex", "block"):
            raise StructuralError(f"unknown monomial order {self.kind!r}")
        if self.kind == "block":
            if self.eliminated_count < 1:
                raise StructuralError("block order needs eliminated_count >= 1")
            if self.inner is None or self.inner.kind == "block":
                raise StructuralError("block order needs a non-block inner order")
        elif self.eliminated_count or self.inner is not None:
            raise StructuralError(f"{self.kind} order takes no block arguments")

    def sort_key(self, exp: Exponent):
        """Key with key(a) > key(b) iff a > b in this order."""
        if self.kind == "grevlex":
            return (sum(exp), tuple(-e for e in reversed(exp)))
        if self.kind == "lex":
            return exp
        k = self.eliminated_count
        return (self.inner.sort_key(exp[:k]), self.inner.sort_key(exp[k:]))

    def heap_key(self, exp: Exponent):
        """Key with key(a) < key(b) iff a > b, for min-heap selection."""
        if self.kind == "grevlex":
            return (-sum(exp), tuple(reversed(exp)))
        if self.kind == "lex":
            return tuple(-e for e in exp)
        k = self.eliminated_count
        return (self.inner.heap_key(exp[:k]), self.inner.heap_key(exp[k:]))

    def __str__(self):
        if self.kind == "block":
            return f"block({self.eliminated_count}, {self.inner})"
        return self.kind


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")

def block_order(eliminated_count: int, inner: MonomialOrder = GREVLEX) -> MonomialOrder:
    return MonomialOrder("block", eliminated_count, inner)


def monomial_compare(order: MonomialOrder, a: Exponent, b: Exponent) -> int:
    """-1, 0, or 1 as a <, =, > b under `order`."""
    if len(a) != len(b):
        raise StructuralError("exponent tuples of different lengths")
    ka, kb = order.sort_key(a), order.sort_key(b)
    return (ka > kb) - (ka < kb)


# ---------------------------------------------------------------------------
# rings and polynomials


@dataclass(frozen=True)
class PolyRing:
    """A polynomial ring over QQ or ZZ/p with named variables and an order."""

    field: Field
    vars: tuple
    order: MonomialOrder = GREVLEX

    def __post_init__(self):
        if not self.vars:
            raise StructuralError("ring needs at least one variable")
        if len(set(self.vars)) != len(self.vars):
            raise StructuralError("duplicate variable names")
        if self.order.kind == "block" and not (
            0 < self.order.eliminated_count < len(self.vars)
        ):
            raise StructuralError("block size must split the variables")

    @property
    def nvars(self) -> int:
        return len(self.vars)

    def zero(self) -> "Polynomial":
        return Polynomial(self, ())

    def one(self) -> "Polynomial":
        return self.from_const(1)

    def from_const(self, c) -> "Polynomial":
        c = self.field.coerce(c)
        if c == self.field.zero():
            return self.zero()
        return Polynomial(self, (((0,) * self.nvars, c),))

    def gen(self, i: int) -> "Polynomial":
        exp = tuple(1 if j == i else 0 for j in range(self.nvars))
        return Polynomial(self, ((exp, self.field.one()),))

    def gens(self) -> list:
        return [self.gen(i) for i in range(self.nvars)]

    def monomial(self, exp: Exponent, coeff=1) -> "Polynomial":
        if len(exp) != self.nvars or any(e < 0 for e in exp):
            raise StructuralError(f"bad exponent tuple {exp}")
        c = self.field.coerce(coeff)
        if c == self.field.zero():
            return self.zero()
        return Polynomial(self, ((tuple(exp), c),))

    def poly(self, terms: Iterable) -> "Polynomial":
        """Build a polynomial from (exponent, coefficient) pairs."""
        acc = {}
        zero = self.field.zero()
        for exp, c in terms:
            exp = tuple(exp)
            if len(exp) != self.nvars or any(e < 0 for e in exp):
                raise StructuralError(f"bad exponent tuple {exp}")
            c = self.field.coerce(c)
            acc[exp] = self.field.add(acc.get(exp, zero), c)
        key = self.order.sort_key
        cleaned = sorted(
            ((e, c) for e, c in acc.items() if c != zero),
            key=lambda t: key(t[0]),
            reverse=True,
        )
        return Polynomial(self, tuple(cleaned))

    def with_order(self, order: MonomialOrder) -> "PolyRing":
        return PolyRing(self.field, self.vars, order)

    def var_index(self, name: str) -> int:
        try:
            return self.vars.index(name)
        except ValueError:
            raise StructuralError(f"no variable {name!r} in ring") from None

    def __str__(self):
        return f"{self.field}[{', '.join(self.vars)}]"


class Polynomial:
    """An immutable polynomial; `terms` is descending in the ring order."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: tuple):
        # Callers must pass normalized terms; use PolyRing.poly otherwise.
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "terms", terms)

    def __setattr__(self, *a):
        raise AttributeError("Polynomial is immutable")

    # -- structure

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_constant(self) -> bool:
        return not self.terms or mono_degree(self.terms[0][0]) == 0

    @property
    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def lt(self) -> Exponent:
        if not self.terms:
            raise StructuralError("zero polynomial has no leading term")
        return self.terms[0][0]

    def lc(self):
        if not self.terms:
            raise StructuralError("zero polynomial has no leading coefficient")
        return self.terms[0][1]

    def coeff_of(self, exp: Exponent):
        for e, c in self.terms:
            if e == exp:
                return c
        return self.ring.field.zero()

    def total_degree(self) -> int:
        """Maximum term degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(mono_degree(e) for e, _ in self.terms)

    @property
    def is_homogeneous(self) -> bool:
        if not self.terms:
            return True
        d = mono_degree(self.terms[0][0])
        return all(mono_degree(e) == d for e, _ in self.terms)

    # -- arithmetic

    def _coerce_other(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise StructuralError("mixed-ring arithmetic")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.from_const(other)
        return None

    def __add__(self, other):
        other = self._coerce_other(other)
        if other is None:
            return NotImplemented
        return self.ring.poly(list(self.terms) + list(other.terms))

    __radd__ = __add__

    def __neg__(self):
        neg = self.ring.field.neg
        return Polynomial(self.ring, tuple((e, neg(c)) for e, c in self.terms))

    def __sub__(self, other):
        other = self._coerce_other(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce_other(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce_other(other)
        if other is None:
            return NotImplemented
        if not self.terms or not other.terms:
            return self.ring.zero()
        field = self.ring.field
        acc = {}
        zero = field.zero()
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = mono_mul(e1, e2)
                acc[e] = field.add(acc.get(e, zero), field.mul(c1, c2))
        key = self.ring.order.sort_key
        cleaned = sorted(
            ((e, c) for e, c in acc.items() if c != zero),
            key=lambda t: key(t[0]),
            reverse=True,
        )
        return Polynomial(self.ring, tuple(cleaned))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise StructuralError("polynomial powers need a nonnegative integer")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        inv = self.ring.field.inv(self.lc())
        mul = self.ring.field.mul
        return Polynomial(self.ring, tuple((e, mul(c, inv)) for e, c in self.terms))

    def partial(self, i: int) -> "Polynomial":
        """Partial derivative with respect to variable i; QQ only."""
        if self.ring.field.char != 0:
            raise UnsupportedCharacteristicError(
                "partial derivatives are only supported in characteristic zero"
            )
        if not 0 <= i < self.ring.nvars:
            raise StructuralError(f"no variable of index {i}")
        out = []
        for e, c in self.terms:
            if e[i] == 0:
                continue
            dropped = e[:i] + (e[i] - 1,) + e[i + 1 :]
            out.append((dropped, c * e[i]))
        return self.ring.poly(out)

    # -- comparison and display

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.from_const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, self.terms))

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        return render_terms(self.ring, self.terms)

    def __repr__(self):
        return f"<{self.ring}: {self}>"


def render_terms(ring: PolyRing, terms) -> str:
    """Canonical text form: descending terms, explicit operators, no spaces
    inside monomials.  The zero polynomial renders as "0"."""
    if not terms:
        return "0"
    pieces = []
    for idx, (exp, coeff) in enumerate(terms):
        if isinstance(coeff, Fraction):
            negative = coeff < 0
            mag = -coeff if negative else coeff
            coeff_txt = str(mag)
        else:
            # Prime-field elements are canonical residues; never negated.
            negative = False
            coeff_txt = str(coeff)
        factors = []
        for name, e in zip(ring.vars, exp):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        if not factors:
            body = coeff_txt
        elif coeff_txt == "1":
            body = "*".join(factors)
        else:
            body = "*".join([coeff_txt] + factors)
        if idx == 0:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f"- {body}" if negative else f"+ {body}")
    return " ".join(pieces)
