"""Hilbert numerators of monomial ideals via pivot recursion.

For a monomial ideal L in n variables, `numerator` returns the integer
coefficient list of K(t) with HS(S/L) = K(t) / (1-t)^n.  The recursion
splits on a variable occurring in the most generators:

    K(L) = K(L + (x_p)) + t * K(L : x_p)

with pairwise-coprime generator sets (complete intersections) as the base
case.  Everything here works on bare exponent tuples.
"""

from __future__ import annotations

from .rings import mono_divides
from .timeout import checkpoint


def poly_add(a: list, b: list) -> list:
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return out

def poly_sub(a: list, b: list) -> list:
    return poly_add(a, [-c for c in b])

def poly_mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, c in enumerate(a):
        if c:
            for j, d in enumerate(b):
                out[i + j] += c * d
    return out

def poly_shift(a: list, k: int) -> list:
    return [0] * k + list(a)

def poly_trim(a: list) -> list:
    while a and a[-1] == 0:
        a = a[:-1]
    return list(a)

def poly_eval_one(a: list) -> int:
    return sum(a)


def divide_one_minus_t(a: list):
    """Exact quotient a / (1-t), or None when not divisible."""
    if poly_eval_one(a) != 0:
        return None
    out = []
    carry = 0
    for c in a:
        carry += c
        out.append(carry)
    # the final running sum is a(1) = 0, so drop the trailing zero
    return poly_trim(out[:-1])


def minimalize(exps) -> list:
    """Minimal generating set of the monomial ideal spanned by `exps`."""
    distinct = sorted(set(exps), key=lambda e: (sum(e), e))
    kept = []
    for e in distinct:
        if not any(mono_divides(k, e) for k in kept):
            kept.append(e)
    return kept


def _pairwise_coprime(gens) -> bool:
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            if any(a and b for a, b in zip(gens[i], gens[j])):
                return False
    return True


def numerator(exps, nvars: int, _memo=None) -> list:
    """Coefficients of K(t) for the monomial ideal generated by `exps`."""
    if _memo is None:
        _memo = {}
    gens = minimalize(exps)
    if not gens:
        return [1]
    if any(sum(e) == 0 for e in gens):
        return []
    key = tuple(gens)
    hit = _memo.get(key)
    if hit is not None:
        return hit
    checkpoint()
    if _pairwise_coprime(gens):
        out = [1]
        for e in gens:
            out = poly_mul(out, poly_sub([1], poly_shift([1], sum(e))))
    else:
        counts = [0] * nvars
        for e in gens:
            for i, a in enumerate(e):
                if a:
                    counts[i] += 1
        p = counts.index(max(counts))
        plus = [e for e in gens if e[p] == 0]
        plus.append(tuple(1 if i == p else 0 for i in range(nvars)))
        colon = [e[:p] + (max(e[p] - 1, 0),) + e[p + 1 :] for e in gens]
        out = poly_add(
            numerator(plus, nvars, _memo),
            poly_shift(numerator(colon, nvars, _memo), 1),
        )
    out = poly_trim(out)
    _memo[key] = out
    return out
