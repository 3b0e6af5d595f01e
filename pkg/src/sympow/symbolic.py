"""Symbolic powers via colon formulas, and the checks built on them.

The central computation is I^(m) = I^m : F_c(I)^(m-1), with a
saturation variant that also reports the exponent where the chain
stabilizes.  Every result carries the assumption report: when the
hypotheses behind the formula could not be confirmed the ideal is still
returned, but labeled as a formula value rather than a symbolic power.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import List, Optional, Tuple

from .errors import (
    PreconditionError,
    StructuralError,
    UnsupportedCharacteristicError,
    WitnessError,
)
from .fitting import AssumptionReport, check_assumptions, fitting_ideal
from .hilbert import graded_quotient_mu, initial_degree, krull_invariants, multiplicity
from .ideals import Ideal, unit_ideal
from .rings import Polynomial, monomials_of_degree

COLON_POWER = "colon_power"
SATURATION = "saturation"


@dataclass(frozen=True)
class SymbolicResult:
    """Outcome of a symbolic-power computation.

    `semantics` is "symbolic_power" when the assumption report came back
    satisfied and the ideal is therefore certifiably I^(m); otherwise it
    is "formula_value": the same colon was computed, but nothing here
    promises it equals the symbolic power.
    """

    ideal: Ideal
    strategy: str
    exponent_used: int
    assumptions: AssumptionReport
    semantics: str


def _attested(kwargs_unmixed: bool, kwargs_radical: bool, ideal: Ideal):
    return check_assumptions(
        ideal, attest_unmixed=kwargs_unmixed, attest_radical=kwargs_radical
    )


def symbolic_power(
    ideal: Ideal,
    m: int,
    strategy: str = COLON_POWER,
    attest_unmixed: bool = False,
    attest_radical: bool = False,
) -> SymbolicResult:
    """Compute I^(m) by colon against the c-th Fitting ideal.

    With the default strategy the exponent is m - 1, which suffices in
    every certified situation; "saturation" instead colons until the
    chain stabilizes and reports the exponent it took.  m = 0 and m = 1
    are exact regardless of any assumptions.
    """
    if m < 0:
        raise StructuralError("symbolic powers need a nonnegative exponent")
    if strategy not in (COLON_POWER, SATURATION):
        raise StructuralError(f"unknown strategy '{strategy}'")
    assumptions = _attested(attest_unmixed, attest_radical, ideal)
    if m == 0:
        return SymbolicResult(
            unit_ideal(ideal.ring), strategy, 0, assumptions, "symbolic_power"
        )
    if m == 1:
        return SymbolicResult(ideal, strategy, 0, assumptions, "symbolic_power")
    c = assumptions.height_c
    if c is None:
        raise PreconditionError(
            "the Fitting index needs a height, which this ideal does not expose"
        )
    fc = fitting_ideal(ideal, c)
    ordinary = ideal.power(m)
    if strategy == COLON_POWER:
        exponent = m - 1
        result = ordinary.colon(fc, power=exponent)
    else:
        result, exponent = ordinary.saturate(fc)
    semantics = "symbolic_power" if assumptions.satisfied else "formula_value"
    return SymbolicResult(result, strategy, exponent, assumptions, semantics)


def equals_ordinary(
    ideal: Ideal,
    m: int,
    strategy: str = COLON_POWER,
    attest_unmixed: bool = False,
    attest_radical: bool = False,
) -> bool:
    """Whether I^(m) coincides with I^m."""
    sp = symbolic_power(
        ideal,
        m,
        strategy=strategy,
        attest_unmixed=attest_unmixed,
        attest_radical=attest_radical,
    )
    return sp.ideal.equal(ideal.power(m))


@dataclass(frozen=True)
class CertificateResult:
    verdict: str  # certified_equal | not_equal | inconclusive
    lhs_multiplicity: Optional[int]
    required: Optional[int]
    binom_factor: Optional[int]
    reason: Optional[str] = None

    def as_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "lhs_multiplicity": self.lhs_multiplicity,
            "required": self.required,
            "binom_factor": self.binom_factor,
            "reason": self.reason,
        }


def multiplicity_certificate(
    ideal: Ideal,
    m: int,
    candidate: Optional[Ideal] = None,
    strategy: str = COLON_POWER,
    attest_unmixed: bool = False,
    attest_radical: bool = False,
) -> CertificateResult:
    """Certify a candidate for I^(m) through its multiplicity.

    For an unmixed ideal of height c the symbolic power has multiplicity
    e(S/I) * binom(c+m-1, c); a candidate inside I^(m) of the same
    height hits that bound exactly when its unmixed part is I^(m).
    Multiplicity cannot see lower-dimensional components, so
    certified_equal asserts equality of the unmixed part; it is equality
    on the nose for unmixed candidates (and whenever the bound fails,
    not_equal rules the candidate out outright).  Whenever a hypothesis
    cannot be confirmed the verdict degrades to inconclusive and the
    reason says which one.
    """
    if m < 1:
        raise StructuralError("certificates need a positive exponent")
    sp = symbolic_power(
        ideal,
        m,
        strategy=strategy,
        attest_unmixed=attest_unmixed,
        attest_radical=attest_radical,
    )
    c = sp.assumptions.height_c
    binom_factor = comb(c + m - 1, c)
    required = multiplicity(ideal) * binom_factor

    def inconclusive(reason: str) -> CertificateResult:
        return CertificateResult("inconclusive", None, required, binom_factor, reason)

    if sp.semantics != "symbolic_power":
        return inconclusive(
            "the formula hypotheses were not verified, so the reference ideal "
            "is only a formula value"
        )
    target = sp.ideal if candidate is None else candidate
    if candidate is not None and not sp.ideal.contains_ideal(candidate):
        return inconclusive("the candidate is not contained in the symbolic power")
    try:
        _, height = krull_invariants(target)
    except StructuralError:
        return inconclusive("the candidate is the unit ideal")
    if height != c:
        return inconclusive(
            f"the candidate has height {height}, the base ideal height {c}"
        )
    lhs = multiplicity(target)
    if lhs == required:
        verdict = "certified_equal"
    elif lhs > required:
        verdict = "not_equal"
    else:
        return CertificateResult(
            "inconclusive",
            lhs,
            required,
            binom_factor,
            "multiplicity fell below the certified bound, so a precondition "
            "must have failed",
        )
    return CertificateResult(verdict, lhs, required, binom_factor)


def annihilator_quotient(
    ideal: Ideal,
    m: int,
    strategy: str = COLON_POWER,
    attest_unmixed: bool = False,
    attest_radical: bool = False,
) -> Ideal:
    """The annihilator of I^(m)/I^m, as the colon I^m : I^(m)."""
    sp = symbolic_power(
        ideal,
        m,
        strategy=strategy,
        attest_unmixed=attest_unmixed,
        attest_radical=attest_radical,
    )
    return ideal.power(m).colon(sp.ideal)


@dataclass(frozen=True)
class ExponentFormulaResult:
    passed: bool
    exponent: int
    annihilator: Ideal


def em_formula_check(
    ideal: Ideal,
    m: int,
    attest_unmixed: bool = False,
    attest_radical: bool = False,
    force: bool = False,
) -> ExponentFormulaResult:
    """Check the predicted annihilator exponent for height N-1 ideals.

    For a radical ideal of quadrics in N variables, of height N - 1 and
    with binom(N, 2) minimal generators, the annihilator of I^(m)/I^m is
    expected to be the maximal ideal to the power floor(m(N-2)/(N-1)).
    Precondition failures raise unless `force` pushes past them.
    """
    ring = ideal.ring
    n = ring.nvars
    report = _attested(attest_unmixed, attest_radical, ideal)
    problems: List[str] = []
    if report.height_c != n - 1:
        problems.append(f"height {report.height_c} instead of {n - 1}")
    if report.mu != comb(n, 2):
        problems.append(f"{report.mu} minimal generators instead of {comb(n, 2)}")
    if any(g.total_degree() != 2 for g in ideal.nonzero_gens):
        problems.append("generators are not all quadrics")
    if report.radical_status not in ("verified_monomial_squarefree", "attested"):
        problems.append("radicality is neither verified nor attested")
    if problems and not force:
        raise PreconditionError(
            "the exponent formula does not apply: " + "; ".join(problems)
        )
    ann = annihilator_quotient(
        ideal,
        m,
        attest_unmixed=attest_unmixed,
        attest_radical=attest_radical,
    )
    exponent = (m * (n - 2)) // (n - 1)
    if exponent == 0:
        expected = unit_ideal(ring)
    else:
        expected = Ideal(ring, [ring.monomial(e) for e in monomials_of_degree(n, exponent)])
    return ExponentFormulaResult(ann.equal(expected), exponent, ann)


@dataclass(frozen=True)
class AlphaBoundResult:
    m: int
    t0: int
    alpha_base: int
    alpha_fitting: int
    bound: int

    def as_dict(self) -> dict:
        return {
            "m": self.m,
            "t0": self.t0,
            "alpha_base": self.alpha_base,
            "alpha_fitting": self.alpha_fitting,
            "bound": self.bound,
        }


def alpha_lower_bound(ideal: Ideal, m: int, t0: Optional[int] = None) -> AlphaBoundResult:
    """Lower bound m*alpha(I) - t0*alpha(F_c) for the initial degree of I^(m).

    The bound is honest for any t0 such that I^m : F_c^t0 already equals
    the symbolic power; the default t0 = m - 1 always qualifies under
    the usual hypotheses, smaller values sharpen the bound when the
    caller knows the colon stabilizes earlier.  A unit Fitting ideal
    contributes alpha = 0.
    """
    if m < 1:
        raise StructuralError("the bound needs a positive exponent")
    if t0 is None:
        t0 = m - 1
    _, height = krull_invariants(ideal)
    fc = fitting_ideal(ideal, height)
    alpha_base = initial_degree(ideal)
    alpha_fitting = 0 if fc.is_unit else initial_degree(fc)
    return AlphaBoundResult(m, t0, alpha_base, alpha_fitting, m * alpha_base - t0 * alpha_fitting)


def symbolic_defect(
    ideal: Ideal,
    m: int,
    strategy: str = COLON_POWER,
    attest_unmixed: bool = False,
    attest_radical: bool = False,
) -> Tuple[int, List[Polynomial]]:
    """Minimal generator count of I^(m)/I^m, with witness lifts."""
    sp = symbolic_power(
        ideal,
        m,
        strategy=strategy,
        attest_unmixed=attest_unmixed,
        attest_radical=attest_radical,
    )
    return graded_quotient_mu(sp.ideal, ideal.power(m))


@dataclass(frozen=True)
class ConjectureReport:
    """Evidence for the Jacobian-recovery question at a fixed power.

    `radical_equal` records whether the radical of the summed Jacobian
    ideals of the witnesses agrees with the radical of I, and
    `containment_zn` whether each witness has all partials inside I.
    """

    sdefect: int
    witnesses: Tuple[Polynomial, ...]
    jacobian_sum: Ideal
    radical_equal: bool
    containment_zn: Tuple[bool, ...]


def conjecture_check(
    ideal: Ideal,
    m: int,
    witnesses: Optional[List[Polynomial]] = None,
    strategy: str = COLON_POWER,
    attest_unmixed: bool = False,
    attest_radical: bool = False,
) -> ConjectureReport:
    """Probe whether Jacobians of symbolic-defect witnesses recover I.

    Default witnesses are the graded lifts behind the symbolic defect;
    explicitly provided ones are used exactly as given, after checking
    that they lie in I^(m) and that together with I^m they generate it.
    """
    if ideal.ring.field.char != 0:
        raise UnsupportedCharacteristicError(
            "Jacobian checks are only meaningful in characteristic zero"
        )
    sp = symbolic_power(
        ideal,
        m,
        strategy=strategy,
        attest_unmixed=attest_unmixed,
        attest_radical=attest_radical,
    )
    ordinary = ideal.power(m)
    sdefect, lifted = graded_quotient_mu(sp.ideal, ordinary)
    if witnesses is None:
        chosen = list(lifted)
    else:
        chosen = list(witnesses)
        for w in chosen:
            if not sp.ideal.contains(w):
                raise WitnessError(f"witness {w} lies outside the symbolic power")
        rebuilt = Ideal(
            ideal.ring, list(ordinary.nonzero_gens) + [w for w in chosen]
        )
        if not rebuilt.equal(sp.ideal):
            _, missing = graded_quotient_mu(sp.ideal, rebuilt)
            degrees = sorted(w.total_degree() for w in missing)
            raise WitnessError(
                "witnesses do not generate the quotient; deficient in degrees "
                + ", ".join(str(d) for d in degrees)
            )

    ring = ideal.ring
    partials = [
        w.partial(i) for w in chosen for i in range(ring.nvars)
    ]
    jacobian_sum = Ideal(ring, [p for p in partials if not p.is_zero])
    radical_equal = all(
        jacobian_sum.radical_contains(g) for g in ideal.nonzero_gens
    ) and all(ideal.radical_contains(p) for p in jacobian_sum.nonzero_gens)
    containment = tuple(
        all(ideal.contains(w.partial(i)) for i in range(ring.nvars)) for w in chosen
    )
    return ConjectureReport(
        sdefect=sdefect,
        witnesses=tuple(chosen),
        jacobian_sum=jacobian_sum,
        radical_equal=radical_equal,
        containment_zn=containment,
    )
