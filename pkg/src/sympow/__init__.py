"""Exact symbolic powers of polynomial ideals.

I^(m) is computed as a colon of the ordinary power against a power of
the Fitting ideal F_c(I) of a presentation, or against its saturation.
On top of that sit a multiplicity certificate, annihilators of
I^(m)/I^m, symbolic defects with graded witnesses, initial-degree
bounds and a Jacobian recovery check.
"""

from .errors import (
    ComputationTimeout,
    HomogeneityError,
    InternalError,
    ParseError,
    PreconditionError,
    StructuralError,
    SympowError,
    UnsupportedCharacteristicError,
    WitnessError,
)
from .fitting import (
    AssumptionReport,
    PolyMatrix,
    check_assumptions,
    fitting_ideal,
    syzygy_matrix,
)
from .groebner import reduced_groebner_basis
from .hilbert import (
    graded_quotient_mu,
    hilbert_series,
    initial_degree,
    krull_invariants,
    multiplicity,
)
from .ideals import Ideal
from .monomial import minimal_primes_monomial, symbolic_power_monomial
from .parser import parse_polynomial, parse_session, render_poly
from .rings import GREVLEX, LEX, PolyRing, Polynomial, PrimeField, Rationals
from .symbolic import (
    COLON_POWER,
    SATURATION,
    alpha_lower_bound,
    annihilator_quotient,
    conjecture_check,
    em_formula_check,
    equals_ordinary,
    multiplicity_certificate,
    symbolic_defect,
    symbolic_power,
)

__version__ = "0.1.0"

__all__ = [
    "AssumptionReport",
    "COLON_POWER",
    "ComputationTimeout",
    "GREVLEX",
    "HomogeneityError",
    "Ideal",
    "InternalError",
    "LEX",
    "ParseError",
    "PolyMatrix",
    "PolyRing",
    "Polynomial",
    "PreconditionError",
    "PrimeField",
    "Rationals",
    "SATURATION",
    "StructuralError",
    "SympowError",
    "UnsupportedCharacteristicError",
    "WitnessError",
    "alpha_lower_bound",
    "annihilator_quotient",
    "check_assumptions",
    "conjecture_check",
    "em_formula_check",
    "equals_ordinary",
    "fitting_ideal",
    "graded_quotient_mu",
    "hilbert_series",
    "initial_degree",
    "krull_invariants",
    "minimal_primes_monomial",
    "multiplicity",
    "multiplicity_certificate",
    "parse_polynomial",
    "parse_session",
    "reduced_groebner_basis",
    "render_poly",
    "symbolic_defect",
    "symbolic_power",
    "symbolic_power_monomial",
    "syzygy_matrix",
    "__version__",
]
