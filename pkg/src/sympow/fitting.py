"""Presentation matrices and Fitting ideals of polynomial ideals.

An ideal I with generators g_1..g_mu is presented by the matrix whose
columns generate the syzygies of those generators; the j-th Fitting
ideal is then the ideal of (mu - j)-minors.  Fitting ideals do not
depend on the chosen generators, which the test suite exercises, but the
code still minimalizes homogeneous generating sets first: it keeps the
matrices small and makes mu itself part of the report.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Optional, Tuple

from .errors import HomogeneityError, StructuralError
from .groebner import extend_basis, module_groebner, normal_form, reduced_groebner_basis
from .hilbert import graded_quotient_mu, krull_invariants
from .ideals import Ideal, unit_ideal
from .monomial import MonomialIdeal, _minimal_covers
from .rings import PolyRing, Polynomial
from .timeout import checkpoint


@dataclass(frozen=True)
class PolyMatrix:
    """Immutable matrix of polynomials over a fixed ring."""

    ring: PolyRing
    rows: Tuple[Tuple[Polynomial, ...], ...]

    def __post_init__(self):
        widths = {len(r) for r in self.rows}
        if len(widths) > 1:
            raise StructuralError("matrix rows must share a length")
        for row in self.rows:
            for entry in row:
                if entry.ring != self.ring:
                    raise StructuralError("matrix entries must live in the matrix ring")

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def entry(self, i: int, j: int) -> Polynomial:
        return self.rows[i][j]

    def minor(self, row_idx, col_idx, _memo: Optional[dict] = None) -> Polynomial:
        """Determinant of the submatrix on the given rows and columns.

        A shared memo makes overlapping minors cheap; expansion picks the
        row with the fewest nonzero entries inside the submatrix.
        """
        row_idx = tuple(row_idx)
        col_idx = tuple(col_idx)
        if len(row_idx) != len(col_idx):
            raise StructuralError("minors need as many rows as columns")
        if _memo is None:
            _memo = {}
        return self._det(row_idx, col_idx, _memo)

    def _det(self, rows: tuple, cols: tuple, memo: dict) -> Polynomial:
        if not rows:
            return self.ring.one()
        key = (rows, cols)
        hit = memo.get(key)
        if hit is not None:
            return hit
        checkpoint()
        ring = self.ring
        if len(rows) == 1:
            val = self.rows[rows[0]][cols[0]]
        else:
            weights = [
                sum(1 for j in cols if not self.rows[i][j].is_zero) for i in rows
            ]
            k = weights.index(min(weights))
            i = rows[k]
            rest = rows[:k] + rows[k + 1 :]
            val = ring.zero()
            sign = 1 if k % 2 == 0 else -1
            for pos, j in enumerate(cols):
                entry = self.rows[i][j]
                if not entry.is_zero:
                    sub = self._det(rest, cols[:pos] + cols[pos + 1 :], memo)
                    term = entry * sub
                    val = val + term if sign > 0 else val - term
                sign = -sign
        memo[key] = val
        return val

    def minor_ideal(self, size: int) -> Ideal:
        """Ideal generated by all size-by-size minors."""
        if size <= 0:
            return unit_ideal(self.ring)
        if size > min(self.nrows, self.ncols):
            return Ideal(self.ring, [])
        memo: dict = {}
        gens = [
            self._det(r, c, memo)
            for r in combinations(range(self.nrows), size)
            for c in combinations(range(self.ncols), size)
        ]
        return Ideal(self.ring, gens)


@dataclass(frozen=True)
class Presentation:
    """Generators of an ideal together with a matrix of their syzygies."""

    generators: Tuple[Polynomial, ...]
    matrix: PolyMatrix


_presentations: Dict[str, Presentation] = {}
_fitting_cache: Dict[Tuple[str, int], Ideal] = {}


def _minimal_generators(ideal: Ideal) -> List[Polynomial]:
    try:
        _, witnesses = graded_quotient_mu(ideal, Ideal(ideal.ring, []))
        return witnesses
    except HomogeneityError:
        # Fitting ideals are presentation independent, so a non-minimal
        # generating set only costs matrix size.
        seen = set()
        gens = []
        for g in ideal.nonzero_gens:
            if g.terms not in seen:
                seen.add(g.terms)
                gens.append(g)
        return gens


def syzygy_matrix(ideal: Ideal, generators=None) -> Presentation:
    """Present the ideal by the syzygies of a generating set.

    The default takes a minimal generating set; passing `generators`
    presents the same ideal through those elements instead, which is how
    the invariance of the Fitting ideals gets exercised.  The syzygies
    are extracted from a position-over-term module basis of the vectors
    (g_i, e_i): the basis elements whose function component vanishes
    generate the whole syzygy module and become the columns.
    """
    ring = ideal.ring
    key = None
    if generators is None:
        key = ideal.gb.digest
        hit = _presentations.get(key)
        if hit is not None:
            return hit
        gens = _minimal_generators(ideal)
    else:
        gens = [ring.poly(list(g.terms)) for g in generators if not g.is_zero]
    mu = len(gens)
    vectors = []
    for i, g in enumerate(gens):
        vec = [ring.zero()] * (1 + mu)
        vec[0] = g
        vec[1 + i] = ring.one()
        vectors.append(vec)
    columns = []
    for element in module_groebner(ring, vectors, 1 + mu):
        if element[0].is_zero:
            columns.append(element[1:])
    rows = tuple(
        tuple(col[i] for col in columns) for i in range(mu)
    )
    pres = Presentation(tuple(gens), PolyMatrix(ring, rows))
    if key is not None:
        _presentations[key] = pres
    return pres


def fitting_ideal(ideal: Ideal, j: int, generators=None) -> Ideal:
    """j-th Fitting ideal of the ideal, as the (mu - j)-minors of its
    presentation matrix.

    Minors are folded into a reduced basis as they are produced, so most
    of them die quickly against the part already accumulated.  The
    result does not depend on `generators`; the parameter exists so that
    independence can be checked against deliberately redundant input.
    """
    if j < 0:
        raise StructuralError("Fitting indices start at zero")
    key = None
    if generators is None:
        key = (ideal.gb.digest, j)
        hit = _fitting_cache.get(key)
        if hit is not None:
            return hit
    pres = syzygy_matrix(ideal, generators)
    mu = len(pres.generators)
    size = mu - j
    result = None
    if size <= 0:
        result = unit_ideal(ideal.ring)
    elif size > pres.matrix.ncols:
        result = Ideal(ideal.ring, [])
    if result is not None:
        if key is not None:
            _fitting_cache[key] = result
        return result

    ring = ideal.ring
    memo: dict = {}
    acc = None
    for r in combinations(range(mu), size):
        for c in combinations(range(pres.matrix.ncols), size):
            det = pres.matrix._det(r, c, memo)
            if det.is_zero:
                continue
            if acc is None:
                acc = reduced_groebner_basis(ring, [det])
            else:
                rem = normal_form(det, acc)
                if not rem.is_zero:
                    acc = extend_basis(acc, [rem])
            if acc.is_unit_ideal:
                break
        if acc is not None and acc.is_unit_ideal:
            break
    result = Ideal(ring, []) if acc is None else Ideal._from_basis(acc)
    if key is not None:
        _fitting_cache[key] = result
    return result


@dataclass(frozen=True)
class AssumptionReport:
    """What the multiplicity and colon formulas assume, and what of that
    this run could actually confirm.

    `generically_ci_proxy` is the computable stand-in for "complete
    intersection at every minimal prime": it holds when the height of
    F_c(I) exceeds c.  The two status fields take values

      unmixed_status: verified_monomial | failed_monomial | attested | unverified
      radical_status: verified_monomial_squarefree | attested | unverified

    where attestations come from the caller and never override a
    computed verdict.
    """

    height_c: Optional[int]
    mu: int
    fitting_height: Optional[int]
    generically_ci_proxy: bool
    unmixed_status: str
    radical_status: str

    @property
    def satisfied(self) -> bool:
        return (
            self.generically_ci_proxy
            and self.unmixed_status in ("verified_monomial", "attested")
            and self.radical_status in ("verified_monomial_squarefree", "attested")
        )

    def as_dict(self) -> dict:
        return {
            "height_c": self.height_c,
            "mu": self.mu,
            "fitting_height": self.fitting_height,
            "generically_ci_proxy": self.generically_ci_proxy,
            "unmixed_status": self.unmixed_status,
            "radical_status": self.radical_status,
            "satisfied": self.satisfied,
        }


def check_assumptions(
    ideal: Ideal,
    attest_unmixed: bool = False,
    attest_radical: bool = False,
) -> AssumptionReport:
    """Collect evidence for the formula hypotheses without ever blocking.

    Monomial input gets its minimal primes checked combinatorially; a
    height mismatch among them falsifies unmixedness outright.  Anything
    the run cannot decide is reported as unverified, or as attested when
    the caller vouched for it.
    """
    is_monomial = all(g.is_monomial for g in ideal.nonzero_gens)
    squarefree = False
    covers = None
    if is_monomial and not ideal.is_zero:
        mono = MonomialIdeal.from_ideal(ideal)
        squarefree = mono.is_squarefree()
        supports = mono.supports()
        if supports and all(supports):
            covers = _minimal_covers(supports, ideal.ring.nvars)

    if covers is not None and len({len(c) for c in covers}) > 1:
        unmixed_status = "failed_monomial"
    elif covers is not None and squarefree:
        unmixed_status = "verified_monomial"
    elif attest_unmixed:
        unmixed_status = "attested"
    else:
        unmixed_status = "unverified"

    if is_monomial and squarefree and not ideal.is_zero:
        radical_status = "verified_monomial_squarefree"
    elif attest_radical:
        radical_status = "attested"
    else:
        radical_status = "unverified"

    height: Optional[int] = None
    try:
        _, height = krull_invariants(ideal)
    except (HomogeneityError, StructuralError):
        pass

    pres = syzygy_matrix(ideal)
    mu = len(pres.generators)

    fitting_height: Optional[int] = None
    proxy = False
    if height is not None:
        fc = fitting_ideal(ideal, height)
        if fc.is_unit:
            # Empty vanishing locus; one past the maximal height.
            fitting_height = ideal.ring.nvars + 1
        elif fc.is_zero:
            fitting_height = 0
        else:
            try:
                _, fitting_height = krull_invariants(fc)
            except HomogeneityError:
                fitting_height = None
        if fitting_height is not None:
            proxy = fitting_height >= height + 1

    return AssumptionReport(
        height_c=height,
        mu=mu,
        fitting_height=fitting_height,
        generically_ci_proxy=proxy,
        unmixed_status=unmixed_status,
        radical_status=radical_status,
    )
