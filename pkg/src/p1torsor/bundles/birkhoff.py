# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

from dataclasses import dataclass
from functools import cached_property, lru_cache

from ..algebra.field import Value
from ..algebra.laurent import LaurentPoly, Ring
from ..algebra.linalg import left_nullspace
from ..algebra.matrix import LaurentMatrix
from ..constants import Constants
from ..errors import InternalSearchFailureError
from ..logging import logger
from .bundle import SplittingType, TransitionBundle


@dataclass(frozen=True)
class BirkhoffWitness:
    """
    T = P · diag(t^D) · Q with P in GL_n(k[t]) and Q in GL_n(k[t^-1]), both
    with constant determinant

    P and Q trivialize E over the two charts, so the witness also shows that E
    restricted to either affine chart is trivial
    """

    p: LaurentMatrix
    splitting_type: SplittingType
    q: LaurentMatrix

    @cached_property
    def p_inverse(self) -> LaurentMatrix:
        return self.p.inverse()

    @cached_property
    def q_inverse(self) -> LaurentMatrix:
        return self.q.inverse()

    @property
    def diagonal(self) -> LaurentMatrix:
        return LaurentMatrix.diagonal(self.p.field, self.splitting_type.exponents)

    def product(self) -> LaurentMatrix:
        return self.p @ self.diagonal @ self.q

    def failures(self, transition: LaurentMatrix) -> list[str]:
        """Names of the witness invariants that do not hold exactly"""
        failures: list[str] = list()
        if not self.p.in_ring(Ring.POLY_IN_T):
            failures.append("P has entries outside k[t]")
        if not self.q.in_ring(Ring.POLY_IN_T_INV):
            failures.append("Q has entries outside k[t^-1]")
        if not self.p.determinant().in_ring(Ring.CONST_UNIT):
            failures.append("det P is not a nonzero constant")
        if not self.q.determinant().in_ring(Ring.CONST_UNIT):
            failures.append("det Q is not a nonzero constant")
        if self.product() != transition:
            failures.append("P · diag(t^D) · Q differs from T")
        return failures

    def verify(self, transition: LaurentMatrix) -> bool:
        return len(self.failures(transition)) == 0


def _leading_matrix(rows: list[list[LaurentPoly]], degrees: list[int]) -> list[list[Value]]:
    return [[entry.raw(degree) for entry in row] for row, degree in zip(rows, degrees, strict=True)]


def _row_degree(row: list[LaurentPoly]) -> int:
    return max(entry.max_exponent() for entry in row if not entry.is_zero())


def _reduce(transition: LaurentMatrix) -> tuple[LaurentMatrix, list[int]]:
    """
    Find P' in GL_n(k[t]) with constant determinant such that the rows of P' T
    have degrees δ_i and a nonsingular matrix of leading coefficients

    Each step replaces the row of highest degree in a leading-coefficient relation
    Σ c_j lead(r_j) = 0 by Σ (c_j / c_i) t^(δ_i - δ_j) r_j, which lowers Σ δ
    """
    field = transition.field
    n = transition.rows
    zero = LaurentPoly.zero(field)

    rows = transition.to_lists()
    frame = LaurentMatrix.identity(field, n).to_lists()
    degrees = [_row_degree(row) for row in rows]

    degree = transition.determinant().monomial_exponent()
    budget = sum(degrees) - degree + Constants.reduction_slack

    for step in range(budget + 1):
        relations = left_nullspace(field, _leading_matrix(rows, degrees))
        if len(relations) == 0:
            logger.debug(f"Reduced basis after {step} steps with row degrees {degrees}")
            return LaurentMatrix._wrap(field, frame), degrees

        relation = relations[0]
        pivot = max((i for i in range(n) if relation[i] != 0), key=lambda i: (degrees[i], -i))
        scale = field.inv(relation[pivot])

        new_row = list(rows[pivot])
        new_frame = list(frame[pivot])
        for j in range(n):
            if j == pivot or relation[j] == 0:
                continue
            factor = LaurentPoly.monomial(field, degrees[pivot] - degrees[j], field.mul(relation[j], scale))
            new_row = [a + factor * b for a, b in zip(new_row, rows[j], strict=True)]
            new_frame = [a + factor * b for a, b in zip(new_frame, frame[j], strict=True)]

        if all(entry == zero for entry in new_row):
            raise InternalSearchFailureError("Row reduction produced a zero row of an invertible matrix")

        rows[pivot] = new_row
        frame[pivot] = new_frame
        degrees[pivot] = _row_degree(new_row)

    raise InternalSearchFailureError(f"Row reduction did not terminate within {budget} steps")


@lru_cache(maxsize=1024)
def birkhoff_factorize(bundle: TransitionBundle) -> BirkhoffWitness:
    transition = bundle.transition
    field = transition.field
    n = transition.rows

    frame, degrees = _reduce(transition)

    order = sorted(range(n), key=lambda i: -degrees[i])
    permutation = LaurentMatrix.permutation(field, order)
    frame = permutation @ frame
    exponents = SplittingType(tuple(degrees[i] for i in order))

    q = LaurentMatrix.diagonal(field, [-a for a in exponents]) @ frame @ transition
    p = frame.inverse()

    witness = BirkhoffWitness(p, exponents, q)
    failures = witness.failures(transition)
    if len(failures) > 0:
        raise InternalSearchFailureError(f"Factorization of {transition!r} does not verify: {'; '.join(failures)}")

    return witness
