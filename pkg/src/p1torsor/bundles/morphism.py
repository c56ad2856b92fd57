# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

from dataclasses import dataclass

from ..algebra.laurent import LaurentPoly, Ring
from ..algebra.matrix import LaurentMatrix
from ..errors import DimensionMismatchError
from ..logging import logger
from .birkhoff import birkhoff_factorize
from .bundle import TransitionBundle
from .splitting import splitting_type


@dataclass(frozen=True)
class BundleMorphism:
    """
    A map E -> F given chart by chart: s0 ↦ M0 s0 over k[t] and s1 ↦ M1 s1 over
    k[t^-1]. The pair glues when M0 T_E = T_F M1
    """

    source: TransitionBundle
    target: TransitionBundle
    m0: LaurentMatrix
    m1: LaurentMatrix

    def __post_init__(self) -> None:
        shape = (self.target.rank, self.source.rank)
        for name, matrix in (("M0", self.m0), ("M1", self.m1)):
            if matrix.shape != shape:
                raise DimensionMismatchError(f"{name} has shape {matrix.shape}, expected {shape}")
            self.source.field.check(matrix.field)
        self.source.field.check(self.target.field)

    def is_zero(self) -> bool:
        return self.m0.is_zero() and self.m1.is_zero()


@dataclass(frozen=True)
class MorphismReport:
    valid: bool
    hn_preserved: bool


def is_valid_morphism(morphism: BundleMorphism) -> bool:
    return (
        morphism.m0.in_ring(Ring.POLY_IN_T)
        and morphism.m1.in_ring(Ring.POLY_IN_T_INV)
        and morphism.m0 @ morphism.source.transition == morphism.target.transition @ morphism.m1
    )


def diagonal_chart_matrix(morphism: BundleMorphism) -> LaurentMatrix:
    """The k[t] chart matrix P_F^-1 M0 P_E in the diagonalizing coordinates of source and target"""
    source = birkhoff_factorize(morphism.source)
    target = birkhoff_factorize(morphism.target)
    return target.p_inverse @ morphism.m0 @ source.p


def preserves_hn(morphism: BundleMorphism) -> bool:
    """Whether every block from a slope a coordinate to a slope b < a coordinate vanishes"""
    a = splitting_type(morphism.source)
    b = splitting_type(morphism.target)
    n0 = diagonal_chart_matrix(morphism)
    return all(n0[j, i].is_zero() for j in range(len(b)) for i in range(len(a)) if b[j] < a[i])


def validate_morphism(morphism: BundleMorphism) -> MorphismReport:
    valid = is_valid_morphism(morphism)
    hn_preserved = preserves_hn(morphism)
    logger.debug(f"Morphism report valid={valid} hn_preserved={hn_preserved}")
    return MorphismReport(valid=valid, hn_preserved=hn_preserved)


def hom_dimension(source: TransitionBundle, target: TransitionBundle) -> int:
    """dim Hom(E, F) = dim H^0(E^∨ ⊗ F) = Σ max(0, b_j - a_i + 1)"""
    source.field.check(target.field)
    a = splitting_type(source)
    b = splitting_type(target)
    return sum(max(0, b_j - a_i + 1) for a_i in a for b_j in b)


def hom_basis(source: TransitionBundle, target: TransitionBundle) -> list[BundleMorphism]:
    """
    A k-basis of Hom(E, F)

    In diagonal coordinates the maps O(a_i) -> O(b_j) are t^k for 0 ≤ k ≤ b_j - a_i,
    transported back through the two Birkhoff witnesses
    """
    source.field.check(target.field)
    field = source.field
    s = birkhoff_factorize(source)
    f = birkhoff_factorize(target)
    a = s.splitting_type
    b = f.splitting_type
    zero = LaurentPoly.zero(field)

    basis: list[BundleMorphism] = list()
    for j in range(len(b)):
        for i in range(len(a)):
            for k in range(b[j] - a[i] + 1):
                n0 = [[zero] * len(a) for _ in range(len(b))]
                n1 = [[zero] * len(a) for _ in range(len(b))]
                n0[j][i] = LaurentPoly.monomial(field, k)
                n1[j][i] = LaurentPoly.monomial(field, k + a[i] - b[j])
                m0 = f.p @ LaurentMatrix(field, n0) @ s.p_inverse
                m1 = f.q_inverse @ LaurentMatrix(field, n1) @ s.q
                basis.append(BundleMorphism(source, target, m0, m1))
    return basis


def compose_morphisms(second: BundleMorphism, first: BundleMorphism) -> BundleMorphism:
    """second ∘ first"""
    if first.target != second.source:
        raise DimensionMismatchError("The target of the first morphism is not the source of the second")
    return BundleMorphism(first.source, second.target, second.m0 @ first.m0, second.m1 @ first.m1)


def identity_morphism(bundle: TransitionBundle) -> BundleMorphism:
    identity = LaurentMatrix.identity(bundle.field, bundle.rank)
    return BundleMorphism(bundle, bundle, identity, identity)
