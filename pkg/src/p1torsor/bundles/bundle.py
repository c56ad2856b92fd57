# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from ..algebra.field import FieldDescriptor
from ..algebra.laurent import LaurentPoly, Ring
from ..algebra.matrix import LaurentMatrix
from ..errors import DimensionMismatchError, InternalSearchFailureError, NotABundleError


@dataclass(frozen=True)
class TransitionBundle:
    """
    A vector bundle on the projective line, glued from trivial bundles on
    Spec k[t] and Spec k[t^-1] by s0 = T s1 over the overlap

    With this convention diag(t^a) is O(a)
    """

    transition: LaurentMatrix

    @property
    def rank(self) -> int:
        return self.transition.rows

    @property
    def field(self) -> FieldDescriptor:
        return self.transition.field

    @property
    def determinant(self) -> LaurentPoly:
        return self.transition.determinant()

    @property
    def degree(self) -> int:
        return self.determinant.monomial_exponent()

    @property
    def slope(self) -> Fraction:
        return Fraction(self.degree, self.rank)

    def __str__(self) -> str:
        return f"TransitionBundle(rank={self.rank}, field={self.field}, transition={self.transition.to_strings()})"


def make_bundle(transition: LaurentMatrix) -> TransitionBundle:
    if not transition.is_square:
        raise DimensionMismatchError(f"Transition matrix must be square, got {transition.rows}×{transition.cols}")
    determinant = transition.determinant()
    if not determinant.in_ring(Ring.MONOMIAL_UNIT):
        raise NotABundleError(f'Transition determinant "{determinant}" is not a unit of k[t, t^-1]')
    return TransitionBundle(transition)


def line_bundle(field: FieldDescriptor, a: int) -> TransitionBundle:
    """O(a)"""
    return TransitionBundle(LaurentMatrix.diagonal(field, [a]))


def split_bundle(field: FieldDescriptor, exponents: Sequence[int]) -> TransitionBundle:
    """O(a_1) ⊕ ... ⊕ O(a_n)"""
    return TransitionBundle(LaurentMatrix.diagonal(field, exponents))


def twist(bundle: TransitionBundle, m: int) -> TransitionBundle:
    """E ⊗ O(m)"""
    return TransitionBundle(bundle.transition.shift(m))


@dataclass(frozen=True)
class SplittingType:
    """Exponents a_1 ≥ ... ≥ a_n with E ≅ O(a_1) ⊕ ... ⊕ O(a_n)"""

    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        exponents = tuple(int(a) for a in self.exponents)
        if len(exponents) == 0:
            raise DimensionMismatchError("A splitting type needs at least one exponent")
        if any(a < b for a, b in zip(exponents, exponents[1:])):
            raise ValueError(f"Splitting type {exponents} is not weakly decreasing")
        object.__setattr__(self, "exponents", exponents)

    @classmethod
    def from_unsorted(cls, exponents: Sequence[int]) -> "SplittingType":
        return cls(tuple(sorted(exponents, reverse=True)))

    def __iter__(self) -> Iterator[int]:
        return iter(self.exponents)

    def __len__(self) -> int:
        return len(self.exponents)

    def __getitem__(self, index: int) -> int:
        return self.exponents[index]

    @property
    def rank(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def multiplicities(self) -> Counter[int]:
        return Counter(self.exponents)

    def is_semistable(self) -> bool:
        return self.exponents[0] == self.exponents[-1]

    def h0(self, m: int = 0) -> int:
        """dim H^0(E(m))"""
        return sum(max(0, a + m + 1) for a in self.exponents)

    def h1(self, m: int = 0) -> int:
        """dim H^1(E(m))"""
        return sum(max(0, -a - m - 1) for a in self.exponents)

    def __str__(self) -> str:
        return f"({', '.join(str(a) for a in self.exponents)})"


def check_splitting_type(bundle: TransitionBundle, splitting_type: SplittingType) -> None:
    """Rank and degree bookkeeping that every splitting type must satisfy"""
    if splitting_type.rank != bundle.rank:
        raise InternalSearchFailureError(f"Splitting type {splitting_type} does not have rank {bundle.rank}")
    if splitting_type.degree != bundle.degree:
        raise InternalSearchFailureError(f"Splitting type {splitting_type} does not have degree {bundle.degree}")
