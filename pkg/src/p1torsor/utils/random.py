# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

import numpy as np

from ..algebra.field import FieldDescriptor
from ..algebra.laurent import LaurentPoly
from ..algebra.matrix import LaurentMatrix
from ..bundles.bundle import SplittingType, TransitionBundle
from ..graded.space import GradedVectorSpace
from ..torsors.cocharacter import Cocharacter, GroupFamily, GroupTag


def random_unimodular(
    field: FieldDescriptor,
    rng: np.random.Generator,
    n: int,
    sign: int = 1,
    degree: int = 1,
    steps: int | None = None,
) -> LaurentMatrix:
    """
    A random element of GL_n(k[t]) (sign = 1) or GL_n(k[t^-1]) (sign = -1) with
    constant determinant, as a product of a permutation, a diagonal of
    constants and elementary matrices I + c t^(sign k) E_ij
    """
    if steps is None:
        steps = n
    order = [int(i) for i in rng.permutation(n)]
    constants = [field.random_element(rng, nonzero=True) for _ in range(n)]
    matrix = LaurentMatrix.permutation(field, order) @ LaurentMatrix.diagonal(field, [0] * n, constants)

    if n == 1:
        return matrix

    for _ in range(steps):
        i, j = (int(x) for x in rng.choice(n, size=2, replace=False))
        k = int(rng.integers(0, degree + 1))
        entries = LaurentMatrix.identity(field, n).to_lists()
        entries[i][j] = LaurentPoly.monomial(field, sign * k, field.random_element(rng, nonzero=True))
        matrix = LaurentMatrix(field, entries) @ matrix
    return matrix


def random_exponents(rng: np.random.Generator, n: int, low: int = -3, high: int = 3) -> SplittingType:
    return SplittingType.from_unsorted([int(a) for a in rng.integers(low, high + 1, size=n)])


def random_bundle(
    field: FieldDescriptor,
    rng: np.random.Generator,
    n: int,
    low: int = -3,
    high: int = 3,
    exponents: SplittingType | None = None,
) -> tuple[TransitionBundle, SplittingType]:
    """A bundle P · diag(t^a) · Q with known splitting type a"""
    if exponents is None:
        exponents = random_exponents(rng, n, low, high)
    order = [int(i) for i in rng.permutation(n)]
    diagonal = LaurentMatrix.diagonal(field, [exponents[i] for i in order])
    p = random_unimodular(field, rng, n, sign=1)
    q = random_unimodular(field, rng, n, sign=-1)
    return TransitionBundle(p @ diagonal @ q), exponents


def random_gauge_pair(field: FieldDescriptor, rng: np.random.Generator, n: int) -> tuple[LaurentMatrix, LaurentMatrix]:
    """(P, Q) with P in GL_n(k[t]) and Q in GL_n(k[t^-1])"""
    return random_unimodular(field, rng, n, sign=1), random_unimodular(field, rng, n, sign=-1)


def random_loop_multipliers(field: FieldDescriptor, rng: np.random.Generator, n: int) -> tuple[LaurentMatrix, LaurentMatrix]:
    """(u, v) with u in GL_n(k[t^-1]) and v in GL_n(k[t]) ⊂ GL_n(k[[t]])"""
    return random_unimodular(field, rng, n, sign=-1), random_unimodular(field, rng, n, sign=1)


def random_graded_space(
    rng: np.random.Generator,
    low: int = -3,
    high: int = 3,
    max_weights: int = 3,
    max_dimension: int = 2,
) -> GradedVectorSpace:
    count = int(rng.integers(1, max_weights + 1))
    weights = rng.choice(np.arange(low, high + 1), size=count, replace=False)
    return GradedVectorSpace.of({int(weight): int(rng.integers(1, max_dimension + 1)) for weight in weights})


def random_cocharacter(
    rng: np.random.Generator,
    n: int,
    family: GroupFamily = GroupFamily.GL,
    low: int = -3,
    high: int = 3,
) -> Cocharacter:
    weights = [int(w) for w in rng.integers(low, high + 1, size=n)]
    if family is GroupFamily.SL:
        weights[-1] -= sum(weights)
    return Cocharacter(GroupTag(family, n), tuple(weights))
