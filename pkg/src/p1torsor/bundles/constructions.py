# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

from itertools import combinations, combinations_with_replacement
from typing import Literal

from ..algebra.laurent import LaurentPoly
from ..algebra.matrix import LaurentMatrix, block_diagonal
from ..errors import DimensionMismatchError
from .bundle import TransitionBundle

ConstructionKind = Literal["dual", "tensor", "exterior2", "sym2", "directSum"]
binary_constructions: frozenset[str] = frozenset(["tensor", "directSum"])


def dual(bundle: TransitionBundle) -> TransitionBundle:
    return TransitionBundle(bundle.transition.inverse().transpose())


def tensor(a: TransitionBundle, b: TransitionBundle) -> TransitionBundle:
    return TransitionBundle(a.transition.kron(b.transition))


def direct_sum(a: TransitionBundle, b: TransitionBundle) -> TransitionBundle:
    return TransitionBundle(block_diagonal(a.transition, b.transition))


def exterior_square(bundle: TransitionBundle) -> TransitionBundle:
    """Λ²E in the basis e_i ∧ e_j, i < j"""
    n = bundle.rank
    if n < 2:
        raise DimensionMismatchError("The exterior square needs rank at least 2")
    t = bundle.transition
    basis = list(combinations(range(n), 2))
    entries = [[t[i, k] * t[j, l] - t[j, k] * t[i, l] for k, l in basis] for i, j in basis]
    return TransitionBundle(LaurentMatrix(bundle.field, entries))


def symmetric_square(bundle: TransitionBundle) -> TransitionBundle:
    """Sym²E in the basis e_i e_j, i ≤ j"""
    n = bundle.rank
    t = bundle.transition
    basis = list(combinations_with_replacement(range(n), 2))

    def coefficient(i: int, j: int, k: int, l: int) -> LaurentPoly:  # noqa: E741
        if i == j:
            return t[i, k] * t[i, l]
        return t[i, k] * t[j, l] + t[j, k] * t[i, l]

    entries = [[coefficient(i, j, k, l) for k, l in basis] for i, j in basis]
    return TransitionBundle(LaurentMatrix(bundle.field, entries))


def bundle_constructions(kind: ConstructionKind, a: TransitionBundle, b: TransitionBundle | None = None) -> TransitionBundle:
    if kind in binary_constructions:
        if b is None:
            raise DimensionMismatchError(f'Construction "{kind}" needs two bundles')
        a.field.check(b.field)
        if kind == "tensor":
            return tensor(a, b)
        return direct_sum(a, b)

    if kind == "dual":
        return dual(a)
    if kind == "exterior2":
        return exterior_square(a)
    if kind == "sym2":
        return symmetric_square(a)
    raise ValueError(f'Unknown construction "{kind}"')
