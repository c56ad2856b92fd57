# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

from collections import Counter
from dataclasses import dataclass
from itertools import combinations, product
from typing import Literal

from ..algebra.field import FieldDescriptor
from ..bundles.bundle import TransitionBundle, split_bundle
from ..bundles.hn import hn_filtration
from ..bundles.splitting import splitting_type
from ..errors import DimensionMismatchError
from .space import GradedVectorSpace


def e_functor(space: GradedVectorSpace, field: FieldDescriptor) -> TransitionBundle:
    """
    E(V) = (A² ∖ 0) ×^G_m V

    The weight i block contributes O(i) per dimension, so the standard
    representation {-1 ↦ 1} goes to O(-1)
    """
    if space.is_zero():
        raise DimensionMismatchError("E(V) of the zero representation has rank 0")
    return split_bundle(field, space.exponents())


def inverse_e(bundle: TransitionBundle) -> GradedVectorSpace:
    return GradedVectorSpace.of(splitting_type(bundle).multiplicities())


def gr_hn(bundle: TransitionBundle) -> GradedVectorSpace:
    """gr ∘ HN(E) as a graded vector space, with the slope-i piece in weight i"""
    return GradedVectorSpace.of({step.slope: step.rank for step in hn_filtration(bundle).steps})


@dataclass(frozen=True)
class FilGr:
    fil_dim: int
    gr_dim: int


def fil_and_gr(space: GradedVectorSpace, i: int) -> FilGr:
    """fil^i(V) = ⊕_{j ≥ i} V_j and gr^i(V) = V_i"""
    return FilGr(
        fil_dim=sum(dimension for weight, dimension in space.dims.items() if weight >= i),
        gr_dim=space[i],
    )


GradedConstructionKind = Literal["dual", "tensor", "directSum", "exterior2", "sym2"]


def dual(space: GradedVectorSpace) -> GradedVectorSpace:
    return GradedVectorSpace.of({-weight: dimension for weight, dimension in space.dims.items()})


def tensor(v: GradedVectorSpace, w: GradedVectorSpace) -> GradedVectorSpace:
    dims: Counter[int] = Counter()
    for (i, a), (j, b) in product(v.dims.items(), w.dims.items()):
        dims[i + j] += a * b
    return GradedVectorSpace.of(dims)


def direct_sum(v: GradedVectorSpace, w: GradedVectorSpace) -> GradedVectorSpace:
    return GradedVectorSpace.of(Counter(dict(v.dims)) + Counter(dict(w.dims)))


def exterior_square(space: GradedVectorSpace) -> GradedVectorSpace:
    dims: Counter[int] = Counter()
    for weight, dimension in space.dims.items():
        dims[2 * weight] += dimension * (dimension - 1) // 2
    for (i, a), (j, b) in combinations(space.items(), 2):
        dims[i + j] += a * b
    return GradedVectorSpace.of(dims)


def symmetric_square(space: GradedVectorSpace) -> GradedVectorSpace:
    dims: Counter[int] = Counter()
    for weight, dimension in space.dims.items():
        dims[2 * weight] += dimension * (dimension + 1) // 2
    for (i, a), (j, b) in combinations(space.items(), 2):
        dims[i + j] += a * b
    return GradedVectorSpace.of(dims)


def graded_constructions(
    kind: GradedConstructionKind, v: GradedVectorSpace, w: GradedVectorSpace | None = None
) -> GradedVectorSpace:
    if kind in {"tensor", "directSum"}:
        if w is None:
            raise DimensionMismatchError(f'Construction "{kind}" needs two graded spaces')
        return tensor(v, w) if kind == "tensor" else direct_sum(v, w)
    if kind == "dual":
        return dual(v)
    if kind == "exterior2":
        return exterior_square(v)
    if kind == "sym2":
        return symmetric_square(v)
    raise ValueError(f'Unknown construction "{kind}"')


def rep_hom_dimension(v: GradedVectorSpace, w: GradedVectorSpace) -> int:
    """dim Hom_{G_m}(V, W) = Σ_i dim V_i · dim W_i"""
    return sum(dimension * w[weight] for weight, dimension in v.dims.items())
