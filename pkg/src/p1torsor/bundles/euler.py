# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

from dataclasses import dataclass

from ..algebra.field import Q, FieldDescriptor
from ..algebra.matrix import LaurentMatrix
from ..errors import InternalSearchFailureError
from .bundle import TransitionBundle, line_bundle, split_bundle
from .hn import hn_filtration
from .morphism import BundleMorphism, MorphismReport, compose_morphisms, validate_morphism


@dataclass(frozen=True)
class GrMismatch:
    """Slopes of gr ∘ HN on the middle term against the union over the outer terms"""

    mid_slopes: tuple[int, ...]
    outer_slopes: tuple[int, ...]
    ranks_match: bool
    slopes_match: bool


@dataclass(frozen=True)
class EulerWitness:
    sub: TransitionBundle
    mid: TransitionBundle
    quot: TransitionBundle
    inclusion: BundleMorphism
    projection: BundleMorphism
    reports: tuple[MorphismReport, MorphismReport]
    composite_is_zero: bool
    gr_mismatch: GrMismatch


def _graded_slopes(bundle: TransitionBundle) -> list[int]:
    slopes: list[int] = list()
    for step in hn_filtration(bundle).steps:
        slopes.extend([step.slope] * step.rank)
    return slopes


def euler_witness(field: FieldDescriptor = Q) -> EulerWitness:
    """
    The Euler sequence 0 -> O(-1) -> O ⊕ O -> O(1) -> 0, which shows that taking
    the graded pieces of the HN filtration is not exact
    """
    sub = line_bundle(field, -1)
    mid = split_bundle(field, [0, 0])
    quot = line_bundle(field, 1)

    inclusion = BundleMorphism(
        sub,
        mid,
        LaurentMatrix.from_strings(field, [["1"], ["t"]]),
        LaurentMatrix.from_strings(field, [["t^-1"], ["1"]]),
    )
    projection = BundleMorphism(
        mid,
        quot,
        LaurentMatrix.from_strings(field, [["-t", "1"]]),
        LaurentMatrix.from_strings(field, [["-1", "t^-1"]]),
    )

    reports = (validate_morphism(inclusion), validate_morphism(projection))
    if not all(report.valid for report in reports):
        raise InternalSearchFailureError("The Euler sequence maps do not glue")

    mid_slopes = tuple(sorted(_graded_slopes(mid), reverse=True))
    outer_slopes = tuple(sorted(_graded_slopes(sub) + _graded_slopes(quot), reverse=True))
    gr_mismatch = GrMismatch(
        mid_slopes=mid_slopes,
        outer_slopes=outer_slopes,
        ranks_match=sub.rank + quot.rank == mid.rank,
        slopes_match=mid_slopes == outer_slopes,
    )

    return EulerWitness(
        sub=sub,
        mid=mid,
        quot=quot,
        inclusion=inclusion,
        projection=projection,
        reports=reports,
        composite_is_zero=compose_morphisms(projection, inclusion).is_zero(),
        gr_mismatch=gr_mismatch,
    )
