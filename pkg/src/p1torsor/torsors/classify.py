# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

from typing import Literal

from ..algebra.field import Q, FieldDescriptor
from ..algebra.matrix import LaurentMatrix
from ..bundles.bundle import TransitionBundle
from ..bundles.splitting import splitting_type
from ..errors import CocharacterError, UnsupportedGroupError
from .cocharacter import Cocharacter, GroupFamily, GroupTag, dominantize


def cocharacter_pushout(cocharacter: Cocharacter, field: FieldDescriptor = Q) -> TransitionBundle:
    """Push the Hopf bundle along the cocharacter; weight m gives O(-m)"""
    if cocharacter.family is not GroupFamily.GL:
        raise UnsupportedGroupError(f"Pushouts are only materialized for GL, got {cocharacter.group}")
    return TransitionBundle(LaurentMatrix.diagonal(field, [-m for m in cocharacter.weights]))


def classify_bundle(bundle: TransitionBundle, family: Literal["GL", "SL"] = "GL") -> Cocharacter:
    """
    The dominant cocharacter χ with pushout(χ) ≅ E, which is
    dominantize(-a_n, ..., -a_1) for splitting type a_1 ≥ ... ≥ a_n
    """
    exponents = splitting_type(bundle)
    group_family = GroupFamily(family)
    if group_family is GroupFamily.SL and exponents.degree != 0:
        raise CocharacterError(f"A bundle of degree {exponents.degree} does not come from an SL torsor")
    if group_family is GroupFamily.PGL:
        raise UnsupportedGroupError("PGL torsors are handled at the level of cocharacters only")
    weights = tuple(-a for a in reversed(exponents.exponents))
    return dominantize(Cocharacter(GroupTag(group_family, bundle.rank), weights))
