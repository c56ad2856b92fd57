# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

from dataclasses import dataclass
from typing import Literal

from ..constants import check_enabled
from .birkhoff import birkhoff_factorize
from .bundle import SplittingType, TransitionBundle
from .cohomology import decode_splitting_type, h0_dimension

SplittingMethod = Literal["reduction", "cohomology"]


def splitting_type(bundle: TransitionBundle, method: SplittingMethod = "reduction") -> SplittingType:
    if method == "reduction":
        return birkhoff_factorize(bundle).splitting_type
    if method == "cohomology":
        return decode_splitting_type(bundle)
    raise ValueError(f'Unknown method "{method}"')


def is_semistable(bundle: TransitionBundle) -> bool:
    return splitting_type(bundle).is_semistable()


@dataclass(frozen=True)
class CohomologyDims:
    h0: int
    h1: int


def cohomology_dims(bundle: TransitionBundle) -> CohomologyDims:
    exponents = splitting_type(bundle)
    dims = CohomologyDims(h0=exponents.h0(), h1=exponents.h1())

    if check_enabled():
        oracle = h0_dimension(bundle)
        if oracle != dims.h0:
            raise AssertionError(f"Čech oracle gives h0 = {oracle}, splitting type {exponents} gives {dims.h0}")

    return dims
