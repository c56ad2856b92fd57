# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

from collections import defaultdict

from ..algebra.field import Value
from ..algebra.linalg import sparse_rank
from ..algebra.matrix import LaurentMatrix
from ..errors import InternalSearchFailureError
from ..logging import logger
from .bundle import SplittingType, TransitionBundle, check_splitting_type


def _h0(transition: LaurentMatrix, inverse_min_exponent: int, m: int) -> int:
    """
    Dimension of {s1 in k[t^-1]^n : t^m T s1 in k[t]^n}

    Every section has s1 = t^-m T^-1 s0 with s0 polynomial, so the exponents of s1
    lie in [min(0, minexp(T^-1) - m), 0]
    """
    lowest = inverse_min_exponent - m
    if lowest > 0:
        return 0
    width = 1 - lowest
    n = transition.rows
    field = transition.field

    constraints: dict[tuple[int, int], dict[int, Value]] = defaultdict(dict)
    for i in range(n):
        for j in range(n):
            for g, c in transition[i, j].terms():
                for e in range(lowest, 1):
                    f = g + e + m
                    if f >= 0:
                        continue
                    row = constraints[(i, f)]
                    unknown = j * width + (e - lowest)
                    row[unknown] = field.add(row.get(unknown, field.zero), c)

    unknowns = n * width
    return unknowns - sparse_rank(field, constraints.values())


def h0_dimension(bundle: TransitionBundle) -> int:
    """Čech computation of dim H^0(P^1, E) by exact linear algebra on coefficient vectors"""
    transition = bundle.transition
    return _h0(transition, transition.inverse().min_exponent(), 0)


def h0_of_twists(bundle: TransitionBundle, twists: range) -> dict[int, int]:
    transition = bundle.transition
    inverse_min_exponent = transition.inverse().min_exponent()
    return {m: _h0(transition, inverse_min_exponent, m) for m in twists}


def decode_splitting_type(bundle: TransitionBundle) -> SplittingType:
    """
    Recover the splitting type from dim H^0(E(m)) = Σ max(0, a_i + m + 1)

    The multiplicity of a is the second difference h(-a) - 2 h(-a - 1) + h(-a - 2)
    """
    transition = bundle.transition
    top = transition.max_exponent()
    bottom = -transition.inverse().max_exponent()
    if bottom > top:
        raise InternalSearchFailureError(f"Empty exponent window [{bottom}, {top}]")

    h = h0_of_twists(bundle, range(-top - 2, -bottom + 1))
    logger.debug(f"Decoding splitting type from h0 of twists {h}")

    exponents: list[int] = list()
    for a in range(top, bottom - 1, -1):
        multiplicity = h[-a] - 2 * h[-a - 1] + h[-a - 2]
        if multiplicity < 0:
            raise InternalSearchFailureError(f"Negative multiplicity {multiplicity} for exponent {a}")
        exponents.extend([a] * multiplicity)

    if len(exponents) == 0:
        raise InternalSearchFailureError("No exponents found in the cohomology window")
    splitting_type = SplittingType(tuple(exponents))
    check_splitting_type(bundle, splitting_type)
    return splitting_type

