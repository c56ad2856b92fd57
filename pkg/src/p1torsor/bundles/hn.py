# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

from dataclasses import dataclass
from itertools import accumulate

from more_itertools import run_length

from ..algebra.matrix import LaurentMatrix
from .birkhoff import BirkhoffWitness, birkhoff_factorize
from .bundle import TransitionBundle


@dataclass(frozen=True)
class HNStep:
    slope: int
    rank: int


@dataclass(frozen=True)
class HNFiltration:
    """
    Harder-Narasimhan filtration of a bundle on the projective line

    In the coordinates of the witness, HN^i is spanned by the coordinates whose
    splitting exponent is at least i
    """

    steps: tuple[HNStep, ...]
    witness: BirkhoffWitness

    @property
    def slopes(self) -> tuple[int, ...]:
        return tuple(step.slope for step in self.steps)

    @property
    def ranks(self) -> tuple[int, ...]:
        return tuple(step.rank for step in self.steps)

    def cumulative_ranks(self) -> tuple[int, ...]:
        return tuple(accumulate(self.ranks))

    def rank_at(self, i: int) -> int:
        """rank of HN^i"""
        return sum(step.rank for step in self.steps if step.slope >= i)

    @property
    def basis_change(self) -> tuple[LaurentMatrix, LaurentMatrix]:
        """(P, Q) with T = P · diag(t^D) · Q, block upper triangular coordinates for the filtration"""
        return self.witness.p, self.witness.q

    def subbundle_frame(self, i: int) -> LaurentMatrix | None:
        """Chart k[t] frame of HN^i as columns of P, or None if HN^i = 0"""
        r = self.rank_at(i)
        if r == 0:
            return None
        p = self.witness.p
        return p.submatrix(range(p.rows), range(r))


def hn_filtration(bundle: TransitionBundle) -> HNFiltration:
    witness = birkhoff_factorize(bundle)
    steps = tuple(HNStep(slope, rank) for slope, rank in run_length.encode(witness.splitting_type))
    return HNFiltration(steps, witness)
