# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

"""
Double cosets G(k[t^-1]) \\ G(k((t))) / G(k[[t]]) for G = GL_n, on representatives
with Laurent polynomial entries

The substitution σ: t ↦ t^-1 turns the left factor k[t^-1] into the k[t] side of
a Birkhoff factorization, so σ(g) = P t^D Q gives g = σ(P) t^-D σ(Q), and the
reversal permutation W sorts -D into a dominant λ
"""

from dataclasses import dataclass

from ..algebra.laurent import Ring
from ..algebra.matrix import LaurentMatrix
from ..bundles.birkhoff import birkhoff_factorize
from ..bundles.bundle import make_bundle
from ..errors import InternalSearchFailureError
from .cocharacter import Cocharacter, GroupFamily, GroupTag


@dataclass(frozen=True)
class DoubleCosetWitness:
    """g = u · t^λ · v with u in GL_n(k[t^-1]) and v in GL_n(k[t])"""

    u: LaurentMatrix
    cocharacter: Cocharacter
    v: LaurentMatrix

    @property
    def diagonal(self) -> LaurentMatrix:
        return LaurentMatrix.diagonal(self.u.field, self.cocharacter.weights)

    def product(self) -> LaurentMatrix:
        return self.u @ self.diagonal @ self.v

    def certificate(self, g: LaurentMatrix) -> LaurentMatrix:
        """u^-1 · g · v^-1, which equals t^λ: g is trivial away from the point t = 0"""
        return self.u.inverse() @ g @ self.v.inverse()

    def failures(self, g: LaurentMatrix) -> list[str]:
        failures: list[str] = list()
        if not self.u.in_ring(Ring.POLY_IN_T_INV):
            failures.append("u has entries outside k[t^-1]")
        if not self.u.determinant().in_ring(Ring.CONST_UNIT):
            failures.append("det u is not a nonzero constant")
        if not self.v.in_ring(Ring.POLY_IN_T):
            failures.append("v has entries outside k[t]")
        if self.v.determinant().constant_term() == 0:
            failures.append("det v is not a unit of k[[t]]")
        if self.product() != g:
            failures.append("u · t^λ · v differs from g")
        return failures

    def verify(self, g: LaurentMatrix) -> bool:
        return len(self.failures(g)) == 0


def double_coset_witnesses(g: LaurentMatrix) -> DoubleCosetWitness:
    swapped = make_bundle(g.invert_variable())
    witness = birkhoff_factorize(swapped)

    n = g.rows
    field = g.field
    reversal = LaurentMatrix.permutation(field, list(reversed(range(n))))
    weights = tuple(-a for a in reversed(witness.splitting_type.exponents))

    result = DoubleCosetWitness(
        u=witness.p.invert_variable() @ reversal,
        cocharacter=Cocharacter(GroupTag(GroupFamily.GL, n), weights),
        v=reversal @ witness.q.invert_variable(),
    )
    failures = result.failures(g)
    if len(failures) > 0:
        raise InternalSearchFailureError(f"Double coset witness for {g!r} does not verify: {'; '.join(failures)}")
    return result


def double_coset_type(g: LaurentMatrix) -> Cocharacter:
    """The dominant λ with g in G(k[t^-1]) · t^λ · G(k[[t]])"""
    return double_coset_witnesses(g).cocharacter


def uniformization_certificate(g: LaurentMatrix, witness: DoubleCosetWitness | None = None) -> LaurentMatrix:
    if witness is None:
        witness = double_coset_witnesses(g)
    certificate = witness.certificate(g)
    if certificate != witness.diagonal:
        raise InternalSearchFailureError("u^-1 · g · v^-1 is not t^λ")
    return certificate
