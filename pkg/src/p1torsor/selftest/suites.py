# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

from contextlib import contextmanager
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement, product
from typing import Callable, Iterator

import numpy as np

from ..algebra.field import Q, FieldDescriptor
from ..algebra.matrix import LaurentMatrix
from ..bundles.birkhoff import birkhoff_factorize
from ..bundles.bundle import SplittingType, TransitionBundle, line_bundle, twist
from ..bundles.cohomology import h0_dimension
from ..bundles.constructions import bundle_constructions
from ..bundles.euler import euler_witness
from ..bundles.hn import hn_filtration
from ..bundles.morphism import hom_basis, hom_dimension, validate_morphism
from ..bundles.splitting import cohomology_dims, splitting_type
from ..errors import P1TorsorError
from ..graded.functor import e_functor, inverse_e, rep_hom_dimension
from ..graded.space import GradedVectorSpace
from ..logging import logger
from ..torsors.classify import classify_bundle, cocharacter_pushout
from ..torsors.cocharacter import (
    Cocharacter,
    GroupFamily,
    GroupTag,
    dominantize,
    is_dominant,
    pgl_lift,
    project_to_pgl,
    same_pgl_class,
)
from ..torsors.loop import double_coset_type, double_coset_witnesses, uniformization_certificate
from ..utils.random import (
    random_bundle,
    random_cocharacter,
    random_gauge_pair,
    random_graded_space,
    random_loop_multipliers,
)

F5 = FieldDescriptor.prime_field(5)
fields = (Q, F5)

max_recorded_failures = 5


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    failed: int = 0
    failures: list[str] = field(default_factory=list)

    def check(self, condition: bool, description: str) -> None:
        if condition:
            self.passed += 1
            return
        self.failed += 1
        if len(self.failures) < max_recorded_failures:
            self.failures.append(description)
        logger.debug(f'Check failed in suite "{self.name}": {description}')

    @contextmanager
    def case(self, description: str) -> Iterator[None]:
        try:
            yield
        except (P1TorsorError, AssertionError, ArithmeticError) as e:
            self.check(False, f"{description}: {type(e).__name__}: {e}")

    def merge(self, other: "SuiteResult") -> None:
        self.passed += other.passed
        self.failed += other.failed
        self.failures.extend(other.failures[: max(0, max_recorded_failures - len(self.failures))])


def _pick_field(trial: int) -> FieldDescriptor:
    return fields[trial % len(fields)]


def _pairwise_sums(a: SplittingType, b: SplittingType) -> SplittingType:
    return SplittingType.from_unsorted([x + y for x in a for y in b])


def classification(result: SuiteResult, rng: np.random.Generator, trials: int, first_shard: bool) -> None:
    for trial in range(trials):
        field = _pick_field(trial)
        n = int(rng.integers(1, 5))
        bundle, exponents = random_bundle(field, rng, n)
        with result.case(f"factorize {bundle}"):
            witness = birkhoff_factorize(bundle)
            result.check(witness.verify(bundle.transition), f"witness of {bundle} does not verify")
            result.check(witness.splitting_type == exponents, f"{bundle} has type {exponents}, got {witness.splitting_type}")


def gauge(result: SuiteResult, rng: np.random.Generator, trials: int, first_shard: bool) -> None:
    for trial in range(trials):
        field = _pick_field(trial)
        n = int(rng.integers(1, 4))
        bundle, exponents = random_bundle(field, rng, n)
        p, q = random_gauge_pair(field, rng, n)
        with result.case(f"gauge {bundle}"):
            moved = TransitionBundle(p @ bundle.transition @ q)
            result.check(splitting_type(moved) == exponents, f"gauge changed the type {exponents} of {bundle}")


def cohomology(result: SuiteResult, rng: np.random.Generator, trials: int, first_shard: bool) -> None:
    if first_shard:
        for a in range(-5, 6):
            dims = cohomology_dims(line_bundle(Q, a))
            result.check((dims.h0, dims.h1) == (max(0, a + 1), max(0, -a - 1)), f"cohomology of O({a}) is {dims}")
            result.check(h0_dimension(line_bundle(F5, a)) == max(0, a + 1), f"Čech h0 of O({a}) over F_5")

    for trial in range(trials):
        field = _pick_field(trial)
        n = int(rng.integers(1, 4))
        slope = int(rng.integers(0, 3))
        bundle, _ = random_bundle(field, rng, n, exponents=SplittingType((slope,) * n))
        with result.case(f"semistable {bundle}"):
            dims = cohomology_dims(bundle)
            result.check(dims.h1 == 0, f"semistable {bundle} of slope {slope} has h1 = {dims.h1}")
            result.check(dims.h0 == h0_dimension(bundle), f"Čech h0 disagrees on {bundle}")
            m = int(rng.integers(-3, 1))
            duality = h0_dimension(twist(bundle_constructions("dual", twist(bundle, m)), -2))
            result.check(cohomology_dims(twist(bundle, m)).h1 == duality, f"Serre duality on {bundle}({m})")


def constructions(result: SuiteResult, rng: np.random.Generator, trials: int, first_shard: bool) -> None:
    for trial in range(trials):
        field = _pick_field(trial)
        e, a = random_bundle(field, rng, int(rng.integers(1, 3)), -2, 2)
        f, b = random_bundle(field, rng, int(rng.integers(1, 3)), -2, 2)
        with result.case(f"constructions on {e}, {f}"):
            result.check(
                splitting_type(bundle_constructions("tensor", e, f)) == _pairwise_sums(a, b),
                f"tensor of {a} and {b}",
            )
            result.check(
                splitting_type(bundle_constructions("dual", e)) == SplittingType.from_unsorted([-x for x in a]),
                f"dual of {a}",
            )
            direct_sum = bundle_constructions("directSum", e, f)
            result.check(
                splitting_type(direct_sum) == SplittingType.from_unsorted(a.exponents + b.exponents),
                f"direct sum of {a} and {b}",
            )
            result.check(direct_sum.rank == e.rank + f.rank, "rank additivity of the direct sum")
            result.check(
                splitting_type(bundle_constructions("sym2", e))
                == SplittingType.from_unsorted([a[i] + a[j] for i, j in combinations_with_replacement(range(len(a)), 2)]),
                f"symmetric square of {a}",
            )
            if e.rank >= 2:
                result.check(
                    splitting_type(bundle_constructions("exterior2", e))
                    == SplittingType.from_unsorted([a[i] + a[j] for i, j in combinations(range(len(a)), 2)]),
                    f"exterior square of {a}",
                )


def functoriality(result: SuiteResult, rng: np.random.Generator, trials: int, first_shard: bool) -> None:
    for trial in range(trials):
        field = _pick_field(trial)
        e, a = random_bundle(field, rng, int(rng.integers(1, 3)), -2, 2)
        f, b = random_bundle(field, rng, int(rng.integers(1, 3)), -2, 2)
        with result.case(f"Hom({e}, {f})"):
            expected = sum(max(0, y - x + 1) for x in a for y in b)
            result.check(hom_dimension(e, f) == expected, f"hom dimension of {a} -> {b}")
            basis = hom_basis(e, f)
            result.check(len(basis) == expected, f"hom basis size of {a} -> {b}")
            for morphism in basis:
                report = validate_morphism(morphism)
                result.check(report.valid, f"basis morphism {a} -> {b} does not glue")
                result.check(not report.valid or report.hn_preserved, f"valid morphism {a} -> {b} breaks HN")


def euler(result: SuiteResult, rng: np.random.Generator, trials: int, first_shard: bool) -> None:
    if not first_shard:
        return
    for field in fields:
        with result.case(f"Euler sequence over {field}"):
            witness = euler_witness(field)
            result.check(all(report.valid for report in witness.reports), "Euler maps do not glue")
            result.check(witness.composite_is_zero, "Euler composite is not zero")
            result.check(witness.gr_mismatch.mid_slopes == (0, 0), "middle slopes")
            result.check(witness.gr_mismatch.outer_slopes == (1, -1), "outer slopes")
            result.check(witness.gr_mismatch.ranks_match and not witness.gr_mismatch.slopes_match, "mismatch evidence")


def graded(result: SuiteResult, rng: np.random.Generator, trials: int, first_shard: bool) -> None:
    if first_shard:
        standard = e_functor(GradedVectorSpace.of({-1: 1}), Q)
        result.check(splitting_type(standard) == SplittingType((-1,)), "standard representation goes to O(-1)")

    for trial in range(trials):
        field = _pick_field(trial)
        space = random_graded_space(rng)
        with result.case(f"round trip {space}"):
            bundle = e_functor(space, field)
            result.check(inverse_e(bundle) == space, f"inverse_e ∘ e_functor on {space}")
            twisted, _ = random_bundle(field, rng, space.dimension, exponents=SplittingType(space.exponents()))
            result.check(inverse_e(twisted) == space, f"inverse_e on a disguised E({space})")
            result.check(splitting_type(e_functor(inverse_e(twisted), field)) == splitting_type(twisted), "e_functor ∘ inverse_e")
            steps = hn_filtration(bundle).steps
            result.check({step.slope: step.rank for step in steps} == dict(space.dims), f"HN slopes of E({space})")
            other = random_graded_space(rng)
            result.check(
                rep_hom_dimension(space, other) <= hom_dimension(bundle, e_functor(other, field)),
                f"Hom({space}, {other}) exceeds Hom of the bundles",
            )


def torsors(result: SuiteResult, rng: np.random.Generator, trials: int, first_shard: bool) -> None:
    if first_shard:
        for n in range(1, 4):
            for weights in product(range(-3, 4), repeat=n):
                cocharacter = Cocharacter(GroupTag(GroupFamily.GL, n), weights)
                with result.case(f"classify {cocharacter}"):
                    bundle = cocharacter_pushout(cocharacter)
                    result.check(classify_bundle(bundle) == dominantize(cocharacter), f"classify ∘ pushout on {cocharacter}")

    for trial in range(trials):
        field = _pick_field(trial)
        n = int(rng.integers(1, 4))
        bundle, exponents = random_bundle(field, rng, n)
        with result.case(f"pushout ∘ classify on {bundle}"):
            round_trip = splitting_type(cocharacter_pushout(classify_bundle(bundle), field))
            result.check(round_trip == exponents, f"pushout ∘ classify changed the type {exponents}")
        sl_weights = random_cocharacter(rng, n, GroupFamily.SL)
        with result.case(f"SL class of {sl_weights}"):
            sl_bundle = cocharacter_pushout(Cocharacter(GroupTag(GroupFamily.GL, n), sl_weights.weights), field)
            result.check(sum(classify_bundle(sl_bundle, "SL").weights) == 0, "SL classification is not sum zero")


def double_coset(result: SuiteResult, rng: np.random.Generator, trials: int, first_shard: bool) -> None:
    if first_shard:
        for n in range(1, 4):
            for weights in product(range(-3, 4), repeat=n):
                cocharacter = Cocharacter(GroupTag(GroupFamily.GL, n), weights)
                with result.case(f"normal form {cocharacter}"):
                    g = LaurentMatrix.diagonal(Q, weights)
                    result.check(double_coset_type(g) == dominantize(cocharacter), f"normal form of {cocharacter}")

    for trial in range(trials):
        field = _pick_field(trial)
        n = int(rng.integers(1, 4))
        cocharacter = random_cocharacter(rng, n)
        u, v = random_loop_multipliers(field, rng, n)
        g = u @ LaurentMatrix.diagonal(field, cocharacter.weights) @ v
        with result.case(f"double coset of {cocharacter}"):
            witness = double_coset_witnesses(g)
            result.check(witness.cocharacter == dominantize(cocharacter), f"coset invariance for {cocharacter}")
            result.check(witness.verify(g), f"witness for {cocharacter} does not verify")
            certificate = uniformization_certificate(g, witness)
            result.check(certificate == witness.diagonal, "uniformization certificate")


def pgl_lifting(result: SuiteResult, rng: np.random.Generator, trials: int, first_shard: bool) -> None:
    if not first_shard:
        return
    for n in range(1, 6):
        for head in product(range(0, 4), repeat=n - 1):
            weights = (*head, 0)
            if any(x < y for x, y in zip(weights, weights[1:])):
                continue
            cocharacter = Cocharacter(GroupTag(GroupFamily.PGL, n), weights)
            with result.case(f"lift {cocharacter}"):
                lift = pgl_lift(cocharacter)
                result.check(lift.family is GroupFamily.GL and is_dominant(lift), f"lift of {cocharacter} is not dominant")
                result.check(project_to_pgl(lift) == cocharacter, f"lift of {cocharacter} does not project back")
                result.check(same_pgl_class(lift, cocharacter), f"lift of {cocharacter} left its PGL class")


Suite = Callable[[SuiteResult, np.random.Generator, int, bool], None]

suites: dict[str, Suite] = {
    "classification": classification,
    "gauge": gauge,
    "cohomology": cohomology,
    "constructions": constructions,
    "functoriality": functoriality,
    "euler": euler,
    "graded": graded,
    "torsors": torsors,
    "double-coset": double_coset,
    "pgl-lift": pgl_lifting,
}
