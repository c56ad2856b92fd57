# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

from typing import Any

from ...bundles.birkhoff import birkhoff_factorize
from ...bundles.bundle import TransitionBundle
from ...bundles.cohomology import h0_dimension
from ...bundles.constructions import bundle_constructions
from ...bundles.hn import hn_filtration
from ...bundles.morphism import hom_dimension, validate_morphism
from ...bundles.splitting import cohomology_dims, splitting_type
from ...graded.functor import graded_constructions, inverse_e
from ...model.bundle import BirkhoffWitnessSchema, BundleSchema, HNFiltrationSchema, MorphismReportSchema
from .base import TaskCommand


class SplittingTypeCommand(TaskCommand):
    name = "splitting-type"
    help = "splitting type of a bundle given by its transition matrix"

    def handle(self, payload: dict, seed: int, **_: Any) -> dict[str, Any]:
        bundle: TransitionBundle = payload["bundle"]
        exponents = splitting_type(bundle, payload["method"])
        return dict(
            splittingType=list(exponents.exponents),
            method=payload["method"],
            verification=dict(
                rankMatches=exponents.rank == bundle.rank,
                degreeMatches=exponents.degree == bundle.degree,
            ),
        )


class FactorizeCommand(TaskCommand):
    name = "factorize"
    help = "Birkhoff factorization T = P · diag(t^D) · Q"

    def handle(self, payload: TransitionBundle, seed: int, **_: Any) -> dict[str, Any]:
        witness = birkhoff_factorize(payload)
        failures = witness.failures(payload.transition)
        return dict(
            witness=BirkhoffWitnessSchema().dump(witness),
            verification=dict(productMatches=len(failures) == 0, failures=failures),
        )


class CohomologyCommand(TaskCommand):
    name = "cohomology"
    help = "dimensions of H^0 and H^1"

    def handle(self, payload: TransitionBundle, seed: int, **_: Any) -> dict[str, Any]:
        dims = cohomology_dims(payload)
        cech_h0 = h0_dimension(payload)
        return dict(
            h0=dims.h0,
            h1=dims.h1,
            verification=dict(cechH0=cech_h0, agrees=cech_h0 == dims.h0),
        )


class HNCommand(TaskCommand):
    name = "hn"
    help = "Harder-Narasimhan filtration"

    def handle(self, payload: TransitionBundle, seed: int, **_: Any) -> dict[str, Any]:
        filtration = hn_filtration(payload)
        return dict(
            filtration=HNFiltrationSchema().dump(filtration),
            verification=dict(
                productMatches=filtration.witness.verify(payload.transition),
                rankMatches=sum(filtration.ranks) == payload.rank,
            ),
        )


class ConstructCommand(TaskCommand):
    name = "construct"
    help = "dual, tensor product, direct sum, exterior or symmetric square"

    def handle(self, payload: dict, seed: int, **_: Any) -> dict[str, Any]:
        kind = payload["kind"]
        bundle: TransitionBundle = payload["bundle"]
        other: TransitionBundle | None = payload["other"]

        result = bundle_constructions(kind, bundle, other)
        exponents = splitting_type(result)

        expected = graded_constructions(
            kind,
            inverse_e(bundle),
            inverse_e(other) if other is not None else None,
        ).exponents()
        return dict(
            bundle=BundleSchema().dump(result),
            splittingType=list(exponents.exponents),
            verification=dict(
                expectedSplittingType=list(expected),
                agrees=tuple(exponents.exponents) == tuple(expected),
            ),
        )


class ValidateMorphismCommand(TaskCommand):
    name = "validate-morphism"
    help = "check the gluing condition of a bundle map and whether it respects HN filtrations"

    def handle(self, payload: Any, seed: int, **_: Any) -> dict[str, Any]:
        report = validate_morphism(payload)
        document: dict[str, Any] = MorphismReportSchema().dump(report)
        document["verification"] = dict(homDimension=hom_dimension(payload.source, payload.target))
        return document
