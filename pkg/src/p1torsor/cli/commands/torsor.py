# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

from typing import Any

from ...algebra.field import Q
from ...algebra.matrix import LaurentMatrix
from ...bundles.bundle import TransitionBundle
from ...bundles.splitting import splitting_type
from ...model.bundle import BundleSchema
from ...model.torsor import CocharacterSchema, DoubleCosetWitnessSchema
from ...torsors.classify import classify_bundle, cocharacter_pushout
from ...torsors.cocharacter import Cocharacter, GroupFamily, GroupTag, dominantize, is_dominant, pgl_lift, project_to_pgl
from ...torsors.loop import double_coset_witnesses
from .base import TaskCommand


class ClassifyCommand(TaskCommand):
    name = "classify"
    help = "dominant cocharacter classifying a GL or SL torsor"

    def handle(self, payload: dict, seed: int, **_: Any) -> dict[str, Any]:
        bundle: TransitionBundle = payload["bundle"]
        cocharacter = classify_bundle(bundle, payload["family"])

        gl_cocharacter = Cocharacter(GroupTag(GroupFamily.GL, cocharacter.group.n), cocharacter.weights)
        pushout_type = splitting_type(cocharacter_pushout(gl_cocharacter, bundle.field))
        return dict(
            cocharacter=CocharacterSchema().dump(cocharacter),
            verification=dict(
                pushoutSplittingType=list(pushout_type.exponents),
                agrees=pushout_type == splitting_type(bundle),
            ),
        )


class PushoutCommand(TaskCommand):
    name = "pushout"
    help = "vector bundle of the torsor induced by a cocharacter"

    def handle(self, payload: dict, seed: int, **_: Any) -> dict[str, Any]:
        cocharacter: Cocharacter = payload["cocharacter"]
        field = payload["field"] if payload["field"] is not None else Q

        bundle = cocharacter_pushout(cocharacter, field)
        exponents = splitting_type(bundle)
        return dict(
            bundle=BundleSchema().dump(bundle),
            splittingType=list(exponents.exponents),
            verification=dict(classifiesBack=classify_bundle(bundle) == dominantize(cocharacter)),
        )


class PGLLiftCommand(TaskCommand):
    name = "pgl-lift"
    help = "lift a PGL cocharacter to GL"

    def handle(self, payload: Cocharacter, seed: int, **_: Any) -> dict[str, Any]:
        lift = pgl_lift(payload)
        return dict(
            lift=CocharacterSchema().dump(lift),
            verification=dict(
                dominanceKept=is_dominant(lift) or not is_dominant(payload),
                projectsBack=project_to_pgl(lift) == payload.canonical(),
            ),
        )


class DoubleCosetCommand(TaskCommand):
    name = "double-coset"
    help = "double coset G(k[t^-1]) · t^λ · G(k[[t]]) of a loop group element"

    def handle(self, payload: LaurentMatrix, seed: int, **_: Any) -> dict[str, Any]:
        witness = double_coset_witnesses(payload)
        certificate = witness.certificate(payload)
        return dict(
            **{"lambda": list(witness.cocharacter.weights)},
            witness=DoubleCosetWitnessSchema().dump(witness),
            verification=dict(
                productMatches=witness.verify(payload),
                certificate=certificate.to_strings(),
                certificateIsDiagonal=certificate == witness.diagonal,
            ),
        )
