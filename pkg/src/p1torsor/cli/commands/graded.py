# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

from typing import Any

from ...algebra.field import Q
from ...bundles.euler import euler_witness
from ...bundles.splitting import splitting_type
from ...graded.functor import e_functor, fil_and_gr, graded_constructions, gr_hn, inverse_e
from ...graded.space import GradedVectorSpace
from ...model.bundle import BundleSchema, MorphismReportSchema, MorphismSchema
from ...model.graded import GradedSpaceSchema
from .base import TaskCommand


class GradedCommand(TaskCommand):
    name = "graded"
    help = "vector bundle of a graded vector space, with its filtration table"

    def handle(self, payload: dict, seed: int, **_: Any) -> dict[str, Any]:
        space: GradedVectorSpace = payload["space"]
        field = payload["field"] if payload["field"] is not None else Q
        schema = GradedSpaceSchema()

        bundle = e_functor(space, field)
        table = [
            dict(weight=weight, fil=row.fil_dim, gr=row.gr_dim)
            for weight in range(max(space.weights()) + 1, min(space.weights()) - 1, -1)
            for row in [fil_and_gr(space, weight)]
        ]
        document: dict[str, Any] = dict(
            space=schema.dump(space),
            bundle=BundleSchema().dump(bundle),
            splittingType=list(splitting_type(bundle).exponents),
            filGr=table,
        )

        kind = payload["kind"]
        if kind is not None:
            constructed = graded_constructions(kind, space, payload["other"])
            document["construction"] = dict(kind=kind, space=schema.dump(constructed))

        document["verification"] = dict(
            roundTrip=inverse_e(bundle) == space,
            grHN=gr_hn(bundle) == space,
        )
        return document


class EulerWitnessCommand(TaskCommand):
    name = "euler-witness"
    help = "the Euler sequence on which gr ∘ HN fails to be exact"

    def handle(self, payload: dict, seed: int, **_: Any) -> dict[str, Any]:
        field = payload.get("field") or Q
        witness = euler_witness(field)

        bundle_schema = BundleSchema()
        morphism_schema = MorphismSchema()
        report_schema = MorphismReportSchema()
        mismatch = witness.gr_mismatch
        return dict(
            sub=bundle_schema.dump(witness.sub),
            mid=bundle_schema.dump(witness.mid),
            quot=bundle_schema.dump(witness.quot),
            inclusion=morphism_schema.dump(witness.inclusion),
            projection=morphism_schema.dump(witness.projection),
            grMismatch=dict(
                midSlopes=list(mismatch.mid_slopes),
                outerSlopes=list(mismatch.outer_slopes),
                ranksMatch=mismatch.ranks_match,
                slopesMatch=mismatch.slopes_match,
            ),
            verification=dict(
                reports=[report_schema.dump(report) for report in witness.reports],
                compositeIsZero=witness.composite_is_zero,
            ),
        )
