# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

from marshmallow import RAISE, Schema, ValidationError, fields, post_load, pre_dump, validate, validates_schema

from ..bundles.bundle import TransitionBundle, make_bundle
from ..bundles.morphism import BundleMorphism
from ..errors import DimensionMismatchError
from .field import FieldDescriptorSchema, MatrixField, build_matrix


def load_bundle(data: dict) -> TransitionBundle:
    transition = build_matrix(data["field"], data["transition"], "transition")
    if not transition.is_square:
        raise ValidationError("Transition matrix must be square", field_name="transition")
    return make_bundle(transition)


class BundleSchema(Schema):
    class Meta:
        unknown = RAISE
        ordered = True

    field = fields.Nested(FieldDescriptorSchema, required=True)
    rank = fields.Int(required=True, validate=validate.Range(min=1))
    transition = MatrixField(required=True)

    @validates_schema
    def validate_rank(self, data, **_):
        if "rank" not in data or "transition" not in data:
            return  # validation error will be raised independently
        if len(data["transition"]) != data["rank"]:
            raise ValidationError(f"Rank {data['rank']} does not match {len(data['transition'])} rows", field_name="rank")

    @post_load
    def make_object(self, data, **_):
        return load_bundle(data)

    @pre_dump
    def from_object(self, obj, **_):
        if isinstance(obj, TransitionBundle):
            return dict(field=obj.field, rank=obj.rank, transition=obj.transition)
        return obj


class SplittingTypeField(fields.Field):
    def _serialize(self, value, attr, obj, **kwargs):
        if value is None:
            return None
        return list(value.exponents)


class BirkhoffWitnessSchema(Schema):
    class Meta:
        ordered = True

    p = MatrixField(data_key="P")
    splitting_type = SplittingTypeField(data_key="D")
    q = MatrixField(data_key="Q")


class HNStepSchema(Schema):
    class Meta:
        ordered = True

    slope = fields.Int()
    rank = fields.Int()


class HNFiltrationSchema(Schema):
    class Meta:
        ordered = True

    steps = fields.List(fields.Nested(HNStepSchema))
    cumulative_ranks = fields.Function(lambda filtration: list(filtration.cumulative_ranks()), data_key="cumulativeRanks")
    basis_change = fields.Function(
        lambda filtration: dict(P=filtration.witness.p.to_strings(), Q=filtration.witness.q.to_strings()),
        data_key="basisChange",
    )


class MorphismSchema(Schema):
    class Meta:
        unknown = RAISE
        ordered = True

    source = fields.Nested(BundleSchema, required=True)
    target = fields.Nested(BundleSchema, required=True)
    m0 = MatrixField(data_key="M0", required=True)
    m1 = MatrixField(data_key="M1", required=True)

    @post_load
    def make_object(self, data, **_):
        source: TransitionBundle = data["source"]
        m0 = build_matrix(source.field, data["m0"], "M0")
        m1 = build_matrix(source.field, data["m1"], "M1")
        try:
            return BundleMorphism(source, data["target"], m0, m1)
        except DimensionMismatchError as e:
            raise ValidationError(str(e), field_name="M0") from e


class MorphismReportSchema(Schema):
    class Meta:
        ordered = True

    valid = fields.Bool()
    hn_preserved = fields.Bool(data_key="hnPreserved")
