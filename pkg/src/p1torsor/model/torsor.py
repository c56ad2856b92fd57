# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

from marshmallow import RAISE, Schema, ValidationError, fields, post_load, pre_dump, validate, validates_schema

from ..errors import CocharacterError
from ..torsors.cocharacter import Cocharacter, GroupFamily, GroupTag
from .field import FieldDescriptorSchema, MatrixField, build_matrix


def load_cocharacter(data: dict) -> Cocharacter:
    try:
        return Cocharacter(GroupTag(GroupFamily(data["group"]), data["n"]), tuple(data["weights"]))
    except CocharacterError as e:
        raise ValidationError(str(e), field_name="weights") from e


class CocharacterSchema(Schema):
    class Meta:
        unknown = RAISE
        ordered = True

    group = fields.Str(required=True, validate=validate.OneOf([family.value for family in GroupFamily]))
    n = fields.Int(required=True, validate=validate.Range(min=1))
    weights = fields.List(fields.Int(), required=True)

    @validates_schema
    def validate_length(self, data, **_):
        if "n" not in data or "weights" not in data:
            return  # validation error will be raised independently
        if len(data["weights"]) != data["n"]:
            raise ValidationError(f"Expected {data['n']} weights, got {len(data['weights'])}", field_name="weights")

    @post_load
    def make_object(self, data, **_):
        return load_cocharacter(data)

    @pre_dump
    def from_object(self, obj, **_):
        if isinstance(obj, Cocharacter):
            return dict(group=obj.family.value, n=obj.group.n, weights=list(obj.weights))
        return obj


class GroupElementSchema(Schema):
    """An element of GL_n(k[t, t^-1])"""

    class Meta:
        unknown = RAISE
        ordered = True

    field = fields.Nested(FieldDescriptorSchema, required=True)
    matrix = MatrixField(required=True)

    @post_load
    def make_object(self, data, **_):
        matrix = build_matrix(data["field"], data["matrix"], "matrix")
        if not matrix.is_square:
            raise ValidationError("Matrix must be square", field_name="matrix")
        return matrix


class DoubleCosetWitnessSchema(Schema):
    class Meta:
        ordered = True

    u = MatrixField()
    cocharacter = fields.Function(lambda witness: list(witness.cocharacter.weights), data_key="lambda")
    v = MatrixField()
