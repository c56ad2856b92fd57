# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

from marshmallow import RAISE, Schema, fields, post_load, pre_dump, validate

from ..graded.space import GradedVectorSpace


class GradedSpaceSchema(Schema):
    class Meta:
        unknown = RAISE
        ordered = True

    weights = fields.Dict(keys=fields.Int(), values=fields.Int(validate=validate.Range(min=0)), required=True)

    @post_load
    def make_object(self, data, **_):
        return GradedVectorSpace.of(data["weights"])

    @pre_dump
    def from_object(self, obj, **_):
        if isinstance(obj, GradedVectorSpace):
            return dict(weights={str(weight): dimension for weight, dimension in obj.items()})
        return obj
