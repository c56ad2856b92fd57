# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

from p1torsor.algebra.field import FieldDescriptor
from p1torsor.bundles.euler import euler_witness
from p1torsor.bundles.morphism import compose_morphisms


def test_euler_witness(field: FieldDescriptor):
    witness = euler_witness(field)
    assert all(report.valid for report in witness.reports)
    assert all(report.hn_preserved for report in witness.reports)
    assert witness.composite_is_zero
    assert compose_morphisms(witness.projection, witness.inclusion).is_zero()

    mismatch = witness.gr_mismatch
    assert mismatch.mid_slopes == (0, 0)
    assert mismatch.outer_slopes == (1, -1)
    assert mismatch.ranks_match
    assert not mismatch.slopes_match
