# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

from .base import TaskCommand
from .bundle import (
    CohomologyCommand,
    ConstructCommand,
    FactorizeCommand,
    HNCommand,
    SplittingTypeCommand,
    ValidateMorphismCommand,
)
from .graded import EulerWitnessCommand, GradedCommand
from .selftest import SelftestCommand
from .torsor import ClassifyCommand, DoubleCosetCommand, PGLLiftCommand, PushoutCommand

task_commands: list[TaskCommand] = [
    SplittingTypeCommand(),
    FactorizeCommand(),
    CohomologyCommand(),
    HNCommand(),
    ConstructCommand(),
    ClassifyCommand(),
    PushoutCommand(),
    PGLLiftCommand(),
    DoubleCosetCommand(),
    EulerWitnessCommand(),
    SelftestCommand(),
    GradedCommand(),
    ValidateMorphismCommand(),
]

__all__ = ["task_commands"]
