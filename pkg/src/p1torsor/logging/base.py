# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

import logging
import sys
import warnings

from .formatter import ColorFormatter, Formatter

loggernames = [
    "p1torsor",
    "py.warnings",
]


def showwarning(message, category, filename, lineno, _=None, line=None):
    s = warnings.formatwarning(message, category, filename, lineno, line)
    logging.getLogger("py.warnings").warning(s)


def setup(levelno: int = logging.INFO, stream=None) -> None:
    if stream is None:
        stream = sys.stderr

    handler = logging.StreamHandler(stream)
    is_terminal = getattr(stream, "isatty", lambda: False)()
    handler.setFormatter(ColorFormatter() if is_terminal else Formatter())
    handler.setLevel(levelno)

    for loggername in loggernames:
        logger = logging.getLogger(loggername)
        for existing in list(logger.handlers):
            logger.removeHandler(existing)
        logger.propagate = False
        logger.addHandler(handler)
        logger.setLevel(levelno)

    warnings.showwarning = showwarning


def logging_args() -> dict:
    """Arguments for `setup` in a worker process"""
    return dict(levelno=logging.getLogger("p1torsor").level or logging.INFO)


def teardown() -> None:
    for loggername in loggernames:
        logger = logging.getLogger(loggername)
        for handler in list(logger.handlers):
            handler.flush()
            logger.removeHandler(handler)
