# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

import logging
import sys
from argparse import Namespace

logger = logging.getLogger("p1torsor")


def main(argv: list[str] | None = None) -> None:
    # make these variables available in top scope
    opts: Namespace | None = None
    debug: bool = False
    code: int = 1

    try:
        from .parser import parse_args

        opts = parse_args(argv)
        debug = getattr(opts, "debug", False)

        from ..logging.base import setup as setup_logging

        setup_logging(levelno=logging.DEBUG if opts.verbose or debug else logging.INFO)

        from .. import __version__

        logger.debug(f"p1torsor version {__version__}")

        action = opts.action
        logger.debug(f'Running command "{opts.command}"')
        code = action(opts)
    except Exception as e:
        logger.exception("Exception: %s", e, exc_info=True)

        if debug:
            raise e
    finally:
        from ..logging.base import teardown as teardown_logging

        teardown_logging()

        # clean up orphan processes

        from ..utils.multiprocessing import terminate

        terminate()

    sys.exit(code)
