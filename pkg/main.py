#!/usr/bin/env python3
"""
Fiber-Full Cohomology Engine

This script provides a command-line interface for computing cohomology signatures of projective
subschemes, classifying them (ACM/AG, strata), and checking Gröbner degenerations and
one-parameter families for flatness and fiber-fullness.

Usage:
    python main.py COMMAND FILE [options]

Example:
    python main.py table inputs/twisted_cubic.ideal --json
"""

import sys
import logging
from typing import Any, Dict, Optional, Sequence

from utils.helpers import parse_args
from fibfull.engine import FiberFullEngine
from src.fiber_full.errors import FiberFullError, InputError, InvariantViolation, WindowError
from src.fiber_full.reports.json_report import dumps, emit, envelope


# Configure logging
logging.basicConfig(
    level=logging.INFO,
    format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    handlers=[logging.StreamHandler()],
)
logger = logging.getLogger("fibfull")


def dispatch(engine: FiberFullEngine, args) -> Dict[str, Any]:
    """Run one command on the engine."""
    window = tuple(args.window) if args.window else None
    if window is not None and window[0] > window[1]:
        raise WindowError(f"Empty window [{window[0]}, {window[1]}].")
    if args.command == "table":
        return engine.table(args.file, window)
    if args.command == "acm":
        return engine.acm(args.file)
    if args.command == "ag":
        return engine.ag(args.file)
    if args.command == "compare":
        return engine.compare(args.files, window)
    if args.command == "lex":
        return engine.lex(args.partition, args.r, args.mode, window)
    if args.command == "degenerate":
        return engine.degenerate(args.file, args.fibers, args.check_squarefree, window)
    if args.command == "stratify":
        return engine.stratify(args.file, window, args.homogenize)
    if args.command == "fiberfull-check":
        if args.q < 1:
            raise InputError(f"--q must be at least 1, got {args.q}.")
        return engine.fiberfull_check(args.file, args.q, window, args.homogenize)
    if args.command == "betti":
        return engine.betti(args.file)
    if args.command == "localcoh":
        return engine.localcoh(args.file, window)
    raise InputError(f"Unknown command '{args.command}'.")


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run the fibfull command line.

    Returns:
        0 on success, 1 on input errors, 2 on failed internal consistency checks or unexpected errors
    """
    try:
        args = parse_args(argv)
    except SystemExit as e:
        return 0 if e.code in (0, None) else 1

    level = "WARNING" if args.quiet else args.log_level
    logging.getLogger().setLevel(level)

    try:
        engine = FiberFullEngine(field=args.field, order=args.order, logger=logger)
        result = dispatch(engine, args)
        if args.json:
            text = dumps(envelope(args.command, result["report"]))
        else:
            text = result["text"]
        emit(text, args.out)

    except InvariantViolation as e:
        logger.error(f"Error: {e}")
        return 2

    except FiberFullError as e:
        logger.error(f"Error: {e}")
        return 1

    except Exception as e:
        logger.error(f"Error: {e}")
        return 2

    return 0


def main():
    """
    Main entry point for the fibfull command line.
    """
    return run()

if __name__ == "__main__":
    sys.exit(main())
