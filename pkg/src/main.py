"""Main entry point for the splitcubic command."""
from __future__ import annotations

import sys
from typing import List, Optional

from .core.config import settings
from .core.exceptions import SplitCubicError, UsageError
from .core.logging import get_logger, setup_logging
from .infrastructure.cli import HANDLERS, build_parser, render


def main(argv: Optional[List[str]] = None) -> int:
    """Run one command and return its exit code.

    Reports go to standard out, diagnostics to standard error. Usage errors
    exit 64, domain errors 2 and failed verifications 1.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        sys.stderr.write(f"{e.message}\n")
        parser.print_usage(sys.stderr)
        return e.exit_code

    setup_logging("DEBUG" if args.debug else None, args.log_format)
    logger = get_logger("main")
    logger.debug("command_started", command=args.command, environment=settings.environment)

    try:
        report, exit_code = HANDLERS[args.command](args)
        output = render(report, args.format or settings.default_format)
    except SplitCubicError as e:
        logger.error(
            "command_failed",
            command=args.command,
            error_code=e.error_code,
            error=e.message,
            details=e.details,
        )
        sys.stderr.write(f"error: {e.message}\n")
        return e.exit_code

    sys.stdout.write(output)
    if exit_code:
        logger.warning("verification_failed", command=args.command, exit_code=exit_code)
    return exit_code


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
