import sys
from typing import List, Optional

from ..utils.config import Config
from ..utils.errors import (
    ArithPermError,
    ConstructionError,
    InvalidArgumentError,
    OutOfRangeError,
    PrecisionError,
    ResourceLimitError,
)
from ..utils.logger import get_logger, set_level
from .parser import build_parser

logger = get_logger("cli")

EXIT_USAGE = 2
EXIT_RESOURCE = 3
EXIT_FAILURE = 1


def main(argv: Optional[List[str]] = None) -> int:
    """Run one command and return its exit code"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse exits 2 on bad flags and 0 on --help
        return int(e.code or 0)

    try:
        Config.validate()
    except ValueError as e:
        logger.error(f"Invalid configuration: {e}")
        return EXIT_USAGE

    if args.verbose:
        set_level("INFO")

    try:
        record, code = args.func(args)
    except (InvalidArgumentError, OutOfRangeError) as e:
        logger.error(str(e))
        return EXIT_USAGE
    except ResourceLimitError as e:
        logger.error(f"Refused: {e}")
        return EXIT_RESOURCE
    except (PrecisionError, ConstructionError) as e:
        logger.error(f"Internal check failed: {e}")
        return EXIT_FAILURE
    except ArithPermError as e:
        logger.error(f"Error: {e}")
        return EXIT_FAILURE

    print(record.render(args.format))
    sys.stdout.flush()
    return code
