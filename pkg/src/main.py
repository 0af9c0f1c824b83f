"""Main application entry point."""

import sys
from typing import Awaitable, Callable, Dict, Optional, Sequence
from argparse import Namespace

from src.config.strings import FATAL_ERROR_MESSAGE
from src.utils.logger import setup_logger
from src.cli.commands import (
    COMPARE_COMMAND,
    EVALUATE_COMMAND,
    LINT_COMMAND,
    PLOT_DATA_COMMAND,
    RECOMMEND_COMMAND,
    STATS_COMMAND,
    build_parser,
)
from src.cli.handlers.advise import lint_command, recommend_command
from src.cli.handlers.compare import compare_command
from src.cli.handlers.evaluate import evaluate_command
from src.cli.handlers.plot_data import plot_data_command
from src.cli.handlers.stats import stats_command
from src.core.errors import EvaluationError


HANDLERS: Dict[str, Callable[[Namespace], Awaitable[int]]] = {
    EVALUATE_COMMAND.command: evaluate_command,
    COMPARE_COMMAND.command: compare_command,
    RECOMMEND_COMMAND.command: recommend_command,
    LINT_COMMAND.command: lint_command,
    STATS_COMMAND.command: stats_command,
    PLOT_DATA_COMMAND.command: plot_data_command,
}


async def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run one command.

    Args:
        argv: Command-line arguments, defaults to sys.argv.

    Returns:
        int: 0 when clean, 1 with warnings, 2 with errors or a runtime failure.
    """
    # Set up logging
    evaluation_logger, system_logger = setup_logger()

    args = build_parser().parse_args(argv)
    handler = HANDLERS[args.command]
    system_logger.info(f"Running {args.command} on {args.manifest}")
    try:
        status = await handler(args)
    except EvaluationError as e:
        system_logger.error(f"{args.command} failed: {e}")
        print(FATAL_ERROR_MESSAGE.format(error=e), file=sys.stderr)
        return 2
    except Exception as e:
        system_logger.error(f"Error running {args.command}: {str(e)}", exc_info=True)
        print(FATAL_ERROR_MESSAGE.format(error=e), file=sys.stderr)
        return 2
    evaluation_logger.info(f"{args.command} finished with exit status {status}")
    return status
