"""Command definitions and the argument parser."""

import argparse
from dataclasses import dataclass
from typing import List, Tuple

from src.config.strings import (
    COMPARE_DESCRIPTION,
    EVALUATE_DESCRIPTION,
    LINT_DESCRIPTION,
    PLOT_DATA_DESCRIPTION,
    RECOMMEND_DESCRIPTION,
    STATS_DESCRIPTION,
)
from src.core.doe import Statistic
from src.core.preprocess import ReferencePointKind


@dataclass
class CommandDef:
    """
    Represents a command of the command line.

    Attributes:
        command: The subcommand name.
        description: The description shown in the help.
    """
    command: str
    description: str


# Command descriptions
EVALUATE_COMMAND = CommandDef("evaluate", EVALUATE_DESCRIPTION)
COMPARE_COMMAND = CommandDef("compare", COMPARE_DESCRIPTION)
RECOMMEND_COMMAND = CommandDef("recommend", RECOMMEND_DESCRIPTION)
LINT_COMMAND = CommandDef("lint", LINT_DESCRIPTION)
STATS_COMMAND = CommandDef("stats", STATS_DESCRIPTION)
PLOT_DATA_COMMAND = CommandDef("plot-data", PLOT_DATA_DESCRIPTION)

COMMANDS: List[CommandDef] = [
    EVALUATE_COMMAND,
    COMPARE_COMMAND,
    RECOMMEND_COMMAND,
    LINT_COMMAND,
    STATS_COMMAND,
    PLOT_DATA_COMMAND,
]


def parse_ref_point(text: str) -> Tuple[float, ...]:
    """Parse 'v1,v2,...' into a point."""
    try:
        point = tuple(float(v) for v in text.split(','))
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid reference point '{text}', expected v1,v2,...") from None
    if len(point) < 2:
        raise argparse.ArgumentTypeError("a reference point needs at least two values")
    return point


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--manifest', required=True, help="manifest JSON file")
    common.add_argument('--indicator', action='append', default=[],
                        help="indicator to use instead of the recommended plan (repeatable)")
    common.add_argument('--ref-point', type=parse_ref_point, default=None,
                        help="explicit HV reference point in natural units, e.g. 13,11")
    common.add_argument('--ref-strategy', default=None,
                        choices=[k.value for k in ReferencePointKind if k is not ReferencePointKind.EXPLICIT],
                        help="HV reference point strategy")
    common.add_argument('--gd-p', type=float, default=None, help="GD exponent")
    common.add_argument('--grid-div', type=int, default=None, help="grid divisions per objective")
    common.add_argument('--no-normalize', action='store_true', help="compute indicators on raw values")
    common.add_argument('--out', default=None, help="output directory")
    common.add_argument('--strict', action='store_true', help="promote warnings to exit status 2")
    return common


def build_parser() -> argparse.ArgumentParser:
    """
    Build the command-line parser.

    Returns:
        argparse.ArgumentParser: Parser with one subcommand per CommandDef.
    """
    parser = argparse.ArgumentParser(
        prog='paretoeval',
        description="Evaluate and compare Pareto solution sets.",
    )
    common = _common_flags()
    subparsers = parser.add_subparsers(dest='command', required=True)
    subcommands = {
        cmd.command: subparsers.add_parser(cmd.command, help=cmd.description, parents=[common])
        for cmd in COMMANDS
    }
    compare = subcommands[COMPARE_COMMAND.command]
    compare.add_argument('first', help="first set, ALGORITHM[:RUN]")
    compare.add_argument('second', help="second set, ALGORITHM[:RUN]")
    subcommands[STATS_COMMAND.command].add_argument(
        '--statistic', action='append', default=[], choices=[s.value for s in Statistic],
        help="statistic compared between algorithms (repeatable, default mean)",
    )
    return parser
