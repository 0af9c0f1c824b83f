"""Compare command handler."""

import logging
from argparse import Namespace
from dataclasses import replace
from typing import Any, Dict, Sequence

from src.cli.manifest import Manifest, load_manifest, load_reference_front, load_runs, parse_selector
from src.cli.pipeline import Evaluator, RunOptions, prepare_sets, resolve_setup
from src.cli.report import render_compare, write_report
from src.core.doe import RunCollection
from src.core.errors import IndicatorArityError
from src.core.indicators import PROFILES, evaluate_pair, is_binary
from src.core.solution import better_relation


async def run_compare(manifest: Manifest, options: RunOptions, first: str, second: str) -> Dict[str, Any]:
    """
    Compare two selected sets with binary indicators, in both orders.

    Args:
        manifest: Loaded manifest.
        options: Command-line options; the indicators default to CI.
        first: ALGORITHM[:RUN] selector of the first set.
        second: ALGORITHM[:RUN] selector of the second set.

    Returns:
        dict: Both orderings per indicator and the dominance relation of the sets.
    """
    indicators: Sequence[str] = options.indicators or ('CI',)
    for name in indicators:
        if not is_binary(name):
            raise IndicatorArityError(
                f"{name} is {PROFILES[name].arity.value}; compare needs CI, C or EPS"
            )
    setup = resolve_setup(manifest, replace(options, indicators=tuple(indicators)))
    prepared = prepare_sets(
        load_runs(manifest),
        manifest.preferences,
        setup.mode,
        setup.objectives,
        load_reference_front(manifest),
    )
    evaluator = Evaluator(prepared)

    raw_a = parse_selector(first, prepared.collections)
    raw_b = parse_selector(second, prepared.collections)
    results = []
    for name, config in setup.entries:
        space = evaluator.space(config.normalization)
        collections = [RunCollection(algorithm, runs) for algorithm, runs in space.runs.items()]
        A = parse_selector(first, collections)
        B = parse_selector(second, collections)
        results.append({
            'indicator': name,
            'forward': evaluate_pair(name, A, B, config).value,
            'backward': evaluate_pair(name, B, A, config).value,
            'better': PROFILES[name].better.value,
            'config': config.to_dict(),
        })
        logging.info(f"{name}({first}, {second}) and {name}({second}, {first}) computed")
    return {
        'manifest': manifest.path.name,
        'first': first,
        'second': second,
        'relation': better_relation(raw_a, raw_b).value,
        'results': results,
    }


async def compare_command(args: Namespace) -> int:
    """
    Handle the compare command.

    Args:
        args: Parsed command-line arguments.

    Returns:
        int: Exit status.
    """
    manifest = load_manifest(args.manifest)
    options = RunOptions.from_args(args)
    report = await run_compare(manifest, options, args.first, args.second)
    text = render_compare(report)
    if options.out is not None:
        write_report(report, text, options.out / 'compare.json')
    print(text, end='')
    return 0
