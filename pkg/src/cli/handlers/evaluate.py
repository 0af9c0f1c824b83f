"""Evaluate command handler."""

import logging
from argparse import Namespace
from itertools import combinations, permutations
from typing import Any, Dict, List, Optional, Tuple

from src.config.settings import REPORTS_DIR
from src.cli.manifest import Manifest, load_manifest, load_reference_front, load_runs
from src.cli.pipeline import (
    CellResult,
    Evaluator,
    PreparedSets,
    RunOptions,
    Setup,
    aggregate,
    exit_status,
    prepare_sets,
    rank,
    representative_runs,
    resolve_setup,
    selection_indicator,
)
from src.cli.report import render_evaluation, write_report
from src.core.doe import doe_compare, per_objective_stats, scalarize_best
from src.core.errors import EvaluationError
from src.core.indicators import (
    IndicatorConfig,
    NormalizationMode,
    evaluate_pair,
    grid_diversity,
    is_binary,
)
from src.core.preprocess import from_minimization
from src.core.solution import SolutionSet


eval_log = logging.getLogger('evaluation')


def _pairwise(
    evaluator: Evaluator, entries: Tuple[Tuple[str, IndicatorConfig], ...], chosen: Dict[str, int]
) -> List[Dict[str, Any]]:
    """Binary indicators on the representative runs, in both orders."""
    rows = []
    for name, config in entries:
        if not is_binary(name):
            continue
        space = evaluator.space(config.normalization)
        for first, second in permutations(chosen, 2):
            A = space.runs[first][chosen[first]]
            B = space.runs[second][chosen[second]]
            row: Dict[str, Any] = {'indicator': name, 'first': first, 'second': second, 'error': None}
            try:
                row['value'] = evaluate_pair(name, A, B, config).value
            except EvaluationError as e:
                row.update(value=None, error=str(e))
            rows.append(row)
    return rows


def _joint(
    evaluator: Evaluator, entries: Tuple[Tuple[str, IndicatorConfig], ...], chosen: Dict[str, int]
) -> Dict[str, Dict[str, Optional[float]]]:
    """Grid diversity of the representative runs compared together, on the shared grid bounds."""
    joint = {}
    for name, config in entries:
        if name != 'DCI':
            continue
        try:
            space, config, reference = evaluator.context(config)
            sets = [space.runs[algorithm][index] for algorithm, index in chosen.items()]
            values = grid_diversity(sets, config.grid_divisions, reference.bounds)
        except (EvaluationError, ValueError) as e:
            eval_log.warning(f"Joint grid diversity failed: {e}")
            values = [None] * len(chosen)
        joint[name] = dict(zip(chosen, values))
    return joint


def _representatives(prepared: PreparedSets, chosen: Dict[str, int]) -> Dict[str, SolutionSet]:
    runs = {rc.algorithm: rc.runs for rc in prepared.collections}
    return {algorithm: runs[algorithm][index] for algorithm, index in chosen.items()}


def _doe(
    setup: Setup, representatives: Dict[str, SolutionSet]
) -> Tuple[Dict[str, Any], int]:
    """Descriptive statistics of the representative runs and their comparisons."""
    stats = {}
    for algorithm, run in representatives.items():
        stats[algorithm] = per_objective_stats(run).to_dict() if len(run) else None
    comparisons = []
    misleading = 0
    for statistic in dict.fromkeys(setup.mode.doe_stats):
        for first, second in combinations(representatives, 2):
            A, B = representatives[first], representatives[second]
            if not len(A) or not len(B):
                continue
            comparison = doe_compare(A, B, statistic)
            misleading += comparison.misleading
            comparisons.append({'first_set': first, 'second_set': second, **comparison.to_dict()})
    return {'stats': stats, 'comparisons': comparisons}, misleading


def _scalarized(
    manifest: Manifest, setup: Setup, evaluator: Evaluator, chosen: Dict[str, int]
) -> Optional[Dict[str, Any]]:
    """Weighted-sum best solution of each representative run, on normalized objectives."""
    weights = manifest.preferences.weights
    if weights is None:
        return None
    projected = [weights[i] for i in setup.objectives]
    total = sum(projected)
    if total <= 0:
        eval_log.warning("Weights of the evaluated objectives sum to zero; skipping the weighted sum")
        return None
    projected = [w / total for w in projected]
    normalization = NormalizationMode.COMBINED_FRONT if setup.mode.normalization else NormalizationMode.NONE
    space = evaluator.space(normalization)
    raw = _representatives(evaluator.prepared, chosen)
    result = {}
    for algorithm, index in chosen.items():
        run = space.runs[algorithm][index]
        if not len(run):
            continue
        solution, score = scalarize_best(run, projected)
        position = next(i for i, s in enumerate(run.solutions) if s is solution)
        natural = from_minimization(raw[algorithm]).solutions[position]
        result[algorithm] = {'solution': list(natural.objectives), 'id': natural.id, 'score': score}
    return result


def _failures(cells: List[CellResult]) -> int:
    return sum(cell.error is not None for cell in cells)


async def run_evaluation(manifest: Manifest, options: RunOptions) -> Dict[str, Any]:
    """
    Evaluate every algorithm and run of a manifest.

    Args:
        manifest: Loaded manifest.
        options: Command-line options.

    Returns:
        dict: The machine-readable report, without timestamps.
    """
    setup = resolve_setup(manifest, options)
    prepared = prepare_sets(
        load_runs(manifest),
        manifest.preferences,
        setup.mode,
        setup.objectives,
        load_reference_front(manifest),
    )
    evaluator = Evaluator(prepared)
    cells = await evaluator.evaluate_cells(setup.entries)
    table = aggregate(cells)
    indicator = selection_indicator(setup.entries)
    chosen = representative_runs(evaluator, setup.entries, indicator)

    pairwise = _pairwise(evaluator, setup.entries, chosen)
    doe, misleading = _doe(setup, _representatives(prepared, chosen))
    failures = _failures(cells) + sum(row['error'] is not None for row in pairwise)
    status = exit_status(setup.findings, options.strict, failures, misleading)

    names = [o.name for o in manifest.objectives]
    ranked = [name for name, _ in setup.entries if any(name in row for row in table.values())]
    joint = _joint(evaluator, setup.entries, chosen)
    scalarized = _scalarized(manifest, setup, evaluator, chosen)
    return {
        'manifest': manifest.path.name,
        'objectives': [names[i] for i in setup.objectives],
        'plan': setup.plan.to_dict() if setup.plan else None,
        'indicators': [{'name': name, 'config': config.to_dict()} for name, config in setup.entries],
        'preprocessing': {
            'removals': list(prepared.removals),
            'dropped': [names[i] for i in range(manifest.m) if i not in setup.objectives],
            'notes': list(prepared.notes),
        },
        'normalization': {
            mode.value: None if space.bounds is None else {
                'ideal': list(space.bounds.ideal),
                'nadir': list(space.bounds.nadir),
                'source': space.bounds.source.value,
            }
            for mode, space in evaluator.spaces.items()
        },
        'results': table,
        'ranking': {name: rank(table, name) for name in ranked},
        'representative_runs': {
            algorithm: {'run': index, 'indicator': indicator} for algorithm, index in chosen.items()
        },
        'pairwise': pairwise,
        'joint': joint,
        'doe': doe,
        'scalarized': scalarized,
        'lint': [f.to_dict() for f in setup.findings],
        'exit_status': status,
    }


async def evaluate_command(args: Namespace) -> int:
    """
    Handle the evaluate command.

    Args:
        args: Parsed command-line arguments.

    Returns:
        int: Exit status.
    """
    manifest = load_manifest(args.manifest)
    options = RunOptions.from_args(args)
    logging.info(f"Evaluating manifest {manifest.path}")

    report = await run_evaluation(manifest, options)
    text = render_evaluation(report)
    if options.out is not None:
        path = options.out / 'report.json'
    elif manifest.output.report is not None:
        path = manifest.output.report
    else:
        path = REPORTS_DIR / 'report.json'
    write_report(report, text, path)
    print(text, end='')
    logging.info(f"Report written to {path}")
    return report['exit_status']
