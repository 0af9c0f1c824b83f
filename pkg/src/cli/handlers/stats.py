"""Stats command handler."""

from argparse import Namespace
from itertools import combinations
from typing import Any, Dict, Sequence

from src.cli.manifest import Manifest, load_manifest, load_runs, parse_selector
from src.cli.pipeline import RunOptions
from src.cli.report import render_stats, write_report
from src.core.doe import Statistic, doe_compare, per_objective_stats


def run_stats(manifest: Manifest, statistics: Sequence[Statistic]) -> Dict[str, Any]:
    """
    Per-objective statistics of every run and pairwise comparisons of the pooled runs.

    Args:
        manifest: Loaded manifest.
        statistics: Statistics to compare the algorithms by.

    Returns:
        dict: Statistics per run, comparisons with their misleading flags.
    """
    collections = load_runs(manifest)
    runs = []
    for rc in collections:
        for run in rc.runs:
            if len(run):
                runs.append({'set': run.name, 'stats': per_objective_stats(run).to_dict()})
            else:
                runs.append({'set': run.name, 'error': f"'{run.name}' is empty"})

    pooled = {rc.algorithm: parse_selector(rc.algorithm, collections) for rc in collections}
    comparisons = []
    for statistic in statistics:
        for first, second in combinations(pooled, 2):
            A, B = pooled[first], pooled[second]
            if not len(A) or not len(B):
                continue
            comparison = doe_compare(A, B, statistic)
            comparisons.append({'first_set': first, 'second_set': second, **comparison.to_dict()})
    return {'manifest': manifest.path.name, 'runs': runs, 'comparisons': comparisons}


async def stats_command(args: Namespace) -> int:
    """
    Handle the stats command.

    Args:
        args: Parsed command-line arguments.

    Returns:
        int: 1 when a comparison contradicts set dominance (2 with --strict), else 0.
    """
    manifest = load_manifest(args.manifest)
    options = RunOptions.from_args(args)
    if args.statistic:
        statistics = [Statistic(s) for s in dict.fromkeys(args.statistic)]
    elif manifest.evaluation_mode is not None and manifest.evaluation_mode.doe_stats:
        statistics = list(manifest.evaluation_mode.doe_stats)
    else:
        statistics = [Statistic.MEAN]

    report = run_stats(manifest, statistics)
    text = render_stats(report)
    if options.out is not None:
        write_report(report, text, options.out / 'stats.json')
    print(text, end='')
    if any(row['misleading'] for row in report['comparisons']):
        return 2 if options.strict else 1
    return 0
