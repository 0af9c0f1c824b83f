"""Plot-data command handler."""

import csv
import logging
from argparse import Namespace
from pathlib import Path
from typing import List

from src.config.settings import CSV_FLOAT_FORMAT, REPORTS_DIR, SCATTER_MAX_OBJECTIVES
from src.cli.manifest import Manifest, load_manifest, load_reference_front, load_runs, write_solution_set
from src.cli.pipeline import (
    Evaluator,
    RunOptions,
    prepare_sets,
    representative_runs,
    resolve_setup,
    selection_indicator,
)
from src.core.indicators import NormalizationMode
from src.core.preprocess import from_minimization


eval_log = logging.getLogger('evaluation')


async def write_plot_data(manifest: Manifest, options: RunOptions, out_dir: Path) -> List[Path]:
    """
    Write plot data of the representative run of every algorithm.

    Up to three evaluated objectives give one scatter CSV per algorithm in natural
    units; more give one long-format parallel-coordinates CSV of normalized values.

    Args:
        manifest: Loaded manifest.
        options: Command-line options.
        out_dir: Destination directory.

    Returns:
        list: Files written.
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
    indicator = selection_indicator(setup.entries)
    chosen = representative_runs(evaluator, setup.entries, indicator)
    runs = {rc.algorithm: rc.runs for rc in prepared.collections}

    out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    if len(setup.objectives) <= SCATTER_MAX_OBJECTIVES:
        for algorithm, index in chosen.items():
            run = runs[algorithm][index]
            if not len(run):
                eval_log.warning(f"Representative run '{run.name}' is empty; writing a header-only file")
            path = out_dir / f"scatter_{algorithm}.csv"
            write_solution_set(path, from_minimization(run))
            written.append(path)
        return written

    space = evaluator.space(NormalizationMode.COMBINED_FRONT)
    path = out_dir / 'parallel_coordinates.csv'
    with open(path, 'w', encoding='utf-8', newline='') as f:
        writer = csv.writer(f)
        writer.writerow(['set', 'solution_id', 'objective', 'value'])
        for algorithm, index in chosen.items():
            run = space.runs[algorithm][index]
            if not len(run):
                eval_log.warning(f"Representative run '{run.name}' is empty; no rows written for it")
            for position, solution in enumerate(run.solutions):
                solution_id = solution.id if solution.id is not None else str(position)
                for name, value in zip(run.names, solution.objectives):
                    writer.writerow([algorithm, solution_id, name, format(value, CSV_FLOAT_FORMAT)])
    written.append(path)
    return written


async def plot_data_command(args: Namespace) -> int:
    """
    Handle the plot-data command.

    Args:
        args: Parsed command-line arguments.

    Returns:
        int: Exit status.
    """
    manifest = load_manifest(args.manifest)
    options = RunOptions.from_args(args)
    out_dir = options.out or manifest.output.plot_data or REPORTS_DIR
    for path in await write_plot_data(manifest, options, Path(out_dir)):
        print(path)
    return 0
