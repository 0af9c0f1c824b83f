"""Manifest and solution-set file handling."""

import csv
import io
import json
import logging
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

from src.config.settings import CSV_FLOAT_FORMAT
from src.config.strings import EMPTY_CSV_MESSAGE
from src.core.doe import RunCollection
from src.core.errors import CsvFormatError, EvaluationError, ManifestError
from src.core.guidance import EvaluationMode
from src.core.indicators import canonical_name
from src.core.preprocess import PreferenceSpec
from src.core.solution import Direction, ObjectiveMeta, Solution, SolutionSet


eval_log = logging.getLogger('evaluation')

MANIFEST_FIELDS = {
    'objectives', 'algorithms', 'preferences', 'indicators', 'indicator_overrides',
    'evaluation_mode', 'reference_front', 'output',
}


@dataclass(frozen=True)
class AlgorithmEntry:
    """
    One algorithm of the manifest.

    Attributes:
        name: Algorithm name.
        runs: Paths of the per-run CSV files.
    """
    name: str
    runs: Tuple[Path, ...]


@dataclass(frozen=True)
class OutputPaths:
    report: Optional[Path] = None
    plot_data: Optional[Path] = None


@dataclass(frozen=True)
class Manifest:
    """
    A parsed evaluation manifest.

    Attributes:
        path: Manifest file.
        objectives: Objective metadata in natural orientation.
        algorithms: Algorithms with their run files.
        preferences: Decision-maker preferences.
        indicators: Explicitly chosen indicators; empty means "recommend".
        indicator_overrides: Partial indicator configuration.
        evaluation_mode: How the evaluation is carried out, if declared.
        reference_front: CSV of a known Pareto front, if any.
        output: Output locations.
    """
    path: Path
    objectives: Tuple[ObjectiveMeta, ...]
    algorithms: Tuple[AlgorithmEntry, ...]
    preferences: PreferenceSpec = field(default_factory=PreferenceSpec)
    indicators: Tuple[str, ...] = ()
    indicator_overrides: Mapping[str, Any] = field(default_factory=dict)
    evaluation_mode: Optional[EvaluationMode] = None
    reference_front: Optional[Path] = None
    output: OutputPaths = field(default_factory=OutputPaths)

    @property
    def m(self) -> int:
        return len(self.objectives)

    @property
    def names(self) -> List[str]:
        return [o.name for o in self.objectives]


def _objective(data: Mapping[str, Any]) -> ObjectiveMeta:
    unknown = set(data) - {'name', 'direction', 'units', 'hard_bounds'}
    if unknown:
        raise ManifestError(f"Unknown objective fields: {sorted(unknown)}")
    bounds = data.get('hard_bounds')
    return ObjectiveMeta(
        name=data['name'],
        direction=Direction(data.get('direction', Direction.MINIMIZE.value)),
        units=data.get('units'),
        hard_bounds=tuple(bounds) if bounds is not None else None,
    )


def load_manifest(path: Path) -> Manifest:
    """
    Load and validate a manifest.

    Relative paths are resolved against the manifest's directory.

    Args:
        path: Manifest JSON file.

    Returns:
        Manifest: The parsed manifest.

    Raises:
        ManifestError: Unreadable file, unknown fields, or missing run files.
    """
    path = Path(path)
    try:
        with open(path, 'r', encoding='utf-8') as f:
            data = json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        raise ManifestError(f"Cannot read manifest {path}: {e}") from e
    if not isinstance(data, dict):
        raise ManifestError(f"Manifest {path} must be a JSON object")
    unknown = set(data) - MANIFEST_FIELDS
    if unknown:
        raise ManifestError(f"Unknown manifest fields: {sorted(unknown)}")

    base = path.parent

    def resolve(value: str) -> Path:
        candidate = Path(value)
        return candidate if candidate.is_absolute() else base / candidate

    try:
        objectives = tuple(_objective(o) for o in data['objectives'])
        if not objectives:
            raise ManifestError("At least one objective is required")
        names = [o.name for o in objectives]
        algorithms = tuple(
            AlgorithmEntry(a['name'], tuple(resolve(r) for r in a['runs']))
            for a in data['algorithms']
        )
        preferences = PreferenceSpec.from_dict(data.get('preferences'), names)
        indicators = tuple(canonical_name(n) for n in data.get('indicators', ()))
        mode = data.get('evaluation_mode')
        output = data.get('output') or {}
        if set(output) - {'report', 'plot_data'}:
            raise ManifestError(f"Unknown output fields: {sorted(set(output) - {'report', 'plot_data'})}")
        manifest = Manifest(
            path=path,
            objectives=objectives,
            algorithms=algorithms,
            preferences=preferences,
            indicators=indicators,
            indicator_overrides=dict(data.get('indicator_overrides') or {}),
            evaluation_mode=EvaluationMode.from_dict(mode) if mode is not None else None,
            reference_front=resolve(data['reference_front']) if data.get('reference_front') else None,
            output=OutputPaths(
                report=resolve(output['report']) if output.get('report') else None,
                plot_data=resolve(output['plot_data']) if output.get('plot_data') else None,
            ),
        )
    except ManifestError:
        raise
    except EvaluationError as e:
        raise ManifestError(f"Invalid manifest {path}: {e}") from e
    except (KeyError, TypeError, ValueError) as e:
        raise ManifestError(f"Invalid manifest {path}: {e!r}") from e

    if not manifest.algorithms:
        raise ManifestError("At least one algorithm is required")
    for algorithm in manifest.algorithms:
        if not algorithm.runs:
            raise ManifestError(f"Algorithm '{algorithm.name}' lists no runs")
        for run in algorithm.runs:
            if not run.is_file():
                raise ManifestError(f"Run file not found: {run}")
    if manifest.reference_front is not None and not manifest.reference_front.is_file():
        raise ManifestError(f"Reference front not found: {manifest.reference_front}")
    return manifest


def load_solution_set(path: Path, meta: Sequence[ObjectiveMeta], name: Optional[str] = None) -> SolutionSet:
    """
    Read a solution set from CSV.

    The first row holds the objective names, optionally preceded by an `id` column.

    Args:
        path: CSV file.
        meta: Objective metadata the header must match.
        name: Set name, defaults to the file stem.

    Returns:
        SolutionSet: Parsed set in natural orientation, row order preserved.

    Raises:
        CsvFormatError: Bad encoding or header, wrong column count, non-numeric or non-finite cell.
    """
    path = Path(path)
    expected = [m.name for m in meta]
    solutions = []
    raw = path.read_bytes()
    try:
        text = raw.decode('utf-8')
    except UnicodeDecodeError as e:
        line = raw.count(b'\n', 0, e.start) + 1
        raise CsvFormatError(f"invalid UTF-8 byte at offset {e.start}", path, line) from None
    with io.StringIO(text, newline='') as f:
        reader = csv.reader(f)
        header = next(reader, None)
        if header is None:
            raise CsvFormatError("missing header row", path, 1)
        header = [cell.strip() for cell in header]
        has_id = bool(header) and header[0] == 'id'
        columns = header[1:] if has_id else header
        if columns != expected:
            raise CsvFormatError(f"header {columns} does not match objectives {expected}", path, 1)
        width = len(header)
        for row in reader:
            line = reader.line_num
            if not row or all(not cell.strip() for cell in row):
                continue
            if len(row) != width:
                raise CsvFormatError(f"expected {width} cells, got {len(row)}", path, line)
            cells = row[1:] if has_id else row
            try:
                values = tuple(float(cell) for cell in cells)
            except ValueError:
                raise CsvFormatError(f"non-numeric cell in {row}", path, line) from None
            if not all(math.isfinite(v) for v in values):
                raise CsvFormatError(f"non-finite value in {row}", path, line)
            solutions.append(Solution(values, id=row[0].strip() if has_id else None))
    if not solutions:
        eval_log.warning(EMPTY_CSV_MESSAGE.format(path=path))
    return SolutionSet(name or path.stem, tuple(meta), tuple(solutions))


def write_solution_set(path: Path, A: SolutionSet) -> None:
    """Write a set as CSV with enough digits to read the same values back."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    has_id = any(s.id is not None for s in A)
    with open(path, 'w', encoding='utf-8', newline='') as f:
        writer = csv.writer(f)
        writer.writerow((['id'] if has_id else []) + A.names)
        for s in A:
            values = [format(v, CSV_FLOAT_FORMAT) for v in s.objectives]
            writer.writerow(([s.id or ''] if has_id else []) + values)


def load_runs(manifest: Manifest) -> List[RunCollection]:
    """Load every run file of the manifest, named ALGORITHM:RUN."""
    collections = []
    for algorithm in manifest.algorithms:
        runs = [
            load_solution_set(run, manifest.objectives, name=f"{algorithm.name}:{index}")
            for index, run in enumerate(algorithm.runs)
        ]
        collections.append(RunCollection(algorithm.name, tuple(runs)))
    return collections


def load_reference_front(manifest: Manifest) -> Optional[SolutionSet]:
    if manifest.reference_front is None:
        return None
    return load_solution_set(manifest.reference_front, manifest.objectives, name='reference_front')


def parse_selector(selector: str, collections: Sequence[RunCollection]) -> SolutionSet:
    """
    Resolve an ALGORITHM[:RUN] selector.

    Without a run index the runs of the algorithm are pooled into one set.

    Args:
        selector: Algorithm name, optionally followed by ':' and a run index.
        collections: Loaded runs.

    Returns:
        SolutionSet: The selected set.
    """
    name, _, run = selector.partition(':')
    by_name: Dict[str, RunCollection] = {rc.algorithm: rc for rc in collections}
    if name not in by_name:
        raise ManifestError(f"Unknown algorithm '{name}', expected one of {sorted(by_name)}")
    rc = by_name[name]
    if run:
        try:
            return rc.runs[int(run)]
        except (ValueError, IndexError):
            raise ManifestError(f"Invalid run '{run}' for algorithm '{name}' ({len(rc.runs)} runs)") from None
    pooled = [s for r in rc.runs for s in r.solutions]
    return rc.runs[0].with_solutions(pooled, name=name)
