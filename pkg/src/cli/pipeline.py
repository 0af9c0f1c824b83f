"""Evaluation pipeline shared by the command handlers."""

import asyncio
import json
import logging
from argparse import Namespace
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from src.config.settings import MAX_WORKERS
from src.config.strings import RESURVIVOR_BOUNDS_MESSAGE
from src.cli.manifest import Manifest
from src.core.doe import RunCollection, select_representative_run
from src.core.errors import EvaluationError
from src.core.guidance import (
    EvaluationContext,
    EvaluationMode,
    EvaluationPlan,
    LintWarning,
    Severity,
    lint,
    recommend,
)
from src.core.indicators import (
    PROFILES,
    Better,
    IndicatorConfig,
    IndicatorResult,
    NormalizationMode,
    ReferenceData,
    ReferenceSource,
    build_reference_data,
    canonical_name,
    evaluate,
    is_binary,
)
from src.core.preprocess import (
    ConstraintKind,
    NormalizationBounds,
    NormalizationSource,
    PreferenceSpec,
    ReferencePointKind,
    ReferencePointStrategy,
    apply_clear_preferences,
    apply_vague_preferences,
    compute_bounds,
    find_violations,
    from_minimization,
    normalize,
    screen_trivial,
    to_minimization,
    to_minimization_point,
)
from src.core.solution import ObjectiveMeta, SolutionSet, project


eval_log = logging.getLogger('evaluation')


@dataclass(frozen=True)
class RunOptions:
    """
    Command-line options shared by the commands.

    Attributes:
        indicators: Indicators chosen on the command line.
        ref_point: Explicit HV reference point in natural units.
        ref_strategy: HV reference point strategy name.
        gd_p: GD exponent.
        grid_divisions: Grid divisions.
        no_normalize: Skip normalization.
        out: Output directory.
        strict: Promote warnings to exit status 2.
    """
    indicators: Tuple[str, ...] = ()
    ref_point: Optional[Tuple[float, ...]] = None
    ref_strategy: Optional[str] = None
    gd_p: Optional[float] = None
    grid_divisions: Optional[int] = None
    no_normalize: bool = False
    out: Optional[Path] = None
    strict: bool = False

    @classmethod
    def from_args(cls, args: Namespace) -> 'RunOptions':
        """Collect the common flags from parsed arguments."""
        return cls(
            indicators=tuple(canonical_name(n) for n in (getattr(args, 'indicator', None) or ())),
            ref_point=getattr(args, 'ref_point', None),
            ref_strategy=getattr(args, 'ref_strategy', None),
            gd_p=getattr(args, 'gd_p', None),
            grid_divisions=getattr(args, 'grid_div', None),
            no_normalize=bool(getattr(args, 'no_normalize', False)),
            out=Path(args.out) if getattr(args, 'out', None) else None,
            strict=bool(getattr(args, 'strict', False)),
        )

    def overrides(self, manifest: Manifest) -> Dict[str, Any]:
        """Manifest indicator overrides with command-line flags on top."""
        merged = dict(manifest.indicator_overrides)
        if self.gd_p is not None:
            merged['gd_p'] = self.gd_p
        if self.grid_divisions is not None:
            merged['grid_divisions'] = self.grid_divisions
        if self.no_normalize:
            merged['normalization'] = NormalizationMode.NONE.value
        if self.ref_strategy is not None:
            merged.pop('ref_point', None)
            merged['hv_strategy'] = self.ref_strategy
        if self.ref_point is not None:
            merged['ref_point'] = list(self.ref_point)
        return merged


@dataclass(frozen=True)
class Setup:
    """
    What will be evaluated and how.

    Attributes:
        entries: (indicator, config) pairs; explicit reference points are in natural units.
        mode: Evaluation mode driving preprocessing and lint.
        findings: Lint findings for the setup.
        objectives: Original indices of the evaluated objectives.
        plan: The recommended plan, when no indicators were chosen.
    """
    entries: Tuple[Tuple[str, IndicatorConfig], ...]
    mode: EvaluationMode
    findings: Tuple[LintWarning, ...]
    objectives: Tuple[int, ...]
    plan: Optional[EvaluationPlan] = None


def resolve_setup(manifest: Manifest, options: RunOptions, recommend_only: bool = False) -> Setup:
    """
    Decide the indicators: the chosen ones, or the recommended plan.

    Args:
        manifest: Loaded manifest.
        options: Command-line options.
        recommend_only: Ignore chosen indicators and follow the recommended plan.

    Returns:
        Setup: Indicators, mode, lint findings and evaluated objectives.
    """
    prefs = manifest.preferences
    overrides = options.overrides(manifest)
    chosen = () if recommend_only else (options.indicators or manifest.indicators)
    if not chosen:
        context = EvaluationContext(
            manifest.objectives, reference_front=manifest.reference_front is not None
        )
        plan = recommend(prefs, manifest.m, context)
        entries = tuple((i.name, i.config.with_overrides(overrides)) for i in plan.indicators)
        mode = EvaluationMode.from_plan(plan)
        objectives = plan.objectives
    else:
        plan = None
        base = IndicatorConfig().with_overrides(overrides)
        if manifest.reference_front is not None:
            base = replace(base, reference_source=ReferenceSource.SUPPLIED)
        entries = tuple((canonical_name(name), base) for name in chosen)
        if manifest.evaluation_mode is not None:
            mode = manifest.evaluation_mode
        else:
            mode = EvaluationMode(normalization=base.normalization is not NormalizationMode.NONE)
        dropped = set()
        if mode.clear_transfer:
            dropped = {c.objective for c in prefs.clear if c.kind is ConstraintKind.EXACTLY_BEST}
        objectives = tuple(i for i in range(manifest.m) if i not in dropped)

    if manifest.reference_front is not None:
        entries = tuple(
            (name, replace(config, reference_source=ReferenceSource.SUPPLIED)) for name, config in entries
        )
    findings = lint(entries, prefs, len(objectives), mode)
    return Setup(entries, mode, tuple(findings), tuple(objectives), plan)


@dataclass(frozen=True)
class PreparedSets:
    """
    Runs after preprocessing, in minimization orientation over the evaluated objectives.

    Attributes:
        collections: Transformed runs per algorithm.
        meta: Natural metadata of the evaluated objectives.
        objectives: Original indices of the evaluated objectives.
        removals: Solutions removed by screening or clear transfer.
        reference_front: Supplied reference front, transformed the same way.
        notes: Notes for the report.
    """
    collections: Tuple[RunCollection, ...]
    meta: Tuple[ObjectiveMeta, ...]
    objectives: Tuple[int, ...]
    removals: Tuple[Dict[str, Any], ...] = ()
    reference_front: Optional[SolutionSet] = None
    notes: Tuple[str, ...] = ()

    @property
    def nonempty_runs(self) -> List[SolutionSet]:
        return [run for rc in self.collections for run in rc.runs if len(run)]


def _removal_records(A: SolutionSet, rules: Sequence, stage: str) -> List[Dict[str, Any]]:
    natural = from_minimization(A)
    by_id = {id(s): n for s, n in zip(A.solutions, natural.solutions)}
    return [
        {
            'set': A.name,
            'stage': stage,
            'solution': list(by_id[id(solution)].objectives),
            'rule': rule.describe(A.names),
        }
        for solution, rule in find_violations(A, rules)
    ]


def prepare_sets(
    collections: Sequence[RunCollection],
    prefs: PreferenceSpec,
    mode: EvaluationMode,
    objectives: Sequence[int],
    reference_front: Optional[SolutionSet] = None,
) -> PreparedSets:
    """
    Convert, screen and transfer preferences into every run.

    The order is minimization conversion, screening, clear transfer, vague transfer,
    then projection onto the evaluated objectives.

    Args:
        collections: Runs as loaded.
        prefs: Decision-maker preferences.
        mode: Which transfers are carried out.
        objectives: Original indices of the evaluated objectives.
        reference_front: Supplied reference front, as loaded.

    Returns:
        PreparedSets: Transformed runs.
    """
    removals: List[Dict[str, Any]] = []
    notes: List[str] = []
    clear = bool(prefs.clear) and mode.clear_transfer
    vague = bool(prefs.vague) and mode.vague_transfer

    def transform(A: SolutionSet, record: bool) -> SolutionSet:
        A = to_minimization(A)
        if prefs.screening:
            if record:
                removals.extend(_removal_records(A, prefs.screening, 'screen'))
            A = screen_trivial(A, prefs.screening)
        if clear:
            if record:
                removals.extend(_removal_records(A, prefs.clear, 'clear'))
            A, _ = apply_clear_preferences(A, prefs)
        if vague:
            A = apply_vague_preferences(A, prefs)
        if len(objectives) != A.m:
            A = project(A, objectives)
        return A

    transformed = tuple(
        RunCollection(rc.algorithm, tuple(transform(run, True) for run in rc.runs))
        for rc in collections
    )
    front = None
    if reference_front is not None:
        front = to_minimization(reference_front)
        if vague:
            front = apply_vague_preferences(front, prefs)
        if len(objectives) != front.m:
            front = project(front, objectives)
    if clear:
        notes.append(RESURVIVOR_BOUNDS_MESSAGE)
    meta = tuple(collections[0].meta[i] for i in objectives)
    return PreparedSets(transformed, meta, tuple(objectives), tuple(removals), front, tuple(notes))


@dataclass(frozen=True)
class EvaluationSpace:
    """
    Runs in the space an indicator is computed in.

    Attributes:
        runs: Runs per algorithm.
        reference_front: Supplied front in the same space.
        bounds: Normalization bounds, None for raw values.
    """
    runs: Dict[str, Tuple[SolutionSet, ...]]
    reference_front: Optional[SolutionSet]
    bounds: Optional[NormalizationBounds]

    @property
    def nonempty_runs(self) -> List[SolutionSet]:
        return [run for runs in self.runs.values() for run in runs if len(run)]

    @property
    def grid_bounds(self) -> Optional[NormalizationBounds]:
        """Bounds of the space itself: the unit box once normalized, None for raw values."""
        if self.bounds is None:
            return None
        m = len(self.bounds.ideal)
        return NormalizationBounds((0.0,) * m, (1.0,) * m, self.bounds.source)


def build_space(prepared: PreparedSets, normalization: NormalizationMode) -> EvaluationSpace:
    """
    Normalize the prepared runs, or keep them raw.

    Args:
        prepared: Transformed runs.
        normalization: Normalization mode.

    Returns:
        EvaluationSpace: Runs and reference front in the requested space.
    """
    raw = {rc.algorithm: rc.runs for rc in prepared.collections}
    basis = prepared.nonempty_runs
    if prepared.reference_front is not None and len(prepared.reference_front):
        basis = basis + [prepared.reference_front]
    if normalization is NormalizationMode.NONE or not basis:
        return EvaluationSpace(raw, prepared.reference_front, None)
    source = (
        NormalizationSource.HARD_BOUNDS if normalization is NormalizationMode.HARD_BOUNDS
        else NormalizationSource.COMBINED_FRONT
    )
    bounds = compute_bounds(basis, source)
    runs = {name: tuple(normalize(list(sets), bounds)) for name, sets in raw.items()}
    front = None
    if prepared.reference_front is not None:
        front = normalize([prepared.reference_front], bounds)[0]
    return EvaluationSpace(runs, front, bounds)


def _space_config(config: IndicatorConfig, prepared: PreparedSets, space: EvaluationSpace) -> IndicatorConfig:
    """Move an explicit natural-unit reference point into the evaluation space."""
    strategy = config.hv_strategy
    if strategy.kind is not ReferencePointKind.EXPLICIT:
        return config
    point = list(strategy.point)
    if len(point) != len(prepared.objectives):
        point = [point[i] for i in prepared.objectives]
    template = prepared.collections[0].runs[0]
    point = list(to_minimization_point(template, point))
    if space.bounds is not None:
        point = list(space.bounds.scale_point(point))
    return replace(config, hv_strategy=ReferencePointStrategy(ReferencePointKind.EXPLICIT, tuple(point)))


@dataclass(frozen=True)
class CellResult:
    """
    One (algorithm, run, indicator) evaluation.

    Attributes:
        algorithm: Algorithm name.
        run: Run index.
        indicator: Canonical indicator name.
        result: The result, or None on failure.
        error: Failure message.
    """
    algorithm: str
    run: int
    indicator: str
    result: Optional[IndicatorResult] = None
    error: Optional[str] = None


@dataclass
class Evaluator:
    """
    Evaluates indicators over prepared runs, building shared reference data once.

    Attributes:
        prepared: Transformed runs.
        spaces: Evaluation spaces by normalization mode.
        references: Reference data by space and configuration.
    """
    prepared: PreparedSets
    spaces: Dict[NormalizationMode, EvaluationSpace] = field(default_factory=dict)
    references: Dict[str, ReferenceData] = field(default_factory=dict)

    def space(self, normalization: NormalizationMode) -> EvaluationSpace:
        if normalization not in self.spaces:
            self.spaces[normalization] = build_space(self.prepared, normalization)
        return self.spaces[normalization]

    def context(self, config: IndicatorConfig) -> Tuple[EvaluationSpace, IndicatorConfig, ReferenceData]:
        """Space, space-adjusted config and reference data for a configuration."""
        space = self.space(config.normalization)
        config = _space_config(config, self.prepared, space)
        key = json.dumps(config.to_dict(), sort_keys=True)
        if key not in self.references:
            reference = build_reference_data(space.nonempty_runs, config, space.reference_front)
            if space.bounds is not None:
                reference = replace(reference, bounds=space.grid_bounds)
            self.references[key] = reference
        return space, config, self.references[key]

    async def evaluate_cells(self, entries: Sequence[Tuple[str, IndicatorConfig]]) -> List[CellResult]:
        """
        Evaluate every unary entry on every run, concurrently.

        Args:
            entries: (indicator, config) pairs; binary-only indicators are skipped.

        Returns:
            list: Cell results ordered by entry, algorithm and run.
        """
        semaphore = asyncio.Semaphore(MAX_WORKERS)
        jobs = []
        for name, config in entries:
            if is_binary(name) and not PROFILES[name].unary_form:
                continue
            try:
                space, cfg, reference = self.context(config)
            except (EvaluationError, ValueError) as e:
                for rc in self.prepared.collections:
                    for index in range(len(rc.runs)):
                        jobs.append(self._failed(rc.algorithm, index, name, str(e)))
                continue
            for rc in self.prepared.collections:
                for index, run in enumerate(space.runs[rc.algorithm]):
                    jobs.append(self._cell(semaphore, rc.algorithm, index, name, run, reference, cfg))
        return list(await asyncio.gather(*jobs))

    @staticmethod
    async def _failed(algorithm: str, run: int, name: str, error: str) -> CellResult:
        return CellResult(algorithm, run, name, error=error)

    @staticmethod
    async def _cell(
        semaphore: asyncio.Semaphore,
        algorithm: str,
        run: int,
        name: str,
        A: SolutionSet,
        reference: ReferenceData,
        config: IndicatorConfig,
    ) -> CellResult:
        async with semaphore:
            try:
                result = await asyncio.to_thread(evaluate, name, A, reference, config)
            except (EvaluationError, ValueError) as e:
                eval_log.warning(f"{name} on {A.name} failed: {e}")
                return CellResult(algorithm, run, name, error=str(e))
        return CellResult(algorithm, run, name, result=result)


def aggregate(cells: Sequence[CellResult]) -> Dict[str, Dict[str, Dict[str, Any]]]:
    """Per algorithm and indicator: per-run values with their mean and median."""
    table: Dict[str, Dict[str, Dict[str, Any]]] = {}
    for cell in cells:
        entry = table.setdefault(cell.algorithm, {}).setdefault(
            cell.indicator, {'runs': [], 'mean': None, 'median': None}
        )
        if cell.result is not None:
            entry['runs'].append({'run': cell.run, **cell.result.to_dict()})
        else:
            entry['runs'].append({'run': cell.run, 'value': None, 'error': cell.error})
    for indicators in table.values():
        for entry in indicators.values():
            values = [r['value'] for r in entry['runs'] if r['value'] is not None]
            if values:
                entry['mean'] = float(np.mean(values))
                entry['median'] = float(np.median(values))
    return table


def rank(table: Dict[str, Dict[str, Dict[str, Any]]], indicator: str) -> List[str]:
    """Algorithms ordered from best to worst median; algorithms without a value come last."""
    better = PROFILES[indicator].better
    scored = []
    missing = []
    for algorithm, indicators in table.items():
        median = indicators.get(indicator, {}).get('median')
        if median is None:
            missing.append(algorithm)
        else:
            scored.append((-median if better is Better.HIGHER else median, algorithm))
    return [algorithm for _, algorithm in sorted(scored)] + sorted(missing)


def representative_runs(
    evaluator: Evaluator, entries: Sequence[Tuple[str, IndicatorConfig]], indicator: Optional[str]
) -> Dict[str, int]:
    """
    Run per algorithm whose indicator value is closest to the median over its runs.

    Args:
        evaluator: Evaluator holding the prepared runs and the shared reference data.
        entries: (indicator, config) pairs in use.
        indicator: Indicator driving the choice; the first run is used without one.

    Returns:
        dict: Run index per algorithm.
    """
    algorithms = [rc.algorithm for rc in evaluator.prepared.collections]
    config = next((c for name, c in entries if name == indicator), None)
    if config is None:
        return {algorithm: 0 for algorithm in algorithms}
    try:
        space, config, reference = evaluator.context(config)
    except (EvaluationError, ValueError) as e:
        eval_log.warning(f"Cannot select representative runs by {indicator}: {e}")
        return {algorithm: 0 for algorithm in algorithms}

    chosen: Dict[str, int] = {}
    for algorithm in algorithms:
        runs = RunCollection(algorithm, space.runs[algorithm])
        try:
            chosen[algorithm] = select_representative_run(runs, indicator, config, reference)
        except (EvaluationError, ValueError) as e:
            eval_log.warning(f"Representative run of '{algorithm}' defaults to the first: {e}")
            chosen[algorithm] = 0
    return chosen


def selection_indicator(entries: Sequence[Tuple[str, IndicatorConfig]]) -> Optional[str]:
    """HV if evaluated, otherwise the first unary indicator."""
    names = [name for name, _ in entries if not is_binary(name) or PROFILES[name].unary_form]
    if 'HV' in names:
        return 'HV'
    return names[0] if names else None


def exit_status(
    findings: Sequence[LintWarning], strict: bool = False, failures: int = 0, warnings: int = 0
) -> int:
    """
    Exit status of a command.

    Args:
        findings: Lint findings.
        strict: Promote warnings to errors.
        failures: Indicator evaluations that failed at runtime.
        warnings: Other warnings, such as misleading DOE comparisons.

    Returns:
        int: 2 with lint errors or runtime failures, 1 with warnings (2 under --strict), else 0.
    """
    severities = {f.severity for f in findings}
    if Severity.ERROR in severities or failures:
        return 2
    if Severity.WARNING in severities or warnings:
        return 2 if strict else 1
    return 0
