"""Evaluation planning and linting of evaluation setups."""

from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

from src.config.settings import HV_MAX_OBJECTIVES, SCATTER_MAX_OBJECTIVES
from src.config.strings import (
    ASPECT_GAP_MESSAGE,
    DOE_SOLE_MESSAGE,
    EXTREME_MISMATCH_MESSAGE,
    HV_DIM_MESSAGE,
    HV_REFPOINT_MESSAGE,
    IGD_REFSET_MESSAGE,
    KNEE_MISMATCH_MESSAGE,
    NFS_DUPLICATES_MESSAGE,
    NOTHING_LEFT_MESSAGE,
    NO_COMPLIANT_MESSAGE,
    NORMALIZATION_MESSAGE,
    PREF_IGNORED_CLEAR_MESSAGE,
    PREF_IGNORED_VAGUE_MESSAGE,
    RATIONALE_BEST_SINGLE,
    RATIONALE_CARDINALITY,
    RATIONALE_CLEAR,
    RATIONALE_CONVERGENCE,
    RATIONALE_EPS_HIGH_DIM,
    RATIONALE_EXTREME_BEST,
    RATIONALE_EXTREME_HV,
    RATIONALE_HV,
    RATIONALE_KNEE_EPS,
    RATIONALE_KNEE_HV,
    RATIONALE_KNEE_IGD_EXCLUDED,
    RATIONALE_NO_INDICATOR_TRANSFER,
    RATIONALE_NORMALIZE,
    RATIONALE_PLOT_PARALLEL,
    RATIONALE_PLOT_SCATTER,
    RATIONALE_PSI,
    RATIONALE_SCREEN,
    RATIONALE_SPREAD_2D,
    RATIONALE_SPREAD_GRID,
    RATIONALE_SPREAD_NO_FRONT,
    RATIONALE_UNTRANSFERABLE,
    RATIONALE_VAGUE,
    RATIONALE_WEIGHTS,
    SPREAD_DIM_MESSAGE,
    SSP_HIGH_DIM_MESSAGE,
    SSP_ONLY_MESSAGE,
)
from src.core.doe import Statistic
from src.core.errors import InconsistentPreferencesError
from src.core.indicators import (
    PROFILES,
    Aspect,
    Coverage,
    IndicatorConfig,
    NormalizationMode,
    ReferenceSource,
    canonical_name,
)
from src.core.preprocess import (
    ConstraintKind,
    PreferenceSpec,
    ReferencePointKind,
    ReferencePointStrategy,
    RoiKind,
)
from src.core.solution import Direction, ObjectiveMeta


class Severity(str, Enum):
    """Lint severity; ordered from most to least severe."""
    ERROR = 'error'
    WARNING = 'warning'
    INFO = 'info'


class Issue(str, Enum):
    """Documented misuse issues of evaluation setups."""
    I = 'I'  # noqa: E741
    II = 'II'
    III = 'III'
    IV = 'IV'
    V = 'V'


@dataclass(frozen=True)
class LintRule:
    """
    Entry of the published warning-code table.

    Attributes:
        code: Stable warning code.
        issue: Misuse issue the rule belongs to.
        severity: Severity of findings.
        summary: Short description.
    """
    code: str
    issue: Issue
    severity: Severity
    summary: str


LINT_RULES: Dict[str, LintRule] = {
    rule.code: rule for rule in (
        LintRule('L-SSP-ONLY', Issue.I, Severity.INFO, "plotting as the sole evaluation, or scatter beyond 3 objectives"),
        LintRule('L-DOE-SOLE', Issue.II, Severity.WARNING, "descriptive statistics as the only comparison"),
        LintRule('L-ASPECT-GAP', Issue.III, Severity.WARNING, "chosen indicators miss a quality aspect"),
        LintRule('L-SPREAD-DIM', Issue.III, Severity.ERROR, "Spread used with more than two objectives"),
        LintRule('L-HV-DIM', Issue.III, Severity.ERROR, "exact hypervolume beyond its dimension limit"),
        LintRule('L-IGD-REFSET', Issue.III, Severity.WARNING, "IGD or Spread against a combined-front reference"),
        LintRule('L-HV-REFPOINT', Issue.III, Severity.WARNING, "hypervolume reference point on the front boundary"),
        LintRule('L-NFS-DUPLICATES', Issue.III, Severity.WARNING, "NFS counts duplicate solutions"),
        LintRule('L-NO-COMPLIANT', Issue.III, Severity.WARNING, "no Pareto-compliant indicator chosen"),
        LintRule('L-NORMALIZATION', Issue.III, Severity.WARNING, "indicator needs normalization but none applied"),
        LintRule('L-PREF-IGNORED', Issue.IV, Severity.WARNING, "declared preferences not transferred"),
        LintRule('L-KNEE-MISMATCH', Issue.V, Severity.WARNING, "indicator does not reflect a knee preference"),
        LintRule('L-EXTREME-MISMATCH', Issue.V, Severity.WARNING, "IGD with a preference for extreme solutions"),
    )
}


@dataclass(frozen=True)
class LintWarning:
    """
    One lint finding.

    Attributes:
        code: Warning code from LINT_RULES.
        severity: Severity.
        message: Human-readable message.
        issue: Misuse issue, if any.
    """
    code: str
    severity: Severity
    message: str
    issue: Optional[Issue]

    @classmethod
    def of(cls, code: str, message: str) -> 'LintWarning':
        rule = LINT_RULES[code]
        return cls(code, rule.severity, message, rule.issue)

    def to_dict(self) -> Dict[str, Optional[str]]:
        return {
            'code': self.code,
            'severity': self.severity.value,
            'issue': self.issue.value if self.issue else None,
            'message': self.message,
        }


class StepKind(str, Enum):
    """Preprocessing step of an evaluation plan."""
    SCREEN = 'screen'
    CLEAR_TRANSFER = 'clear_transfer'
    VAGUE_TRANSFER = 'vague_transfer'
    NORMALIZE = 'normalize'


class DoeStepKind(str, Enum):
    """Descriptive evaluation step of a plan."""
    STATISTIC = 'statistic'
    SCALARIZE = 'scalarize'


class PlotKind(str, Enum):
    """Recommended plot of representative runs."""
    SCATTER = 'scatter'
    PARALLEL_COORDINATES = 'parallel_coordinates'


@dataclass(frozen=True)
class PreprocessingStep:
    kind: StepKind
    rationale: str


@dataclass(frozen=True)
class PlanIndicator:
    """
    An indicator selected by the plan.

    Attributes:
        name: Canonical indicator name.
        config: Configuration to compute it with.
        rationale: Why it was chosen, naming the decision node.
    """
    name: str
    config: IndicatorConfig
    rationale: str


@dataclass(frozen=True)
class DoeStep:
    kind: DoeStepKind
    rationale: str
    statistic: Optional[Statistic] = None
    objective: Optional[int] = None


@dataclass(frozen=True)
class EvaluationPlan:
    """
    Output of the guidance procedure.

    Attributes:
        preprocessing: Ordered preprocessing steps.
        indicators: Selected indicators with configs and rationales.
        doe_steps: Descriptive evaluation steps.
        plotting: Recommended plot kind.
        notes: Further decisions taken along the procedure.
        warnings: Lint findings for the plan itself.
        objectives: Objective indices evaluated after clear transfer.
    """
    preprocessing: Tuple[PreprocessingStep, ...]
    indicators: Tuple[PlanIndicator, ...]
    doe_steps: Tuple[DoeStep, ...]
    plotting: PlotKind
    notes: Tuple[str, ...] = ()
    warnings: Tuple[LintWarning, ...] = ()
    objectives: Tuple[int, ...] = ()

    @property
    def chosen(self) -> List[Tuple[str, IndicatorConfig]]:
        return [(entry.name, entry.config) for entry in self.indicators]

    def has_step(self, kind: StepKind) -> bool:
        return any(step.kind is kind for step in self.preprocessing)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'preprocessing': [{'step': s.kind.value, 'rationale': s.rationale} for s in self.preprocessing],
            'indicators': [
                {'name': i.name, 'config': i.config.to_dict(), 'rationale': i.rationale}
                for i in self.indicators
            ],
            'doe_steps': [
                {
                    'kind': d.kind.value,
                    'statistic': d.statistic.value if d.statistic else None,
                    'objective': d.objective,
                    'rationale': d.rationale,
                }
                for d in self.doe_steps
            ],
            'plotting': self.plotting.value,
            'notes': list(self.notes),
            'objectives': list(self.objectives),
            'warnings': [w.to_dict() for w in self.warnings],
        }


@dataclass(frozen=True)
class EvaluationContext:
    """
    What recommend knows about the compared sets.

    Attributes:
        meta: Objective metadata in natural orientation.
        set_sizes: Sizes of the compared sets.
        reference_front: A known Pareto front is supplied.
    """
    meta: Tuple[ObjectiveMeta, ...]
    set_sizes: Tuple[int, ...] = ()
    reference_front: bool = False

    @property
    def signs(self) -> List[float]:
        return [-1.0 if m.direction is Direction.MAXIMIZE else 1.0 for m in self.meta]


@dataclass(frozen=True)
class EvaluationMode:
    """
    How an evaluation is actually carried out.

    Attributes:
        plotting_only: Plots are the only evaluation method.
        scatter: Scatter plots are requested.
        doe_stats: Descriptive statistics used for comparison.
        clear_transfer: Clear preferences are transferred into the sets.
        vague_transfer: Vague preferences are transferred into the sets.
        normalization: Objectives are normalized before indicators.
    """
    plotting_only: bool = False
    scatter: bool = False
    doe_stats: Tuple[Statistic, ...] = ()
    clear_transfer: bool = True
    vague_transfer: bool = True
    normalization: bool = True

    @classmethod
    def from_plan(cls, plan: EvaluationPlan) -> 'EvaluationMode':
        return cls(
            plotting_only=False,
            scatter=plan.plotting is PlotKind.SCATTER,
            doe_stats=tuple(d.statistic for d in plan.doe_steps if d.statistic is not None),
            clear_transfer=plan.has_step(StepKind.CLEAR_TRANSFER),
            vague_transfer=plan.has_step(StepKind.VAGUE_TRANSFER),
            normalization=plan.has_step(StepKind.NORMALIZE),
        )

    @classmethod
    def from_dict(cls, data: Optional[Mapping[str, Any]]) -> 'EvaluationMode':
        if not data:
            return cls()
        allowed = {'plotting_only', 'scatter', 'doe_stats', 'clear_transfer', 'vague_transfer', 'normalization'}
        unknown = set(data) - allowed
        if unknown:
            raise ValueError(f"Unknown evaluation_mode fields: {sorted(unknown)}")
        values = dict(data)
        values['doe_stats'] = tuple(Statistic(s) for s in data.get('doe_stats', ()))
        return cls(**values)


def aspect_coverage(chosen: Sequence[str]) -> Dict[Aspect, Coverage]:
    """
    Union of the aspects reflected by the chosen indicators.

    Args:
        chosen: Indicator names or aliases.

    Returns:
        dict: Covered aspects; full coverage wins over partial.
    """
    coverage: Dict[Aspect, Coverage] = {}
    for name in chosen:
        for aspect, level in PROFILES[canonical_name(name)].aspects.items():
            if coverage.get(aspect) is not Coverage.FULL:
                coverage[aspect] = level
    return coverage


def lint(
    chosen: Sequence[Tuple[str, IndicatorConfig]],
    prefs: PreferenceSpec,
    m: int,
    mode: EvaluationMode = EvaluationMode(),
) -> List[LintWarning]:
    """
    Check an evaluation setup against the documented misuse issues.

    Args:
        chosen: (indicator, config) pairs in use.
        prefs: Declared preferences.
        m: Number of evaluated objectives.
        mode: How the evaluation is carried out.

    Returns:
        list: Findings, ordered by issue and rule.
    """
    entries = [(canonical_name(name), config) for name, config in chosen]
    names = [name for name, _ in entries]
    findings: List[LintWarning] = []

    # Issue I
    if mode.plotting_only and not entries and not mode.doe_stats:
        findings.append(LintWarning.of('L-SSP-ONLY', SSP_ONLY_MESSAGE))
    if mode.scatter and m > SCATTER_MAX_OBJECTIVES:
        findings.append(LintWarning.of(
            'L-SSP-ONLY', SSP_HIGH_DIM_MESSAGE.format(m=m, limit=SCATTER_MAX_OBJECTIVES)
        ))

    # Issue II
    risky = [s for s in mode.doe_stats if s is not Statistic.BEST]
    if risky and not [n for n in names if n != 'BEST']:
        findings.append(LintWarning.of(
            'L-DOE-SOLE', DOE_SOLE_MESSAGE.format(stats=', '.join(s.value for s in risky))
        ))

    # Issue III
    if prefs.is_empty:
        covered = aspect_coverage(names)
        missing = [a.value for a in Aspect if a not in covered]
        if missing:
            findings.append(LintWarning.of('L-ASPECT-GAP', ASPECT_GAP_MESSAGE.format(missing=', '.join(missing))))
    if 'Spread' in names and m > 2:
        findings.append(LintWarning.of('L-SPREAD-DIM', SPREAD_DIM_MESSAGE.format(m=m)))
    if 'HV' in names and m > HV_MAX_OBJECTIVES:
        findings.append(LintWarning.of('L-HV-DIM', HV_DIM_MESSAGE.format(limit=HV_MAX_OBJECTIVES, m=m)))
    refset = [
        n for n, c in entries
        if n in ('IGD', 'Spread') and c.reference_source is ReferenceSource.COMBINED_FRONT
    ]
    if refset:
        findings.append(LintWarning.of(
            'L-IGD-REFSET', IGD_REFSET_MESSAGE.format(indicators=' and '.join(dict.fromkeys(refset)))
        ))
    boundary = (ReferencePointKind.WORST_VALUES, ReferencePointKind.NADIR, ReferencePointKind.HARD_BOUNDS)
    flagged = []
    for name, config in entries:
        kind = config.hv_strategy.kind
        if name == 'HV' and kind in boundary and kind not in flagged:
            flagged.append(kind)
            findings.append(LintWarning.of('L-HV-REFPOINT', HV_REFPOINT_MESSAGE.format(strategy=kind.value)))
    if 'NFS' in names:
        findings.append(LintWarning.of('L-NFS-DUPLICATES', NFS_DUPLICATES_MESSAGE))
    if entries and not any(PROFILES[n].compliant for n in names):
        findings.append(LintWarning.of('L-NO-COMPLIANT', NO_COMPLIANT_MESSAGE))
    unnormalized = sorted({
        n for n, c in entries
        if PROFILES[n].needs_normalization
        and (c.normalization is NormalizationMode.NONE or not mode.normalization)
    })
    if unnormalized:
        findings.append(LintWarning.of(
            'L-NORMALIZATION', NORMALIZATION_MESSAGE.format(indicators=', '.join(unnormalized))
        ))

    # Issue IV
    if prefs.clear and not mode.clear_transfer:
        findings.append(LintWarning.of('L-PREF-IGNORED', PREF_IGNORED_CLEAR_MESSAGE))
    if prefs.vague and not mode.vague_transfer:
        findings.append(LintWarning.of('L-PREF-IGNORED', PREF_IGNORED_VAGUE_MESSAGE))

    # Issue V
    if prefs.roi.kind is RoiKind.KNEE:
        for name in ('IGD', 'GD', 'CI'):
            if name in names:
                findings.append(LintWarning.of('L-KNEE-MISMATCH', KNEE_MISMATCH_MESSAGE.format(indicator=name)))
    if prefs.roi.kind is RoiKind.EXTREME and 'IGD' in names:
        findings.append(LintWarning.of('L-EXTREME-MISMATCH', EXTREME_MISMATCH_MESSAGE))
    return findings


def _comprehensive(m: int, strategy: ReferencePointKind, rationale: str) -> PlanIndicator:
    if m > HV_MAX_OBJECTIVES:
        return PlanIndicator('EPS', IndicatorConfig(), RATIONALE_EPS_HIGH_DIM.format(m=m))
    return PlanIndicator('HV', IndicatorConfig(hv_strategy=ReferencePointStrategy(strategy)), rationale)


def recommend(
    prefs: PreferenceSpec, m: int, context: Optional[EvaluationContext] = None
) -> EvaluationPlan:
    """
    Walk the evaluation procedure and produce a plan.

    Args:
        prefs: Decision-maker preferences.
        m: Number of objectives.
        context: Objective metadata and set sizes, if known.

    Returns:
        EvaluationPlan: Deterministic plan for (prefs, m, context).

    Raises:
        InconsistentPreferencesError: Every objective is fixed to its best value.
    """
    signs = context.signs if context else [1.0] * m
    if len(signs) != m:
        raise ValueError(f"Context describes {len(signs)} objectives, expected {m}")
    prefs.validate(signs)
    names = [meta.name for meta in context.meta] if context else [f"f{i + 1}" for i in range(m)]

    steps: List[PreprocessingStep] = []
    indicators: List[PlanIndicator] = []
    doe_steps: List[DoeStep] = []
    notes: List[str] = []
    remaining = list(range(m))

    if prefs.screening:
        steps.append(PreprocessingStep(StepKind.SCREEN, RATIONALE_SCREEN))

    # D6: clear preferences
    if prefs.clear:
        steps.append(PreprocessingStep(StepKind.CLEAR_TRANSFER, RATIONALE_CLEAR))
        dropped = {c.objective for c in prefs.clear if c.kind is ConstraintKind.EXACTLY_BEST}
        remaining = [i for i in remaining if i not in dropped]
    # D7-D9: vague or qualitative preferences
    if prefs.vague:
        steps.append(PreprocessingStep(StepKind.VAGUE_TRANSFER, RATIONALE_VAGUE))
    elif prefs.untransferable:
        notes.append(RATIONALE_UNTRANSFERABLE)
    if prefs.weights is not None:
        doe_steps.append(DoeStep(DoeStepKind.SCALARIZE, RATIONALE_WEIGHTS))

    m_eval = len(remaining)
    if m_eval == 0:
        raise InconsistentPreferencesError(NOTHING_LEFT_MESSAGE.format(m=m))
    if m_eval == 1:
        rationale = RATIONALE_BEST_SINGLE.format(objective=names[remaining[0]])
        indicators.append(PlanIndicator(
            'BEST', IndicatorConfig(normalization=NormalizationMode.NONE, objective=0), rationale
        ))
        doe_steps.append(DoeStep(DoeStepKind.STATISTIC, rationale, Statistic.BEST, 0))
    else:
        notes.append(RATIONALE_NO_INDICATOR_TRANSFER)

        # D11: region of interest
        if prefs.roi.kind is RoiKind.KNEE:
            indicators.append(_comprehensive(m_eval, ReferencePointKind.NADIR_PLUS_TENTH, RATIONALE_KNEE_HV))
            if indicators[-1].name != 'EPS':
                indicators.append(PlanIndicator('EPS', IndicatorConfig(), RATIONALE_KNEE_EPS))
            notes.append(RATIONALE_KNEE_IGD_EXCLUDED)
        elif prefs.roi.kind is RoiKind.EXTREME:
            indicators.append(_comprehensive(m_eval, ReferencePointKind.DOUBLED_RANGE, RATIONALE_EXTREME_HV))
            targets = [remaining.index(i) for i in prefs.roi.objectives if i in remaining] or range(m_eval)
            for position in targets:
                doe_steps.append(DoeStep(
                    DoeStepKind.STATISTIC,
                    RATIONALE_EXTREME_BEST.format(objective=names[remaining[position]]),
                    Statistic.BEST,
                    position,
                ))
        else:
            # D2-D5: every quality aspect
            indicators.append(PlanIndicator('GD+', IndicatorConfig(), RATIONALE_CONVERGENCE))
            # Spread only against the extremes of a known front
            if m_eval == 2 and context is not None and context.reference_front:
                config = IndicatorConfig(reference_source=ReferenceSource.SUPPLIED)
                indicators.append(PlanIndicator('Spread', config, RATIONALE_SPREAD_2D))
            elif m_eval == 2:
                indicators.append(PlanIndicator('DCI', IndicatorConfig(), RATIONALE_SPREAD_NO_FRONT))
            else:
                indicators.append(PlanIndicator('DCI', IndicatorConfig(), RATIONALE_SPREAD_GRID))
            indicators.append(PlanIndicator('UNFR', IndicatorConfig(), RATIONALE_CARDINALITY))
            indicators.append(_comprehensive(m_eval, ReferencePointKind.NADIR_PLUS_TENTH, RATIONALE_HV))

    if any(PROFILES[entry.name].needs_normalization for entry in indicators):
        steps.append(PreprocessingStep(StepKind.NORMALIZE, RATIONALE_NORMALIZE))
    notes.append(RATIONALE_PSI)
    if m_eval <= SCATTER_MAX_OBJECTIVES:
        plotting = PlotKind.SCATTER
        notes.append(RATIONALE_PLOT_SCATTER)
    else:
        plotting = PlotKind.PARALLEL_COORDINATES
        notes.append(RATIONALE_PLOT_PARALLEL)

    plan = EvaluationPlan(
        preprocessing=tuple(steps),
        indicators=tuple(indicators),
        doe_steps=tuple(doe_steps),
        plotting=plotting,
        notes=tuple(notes),
        objectives=tuple(remaining),
    )
    warnings = lint(plan.chosen, prefs, m_eval, EvaluationMode.from_plan(plan))
    return EvaluationPlan(
        plan.preprocessing, plan.indicators, plan.doe_steps, plan.plotting,
        plan.notes, tuple(warnings), plan.objectives,
    )
