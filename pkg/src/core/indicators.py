"""Quality indicators and the quality-aspect taxonomy."""

import hashlib
import json
import logging
from collections import Counter
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Any, Callable, Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np
from scipy.spatial.distance import cdist

from src.config.settings import DEFAULT_GD_P, DEFAULT_GRID_DIVISIONS, HV_MAX_OBJECTIVES
from src.config.strings import SPREAD_EXTREMES_MESSAGE
from src.core.errors import (
    DegenerateBoundsError,
    DimensionMismatchError,
    EmptySetError,
    IndicatorArityError,
    UnknownIndicatorError,
    UnsupportedDimensionError,
)
from src.core.preprocess import (
    NormalizationBounds,
    ReferencePointKind,
    ReferencePointStrategy,
    build_reference_point,
    build_reference_set,
    front_extremes,
)
from src.core.solution import (
    SolutionSet,
    dominance_matrices,
    nondominated_front,
    nondominated_mask,
    unique_nondominated_front,
)


eval_log = logging.getLogger('evaluation')


class Aspect(str, Enum):
    """Quality aspects of a solution set."""
    CONVERGENCE = 'convergence'
    SPREAD = 'spread'
    UNIFORMITY = 'uniformity'
    CARDINALITY = 'cardinality'


class Coverage(str, Enum):
    """How well an indicator reflects an aspect."""
    FULL = '+'
    PARTIAL = '-'


class Compliance(str, Enum):
    """Pareto compliance status."""
    YES = 'yes'
    NO = 'no'
    CONDITIONAL = 'conditional'


class Better(str, Enum):
    """Which direction of an indicator value is preferable."""
    HIGHER = 'higher'
    LOWER = 'lower'


class Arity(str, Enum):
    """How many sets an indicator compares."""
    UNARY = 'unary'
    BINARY = 'binary'
    MULTI = 'multi'


@dataclass(frozen=True)
class IndicatorProfile:
    """
    A row of the indicator summary table.

    Attributes:
        name: Canonical indicator name.
        aspects: Reflected quality aspects with full or partial coverage.
        compliance: Pareto compliance status.
        better: Preferable direction of the value.
        arity: Unary, binary, or M-nary.
        needs_normalization: Objectives must be normalized first.
        needs_reference_set: A reference front is required.
        unary_form: A binary indicator that can be evaluated against the reference set.
    """
    name: str
    aspects: Mapping[Aspect, Coverage]
    compliance: Compliance
    better: Better
    arity: Arity = Arity.UNARY
    needs_normalization: bool = True
    needs_reference_set: bool = False
    unary_form: bool = False

    @property
    def compliant(self) -> bool:
        return self.compliance is Compliance.YES


_C, _S, _U, _K = Aspect.CONVERGENCE, Aspect.SPREAD, Aspect.UNIFORMITY, Aspect.CARDINALITY
_F, _P = Coverage.FULL, Coverage.PARTIAL

PROFILES: Dict[str, IndicatorProfile] = {
    profile.name: profile for profile in (
        IndicatorProfile('CI', {_C: _P, _K: _P}, Compliance.YES, Better.HIGHER, Arity.BINARY,
                         needs_normalization=False),
        IndicatorProfile('C', {_C: _P, _K: _P}, Compliance.YES, Better.HIGHER, Arity.BINARY,
                         needs_normalization=False),
        IndicatorProfile('GD', {_C: _F}, Compliance.NO, Better.LOWER, needs_reference_set=True),
        IndicatorProfile('GD+', {_C: _F}, Compliance.YES, Better.LOWER, needs_reference_set=True),
        IndicatorProfile('Spread', {_S: _F, _U: _F}, Compliance.NO, Better.LOWER),
        IndicatorProfile('DCI', {_S: _F, _U: _P, _K: _P}, Compliance.CONDITIONAL, Better.HIGHER,
                         Arity.MULTI),
        IndicatorProfile('SP', {_U: _F}, Compliance.NO, Better.LOWER),
        IndicatorProfile('NFS', {_K: _F}, Compliance.NO, Better.HIGHER, needs_normalization=False),
        IndicatorProfile('UNFR', {_K: _F}, Compliance.YES, Better.HIGHER, needs_normalization=False),
        IndicatorProfile('IGD', {_C: _F, _S: _F, _U: _P, _K: _P}, Compliance.NO, Better.LOWER,
                         needs_reference_set=True),
        IndicatorProfile('IGD+', {_C: _F, _S: _F, _U: _P, _K: _P}, Compliance.YES, Better.LOWER,
                         needs_reference_set=True),
        IndicatorProfile('HV', {_C: _F, _S: _F, _U: _P, _K: _F}, Compliance.YES, Better.HIGHER,
                         needs_normalization=False),
        IndicatorProfile('EPS', {_C: _F, _S: _F, _U: _P, _K: _P}, Compliance.YES, Better.LOWER,
                         Arity.BINARY, needs_reference_set=True, unary_form=True),
        IndicatorProfile('BEST', {_C: _P}, Compliance.YES, Better.LOWER, needs_normalization=False),
    )
}

_ALIASES: Dict[str, str] = {
    'ci': 'CI', 'contribution': 'CI',
    'c': 'C', 'c-metric': 'C', 'coverage': 'C', 'cs': 'C',
    'gd': 'GD',
    'gd+': 'GD+', 'gd_plus': 'GD+', 'gdplus': 'GD+',
    'spread': 'Spread', 'delta': 'Spread', 'spread_delta': 'Spread', 'Δ': 'Spread',
    'dci': 'DCI', 'grid': 'DCI', 'grid_diversity': 'DCI',
    'sp': 'SP', 'spacing': 'SP',
    'nfs': 'NFS', 'pfs': 'NFS',
    'unfr': 'UNFR',
    'igd': 'IGD',
    'igd+': 'IGD+', 'igd_plus': 'IGD+', 'igdplus': 'IGD+',
    'hv': 'HV', 'hypervolume': 'HV',
    'eps': 'EPS', 'epsilon': 'EPS', 'ε': 'EPS', 'epsilon_additive': 'EPS',
    'best': 'BEST',
}


def canonical_name(name: str) -> str:
    """Resolve an indicator name or alias, case-insensitively."""
    key = name.strip().lower()
    if key not in _ALIASES:
        raise UnknownIndicatorError(f"Unknown indicator '{name}'")
    return _ALIASES[key]


def aspects_of(name: str) -> IndicatorProfile:
    """
    Summary-table row for an indicator.

    Args:
        name: Indicator name or alias.

    Returns:
        IndicatorProfile: Aspects, compliance, direction and requirements.
    """
    return PROFILES[canonical_name(name)]


class NormalizationMode(str, Enum):
    """Normalization applied before computing indicators."""
    COMBINED_FRONT = 'combined_front'
    HARD_BOUNDS = 'hard_bounds'
    NONE = 'none'


class ReferenceSource(str, Enum):
    """Origin of the reference set for GD, IGD and their variants."""
    COMBINED_FRONT = 'combined_front'
    SUPPLIED = 'supplied'


@dataclass(frozen=True)
class IndicatorConfig:
    """
    Parameters of indicator computation.

    Attributes:
        gd_p: Exponent of GD aggregation.
        hv_strategy: Reference point strategy of HV.
        grid_divisions: Divisions per objective of the grid diversity indicator.
        normalization: Normalization applied before computing.
        objective: Objective index for BEST.
        spacing_formula: Recorded SP formula.
        reference_source: Origin of the reference set.
    """
    gd_p: float = DEFAULT_GD_P
    hv_strategy: ReferencePointStrategy = field(default_factory=ReferencePointStrategy)
    grid_divisions: int = DEFAULT_GRID_DIVISIONS
    normalization: NormalizationMode = NormalizationMode.COMBINED_FRONT
    objective: Optional[int] = None
    spacing_formula: str = 'schott-l1'
    reference_source: ReferenceSource = ReferenceSource.COMBINED_FRONT

    def __post_init__(self) -> None:
        object.__setattr__(self, 'normalization', NormalizationMode(self.normalization))
        object.__setattr__(self, 'reference_source', ReferenceSource(self.reference_source))
        if self.gd_p < 1:
            raise ValueError(f"gd_p must be at least 1, got {self.gd_p}")
        if int(self.grid_divisions) != self.grid_divisions or self.grid_divisions < 2:
            raise ValueError(f"grid_divisions must be an integer of at least 2, got {self.grid_divisions}")

    def to_dict(self) -> Dict[str, Any]:
        return {
            'gd_p': self.gd_p,
            'hv_strategy': self.hv_strategy.to_dict(),
            'grid_divisions': self.grid_divisions,
            'normalization': self.normalization.value,
            'objective': self.objective,
            'spacing_formula': self.spacing_formula,
            'reference_source': self.reference_source.value,
        }

    def with_overrides(self, overrides: Optional[Mapping[str, Any]]) -> 'IndicatorConfig':
        """
        Apply a partial configuration, as found in a manifest.

        Args:
            overrides: Mapping with any of gd_p, hv_strategy, ref_point,
                grid_divisions, normalization, objective.

        Returns:
            IndicatorConfig: The updated config.
        """
        if not overrides:
            return self
        allowed = {'gd_p', 'hv_strategy', 'ref_point', 'grid_divisions', 'normalization', 'objective'}
        unknown = set(overrides) - allowed
        if unknown:
            raise ValueError(f"Unknown indicator override fields: {sorted(unknown)}")
        changes: Dict[str, Any] = {}
        if 'gd_p' in overrides:
            changes['gd_p'] = float(overrides['gd_p'])
        if 'grid_divisions' in overrides:
            changes['grid_divisions'] = int(overrides['grid_divisions'])
        if 'normalization' in overrides:
            changes['normalization'] = NormalizationMode(overrides['normalization'])
        if 'objective' in overrides:
            changes['objective'] = overrides['objective']
        if 'ref_point' in overrides:
            changes['hv_strategy'] = ReferencePointStrategy(
                ReferencePointKind.EXPLICIT, tuple(overrides['ref_point'])
            )
        elif 'hv_strategy' in overrides:
            changes['hv_strategy'] = ReferencePointStrategy(ReferencePointKind(overrides['hv_strategy']))
        return replace(self, **changes)


@dataclass(frozen=True)
class ReferenceData:
    """
    Reference structures shared read-only by every indicator evaluation.

    Attributes:
        reference_set: Reference front (combined unique front or supplied front).
        sets: Every compared set, the basis of UNFR and grid diversity.
        ref_point: HV reference point, if one applies.
        extremes: Spread extremes for bi-objective problems.
        bounds: Grid bounds; the unit box of a normalized space, else the union of the compared sets.
        extremes_substituted: Extremes were taken from the combined front.
    """
    reference_set: SolutionSet
    sets: Tuple[SolutionSet, ...]
    ref_point: Optional[Tuple[float, ...]] = None
    extremes: Optional[Tuple[Tuple[float, ...], Tuple[float, ...]]] = None
    bounds: Optional[NormalizationBounds] = None
    extremes_substituted: bool = False

    def digest(self) -> str:
        """SHA-256 of the reference values, recorded next to every result."""
        payload = {
            'reference_set': [list(s.objectives) for s in self.reference_set],
            'ref_point': list(self.ref_point) if self.ref_point is not None else None,
            'extremes': [list(e) for e in self.extremes] if self.extremes else None,
            'bounds': [list(self.bounds.ideal), list(self.bounds.nadir)] if self.bounds else None,
        }
        return hashlib.sha256(json.dumps(payload, sort_keys=True).encode('utf-8')).hexdigest()


def build_reference_data(
    sets: Sequence[SolutionSet],
    config: IndicatorConfig,
    reference_front: Optional[SolutionSet] = None,
) -> ReferenceData:
    """
    Build the reference structures for a batch of evaluations.

    Args:
        sets: Preprocessed (and normalized, if requested) sets.
        config: Indicator configuration, for the HV reference point.
        reference_front: Known Pareto front in the same space, if available.

    Returns:
        ReferenceData: Shared reference structures.
    """
    sets = tuple(sets)
    compared = build_reference_set(sets)
    if reference_front is not None:
        reference_set = unique_nondominated_front(reference_front)
        basis = build_reference_set(sets + (reference_front,), name='basis')
    else:
        reference_set = compared
        basis = compared
    m = reference_set.m

    ref_point = None
    if m >= 2:
        if config.hv_strategy.kind is ReferencePointKind.WORST_VALUES:
            union = [s for A in sets for s in A.solutions]
            basis = replace(basis, solutions=tuple(union))
        ref_point = build_reference_point(basis, config.hv_strategy)

    extremes = None
    substituted = False
    if m == 2 and len(reference_set):
        extremes = front_extremes(reference_set)
        substituted = reference_front is None
        if substituted:
            eval_log.info(SPREAD_EXTREMES_MESSAGE.format(extremes=extremes))

    union = np.vstack([A.as_array() for A in sets if len(A)] or [np.empty((0, m))])
    bounds = None
    if len(union):
        lo, hi = union.min(axis=0), union.max(axis=0)
        bounds = NormalizationBounds(tuple(lo.tolist()), tuple(hi.tolist()))
    return ReferenceData(reference_set, sets, ref_point, extremes, bounds, substituted)


@dataclass(frozen=True)
class IndicatorResult:
    """
    One computed indicator value.

    Attributes:
        indicator: Canonical indicator name.
        value: Indicator value.
        better: Preferable direction.
        aspects: Reflected quality aspects.
        config_snapshot: Exact configuration and reference digest used.
    """
    indicator: str
    value: float
    better: Better
    aspects: Tuple[Aspect, ...]
    config_snapshot: Dict[str, Any]

    def to_dict(self) -> Dict[str, Any]:
        return {
            'indicator': self.indicator,
            'value': self.value,
            'better': self.better.value,
            'aspects': [a.value for a in self.aspects],
            'config': self.config_snapshot,
        }


def _points(A: SolutionSet, role: str) -> np.ndarray:
    if not len(A):
        raise EmptySetError(f"{role} set '{A.name}' is empty")
    return A.as_array()


def _check_m(A: SolutionSet, B: SolutionSet) -> None:
    if A.m != B.m:
        raise DimensionMismatchError(f"Sets '{A.name}' and '{B.name}' have {A.m} and {B.m} objectives")


def _superiority_distances(X: np.ndarray, Y: np.ndarray) -> np.ndarray:
    """d+[i, j]: how far X[i] is inferior to Y[j], counting only worse objectives."""
    excess = np.maximum(X[:, None, :] - Y[None, :, :], 0.0)
    return np.sqrt((excess ** 2).sum(axis=2))


def contribution(A: SolutionSet, B: SolutionSet) -> float:
    """
    Contribution indicator CI(A, B).

    Shared vectors count half to each set. Of the remaining solutions, those
    dominating some member of the other set, and those neither weakly dominating
    nor dominated by any member of it, count fully.

    Args:
        A: First set.
        B: Second set.

    Returns:
        float: Value in [0, 1]; CI(A, B) + CI(B, A) = 1.
    """
    _check_m(A, B)
    if not len(A) and not len(B):
        raise EmptySetError("CI is undefined when both sets are empty")
    count_a = Counter(s.objectives for s in A)
    count_b = Counter(s.objectives for s in B)
    shared = count_a & count_b
    rest_a = list((count_a - shared).elements())
    rest_b = list((count_b - shared).elements())

    def credited(rest: List[Tuple[float, ...]], other: SolutionSet) -> int:
        if not rest or not len(other):
            return len(rest)
        weak, strict = dominance_matrices(np.array(rest), other.as_array())
        _, dominated_by = dominance_matrices(other.as_array(), np.array(rest))
        dominating = strict.any(axis=1)
        free = ~weak.any(axis=1) & ~dominated_by.any(axis=0)
        return int(np.count_nonzero(dominating | free))

    c = sum(shared.values())
    w_a = credited(rest_a, B)
    w_b = credited(rest_b, A)
    return (c / 2 + w_a) / (c + w_a + w_b)


def coverage(A: SolutionSet, B: SolutionSet) -> float:
    """Fraction of B's unique solutions weakly dominated by some member of A."""
    _check_m(A, B)
    unique_b = np.unique(_points(B, 'Covered'), axis=0)
    if not len(A):
        return 0.0
    weak, _ = dominance_matrices(A.as_array(), unique_b)
    return float(weak.any(axis=0).mean())


def gd(A: SolutionSet, R: SolutionSet, p: float = DEFAULT_GD_P) -> float:
    """
    Generational distance.

    Args:
        A: Evaluated set.
        R: Reference set.
        p: Aggregation exponent.

    Returns:
        float: (sum of nearest-reference Euclidean distances to the p) ** (1/p) / |A|.
    """
    _check_m(A, R)
    X, Y = _points(A, 'Evaluated'), _points(R, 'Reference')
    d = cdist(X, Y).min(axis=1)
    return float((d ** p).sum() ** (1.0 / p) / len(X))


def gd_plus(A: SolutionSet, R: SolutionSet) -> float:
    """Mean over A of the superiority distance to the nearest reference point."""
    _check_m(A, R)
    X, Y = _points(A, 'Evaluated'), _points(R, 'Reference')
    return float(_superiority_distances(X, Y).min(axis=1).mean())


def igd(A: SolutionSet, R: SolutionSet) -> float:
    """Mean over R of the Euclidean distance to the nearest member of A."""
    _check_m(A, R)
    X, Y = _points(A, 'Evaluated'), _points(R, 'Reference')
    return float(cdist(Y, X).min(axis=1).mean())


def igd_plus(A: SolutionSet, R: SolutionSet) -> float:
    """Mean over R of the smallest amount by which a member of A is inferior to it."""
    _check_m(A, R)
    X, Y = _points(A, 'Evaluated'), _points(R, 'Reference')
    return float(_superiority_distances(X, Y).min(axis=0).mean())


def spread_delta(
    A: SolutionSet, extremes: Tuple[Sequence[float], Sequence[float]]
) -> float:
    """
    Spread (Delta) of a bi-objective set.

    The set is reduced to its unique nondominated front and sorted by the first
    objective. The extreme with the smaller first objective is paired with the
    first point, the other with the last.

    Args:
        A: Evaluated set.
        extremes: The two extreme points of the reference front.

    Returns:
        float: 0 for equidistant sets meeting both extremes, larger is worse.
    """
    if A.m != 2:
        raise UnsupportedDimensionError(
            f"Spread only works reliably on bi-objective problems, got m={A.m}"
        )
    _points(A, 'Evaluated')
    X = unique_nondominated_front(A).as_array()
    X = X[np.lexsort((X[:, 1], X[:, 0]))]
    first, last = sorted((np.asarray(e, dtype=float) for e in extremes), key=lambda e: (e[0], e[1]))
    d_first = float(np.linalg.norm(X[0] - first))
    d_last = float(np.linalg.norm(X[-1] - last))
    gaps = np.linalg.norm(np.diff(X, axis=0), axis=1)
    mean_gap = float(gaps.mean()) if len(gaps) else 0.0
    numerator = d_first + d_last + float(np.abs(gaps - mean_gap).sum())
    denominator = d_first + d_last + len(gaps) * mean_gap
    if denominator == 0:
        return 0.0
    return numerator / denominator


def spacing(A: SolutionSet) -> float:
    """
    Schott's spacing: deviation of nearest-neighbour L1 distances.

    Args:
        A: Evaluated set with at least two solutions.

    Returns:
        float: 0 for evenly spaced sets.
    """
    X = A.as_array()
    if len(X) < 2:
        raise EmptySetError(f"Spacing needs at least two solutions, set '{A.name}' has {len(X)}")
    D = cdist(X, X, metric='cityblock')
    np.fill_diagonal(D, np.inf)
    d = D.min(axis=1)
    return float(np.sqrt(((d.mean() - d) ** 2).sum() / (len(d) - 1)))


def nfs(A: SolutionSet) -> int:
    """Number of nondominated solutions, duplicates counted."""
    return len(nondominated_front(A))


def unfr(A: SolutionSet, sets: Sequence[SolutionSet]) -> float:
    """
    Unique nondominated front ratio.

    Args:
        A: Evaluated set.
        sets: Every set produced; A is added if it is not among them.

    Returns:
        float: Share of the combined unique front held by A's undominated solutions.
    """
    R = build_reference_set(list(sets) + [A])
    own = unique_nondominated_front(A)
    if not len(own):
        return 0.0
    _, strict = dominance_matrices(R.as_array(), own.as_array())
    return int(np.count_nonzero(~strict.any(axis=0))) / len(R)


def _hv2d(X: np.ndarray, ref: np.ndarray) -> float:
    X = X[np.lexsort((X[:, 1], X[:, 0]))]
    volume = 0.0
    previous = ref[1]
    for x, y in X:
        if y < previous:
            volume += (ref[0] - x) * (previous - y)
            previous = y
    return volume


def _hv(X: np.ndarray, ref: np.ndarray) -> float:
    if not len(X):
        return 0.0
    m = X.shape[1]
    if m == 1:
        return float(ref[0] - X[:, 0].min())
    if m == 2:
        return _hv2d(X, ref)
    X = np.unique(X, axis=0)
    X = X[nondominated_mask(X)]
    X = X[np.argsort(X[:, -1], kind='stable')]
    volume = 0.0
    for i in range(len(X)):
        upper = X[i + 1, -1] if i + 1 < len(X) else ref[-1]
        depth = upper - X[i, -1]
        if depth > 0:
            volume += _hv(X[:i + 1, :-1], ref[:-1]) * depth
    return volume


def hypervolume(A: SolutionSet, refpoint: Sequence[float]) -> float:
    """
    Exact hypervolume dominated by A and bounded by the reference point.

    Solutions not strictly better than the reference point on every objective
    contribute nothing. Slices along the last objective down to a 2D sweep.

    Args:
        A: Evaluated set.
        refpoint: Reference point in the same space.

    Returns:
        float: Lebesgue measure of the dominated region.
    """
    ref = np.asarray(refpoint, dtype=float)
    if ref.shape != (A.m,):
        raise DimensionMismatchError(f"Reference point has {ref.size} values, set has {A.m} objectives")
    if A.m > HV_MAX_OBJECTIVES:
        raise UnsupportedDimensionError(
            f"Exact hypervolume is limited to {HV_MAX_OBJECTIVES} objectives, got m={A.m}"
        )
    X = A.as_array()
    X = X[(X < ref).all(axis=1)]
    return float(_hv(X, ref))


def epsilon_additive(A: SolutionSet, B: SolutionSet) -> float:
    """
    Additive epsilon indicator.

    Args:
        A: Evaluated set.
        B: Compared set, or the reference set for the unary form.

    Returns:
        float: Smallest shift making A weakly dominate B; at most 0 iff it already does.
    """
    _check_m(A, B)
    X, Y = _points(A, 'Evaluated'), _points(B, 'Compared')
    shifts = (X[:, None, :] - Y[None, :, :]).max(axis=2)
    return float(shifts.min(axis=0).max())


def grid_diversity(
    sets: Sequence[SolutionSet],
    divisions: int = DEFAULT_GRID_DIVISIONS,
    bounds: Optional[NormalizationBounds] = None,
) -> List[float]:
    """
    Region-division diversity of several sets compared jointly.

    Each objective range is cut into equal divisions; a set scores the fraction of
    the cells occupied by any set that it occupies itself.

    Args:
        sets: Compared sets sharing m.
        divisions: Divisions per objective.
        bounds: Grid bounds; defaults to the range of the union.

    Returns:
        list: One value in [0, 1] per set.
    """
    if not sets:
        raise EmptySetError("Grid diversity needs at least one set")
    if divisions < 2:
        raise ValueError(f"divisions must be at least 2, got {divisions}")
    m = sets[0].m
    for A in sets:
        if A.m != m:
            raise DimensionMismatchError(f"Set '{A.name}' has {A.m} objectives, expected {m}")
    arrays = [A.as_array() for A in sets]
    union = np.vstack(arrays)
    if not len(union):
        raise EmptySetError("Grid diversity is undefined when every set is empty")
    if bounds is None:
        lo, hi = union.min(axis=0), union.max(axis=0)
    else:
        lo, hi = np.asarray(bounds.ideal), np.asarray(bounds.nadir)
    span = hi - lo
    if np.any(span <= 0):
        raise DegenerateBoundsError(f"Grid bounds collapse on objectives {np.flatnonzero(span <= 0).tolist()}")

    def cells(X: np.ndarray) -> set:
        index = np.clip(np.floor((X - lo) / span * divisions), 0, divisions - 1).astype(int)
        return {tuple(row) for row in index.tolist()}

    occupied = [cells(X) if len(X) else set() for X in arrays]
    total = set().union(*occupied)
    return [len(own) / len(total) for own in occupied]


def best_value(A: SolutionSet, objective: int = 0) -> float:
    """Best (smallest) value of one objective in A."""
    X = _points(A, 'Evaluated')
    if not 0 <= objective < A.m:
        raise DimensionMismatchError(f"Objective index {objective} out of range for m={A.m}")
    return float(X[:, objective].min())


_UNARY: Dict[str, Callable[[SolutionSet, ReferenceData, IndicatorConfig], float]] = {
    'GD': lambda A, ref, cfg: gd(A, ref.reference_set, cfg.gd_p),
    'GD+': lambda A, ref, cfg: gd_plus(A, ref.reference_set),
    'IGD': lambda A, ref, cfg: igd(A, ref.reference_set),
    'IGD+': lambda A, ref, cfg: igd_plus(A, ref.reference_set),
    'Spread': lambda A, ref, cfg: _spread(A, ref),
    'SP': lambda A, ref, cfg: spacing(A),
    'NFS': lambda A, ref, cfg: float(nfs(A)),
    'UNFR': lambda A, ref, cfg: unfr(A, ref.sets),
    'HV': lambda A, ref, cfg: _hv_of(A, ref),
    'EPS': lambda A, ref, cfg: epsilon_additive(A, ref.reference_set),
    'DCI': lambda A, ref, cfg: grid_diversity(list(ref.sets) + [A], cfg.grid_divisions, ref.bounds)[-1],
    'BEST': lambda A, ref, cfg: best_value(A, cfg.objective or 0),
}

_BINARY: Dict[str, Callable[[SolutionSet, SolutionSet], float]] = {
    'CI': contribution,
    'C': coverage,
    'EPS': epsilon_additive,
}


def _spread(A: SolutionSet, reference: ReferenceData) -> float:
    if A.m != 2:
        raise UnsupportedDimensionError(
            f"Spread only works reliably on bi-objective problems, got m={A.m}"
        )
    return spread_delta(A, reference.extremes)


def _hv_of(A: SolutionSet, reference: ReferenceData) -> float:
    if reference.ref_point is None:
        raise DimensionMismatchError("Hypervolume needs a reference point and at least two objectives")
    return hypervolume(A, reference.ref_point)


def _result(name: str, value: float, snapshot: Dict[str, Any]) -> IndicatorResult:
    profile = PROFILES[name]
    return IndicatorResult(name, float(value), profile.better, tuple(profile.aspects), snapshot)


def evaluate(
    name: str, A: SolutionSet, reference: ReferenceData, config: IndicatorConfig
) -> IndicatorResult:
    """
    Evaluate a unary (or unary-form) indicator.

    Args:
        name: Indicator name or alias.
        A: Evaluated set, in the same space as the reference data.
        reference: Shared reference structures.
        config: Indicator configuration.

    Returns:
        IndicatorResult: Value with the configuration snapshot.
    """
    key = canonical_name(name)
    if key not in _UNARY:
        raise IndicatorArityError(f"{key} compares two sets; use a pairwise comparison")
    snapshot = config.to_dict()
    snapshot['reference_digest'] = reference.digest()
    if key == 'HV':
        snapshot['ref_point'] = list(reference.ref_point) if reference.ref_point else None
    if key == 'Spread':
        snapshot['extremes_substituted'] = reference.extremes_substituted
    return _result(key, _UNARY[key](A, reference, config), snapshot)


def evaluate_pair(
    name: str, A: SolutionSet, B: SolutionSet, config: IndicatorConfig
) -> IndicatorResult:
    """
    Evaluate a binary indicator I(A, B).

    Args:
        name: CI, C or EPS (or an alias).
        A: First set.
        B: Second set.
        config: Indicator configuration.

    Returns:
        IndicatorResult: Value with the configuration snapshot.
    """
    key = canonical_name(name)
    if key not in _BINARY:
        raise IndicatorArityError(f"{key} is not a binary indicator")
    return _result(key, _BINARY[key](A, B), config.to_dict())


def is_binary(name: str) -> bool:
    return canonical_name(name) in _BINARY
