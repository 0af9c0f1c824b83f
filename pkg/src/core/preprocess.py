"""Preprocessing upstream of indicator computation."""

import logging
import math
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from src.config.settings import WEIGHT_TOLERANCE
from src.config.strings import (
    CLEAR_EMPTY_MESSAGE,
    COMPUTE_H_FALLBACK_MESSAGE,
    DEGENERATE_NORMALIZATION_MESSAGE,
    DEGENERATE_RANGE_MESSAGE,
    EXPLICIT_REFPOINT_MESSAGE,
    OUT_OF_BOUNDS_MESSAGE,
    SCREEN_EMPTY_MESSAGE,
    SCREEN_REMOVED_MESSAGE,
)
from src.core.errors import (
    DimensionMismatchError,
    EmptySetError,
    InconsistentPreferencesError,
)
from src.core.solution import (
    Direction,
    Solution,
    SolutionSet,
    unique_nondominated_front,
)


eval_log = logging.getLogger('evaluation')


def natural_signs(A: SolutionSet) -> List[float]:
    """Per-objective factor s with natural value = s * stored value."""
    return [
        -1.0 if (meta.direction is Direction.MAXIMIZE or i in A.negated) else 1.0
        for i, meta in enumerate(A.meta)
    ]


def to_minimization(A: SolutionSet) -> SolutionSet:
    """
    Negate every maximized objective so that all objectives are minimized.

    Args:
        A: Set in natural orientation.

    Returns:
        SolutionSet: Set in minimization orientation with the negated indices recorded.
    """
    flipped = [i for i, meta in enumerate(A.meta) if meta.direction is Direction.MAXIMIZE]
    if not flipped:
        return A
    solutions = [
        replace(s, objectives=tuple(-v if i in flipped else v for i, v in enumerate(s.objectives)))
        for s in A.solutions
    ]
    meta = tuple(
        replace(m, direction=Direction.MINIMIZE) if i in flipped else m
        for i, m in enumerate(A.meta)
    )
    return replace(
        A,
        meta=meta,
        solutions=tuple(solutions),
        negated=tuple(sorted(set(A.negated) | set(flipped))),
    )


def from_minimization(A: SolutionSet) -> SolutionSet:
    """Undo to_minimization, restoring natural values and directions exactly."""
    if not A.negated:
        return A
    flipped = set(A.negated)
    solutions = [
        replace(s, objectives=tuple(-v if i in flipped else v for i, v in enumerate(s.objectives)))
        for s in A.solutions
    ]
    meta = tuple(
        replace(m, direction=Direction.MAXIMIZE) if i in flipped else m
        for i, m in enumerate(A.meta)
    )
    return replace(A, meta=meta, solutions=tuple(solutions), negated=())


def to_minimization_point(A: SolutionSet, point: Sequence[float]) -> Tuple[float, ...]:
    """Map a point given in natural units into the orientation of A."""
    if len(point) != A.m:
        raise DimensionMismatchError(f"Point {tuple(point)} has {len(point)} values, expected {A.m}")
    # Negation is an involution, so the same signs map both ways
    return tuple(float(s * v) for s, v in zip(natural_signs(A), point))


to_natural_point = to_minimization_point


class ConstraintKind(str, Enum):
    """Kind of a clear preference constraint."""
    AT_LEAST = 'at_least'
    AT_MOST = 'at_most'
    EXACTLY_BEST = 'exactly_best'


@dataclass(frozen=True)
class ClearConstraint:
    """
    A clear (quantified) preference on one objective, stated in natural units.

    Attributes:
        objective: Objective index.
        kind: AT_LEAST, AT_MOST or EXACTLY_BEST.
        threshold: Threshold in natural units; for EXACTLY_BEST the best value, if known.
        strict: Use an exclusive comparison instead of the inclusive one.
    """
    objective: int
    kind: ConstraintKind
    threshold: Optional[float] = None
    strict: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, 'kind', ConstraintKind(self.kind))
        if self.kind is not ConstraintKind.EXACTLY_BEST and self.threshold is None:
            raise InconsistentPreferencesError(f"{self.kind.value} constraint needs a threshold")
        if self.threshold is not None:
            object.__setattr__(self, 'threshold', float(self.threshold))

    def describe(self, names: Optional[Sequence[str]] = None) -> str:
        """Short human-readable form such as 'coverage > 0'."""
        name = names[self.objective] if names else f"f{self.objective + 1}"
        if self.kind is ConstraintKind.EXACTLY_BEST:
            suffix = f" = {self.threshold:g}" if self.threshold is not None else ''
            return f"{name} best{suffix}"
        op = {
            ConstraintKind.AT_LEAST: '>' if self.strict else '>=',
            ConstraintKind.AT_MOST: '<' if self.strict else '<=',
        }[self.kind]
        return f"{name} {op} {self.threshold:g}"

    def best_value(self, A: SolutionSet) -> float:
        """Natural best value for EXACTLY_BEST: the threshold or the hard bound on the better side."""
        if self.threshold is not None:
            return self.threshold
        bounds = A.meta[self.objective].hard_bounds
        if bounds is None:
            raise InconsistentPreferencesError(
                f"Objective '{A.meta[self.objective].name}' has no known best value; "
                "give a threshold or hard bounds"
            )
        return bounds[1] if natural_signs(A)[self.objective] < 0 else bounds[0]

    def is_satisfied(self, natural_value: float, best: Optional[float] = None) -> bool:
        if self.kind is ConstraintKind.EXACTLY_BEST:
            return natural_value == best
        if self.kind is ConstraintKind.AT_LEAST:
            return natural_value > self.threshold if self.strict else natural_value >= self.threshold
        return natural_value < self.threshold if self.strict else natural_value <= self.threshold


@dataclass(frozen=True)
class VagueClamp:
    """
    A vague preference: improvements beyond saturation are worth nothing.

    Attributes:
        objective: Objective index.
        saturation: Natural value beyond which solutions are equally good.
        hard_floor: Natural value past which solutions are discarded.
    """
    objective: int
    saturation: float
    hard_floor: Optional[float] = None


class RoiKind(str, Enum):
    """Region of interest of the decision maker."""
    NONE = 'none'
    KNEE = 'knee'
    EXTREME = 'extreme'


@dataclass(frozen=True)
class Roi:
    """
    Region of interest.

    Attributes:
        kind: NONE, KNEE or EXTREME.
        objectives: For EXTREME, the objectives whose extreme values matter.
    """
    kind: RoiKind = RoiKind.NONE
    objectives: Tuple[int, ...] = ()


@dataclass(frozen=True)
class PreferenceSpec:
    """
    Machine-readable decision-maker preferences.

    Attributes:
        clear: Clear constraints, at most one per objective.
        vague: Vague clamps, at most one per objective.
        roi: Region of interest.
        weights: Optional nonnegative weights summing to 1.
        untransferable: Qualitative preferences exist that cannot be transferred.
        screening: Rules filtering out trivial solutions before evaluation.
    """
    clear: Tuple[ClearConstraint, ...] = ()
    vague: Tuple[VagueClamp, ...] = ()
    roi: Roi = field(default_factory=Roi)
    weights: Optional[Tuple[float, ...]] = None
    untransferable: bool = False
    screening: Tuple[ClearConstraint, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, 'clear', tuple(self.clear))
        object.__setattr__(self, 'vague', tuple(self.vague))
        object.__setattr__(self, 'screening', tuple(self.screening))
        for label, items in (('clear constraint', self.clear), ('vague clamp', self.vague)):
            objectives = [item.objective for item in items]
            if len(objectives) != len(set(objectives)):
                raise InconsistentPreferencesError(f"At most one {label} per objective is allowed")
        if self.weights is not None:
            weights = tuple(float(w) for w in self.weights)
            if any(w < 0 for w in weights):
                raise InconsistentPreferencesError(f"Weights must be nonnegative, got {weights}")
            if abs(sum(weights) - 1.0) > WEIGHT_TOLERANCE:
                raise InconsistentPreferencesError(f"Weights must sum to 1, got {sum(weights)}")
            object.__setattr__(self, 'weights', weights)

    @property
    def is_empty(self) -> bool:
        """No transferable preference at all; screening rules do not count."""
        return (
            not self.clear
            and not self.vague
            and self.roi.kind is RoiKind.NONE
            and self.weights is None
        )

    def validate(self, signs: Sequence[float]) -> None:
        """
        Check the preferences against a problem with the given natural signs.

        Args:
            signs: Per-objective natural signs, see natural_signs.

        Raises:
            InconsistentPreferencesError: Index out of range or contradictory preferences.
        """
        m = len(signs)
        indices = [c.objective for c in self.clear + self.screening]
        indices += [v.objective for v in self.vague] + list(self.roi.objectives)
        for index in indices:
            if not 0 <= index < m:
                raise InconsistentPreferencesError(f"Objective index {index} out of range for m={m}")
        if self.weights is not None and len(self.weights) != m:
            raise InconsistentPreferencesError(f"Expected {m} weights, got {len(self.weights)}")
        clear_by_objective = {c.objective: c for c in self.clear}
        for clamp in self.vague:
            sign = signs[clamp.objective]
            sat_min = sign * clamp.saturation
            floor_min = None if clamp.hard_floor is None else sign * clamp.hard_floor
            if floor_min is not None and floor_min <= sat_min:
                raise InconsistentPreferencesError(
                    f"Vague clamp on objective {clamp.objective}: hard floor {clamp.hard_floor} "
                    f"must be worse than saturation {clamp.saturation}"
                )
            constraint = clear_by_objective.get(clamp.objective)
            if constraint is None:
                continue
            if constraint.kind is ConstraintKind.EXACTLY_BEST:
                raise InconsistentPreferencesError(
                    f"Objective {clamp.objective} has both an exactly-best constraint and a vague clamp"
                )
            t_min = sign * constraint.threshold
            # In minimization space the constraint is an upper bound when it asks for better values
            upper = (constraint.kind is ConstraintKind.AT_LEAST) == (sign < 0)
            if upper and t_min < sat_min:
                raise InconsistentPreferencesError(
                    f"Clear constraint '{constraint.describe()}' asks for values beyond the "
                    f"saturation {clamp.saturation} of the vague clamp"
                )
            if not upper and floor_min is not None and t_min > floor_min:
                raise InconsistentPreferencesError(
                    f"Clear constraint '{constraint.describe()}' only admits values past the "
                    f"hard floor {clamp.hard_floor}"
                )

    @classmethod
    def from_dict(cls, data: Optional[Mapping[str, Any]], names: Sequence[str]) -> 'PreferenceSpec':
        """
        Parse the preferences block of a manifest.

        Objectives may be referenced by name or by index.

        Args:
            data: The decoded preferences mapping, or None.
            names: Objective names in order.

        Returns:
            PreferenceSpec: The parsed spec.
        """
        if not data:
            return cls()
        allowed = {'clear', 'vague', 'roi', 'weights', 'untransferable', 'screening'}
        unknown = set(data) - allowed
        if unknown:
            raise InconsistentPreferencesError(f"Unknown preference fields: {sorted(unknown)}")

        def index_of(ref: Union[int, str]) -> int:
            if isinstance(ref, int):
                return ref
            if ref not in names:
                raise InconsistentPreferencesError(f"Unknown objective '{ref}'")
            return list(names).index(ref)

        def constraint(item: Mapping[str, Any]) -> ClearConstraint:
            return ClearConstraint(
                objective=index_of(item['objective']),
                kind=ConstraintKind(item['kind']),
                threshold=item.get('threshold'),
                strict=bool(item.get('strict', False)),
            )

        roi = _parse_roi(data.get('roi'), index_of)
        return cls(
            clear=tuple(constraint(c) for c in data.get('clear', ())),
            vague=tuple(
                VagueClamp(index_of(v['objective']), float(v['saturation']), v.get('hard_floor'))
                for v in data.get('vague', ())
            ),
            roi=roi,
            weights=tuple(data['weights']) if data.get('weights') is not None else None,
            untransferable=bool(data.get('untransferable', False)),
            screening=tuple(constraint(c) for c in data.get('screening', ())),
        )


def _parse_roi(raw: Any, index_of: Any) -> Roi:
    if raw is None or raw == 'none':
        return Roi()
    entries = raw if isinstance(raw, list) else [raw]
    kinds = []
    objectives: Tuple[int, ...] = ()
    for entry in entries:
        if entry == 'knee':
            kinds.append(RoiKind.KNEE)
        elif isinstance(entry, Mapping) and 'extreme' in entry:
            kinds.append(RoiKind.EXTREME)
            objectives = tuple(index_of(o) for o in entry['extreme'])
        elif entry == 'extreme':
            kinds.append(RoiKind.EXTREME)
        else:
            raise InconsistentPreferencesError(f"Unknown region of interest: {entry!r}")
    if len(set(kinds)) > 1:
        raise InconsistentPreferencesError("Knee and extreme regions of interest cannot be combined")
    return Roi(kinds[0], objectives) if kinds else Roi()


def find_violations(
    A: SolutionSet, rules: Sequence[ClearConstraint]
) -> List[Tuple[Solution, ClearConstraint]]:
    """
    Solutions of A violating some rule, each with the first rule it violates.

    Args:
        A: Set in minimization orientation.
        rules: Constraints in natural units.

    Returns:
        list: (solution, violated rule) pairs in input order.
    """
    A = to_minimization(A)
    signs = natural_signs(A)
    best = {
        id(rule): rule.best_value(A) for rule in rules if rule.kind is ConstraintKind.EXACTLY_BEST
    }
    violations = []
    for solution in A.solutions:
        for rule in rules:
            natural = signs[rule.objective] * solution.objectives[rule.objective]
            if not rule.is_satisfied(natural, best.get(id(rule))):
                violations.append((solution, rule))
                break
    return violations


def _remove(A: SolutionSet, violations: Sequence[Tuple[Solution, ClearConstraint]]) -> SolutionSet:
    removed = {id(solution) for solution, _ in violations}
    return A.with_solutions([s for s in A.solutions if id(s) not in removed])


def screen_trivial(A: SolutionSet, rules: Sequence[ClearConstraint]) -> SolutionSet:
    """
    Remove trivial solutions violating any screening rule.

    Args:
        A: Set in minimization orientation.
        rules: Screening rules; these never drop objectives.

    Returns:
        SolutionSet: The surviving solutions, possibly empty.
    """
    A = to_minimization(A)
    if not rules:
        return A
    violations = find_violations(A, rules)
    for solution, rule in violations:
        eval_log.info(SCREEN_REMOVED_MESSAGE.format(
            set_name=A.name, solution=solution.objectives, rule=rule.describe(A.names)
        ))
    screened = _remove(A, violations)
    if len(A) and not len(screened):
        eval_log.warning(SCREEN_EMPTY_MESSAGE.format(set_name=A.name))
    return screened


def apply_clear_preferences(A: SolutionSet, spec: PreferenceSpec) -> Tuple[SolutionSet, List[int]]:
    """
    Transfer clear preferences into a solution set.

    Solutions failing a constraint are removed. Objectives constrained to their best
    value are returned as dropped; the caller evaluates on the remaining objectives.

    Args:
        A: Set in minimization orientation.
        spec: Preferences holding the clear constraints.

    Returns:
        tuple: (filtered set, sorted dropped objective indices).
    """
    A = to_minimization(A)
    if not spec.clear:
        return A, []
    filtered = _remove(A, find_violations(A, spec.clear))
    if len(A) and not len(filtered):
        eval_log.warning(CLEAR_EMPTY_MESSAGE.format(set_name=A.name))
    dropped = sorted(c.objective for c in spec.clear if c.kind is ConstraintKind.EXACTLY_BEST)
    return filtered, dropped


def apply_vague_preferences(A: SolutionSet, spec: PreferenceSpec) -> SolutionSet:
    """
    Transfer vague preferences: clamp values beyond saturation, discard those past the floor.

    Args:
        A: Set in either orientation; maximized objectives are converted first.
        spec: Preferences holding the vague clamps, in natural units.

    Returns:
        SolutionSet: Transformed set in minimization orientation.
    """
    A = to_minimization(A)
    if not spec.vague:
        return A
    signs = natural_signs(A)
    spec.validate(signs)
    limits = []
    for clamp in spec.vague:
        sign = signs[clamp.objective]
        floor_min = math.inf if clamp.hard_floor is None else sign * clamp.hard_floor
        limits.append((clamp.objective, sign * clamp.saturation, floor_min))

    transformed = []
    for solution in A.solutions:
        values = list(solution.objectives)
        if any(values[i] > floor_min for i, _, floor_min in limits):
            eval_log.info(f"Set '{A.name}': discarded {solution.objectives} past a hard floor")
            continue
        for i, sat_min, _ in limits:
            values[i] = max(values[i], sat_min)
        transformed.append(replace(solution, objectives=tuple(values)))
    return A.with_solutions(transformed)


class NormalizationSource(str, Enum):
    """Where normalization bounds come from."""
    COMBINED_FRONT = 'combined_front'
    HARD_BOUNDS = 'hard_bounds'
    USER_SUPPLIED = 'user_supplied'


@dataclass(frozen=True)
class NormalizationBounds:
    """
    Per-objective ideal and nadir values in minimization orientation.

    Attributes:
        ideal: Per-objective best values.
        nadir: Per-objective worst values.
        source: Where the bounds were taken from.
    """
    ideal: Tuple[float, ...]
    nadir: Tuple[float, ...]
    source: NormalizationSource = NormalizationSource.COMBINED_FRONT

    def __post_init__(self) -> None:
        ideal = tuple(float(v) for v in self.ideal)
        nadir = tuple(float(v) for v in self.nadir)
        if len(ideal) != len(nadir):
            raise DimensionMismatchError("Ideal and nadir must have the same length")
        if any(lo > hi for lo, hi in zip(ideal, nadir)):
            raise ValueError(f"Ideal {ideal} must not exceed nadir {nadir}")
        object.__setattr__(self, 'ideal', ideal)
        object.__setattr__(self, 'nadir', nadir)

    def scale_point(self, point: Sequence[float]) -> Tuple[float, ...]:
        """Normalize a single point, degenerate objectives map to 0."""
        return tuple(
            0.0 if hi == lo else (v - lo) / (hi - lo)
            for v, lo, hi in zip(point, self.ideal, self.nadir)
        )


def compute_bounds(
    sets: Sequence[SolutionSet],
    source: NormalizationSource = NormalizationSource.COMBINED_FRONT,
    user: Optional[Tuple[Sequence[float], Sequence[float]]] = None,
) -> NormalizationBounds:
    """
    Build normalization bounds.

    Args:
        sets: Sets in minimization orientation.
        source: COMBINED_FRONT uses the unique front of the union; HARD_BOUNDS the
            problem boundary of each objective; USER_SUPPLIED the given (ideal, nadir).
        user: (ideal, nadir) in minimization orientation, for USER_SUPPLIED.

    Returns:
        NormalizationBounds: The bounds.
    """
    if source is NormalizationSource.USER_SUPPLIED:
        if user is None:
            raise ValueError("User-supplied normalization needs (ideal, nadir)")
        return NormalizationBounds(tuple(user[0]), tuple(user[1]), source)
    if source is NormalizationSource.HARD_BOUNDS:
        basis = sets[0]
        ideal, nadir = [], []
        for i, meta in enumerate(basis.meta):
            if meta.hard_bounds is None:
                raise ValueError(f"Objective '{meta.name}' has no hard bounds")
            sign = natural_signs(basis)[i]
            lo, hi = sorted((sign * meta.hard_bounds[0], sign * meta.hard_bounds[1]))
            ideal.append(lo)
            nadir.append(hi)
        return NormalizationBounds(tuple(ideal), tuple(nadir), source)
    front = build_reference_set(sets).as_array()
    return NormalizationBounds(tuple(front.min(axis=0)), tuple(front.max(axis=0)), source)


def normalize(sets: Sequence[SolutionSet], bounds: NormalizationBounds) -> List[SolutionSet]:
    """
    Map every value to (v - ideal) / (nadir - ideal).

    Values outside the bounds are kept as they are and reported.

    Args:
        sets: Sets in minimization orientation.
        bounds: Shared normalization bounds.

    Returns:
        list: Normalized sets in the same order.
    """
    ideal = np.asarray(bounds.ideal)
    nadir = np.asarray(bounds.nadir)
    span = nadir - ideal
    degenerate = span == 0
    for i in np.flatnonzero(degenerate):
        eval_log.warning(DEGENERATE_NORMALIZATION_MESSAGE.format(objective=i, value=ideal[i]))
    safe_span = np.where(degenerate, 1.0, span)

    normalized = []
    for A in sets:
        if A.m != len(ideal):
            raise DimensionMismatchError(f"Set '{A.name}' has {A.m} objectives, bounds have {len(ideal)}")
        X = A.as_array()
        scaled = np.where(degenerate, 0.0, (X - ideal) / safe_span)
        outside = int(np.count_nonzero((scaled < 0) | (scaled > 1)))
        if outside:
            eval_log.warning(OUT_OF_BOUNDS_MESSAGE.format(set_name=A.name, count=outside))
        normalized.append(A.with_solutions([
            replace(s, objectives=tuple(row)) for s, row in zip(A.solutions, scaled.tolist())
        ]))
    return normalized


def build_reference_set(sets: Sequence[SolutionSet], name: str = 'reference') -> SolutionSet:
    """
    Unique nondominated front of the union of the given sets.

    Each point keeps the name of the set it came from as its source.

    Args:
        sets: Sets in minimization orientation sharing m.
        name: Name of the resulting set.

    Returns:
        SolutionSet: The reference set.
    """
    if not sets:
        raise EmptySetError("Cannot build a reference set from no sets")
    m = sets[0].m
    union = []
    for A in sets:
        if A.m != m:
            raise DimensionMismatchError(f"Set '{A.name}' has {A.m} objectives, expected {m}")
        union.extend(s if s.source else replace(s, source=A.name) for s in A.solutions)
    if not union:
        raise EmptySetError("The union of the given sets is empty")
    return unique_nondominated_front(replace(sets[0], name=name, solutions=tuple(union)))


class ReferencePointKind(str, Enum):
    """Hypervolume reference point strategy."""
    WORST_VALUES = 'worst'
    NADIR = 'nadir'
    HARD_BOUNDS = 'hard-bounds'
    NADIR_PLUS_TENTH = 'nadir-plus-tenth'
    NADIR_PLUS_L_OVER_H = 'nadir-plus-l-over-h'
    DOUBLED_RANGE = 'doubled-range'
    EXPLICIT = 'explicit'


@dataclass(frozen=True)
class ReferencePointStrategy:
    """
    How to place the hypervolume reference point.

    Attributes:
        kind: Strategy kind.
        point: The point, for EXPLICIT only.
    """
    kind: ReferencePointKind = ReferencePointKind.NADIR_PLUS_TENTH
    point: Optional[Tuple[float, ...]] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, 'kind', ReferencePointKind(self.kind))
        if self.kind is ReferencePointKind.EXPLICIT:
            if self.point is None:
                raise ValueError("Explicit reference point strategy needs a point")
            object.__setattr__(self, 'point', tuple(float(v) for v in self.point))

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {'kind': self.kind.value}
        if self.point is not None:
            data['point'] = list(self.point)
        return data


def compute_h(n: int, m: int) -> int:
    """
    Divisions h with C(h+m-1, m-1) <= n < C(h+m, m-1).

    Args:
        n: Size of the solution set.
        m: Number of objectives.

    Returns:
        int: The unique h >= 1, or 1 when no h fits.
    """
    if n < 1 or m < 2:
        raise ValueError(f"compute_h needs n >= 1 and m >= 2, got n={n}, m={m}")
    if n < math.comb(m, m - 1):
        eval_log.warning(COMPUTE_H_FALLBACK_MESSAGE.format(n=n, m=m))
        return 1
    h = 1
    while not n < math.comb(h + m, m - 1):
        h += 1
    return h


def build_reference_point(
    basis: SolutionSet, strategy: ReferencePointStrategy
) -> Tuple[float, ...]:
    """
    Place the hypervolume reference point.

    Nadir and range are taken from the unique nondominated front of the basis.

    Args:
        basis: Sets' union or reference set, in minimization orientation.
        strategy: Placement strategy.

    Returns:
        tuple: The reference point.
    """
    if not len(basis):
        raise EmptySetError(f"Cannot place a reference point on empty set '{basis.name}'")
    kind = strategy.kind
    if kind is ReferencePointKind.WORST_VALUES:
        return tuple(basis.as_array().max(axis=0).tolist())

    front = unique_nondominated_front(basis).as_array()
    nadir = front.max(axis=0)
    span = nadir - front.min(axis=0)

    if kind is ReferencePointKind.EXPLICIT:
        if len(strategy.point) != basis.m:
            raise DimensionMismatchError(
                f"Reference point {strategy.point} has {len(strategy.point)} values, expected {basis.m}"
            )
        if np.any(np.asarray(strategy.point) < nadir):
            eval_log.warning(EXPLICIT_REFPOINT_MESSAGE.format(
                point=strategy.point, nadir=tuple(nadir.tolist())
            ))
        return strategy.point
    if kind is ReferencePointKind.NADIR:
        return tuple(nadir.tolist())
    if kind is ReferencePointKind.HARD_BOUNDS:
        signs = natural_signs(basis)
        point = []
        for i, meta in enumerate(basis.meta):
            if meta.hard_bounds is None:
                raise ValueError(f"Objective '{meta.name}' has no hard bounds")
            point.append(max(signs[i] * meta.hard_bounds[0], signs[i] * meta.hard_bounds[1]))
        return tuple(point)

    if kind is ReferencePointKind.NADIR_PLUS_TENTH:
        offset = span / 10
    elif kind is ReferencePointKind.NADIR_PLUS_L_OVER_H:
        offset = span / compute_h(len(front), basis.m)
    else:
        offset = span
    for i in np.flatnonzero(span == 0):
        eval_log.warning(DEGENERATE_RANGE_MESSAGE.format(objective=i))
    offset = np.where(span == 0, 1.0, offset)
    return tuple((nadir + offset).tolist())


def front_extremes(R: SolutionSet) -> Tuple[Tuple[float, float], Tuple[float, float]]:
    """
    The two extreme points of a bi-objective front.

    Args:
        R: Reference set with m = 2.

    Returns:
        tuple: (point with the best first objective, point with the best second objective).
    """
    if R.m != 2:
        raise DimensionMismatchError(f"Front extremes need m=2, got m={R.m}")
    points = [s.objectives for s in unique_nondominated_front(R)]
    if not points:
        raise EmptySetError(f"Set '{R.name}' is empty")
    first = min(points, key=lambda p: (p[0], p[1]))
    second = min(points, key=lambda p: (p[1], p[0]))
    return first, second
