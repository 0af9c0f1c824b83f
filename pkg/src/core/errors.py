"""Exception hierarchy for solution-set evaluation."""

from pathlib import Path
from typing import Optional


class EvaluationError(Exception):
    """Base class for every error raised by the evaluation toolkit."""


class DimensionMismatchError(EvaluationError, ValueError):
    """Objective vectors or sets disagree on the number of objectives."""


class EmptySetError(EvaluationError, ValueError):
    """An operation is undefined on an empty solution set."""


class UnsupportedDimensionError(EvaluationError, ValueError):
    """An indicator was asked to work outside its supported objective count."""


class DegenerateBoundsError(EvaluationError, ValueError):
    """Bounds collapse to zero width on some objective."""


class UnknownIndicatorError(EvaluationError, KeyError):
    """The indicator name is not registered."""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else ''


class IndicatorArityError(EvaluationError, ValueError):
    """A unary indicator was requested where a binary one is needed, or vice versa."""


class InconsistentPreferencesError(EvaluationError, ValueError):
    """Decision-maker preferences contradict each other or the problem metadata."""


class ManifestError(EvaluationError):
    """The evaluation manifest is malformed."""


class CsvFormatError(ManifestError):
    """
    A solution-set CSV file could not be parsed.

    Attributes:
        path: File being parsed.
        line: 1-based line number of the offending row, if known.
    """

    def __init__(self, message: str, path: Optional[Path] = None, line: Optional[int] = None):
        self.path = path
        self.line = line
        location = ''
        if path is not None:
            location = f"{path}"
            if line is not None:
                location += f":{line}"
            location += ': '
        super().__init__(f"{location}{message}")
