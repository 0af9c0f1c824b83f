"""Human-readable and machine-readable reports."""

import json
from pathlib import Path
from typing import Any, Dict, Iterable, List, Mapping, Optional

from src.config.strings import (
    COMPARE_HEADER,
    DOE_HEADER,
    INDICATORS_HEADER,
    LINT_HEADER,
    MISLEADING_MESSAGE,
    NO_LINT_MESSAGE,
    NOTES_HEADER,
    PLAN_HEADER,
    PREPROCESSING_HEADER,
    RANKING_HEADER,
    REPORT_TITLE,
    REPRESENTATIVE_HEADER,
)


def to_json(report: Mapping[str, Any]) -> str:
    """Serialize a report; identical inputs give identical bytes."""
    return json.dumps(report, indent=2, sort_keys=True, ensure_ascii=False) + '\n'


def write_report(report: Mapping[str, Any], text: str, path: Path) -> Path:
    """
    Write the machine-readable report and its text rendering next to it.

    Args:
        report: Report document.
        text: Rendered text.
        path: JSON destination; the text goes to the same stem with '.txt'.

    Returns:
        Path: The JSON file written.
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(to_json(report), encoding='utf-8')
    path.with_suffix('.txt').write_text(text, encoding='utf-8')
    return path


def _fmt(value: Optional[float]) -> str:
    return 'n/a' if value is None else format(value, '.6g')


def _header(title: str) -> List[str]:
    return ['', title, '-' * len(title)]


def render_findings(findings: Iterable[Mapping[str, Any]]) -> List[str]:
    lines = _header(LINT_HEADER)
    findings = list(findings)
    if not findings:
        lines.append(NO_LINT_MESSAGE)
    for f in findings:
        issue = f" (Issue {f['issue']})" if f.get('issue') else ''
        lines.append(f"[{f['severity']}] {f['code']}{issue}: {f['message']}")
    return lines


def render_plan(plan: Mapping[str, Any]) -> List[str]:
    """Lines describing an evaluation plan."""
    lines = _header(PLAN_HEADER)
    for step in plan['preprocessing']:
        lines.append(f"* {step['step']}: {step['rationale']}")
    for indicator in plan['indicators']:
        strategy = indicator['config']['hv_strategy']['kind'] if indicator['name'] == 'HV' else None
        suffix = f" [{strategy}]" if strategy else ''
        lines.append(f"* indicator {indicator['name']}{suffix}: {indicator['rationale']}")
    for step in plan['doe_steps']:
        what = step['statistic'] or step['kind']
        lines.append(f"* {step['kind']} {what}: {step['rationale']}")
    lines.append(f"* plot: {plan['plotting']}")
    if plan['notes']:
        lines.extend(_header(NOTES_HEADER))
        lines.extend(f"- {note}" for note in plan['notes'])
    return lines


def render_evaluation(report: Mapping[str, Any]) -> str:
    """Text rendering of an evaluate report."""
    lines = [REPORT_TITLE, '=' * len(REPORT_TITLE), f"manifest: {report['manifest']}"]
    lines.append(f"objectives: {', '.join(report['objectives'])}")
    if report.get('plan'):
        lines.extend(render_plan(report['plan']))

    preprocessing = report['preprocessing']
    if preprocessing['removals'] or preprocessing['dropped'] or preprocessing['notes']:
        lines.extend(_header(PREPROCESSING_HEADER))
        for removal in preprocessing['removals']:
            lines.append(f"- {removal['set']}: removed {removal['solution']} ({removal['stage']}: {removal['rule']})")
        if preprocessing['dropped']:
            lines.append(f"- dropped objectives: {', '.join(preprocessing['dropped'])}")
        lines.extend(f"- {note}" for note in preprocessing['notes'])

    lines.extend(_header(INDICATORS_HEADER))
    for algorithm, indicators in report['results'].items():
        for name, entry in indicators.items():
            runs = ', '.join(_fmt(r['value']) for r in entry['runs'])
            lines.append(
                f"{algorithm:<12} {name:<7} mean={_fmt(entry['mean'])} median={_fmt(entry['median'])} runs=[{runs}]"
            )
    for row in report['pairwise']:
        value = _fmt(row['value']) if row.get('error') is None else row['error']
        lines.append(f"{row['indicator']}({row['first']}, {row['second']}) = {value}")
    for name, values in report['joint'].items():
        lines.append(f"{name} (joint): " + ', '.join(f"{a}={_fmt(v)}" for a, v in values.items()))

    if report['ranking']:
        lines.extend(_header(RANKING_HEADER))
        for name, order in report['ranking'].items():
            lines.append(f"{name}: {' > '.join(order)}")
    lines.extend(_header(REPRESENTATIVE_HEADER))
    for algorithm, chosen in report['representative_runs'].items():
        basis = f" by {chosen['indicator']}" if chosen['indicator'] else ''
        lines.append(f"{algorithm}: run {chosen['run']}{basis}")

    doe = report['doe']
    if doe['comparisons'] or report.get('scalarized'):
        lines.extend(_header(DOE_HEADER))
        lines.extend(render_comparisons(doe['comparisons']))
        for algorithm, best in (report.get('scalarized') or {}).items():
            lines.append(f"{algorithm}: weighted-sum best {best['solution']} score={_fmt(best['score'])}")

    lines.extend(render_findings(report['lint']))
    lines.append('')
    lines.append(f"exit status: {report['exit_status']}")
    return '\n'.join(lines) + '\n'


def render_comparisons(comparisons: Iterable[Mapping[str, Any]]) -> List[str]:
    lines = []
    for row in comparisons:
        winners = ', '.join(row['winners'])
        flag = f" ({MISLEADING_MESSAGE})" if row['misleading'] else ''
        lines.append(f"{row['first_set']} vs {row['second_set']} by {row['statistic']}: {winners}{flag}")
    return lines


def render_compare(report: Mapping[str, Any]) -> str:
    lines = [f"{report['first']} vs {report['second']}: {report['relation']}"]
    for row in report['results']:
        lines.extend(_header(COMPARE_HEADER.format(indicator=row['indicator'])))
        lines.append(f"{row['indicator']}({report['first']}, {report['second']}) = {_fmt(row['forward'])}")
        lines.append(f"{row['indicator']}({report['second']}, {report['first']}) = {_fmt(row['backward'])}")
    return '\n'.join(lines) + '\n'


def render_stats(report: Mapping[str, Any]) -> str:
    lines = [REPORT_TITLE, '=' * len(REPORT_TITLE)]
    lines.extend(_header(DOE_HEADER))
    for run in report['runs']:
        if run.get('error'):
            lines.append(f"{run['set']}: {run['error']}")
            continue
        for objective, stats in run['stats'].items():
            values = ' '.join(f"{k}={_fmt(v)}" for k, v in stats.items())
            lines.append(f"{run['set']:<12} {objective:<12} {values}")
    lines.append('')
    lines.extend(render_comparisons(report['comparisons']))
    return '\n'.join(lines) + '\n'


def render_lint(findings: Iterable[Mapping[str, Any]], indicators: Iterable[str]) -> str:
    lines = [f"indicators: {', '.join(indicators) or 'none'}"]
    lines.extend(render_findings(findings))
    return '\n'.join(lines) + '\n'


def render_recommendation(plan: Dict[str, Any]) -> str:
    lines = render_plan(plan)[1:]
    lines.extend(render_findings(plan['warnings']))
    return '\n'.join(lines) + '\n'
