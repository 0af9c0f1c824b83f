"""End-to-end scenarios through the command line."""
import json
from pathlib import Path
from typing import TYPE_CHECKING, Any, Callable, Dict

import pytest

from src.cli import pipeline
from src.cli.manifest import load_manifest, load_solution_set, write_solution_set
from src.cli.pipeline import Evaluator, PreparedSets, prepare_sets, representative_runs
from src.core.doe import RunCollection
from src.core.errors import CsvFormatError, ManifestError
from src.core.guidance import EvaluationMode
from src.core.indicators import IndicatorConfig
from src.core.preprocess import PreferenceSpec
from src.core.solution import Direction, ObjectiveMeta, Solution, SolutionSet
from src.main import main
from tests.conftest import make_set

if TYPE_CHECKING:
    from _pytest.capture import CaptureFixture
    from pytest_mock.plugin import MockerFixture


KNEE_RUNS = {'A': [[(2, 6), (9, 2)]], 'B': [[(1, 10), (7, 5), (12, 1.5)]]}
RAW_HV = {'normalization': 'none', 'ref_point': [13, 11]}
CAPACITY_OBJECTIVES = ({'name': 'cost'}, {'name': 'users', 'direction': 'maximize'})
CAPACITY_RUNS = {
    'A': [[(750, 2000), (1500, 2500), (1750, 3000)]],
    'B': [[(500, 1000), (1250, 2500), (2000, 4000)]],
}
CAPACITY_PREFERENCES = {'vague': [{'objective': 'users', 'saturation': 3000, 'hard_floor': 1500}]}


def _read(path: Path) -> Dict[str, Any]:
    return json.loads(path.read_text(encoding='utf-8'))


async def _run(*argv: str) -> int:
    return await main(list(argv))


class TestEvaluate:

    @pytest.mark.asyncio
    async def test_hypervolume_prefers_knee_points(
        self, write_manifest: Callable[..., Path], tmp_path: Path
    ) -> None:
        """
        Knee points win on hypervolume and lose on the contribution indicator.

        Args:
            write_manifest: Manifest writer fixture.
            tmp_path: Output location.
        """
        manifest = write_manifest(KNEE_RUNS, indicators=['HV', 'CI'], indicator_overrides=RAW_HV)
        status = await _run('evaluate', '--manifest', str(manifest), '--out', str(tmp_path / 'out'))
        report = _read(tmp_path / 'out' / 'report.json')

        assert status == 0
        assert report['results']['A']['HV']['median'] == pytest.approx(71.0)
        assert report['results']['B']['HV']['median'] == pytest.approx(45.5)
        assert report['ranking']['HV'] == ['A', 'B']
        pairwise = {(r['first'], r['second']): r['value'] for r in report['pairwise']}
        assert pairwise[('A', 'B')] == pytest.approx(0.4)
        assert pairwise[('B', 'A')] == pytest.approx(0.6)
        assert (tmp_path / 'out' / 'report.txt').read_text(encoding='utf-8').startswith('Solution-set evaluation report')

    @pytest.mark.asyncio
    async def test_recommended_plan_without_chosen_indicators(
        self, write_manifest: Callable[..., Path], tmp_path: Path
    ) -> None:
        manifest = write_manifest(KNEE_RUNS)
        status = await _run('evaluate', '--manifest', str(manifest), '--out', str(tmp_path / 'out'))
        report = _read(tmp_path / 'out' / 'report.json')

        assert status == 0
        assert report['plan'] is not None
        assert [i['name'] for i in report['indicators']] == ['GD+', 'DCI', 'UNFR', 'HV']
        assert report['normalization']['combined_front']['nadir'] == [12.0, 10.0]
        assert set(report['joint']['DCI']) == {'A', 'B'}
        assert report['lint'] == []
        assert report['representative_runs']['A'] == {'run': 0, 'indicator': 'HV'}

    @pytest.mark.asyncio
    async def test_spread_on_three_objectives_is_an_error(
        self, write_manifest: Callable[..., Path], tmp_path: Path
    ) -> None:
        objectives = ({'name': 'f1'}, {'name': 'f2'}, {'name': 'f3'})
        manifest = write_manifest(
            {'A': [[(1, 2, 3), (3, 2, 1)]], 'B': [[(2, 2, 2)]]},
            objectives=objectives,
            indicators=['Spread', 'HV'],
        )
        status = await _run('evaluate', '--manifest', str(manifest), '--out', str(tmp_path / 'out'))
        report = _read(tmp_path / 'out' / 'report.json')

        assert status == 2
        assert [f['code'] for f in report['lint']] == ['L-SPREAD-DIM', 'L-IGD-REFSET']
        assert report['results']['A']['Spread']['runs'][0]['value'] is None
        assert report['results']['A']['HV']['median'] is not None

    @pytest.mark.asyncio
    async def test_vague_preferences_change_the_hypervolume_ranking(
        self, write_manifest: Callable[..., Path], tmp_path: Path
    ) -> None:
        """
        Users beyond saturation stop counting, which turns the ranking around.

        Args:
            write_manifest: Manifest writer fixture.
            tmp_path: Output location.
        """
        overrides = {'normalization': 'none', 'ref_point': [2500, 0]}
        manifest = write_manifest(
            CAPACITY_RUNS, objectives=CAPACITY_OBJECTIVES,
            indicators=['HV'], indicator_overrides=overrides, preferences=CAPACITY_PREFERENCES,
        )
        status = await _run('evaluate', '--manifest', str(manifest), '--out', str(tmp_path / 'out'))
        report = _read(tmp_path / 'out' / 'report.json')

        assert status == 0
        assert report['results']['A']['HV']['median'] == pytest.approx(4_375_000)
        assert report['results']['B']['HV']['median'] == pytest.approx(3_375_000)
        assert report['ranking']['HV'] == ['A', 'B']

    @pytest.mark.asyncio
    async def test_ignored_vague_preferences_are_flagged(
        self, write_manifest: Callable[..., Path], tmp_path: Path
    ) -> None:
        overrides = {'normalization': 'none', 'ref_point': [2500, 0]}
        manifest = write_manifest(
            CAPACITY_RUNS, objectives=CAPACITY_OBJECTIVES,
            indicators=['HV'], indicator_overrides=overrides, preferences=CAPACITY_PREFERENCES,
            evaluation_mode={'vague_transfer': False, 'normalization': False},
        )
        status = await _run('evaluate', '--manifest', str(manifest), '--out', str(tmp_path / 'out'))
        report = _read(tmp_path / 'out' / 'report.json')

        assert status == 1
        assert report['results']['B']['HV']['median'] == pytest.approx(4_625_000)
        assert report['ranking']['HV'] == ['B', 'A']
        assert [f['code'] for f in report['lint']] == ['L-PREF-IGNORED']

    @pytest.mark.asyncio
    async def test_screening_and_exactly_best(
        self, write_manifest: Callable[..., Path], tmp_path: Path
    ) -> None:
        preferences = {
            'screening': [{'objective': 'coverage', 'kind': 'at_least', 'threshold': 0, 'strict': True}],
            'clear': [{'objective': 'coverage', 'kind': 'exactly_best', 'threshold': 1.0}],
        }
        manifest = write_manifest(
            {
                'A': [[(200, 0.2), (350, 0.4), (400, 0.6), (450, 1.0)]],
                'B': [[(0, 0), (100, 0.4), (200, 0.7), (350, 0.9), (500, 1.0)]],
            },
            objectives=({'name': 'cost'}, {'name': 'coverage', 'direction': 'maximize'}),
            preferences=preferences,
        )
        status = await _run('evaluate', '--manifest', str(manifest), '--out', str(tmp_path / 'out'))
        report = _read(tmp_path / 'out' / 'report.json')

        assert status == 0
        assert report['objectives'] == ['cost']
        assert report['preprocessing']['dropped'] == ['coverage']
        screened = [r for r in report['preprocessing']['removals'] if r['stage'] == 'screen']
        assert screened == [
            {'set': 'B:0', 'stage': 'screen', 'solution': [0.0, 0.0], 'rule': 'coverage > 0'}
        ]
        assert report['preprocessing']['notes']
        assert report['results']['A']['BEST']['median'] == 450.0
        assert report['results']['B']['BEST']['median'] == 500.0

    @pytest.mark.asyncio
    async def test_report_location_from_the_manifest(
        self, write_manifest: Callable[..., Path], tmp_path: Path
    ) -> None:
        manifest = write_manifest(
            KNEE_RUNS, indicators=['HV'], indicator_overrides=RAW_HV,
            output={'report': 'results/knee.json'},
        )
        await _run('evaluate', '--manifest', str(manifest))
        assert (tmp_path / 'results' / 'knee.json').is_file()
        assert (tmp_path / 'results' / 'knee.txt').is_file()

    @pytest.mark.asyncio
    async def test_reports_are_reproducible(
        self, write_manifest: Callable[..., Path], tmp_path: Path
    ) -> None:
        manifest = write_manifest(KNEE_RUNS)
        await _run('evaluate', '--manifest', str(manifest), '--out', str(tmp_path / 'first'))
        await _run('evaluate', '--manifest', str(manifest), '--out', str(tmp_path / 'second'))
        first = (tmp_path / 'first' / 'report.json').read_bytes()
        assert first == (tmp_path / 'second' / 'report.json').read_bytes()


class TestCompare:

    @pytest.mark.asyncio
    async def test_contribution_in_both_orders(
        self, write_manifest: Callable[..., Path], tmp_path: Path
    ) -> None:
        manifest = write_manifest(KNEE_RUNS)
        status = await _run('compare', '--manifest', str(manifest), '--out', str(tmp_path / 'out'), 'A', 'B')
        report = _read(tmp_path / 'out' / 'compare.json')

        assert status == 0
        assert report['relation'] == 'incomparable'
        assert report['results'][0]['indicator'] == 'CI'
        assert report['results'][0]['forward'] == pytest.approx(0.4)
        assert report['results'][0]['backward'] == pytest.approx(0.6)

    @pytest.mark.asyncio
    async def test_epsilon_of_identical_sets(
        self, write_manifest: Callable[..., Path], tmp_path: Path
    ) -> None:
        points = [(1, 3), (2, 2), (3, 1)]
        manifest = write_manifest({'A': [points], 'B': [points]})
        await _run(
            'compare', '--manifest', str(manifest), '--indicator', 'EPS',
            '--out', str(tmp_path / 'out'), 'A', 'B',
        )
        report = _read(tmp_path / 'out' / 'compare.json')
        assert report['relation'] == 'equivalent'
        assert (report['results'][0]['forward'], report['results'][0]['backward']) == (0.0, 0.0)

    @pytest.mark.asyncio
    async def test_coverage_of_a_dominated_set(
        self, write_manifest: Callable[..., Path], tmp_path: Path
    ) -> None:
        manifest = write_manifest({'A': [[(1, 1)]], 'B': [[(3, 5), (5, 3)]]})
        await _run(
            'compare', '--manifest', str(manifest), '--indicator', 'C', '--no-normalize',
            '--out', str(tmp_path / 'out'), 'A:0', 'B:0',
        )
        report = _read(tmp_path / 'out' / 'compare.json')
        assert report['relation'] == 'first_better'
        assert (report['results'][0]['forward'], report['results'][0]['backward']) == (1.0, 0.0)

    @pytest.mark.asyncio
    async def test_unary_indicator_is_rejected(
        self, write_manifest: Callable[..., Path], capsys: "CaptureFixture[str]"
    ) -> None:
        manifest = write_manifest(KNEE_RUNS)
        status = await _run('compare', '--manifest', str(manifest), '--indicator', 'HV', 'A', 'B')
        assert status == 2
        assert 'compare needs CI, C or EPS' in capsys.readouterr().err


class TestAdvice:

    @pytest.mark.asyncio
    async def test_recommend_for_a_knee_preference(
        self, write_manifest: Callable[..., Path], tmp_path: Path, capsys: "CaptureFixture[str]"
    ) -> None:
        manifest = write_manifest(KNEE_RUNS, preferences={'roi': 'knee'}, indicators=['IGD'])
        status = await _run('recommend', '--manifest', str(manifest), '--out', str(tmp_path / 'out'))
        plan = _read(tmp_path / 'out' / 'plan.json')

        assert status == 0
        assert [i['name'] for i in plan['indicators']] == ['HV', 'EPS']
        assert plan['indicators'][0]['config']['hv_strategy'] == {'kind': 'nadir-plus-tenth'}
        assert 'D11' in plan['indicators'][0]['rationale']
        assert plan['warnings'] == []
        assert 'indicator HV [nadir-plus-tenth]' in capsys.readouterr().out

    @pytest.mark.asyncio
    async def test_recommend_applies_overrides(
        self, write_manifest: Callable[..., Path], tmp_path: Path
    ) -> None:
        manifest = write_manifest(KNEE_RUNS, preferences={'roi': 'knee'})
        status = await _run(
            'recommend', '--manifest', str(manifest), '--ref-strategy', 'nadir',
            '--out', str(tmp_path / 'out'),
        )
        plan = _read(tmp_path / 'out' / 'plan.json')
        assert status == 1
        assert plan['indicators'][0]['config']['hv_strategy'] == {'kind': 'nadir'}
        assert [w['code'] for w in plan['warnings']] == ['L-HV-REFPOINT']

    @pytest.mark.asyncio
    async def test_lint_flags_igd_with_a_knee_preference(
        self, write_manifest: Callable[..., Path], tmp_path: Path
    ) -> None:
        manifest = write_manifest(KNEE_RUNS, preferences={'roi': 'knee'}, indicators=['HV', 'IGD'])
        status = await _run('lint', '--manifest', str(manifest), '--out', str(tmp_path / 'out'))
        report = _read(tmp_path / 'out' / 'lint.json')

        assert status == 1
        assert report['indicators'] == ['HV', 'IGD']
        codes = {f['code'] for f in report['lint']}
        assert codes == {'L-IGD-REFSET', 'L-KNEE-MISMATCH'}

    @pytest.mark.asyncio
    async def test_strict_lint(self, write_manifest: Callable[..., Path]) -> None:
        manifest = write_manifest(KNEE_RUNS, preferences={'roi': 'knee'})
        status = await _run('lint', '--manifest', str(manifest), '--indicator', 'IGD', '--strict')
        assert status == 2

    @pytest.mark.asyncio
    async def test_command_line_indicators_override_the_manifest(
        self, write_manifest: Callable[..., Path], capsys: "CaptureFixture[str]"
    ) -> None:
        manifest = write_manifest(KNEE_RUNS, preferences={'roi': 'knee'}, indicators=['IGD'])
        status = await _run('lint', '--manifest', str(manifest), '--indicator', 'hypervolume')
        assert status == 0
        out = capsys.readouterr().out
        assert out.startswith('indicators: HV')
        assert 'No findings.' in out


class TestStats:

    @pytest.mark.asyncio
    async def test_mean_comparison_is_flagged_as_misleading(
        self, write_manifest: Callable[..., Path], tmp_path: Path
    ) -> None:
        manifest = write_manifest({'A': [[(1, 1), (9, 9)]], 'B': [[(3, 5), (5, 3)]]})
        status = await _run('stats', '--manifest', str(manifest), '--out', str(tmp_path / 'out'))
        report = _read(tmp_path / 'out' / 'stats.json')

        assert status == 1
        assert report['comparisons'][0]['statistic'] == 'mean'
        assert report['comparisons'][0]['misleading'] is True
        assert report['runs'][0]['stats']['f1']['mean'] == 5.0

    @pytest.mark.asyncio
    async def test_best_values_are_not_misleading(
        self, write_manifest: Callable[..., Path], tmp_path: Path
    ) -> None:
        manifest = write_manifest({'A': [[(1, 1), (9, 9)]], 'B': [[(3, 5), (5, 3)], []]})
        status = await _run(
            'stats', '--manifest', str(manifest), '--statistic', 'best', '--out', str(tmp_path / 'out')
        )
        report = _read(tmp_path / 'out' / 'stats.json')
        assert status == 0
        assert report['comparisons'][0]['winners'] == ['first', 'first']
        assert report['runs'][-1] == {'set': 'B:1', 'error': "'B:1' is empty"}


class TestPlotData:

    @pytest.mark.asyncio
    async def test_scatter_files_of_representative_runs(
        self, write_manifest: Callable[..., Path], tmp_path: Path
    ) -> None:
        runs = {
            'A': [[(1, 3), (3, 1)], [(2, 6), (9, 2)], [(0, 5), (5, 0)]],
            'B': [[(1, 10), (7, 5), (12, 1.5)]],
        }
        manifest = write_manifest(runs, indicators=['HV'], indicator_overrides=RAW_HV)
        status = await _run('plot-data', '--manifest', str(manifest), '--out', str(tmp_path / 'plots'))

        assert status == 0
        # HV at (13, 11): 116, 71 and 118; the median run is the first
        scatter = (tmp_path / 'plots' / 'scatter_A.csv').read_text(encoding='utf-8').splitlines()
        assert scatter == ['f1,f2', '1,3', '3,1']
        assert (tmp_path / 'plots' / 'scatter_B.csv').is_file()

    @pytest.mark.asyncio
    async def test_empty_representative_run(
        self, write_manifest: Callable[..., Path], tmp_path: Path
    ) -> None:
        manifest = write_manifest(
            {'A': [[(2, 6), (9, 2)]], 'B': [[]]}, indicators=['HV'], indicator_overrides=RAW_HV
        )
        status = await _run('plot-data', '--manifest', str(manifest), '--out', str(tmp_path / 'plots'))
        assert status == 0
        assert (tmp_path / 'plots' / 'scatter_B.csv').read_text(encoding='utf-8').splitlines() == ['f1,f2']

    @pytest.mark.asyncio
    async def test_parallel_coordinates_beyond_three_objectives(
        self, write_manifest: Callable[..., Path], tmp_path: Path
    ) -> None:
        objectives = tuple({'name': f"f{i}"} for i in range(1, 5))
        manifest = write_manifest(
            {'A': [[(0, 1, 1, 1), (1, 0, 1, 1)]], 'B': [[(1, 1, 0, 1), (1, 1, 1, 0), (2, 2, 2, 2)]]},
            objectives=objectives,
        )
        status = await _run('plot-data', '--manifest', str(manifest), '--out', str(tmp_path / 'plots'))
        rows = (tmp_path / 'plots' / 'parallel_coordinates.csv').read_text(encoding='utf-8').splitlines()

        assert status == 0
        assert rows[0] == 'set,solution_id,objective,value'
        assert len(rows) == 1 + (2 + 3) * 4
        assert not list((tmp_path / 'plots').glob('scatter_*.csv'))


class TestFailures:

    @pytest.mark.asyncio
    async def test_csv_errors_name_the_line(
        self, write_manifest: Callable[..., Path], tmp_path: Path, capsys: "CaptureFixture[str]"
    ) -> None:
        manifest = write_manifest(KNEE_RUNS)
        (tmp_path / 'A_0.csv').write_text('f1,f2\n1,2\n3,x\n', encoding='utf-8')
        status = await _run('evaluate', '--manifest', str(manifest), '--out', str(tmp_path / 'out'))
        assert status == 2
        assert 'A_0.csv:3' in capsys.readouterr().err

    @pytest.mark.asyncio
    async def test_unexpected_errors_exit_with_two(
        self, write_manifest: Callable[..., Path], mocker: "MockerFixture", capsys: "CaptureFixture[str]"
    ) -> None:
        mocker.patch('src.cli.handlers.evaluate.run_evaluation', side_effect=RuntimeError('boom'))
        manifest = write_manifest(KNEE_RUNS)
        status = await _run('evaluate', '--manifest', str(manifest))
        assert status == 2
        assert 'Error: boom' in capsys.readouterr().err

    @pytest.mark.asyncio
    async def test_failed_indicator_cells_exit_with_two(
        self, write_manifest: Callable[..., Path], tmp_path: Path
    ) -> None:
        runs = {'A': [[(2, 6), (9, 2)]], 'B': [[(1, 10), (7, 5), (12, 1.5)], []]}
        manifest = write_manifest(runs, indicators=['IGD+', 'HV'])
        status = await _run('evaluate', '--manifest', str(manifest), '--out', str(tmp_path / 'out'))
        report = _read(tmp_path / 'out' / 'report.json')

        assert status == 2
        assert all(f['severity'] != 'error' for f in report['lint'])
        assert report['results']['B']['IGD+']['runs'][1]['error'] is not None
        assert report['representative_runs']['B'] == {'run': 0, 'indicator': 'HV'}

    @pytest.mark.asyncio
    async def test_invalid_utf8_names_the_line(
        self, write_manifest: Callable[..., Path], tmp_path: Path, capsys: "CaptureFixture[str]"
    ) -> None:
        manifest = write_manifest(KNEE_RUNS)
        (tmp_path / 'B_0.csv').write_bytes(b'f1,f2\n1,10\n\xff,5\n')
        status = await _run('evaluate', '--manifest', str(manifest))
        assert status == 2
        assert 'B_0.csv:3' in capsys.readouterr().err

    @pytest.mark.asyncio
    async def test_unknown_manifest_field(
        self, write_manifest: Callable[..., Path], capsys: "CaptureFixture[str]"
    ) -> None:
        manifest = write_manifest(KNEE_RUNS, colour='red')
        assert await _run('lint', '--manifest', str(manifest)) == 2
        assert 'Unknown manifest fields' in capsys.readouterr().err


def test_missing_run_file(write_manifest: Callable[..., Path], tmp_path: Path) -> None:
    manifest = write_manifest(KNEE_RUNS)
    (tmp_path / 'B_0.csv').unlink()
    with pytest.raises(ManifestError):
        load_manifest(manifest)


def test_header_must_match_the_objectives(tmp_path: Path) -> None:
    path = tmp_path / 'bad.csv'
    path.write_text('cost,latency\n1,2\n', encoding='utf-8')
    with pytest.raises(CsvFormatError) as error:
        load_solution_set(path, (ObjectiveMeta('cost'), ObjectiveMeta('users')))
    assert error.value.line == 1


def test_written_sets_read_back_identically(tmp_path: Path) -> None:
    meta = (ObjectiveMeta('cost'), ObjectiveMeta('users', Direction.MAXIMIZE))
    A = SolutionSet('A', meta, (Solution((0.1, 1 / 3), id='s1'), Solution((2.5e-17, 7.0), id='s2')))
    write_solution_set(tmp_path / 'A.csv', A)
    loaded = load_solution_set(tmp_path / 'A.csv', meta, name='A')
    assert loaded == A


def test_invalid_utf8_is_a_csv_error(tmp_path: Path) -> None:
    path = tmp_path / 'latin.csv'
    path.write_bytes(b'f1,f2\n1,2\n\xe9,3\n')
    with pytest.raises(CsvFormatError) as error:
        load_solution_set(path, (ObjectiveMeta('f1'), ObjectiveMeta('f2')))
    assert error.value.line == 3
    assert error.value.path == path


def _prepared(runs: Dict[str, list]) -> PreparedSets:
    collections = [
        RunCollection(name, tuple(make_set(f"{name}:{i}", points) for i, points in enumerate(sets)))
        for name, sets in runs.items()
    ]
    return prepare_sets(collections, PreferenceSpec(), EvaluationMode(), (0, 1))


def test_grid_bounds_of_a_normalized_space() -> None:
    # front (1, 3), (3, 1); B reaches twice the normalized range
    evaluator = Evaluator(_prepared({'A': [[(1, 3), (3, 1)]], 'B': [[(2, 4), (4, 2), (5, 5)]]}))
    _, _, reference = evaluator.context(IndicatorConfig())
    assert reference.bounds.ideal == (0.0, 0.0)
    assert reference.bounds.nadir == (1.0, 1.0)


def test_representative_runs_share_the_reference_data(mocker: "MockerFixture") -> None:
    evaluator = Evaluator(_prepared({
        'A': [[(1, 3), (3, 1)], [], [(2, 4), (4, 2)]],
        'B': [[(2, 4), (4, 2), (5, 5)]],
    }))
    spy = mocker.spy(pipeline, 'select_representative_run')
    chosen = representative_runs(evaluator, (('HV', IndicatorConfig()),), 'HV')
    _, _, reference = evaluator.context(IndicatorConfig())

    assert chosen == {'A': 2, 'B': 0}
    assert spy.call_count == 2
    assert all(call.args[3] is reference for call in spy.call_args_list)
