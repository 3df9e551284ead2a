import json
import re
import tempfile
from fractions import Fraction
from io import StringIO
from pathlib import Path

import numpy as np
from django.conf import settings
from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, override_settings

from Scheme.exceptions import ParameterError
from Scheme.identities import IdentityReport
from Scheme.instance import circulant_instance, write_scheme_file

from .checks import params_point, sturm_run
from .exceptions import ConfigError, ReportFormatError
from .records import CheckRecord, Report, RunConfig, jsonable
from .serializers import parse_report, render_report
from .tasks import BrokerUnavailable, run_grid, run_params_point


def _run(command, **options):
    out = StringIO()
    call_command(command, stdout=out, **options)
    return out.getvalue()


def _without_timing(content):
    return re.sub(r'"seconds":[0-9.eE+-]+', '"seconds":0', content)


class RecordTests(SimpleTestCase):
    def test_jsonable(self):
        value = jsonable({1: (Fraction(1, 3), np.int64(4)), 'a': [np.arange(2)], 'b': None})
        self.assertEqual(value, {'1': ['1/3', 4], 'a': [[0, 1]], 'b': None})

    def test_failure_needs_witness(self):
        with self.assertRaises(ConfigError):
            CheckRecord('x', 'fail')

    def test_from_report(self):
        report = IdentityReport('demo', 3, ({'index': (1, 2)},), {'value': Fraction(1, 2)})
        record = CheckRecord.from_report(report, 0.5)
        self.assertEqual(record.status, 'fail')
        self.assertEqual(record.witness, {'index': [1, 2]})
        self.assertEqual(record.details['value'], '1/2')
        self.assertEqual(record.details['checked'], 3)

    def test_config_preconditions(self):
        with self.assertRaises(ParameterError):
            RunConfig('params', q=3, m=2)
        with self.assertRaises(ConfigError):
            RunConfig('hadamard', q=4, m=2, precision=64)
        with self.assertRaises(ConfigError):
            RunConfig('params', q=4)

    def test_report_status(self):
        report = Report.start(RunConfig('params'))
        report.extend([CheckRecord('a', 'pass'), CheckRecord.skipped('b', 'nothing to do')])
        self.assertTrue(report.passed)
        report.extend([CheckRecord('c', 'fail', witness={'index': 0})])
        self.assertFalse(report.passed)


class SerializationTests(SimpleTestCase):
    def test_round_trip(self):
        report = Report.start(RunConfig('params', q=4, m=2, output_format='json'))
        report.extend(params_point(4, 2))
        report.extend(sturm_run(['1', '0', '-1'], '-2', '2'))
        report.extend([CheckRecord('broken', 'fail', {'n': 1}, {'pair': [0, 1]}, 0.25)])
        self.assertEqual(parse_report(render_report(report)), report)

    def test_rendered_layout(self):
        report = Report.start(RunConfig('sturm', coeffs=['1', '0', '-1']))
        report.extend(sturm_run(['1', '0', '-1']))
        data = json.loads(render_report(report))
        self.assertEqual(set(data), {'version', 'passed', 'config', 'records'})
        self.assertEqual(data['records'][0]['details']['count'], 2)
        self.assertTrue(data['passed'])

    def test_garbage_rejected(self):
        with self.assertRaises(ReportFormatError):
            parse_report(b'{"version": "1.0.0"}')
        with self.assertRaises(ReportFormatError):
            parse_report(b'not json')

    def test_inline_grid_keeps_order(self):
        records = run_grid(run_params_point, [(8, 2), (4, 2)])
        self.assertEqual(len(records), 8)
        self.assertTrue(records[0].name.endswith('q=8 m=2'))
        self.assertTrue(records[-1].name.endswith('q=4 m=2'))


class _QueuedTask:
    name = 'queued-params'

    def __init__(self, error):
        self.error = error

    def delay(self, *args):
        raise self.error

    def __call__(self, q, m):
        return run_params_point(q, m)


class CeleryWiringTests(SimpleTestCase):
    def test_project_app_is_current(self):
        try:
            from celery import current_app
        except ImportError:
            self.skipTest('celery is not installed')
        from Hadamard import celery_app
        self.assertEqual(celery_app.main, 'Hadamard')
        self.assertEqual(current_app.main, 'Hadamard')
        self.assertEqual(celery_app.conf.broker_url, settings.CELERY_BROKER_URL)

    @override_settings(CELERY_ENABLED=True)
    def test_unreachable_broker_runs_inline(self):
        records = run_grid(_QueuedTask(BrokerUnavailable('connection refused')), [(4, 2)])
        self.assertEqual(len(records), 4)
        self.assertTrue(all(not record.failed for record in records))

    @override_settings(CELERY_ENABLED=True)
    def test_other_errors_propagate(self):
        with self.assertRaises(TypeError):
            run_grid(_QueuedTask(TypeError('bad arguments')), [(4, 2)])


class CommandTests(SimpleTestCase):
    def test_params_point(self):
        output = _run('params', q=4, m=2)
        self.assertIn('PASS', output)
        self.assertIn('all checks passed', output)

    def test_params_symbolic_json(self):
        report = parse_report(_run('params', symbolic=True, output_format='json').encode())
        self.assertTrue(report.passed)
        names = [record.name for record in report.records]
        self.assertIn('printed intersection matrices', names)
        for q, m in settings.DEFAULT_GRID:
            self.assertIn(f'integrality q={q} m={m}', names)

    def test_params_rejects_small_or_odd_q(self):
        with self.assertRaises(CommandError):
            _run('params', q=3, m=2)
        with self.assertRaises(CommandError):
            _run('params', q=5, m=2)

    def test_params_needs_a_target(self):
        with self.assertRaises(CommandError):
            _run('params')

    def test_hadamard_exact(self):
        report = parse_report(_run('hadamard', family='I', q=4, m=2, output_format='json').encode())
        self.assertTrue(report.passed)
        gram = [r for r in report.records if r.name.startswith('Gram')][0]
        self.assertEqual(gram.details['S'], ['255', '0', '0', '0', '0'])

    def test_hadamard_symbolic(self):
        report = parse_report(_run('hadamard', family='II', symbolic=True, output_format='json').encode())
        self.assertTrue(report.passed)

    def test_hadamard_family_six(self):
        report = parse_report(_run('hadamard', family='VI', q=4, m=2, output_format='json').encode())
        self.assertTrue(report.passed)
        self.assertEqual(len(report.records), 8)
        with self.assertRaises(CommandError):
            _run('hadamard', family='VI', q=8, m=2)
        with self.assertRaises(CommandError):
            _run('hadamard', family='VI', symbolic=True)

    def test_nomura_point(self):
        output = _run('nomura', family='II', q=4, m=2)
        self.assertIn('all checks passed', output)

    def test_sturm(self):
        report = parse_report(_run('sturm', p9=True, output_format='json').encode())
        self.assertEqual(report.records[0].details['count'], 1)
        report = parse_report(_run('sturm', coeffs=['1', '0', '-1'], lo='-2', hi='2',
                                   output_format='json').encode())
        self.assertEqual(report.records[0].details['count'], 2)

    def test_sturm_long_flag_and_alias(self):
        for flag in ('--paper-p9', '--p9'):
            out = StringIO()
            call_command('sturm', flag, '--format', 'json', stdout=out)
            report = parse_report(out.getvalue().encode())
            self.assertEqual(report.records[0].details['count'], 1, flag)
        with self.assertRaises(CommandError):
            _run('sturm', p9=True, coeffs=['1', '0', '-1'])

    def test_sturm_zero_polynomial(self):
        with self.assertRaises(CommandError):
            _run('sturm', coeffs=['0'])

    def test_identical_runs_are_identical(self):
        first = _run('params', q=8, m=2, output_format='json')
        second = _run('params', q=8, m=2, output_format='json')
        self.assertEqual(_without_timing(first), _without_timing(second))

    @override_settings(SCHEME_FILE=None)
    def test_dense_without_scheme_is_skipped(self):
        output = _run('dense', family='I', q=4, m=2)
        self.assertIn('SKIPPED', output)

    def test_dense_invalid_scheme_fails_with_exit_code(self):
        with tempfile.TemporaryDirectory() as directory:
            path = Path(directory) / 'circulant.txt'
            write_scheme_file(circulant_instance(4, 2), path)
            with self.assertRaises(CommandError) as raised:
                _run('dense', scheme=str(path), family='I', q=4, m=2)
        self.assertEqual(raised.exception.returncode, 1)

    def test_dense_truncated_file(self):
        with tempfile.TemporaryDirectory() as directory:
            path = Path(directory) / 'truncated.txt'
            path.write_text('255 4\n0 1 2\n')
            with self.assertRaises(CommandError):
                _run('dense', scheme=str(path), family='I', q=4, m=2)

    def test_output_file(self):
        with tempfile.TemporaryDirectory() as directory:
            path = Path(directory) / 'report.json'
            _run('sturm', p9=True, output_format='json', output=str(path))
            self.assertTrue(parse_report(path.read_bytes()).passed)
