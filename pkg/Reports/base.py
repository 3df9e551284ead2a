"""Shared plumbing for the toolkit's management commands."""
import logging
from pathlib import Path

from django.core.management.base import BaseCommand, CommandError

from Algebra.exceptions import AlgebraError
from Families.exceptions import FamilyError
from Gram.exceptions import GramError
from Nomura.exceptions import NomuraError
from Scheme.exceptions import SchemeError

from .exceptions import ReportError
from .records import FORMATS, Report, RunConfig
from .serializers import render_report

logger = logging.getLogger(__name__)

DOMAIN_ERRORS = (AlgebraError, SchemeError, FamilyError, GramError, NomuraError, ReportError)


class ToolkitCommand(BaseCommand):
    """Builds a RunConfig from the options, runs the checks and emits the report.

    Subclasses implement ``config_from(options)`` and ``run(config)``; the
    command exits with status 1 when any check failed.
    """

    def add_arguments(self, parser):
        parser.add_argument('--format', dest='output_format', choices=FORMATS, default='text')
        parser.add_argument('--output', help='Write the report to this file as well')

    def add_point_arguments(self, parser):
        parser.add_argument('--q', type=int)
        parser.add_argument('--m', type=int)

    def config_from(self, options):
        raise NotImplementedError

    def run(self, config):
        raise NotImplementedError

    def handle(self, *args, **options):
        try:
            config = self.config_from(options)
            report = Report.start(config)
            report.extend(self.run(config))
        except DOMAIN_ERRORS as exc:
            raise CommandError(str(exc)) from exc
        self.emit(report, options.get('output'))
        if not report.passed:
            failed = [record.name for record in report.records if record.failed]
            raise CommandError(f'{len(failed)} check(s) failed: {", ".join(failed)}', returncode=1)

    def build_config(self, command, options, **fields):
        try:
            return RunConfig(command=command, output_format=options['output_format'], **fields)
        except DOMAIN_ERRORS as exc:
            raise CommandError(str(exc)) from exc

    def emit(self, report, output=None):
        if report.config.output_format == 'json':
            content = render_report(report).decode()
            self.stdout.write(content)
        else:
            content = self.render_text(report)
        if output:
            Path(output).write_text(content if content.endswith('\n') else content + '\n')
            logger.info('report written to %s', output)

    def render_text(self, report):
        config = report.config
        lines = [f'hadamard toolkit {report.version}: {config.command}']
        self.stdout.write(lines[0])
        for record in report.records:
            line = f'  {record.status.upper():7} {record.name} ({record.seconds:.3f}s)'
            lines.append(line)
            if record.status == 'pass':
                self.stdout.write(self.style.SUCCESS(line))
            elif record.status == 'skipped':
                self.stdout.write(self.style.WARNING(line))
            else:
                self.stdout.write(self.style.ERROR(line))
                witness = f'          witness: {record.witness}'
                lines.append(witness)
                self.stdout.write(witness)
        summary = 'all checks passed' if report.passed else 'some checks FAILED'
        lines.append(summary)
        self.stdout.write(self.style.SUCCESS(summary) if report.passed else self.style.ERROR(summary))
        return '\n'.join(lines)
