from django.conf import settings
from django.core.management.base import CommandError

from Families.families import FAMILIES
from Reports.base import ToolkitCommand
from Reports.checks import hadamard_symbolic
from Reports.tasks import run_grid, run_hadamard_point


class Command(ToolkitCommand):
    help = 'Verify that a family yields complex Hadamard matrices'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--family', choices=FAMILIES, required=True)
        self.add_point_arguments(parser)
        parser.add_argument('--symbolic', action='store_true')
        parser.add_argument('--grid', action='store_true')
        parser.add_argument('--branch', type=int, choices=(0, 1), default=0)
        mode = parser.add_mutually_exclusive_group()
        mode.add_argument('--exact', dest='mode', action='store_const', const='exact')
        mode.add_argument('--numeric', dest='mode', action='store_const', const='numeric')
        parser.add_argument('--precision', type=int, help='Bits of working precision')

    def config_from(self, options):
        family = options['family']
        if not (options['symbolic'] or options['grid'] or options['q'] is not None):
            raise CommandError('give --q and --m, --grid or --symbolic')
        if family == 'VI':
            if options['symbolic'] or options['grid']:
                raise CommandError('family VI exists only at (q, m) = (4, 2); use --q 4 --m 2')
            if options['mode'] == 'exact':
                raise CommandError('family VI involves nested radicals; only --numeric is supported')
        return self.build_config(
            'hadamard', options, family=family, q=options['q'], m=options['m'],
            symbolic=options['symbolic'], grid=options['grid'], branch=options['branch'],
            mode=options['mode'] or ('numeric' if family == 'VI' else 'exact'),
            precision=options['precision'],
        )

    def run(self, config):
        records = []
        if config.symbolic:
            records += hadamard_symbolic(config.family, settings.DEFAULT_GRID)
        calls = [(config.family, q, m, config.branch, config.mode, config.precision)
                 for q, m in config.points()]
        return records + run_grid(run_hadamard_point, calls)
