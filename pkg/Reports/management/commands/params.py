from django.conf import settings
from django.core.management.base import CommandError

from Reports.base import ToolkitCommand
from Reports.checks import params_symbolic
from Reports.tasks import run_grid, run_params_point


class Command(ToolkitCommand):
    help = 'Check eigenmatrices and intersection numbers, symbolically or at (q, m)'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        self.add_point_arguments(parser)
        parser.add_argument('--symbolic', action='store_true',
                            help='Symbolic identities, then the integrality grid')
        parser.add_argument('--grid', action='store_true', help='Every point of DEFAULT_GRID')

    def config_from(self, options):
        if not (options['symbolic'] or options['grid'] or options['q'] is not None):
            raise CommandError('give --q and --m, --grid or --symbolic')
        return self.build_config('params', options, q=options['q'], m=options['m'],
                                 symbolic=options['symbolic'], grid=options['grid'])

    def run(self, config):
        points = config.points()
        if not config.symbolic:
            return run_grid(run_params_point, points)
        # a symbolic run always specializes over the grid as well
        points = points or [tuple(point) for point in settings.DEFAULT_GRID]
        return params_symbolic() + run_grid(run_params_point, points)
