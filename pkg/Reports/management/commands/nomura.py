from django.core.management.base import CommandError

from Nomura.claims import CLAIM_FAMILIES
from Reports.base import ToolkitCommand
from Reports.checks import nomura_symbolic
from Reports.tasks import run_grid, run_nomura_point


class Command(ToolkitCommand):
    help = 'Check the Nomura algebra claims: symmetry, the c-system and the R_4 sums'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--family', choices=CLAIM_FAMILIES, required=True)
        self.add_point_arguments(parser)
        parser.add_argument('--symbolic', action='store_true')
        parser.add_argument('--grid', action='store_true', help='Every point of NOMURA_GRID')

    def config_from(self, options):
        if not (options['symbolic'] or options['grid'] or options['q'] is not None):
            raise CommandError('give --q and --m, --grid or --symbolic')
        return self.build_config('nomura', options, family=options['family'], q=options['q'],
                                 m=options['m'], symbolic=options['symbolic'], grid=options['grid'])

    def run(self, config):
        records = nomura_symbolic(config.family) if config.symbolic else []
        calls = [(config.family, q, m) for q, m in config.points('NOMURA_GRID')]
        return records + run_grid(run_nomura_point, calls)
