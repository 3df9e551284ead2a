from django.conf import settings

from Families.families import FAMILIES
from Reports.base import ToolkitCommand
from Reports.checks import dense_run


class Command(ToolkitCommand):
    help = 'Validate a realized scheme file and check W W* = nI entry by entry'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--scheme', help='Scheme file; defaults to SCHEME_FILE')
        parser.add_argument('--family', choices=FAMILIES, required=True)
        self.add_point_arguments(parser)
        parser.add_argument('--branch', type=int, choices=(0, 1), default=0)
        parser.add_argument('--tol', help='Absolute tolerance; defaults to 2^-80 * n')
        parser.add_argument('--seed', type=int)
        parser.add_argument('--precision', type=int)

    def config_from(self, options):
        q = 4 if options['q'] is None else options['q']
        m = 2 if options['m'] is None else options['m']
        return self.build_config(
            'dense', options, family=options['family'], q=q, m=m, branch=options['branch'],
            scheme=options['scheme'] or getattr(settings, 'SCHEME_FILE', None),
            tolerance=options['tol'], seed=options['seed'], precision=options['precision'],
        )

    def run(self, config):
        return dense_run(config.scheme, config.family, config.q, config.m, config.branch,
                         config.tolerance, config.seed, config.precision)
