from django.core.management.base import CommandError

from Reports.base import ToolkitCommand
from Reports.checks import sturm_run


class Command(ToolkitCommand):
    help = 'Count the real roots of a polynomial in an interval with a Sturm sequence'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--coeffs', nargs='+', help='Coefficients, leading term first')
        parser.add_argument('--lo', help='Lower end; -infinity when omitted')
        parser.add_argument('--hi', help='Upper end; +infinity when omitted')
        parser.add_argument('--paper-p9', '--p9', dest='p9', action='store_true',
                            help='The degree-9 a_{0,4} polynomial at (q, m) = (4, 2) on (-2, 2)')

    def config_from(self, options):
        if options['p9'] == bool(options['coeffs']):
            raise CommandError('give either --coeffs or --paper-p9')
        return self.build_config('sturm', options, coeffs=options['coeffs'],
                                 lo=options['lo'], hi=options['hi'])

    def run(self, config):
        if config.coeffs is None:
            return sturm_run(known_p9=True)
        try:
            return sturm_run(config.coeffs, config.lo, config.hi)
        except (ValueError, ZeroDivisionError) as exc:
            raise CommandError(f'bad polynomial or interval: {exc}') from exc
