#!/usr/bin/env python
"""
Write the circulant calibration scheme for (q, m) to a scheme file.

The circulant relation matrix has the valencies of the 4-class scheme but
not its intersection numbers, so ``manage.py dense`` is expected to report
intersection failures on it.

    python scripts/write_calibration_scheme.py 4 2 calibration-4-2.txt
"""

import os
import sys

import django

# Add the project directory to the path
project_dir = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
sys.path.append(project_dir)

# Setup Django
os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'Hadamard.settings')
django.setup()

from Scheme.instance import circulant_instance, validate_instance, write_scheme_file  # noqa: E402


def main(argv):
    if len(argv) != 4:
        print(__doc__)
        return 2
    q, m, path = int(argv[1]), int(argv[2]), argv[3]
    instance = circulant_instance(q, m)
    write_scheme_file(instance, path)
    report = validate_instance(instance, q, m)
    checks = sorted({failure['check'] for failure in report.failures})
    print(f'wrote n={instance.n} to {path}; validation failures: {", ".join(checks) or "none"}')
    return 0


if __name__ == '__main__':
    sys.exit(main(sys.argv))
