"""
Realized schemes: n x n relation matrices read from scheme files.

File format: a header line ``n d`` with d = 4, followed by n lines of n
integers in 0..4.
"""
import logging
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from django.conf import settings

from .eigen import CLASSES, concrete_tensor, parameter_point, scheme_size
from .exceptions import SchemeFormatError, SchemeSizeError
from .identities import MAX_WITNESSES, IdentityReport

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class SchemeInstance:
    n: int
    rel: np.ndarray

    def relation_counts(self):
        """counts[x][i] = |{y : rel[x][y] = i}|."""
        offsets = (np.arange(self.n) * CLASSES)[:, None]
        flat = np.bincount((self.rel + offsets).ravel(), minlength=self.n * CLASSES)
        return flat.reshape(self.n, CLASSES)

    def with_relation(self, x, y, value):
        """Copy with rel[x][y] = rel[y][x] = value."""
        rel = self.rel.copy()
        rel[x, y] = rel[y, x] = value
        return SchemeInstance(self.n, rel)


def _structural_defect(rel):
    n = rel.shape[0]
    asymmetric = np.argwhere(rel != rel.T)
    if len(asymmetric):
        x, y = (int(v) for v in asymmetric[0])
        return f'rel[{x}][{y}] = {rel[x, y]} but rel[{y}][{x}] = {rel[y, x]}'
    diagonal = np.flatnonzero(np.diagonal(rel))
    if len(diagonal):
        x = int(diagonal[0])
        return f'rel[{x}][{x}] = {rel[x, x]} on the diagonal'
    if n and (rel.min() < 0 or rel.max() >= CLASSES):
        return f'relation labels must lie in 0..{CLASSES - 1}'
    return None


def parse_scheme(text):
    lines = [line.split() for line in text.splitlines() if line.strip()]
    if not lines:
        raise SchemeFormatError('empty scheme file')
    header = lines[0]
    if len(header) != 2:
        raise SchemeFormatError(f'header must be "n d", got {" ".join(header)!r}')
    try:
        n, d = int(header[0]), int(header[1])
    except ValueError as exc:
        raise SchemeFormatError(f'header must be "n d", got {" ".join(header)!r}') from exc
    if d != CLASSES - 1:
        raise SchemeFormatError(f'scheme has {d} classes, expected {CLASSES - 1}')
    if n < 1:
        raise SchemeFormatError(f'invalid point count {n}')
    rows = lines[1:]
    if len(rows) != n:
        raise SchemeFormatError(f'expected {n} rows, found {len(rows)}')
    for index, row in enumerate(rows):
        if len(row) != n:
            raise SchemeFormatError(f'row {index} has {len(row)} entries, expected {n}')
    try:
        rel = np.array(rows, dtype=np.int64)
    except ValueError as exc:
        raise SchemeFormatError(f'non-integer entry: {exc}') from exc
    defect = _structural_defect(rel)
    if defect:
        raise SchemeFormatError(defect)
    return SchemeInstance(n, rel)


def read_scheme_file(path):
    path = Path(path)
    logger.info('reading scheme file %s', path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise SchemeFormatError(f'cannot read {path}: {exc}') from exc
    return parse_scheme(text)


def format_scheme(instance):
    lines = [f'{instance.n} {CLASSES - 1}']
    lines.extend(' '.join(str(int(v)) for v in row) for row in instance.rel)
    return '\n'.join(lines) + '\n'


def write_scheme_file(instance, path):
    Path(path).write_text(format_scheme(instance))


def circulant_instance(q, m):
    """A circulant relation matrix on Z_n with the valencies of the scheme.

    R_4 is the set of nonzero multiples of n/(q-1); the remaining pairs
    {d, n-d}, in increasing d, fill R_1, R_2 and R_3 in turn.  The result
    has the right valencies but not, in general, the right intersection
    numbers.
    """
    n = scheme_size(q, m)
    valencies = [int(k) for k in concrete_tensor(q, m).valencies()]
    labels = np.zeros(n, dtype=np.int64)
    step = n // (q - 1)
    labels[step::step] = 4
    free = [d for d in range(1, n // 2 + 1) if labels[d] == 0]
    position = 0
    for relation in (1, 2, 3):
        for d in free[position:position + valencies[relation] // 2]:
            labels[d] = labels[n - d] = relation
        position += valencies[relation] // 2
    offsets = (np.arange(n)[None, :] - np.arange(n)[:, None]) % n
    return SchemeInstance(n, labels[offsets])


def pair_histograms(instance, x, ys):
    """h[t][i][j] = |{u : rel[x][u] = i, rel[ys[t]][u] = j}|."""
    ys = np.asarray(ys)
    codes = instance.rel[x][None, :] * CLASSES + instance.rel[ys]
    codes = codes + (np.arange(len(ys)) * CLASSES ** 2)[:, None]
    counts = np.bincount(codes.ravel(), minlength=len(ys) * CLASSES ** 2)
    return counts.reshape(len(ys), CLASSES, CLASSES)


def _expected_counts(tensor):
    return np.array([[[int(tensor.p(i, j, k)) for k in range(CLASSES)]
                      for j in range(CLASSES)] for i in range(CLASSES)], dtype=np.int64)


def _compare(instance, expected, x, ys, failures):
    histograms = pair_histograms(instance, x, ys)
    relations = instance.rel[x, ys]
    for t, y in enumerate(ys):
        k = int(relations[t])
        mismatch = np.argwhere(histograms[t] != expected[:, :, k])
        if len(mismatch):
            i, j = (int(v) for v in mismatch[0])
            failures.append({'check': 'intersection', 'x': int(x), 'y': int(y), 'i': i, 'j': j,
                             'k': k, 'expected': int(expected[i, j, k]),
                             'observed': int(histograms[t][i, j])})
    return len(ys)


def validate_instance(instance, q, m, samples=None, seed=None, exhaustive=False):
    """Check symmetry, valencies and intersection numbers of a realized scheme.

    Intersection numbers are checked on ``samples`` random pairs per
    relation, or on every pair x <= y with ``exhaustive``.
    """
    parameter_point(q, m)
    expected_n = scheme_size(q, m)
    if instance.n != expected_n:
        raise SchemeSizeError(expected_n, instance.n)
    if samples is None:
        samples = getattr(settings, 'SAMPLE_PAIRS_PER_RELATION', 200)
    if seed is None:
        seed = getattr(settings, 'DEFAULT_SEED', 0)
    tensor = concrete_tensor(q, m)
    valencies = np.array([int(k) for k in tensor.valencies()], dtype=np.int64)
    rel = instance.rel
    failures = []

    defect = _structural_defect(rel)
    if defect:
        asymmetric = np.argwhere(rel != rel.T)
        witness = [int(v) for v in asymmetric[0]] if len(asymmetric) else None
        failures.append({'check': 'symmetry', 'pair': witness, 'message': defect})
    off_diagonal = np.argwhere((rel == 0) & ~np.eye(instance.n, dtype=bool))
    if len(off_diagonal):
        x, y = (int(v) for v in off_diagonal[0])
        failures.append({'check': 'off-diagonal', 'pair': [x, y], 'message': f'rel[{x}][{y}] = 0'})

    counts = instance.relation_counts()
    for i in range(CLASSES):
        rows = np.flatnonzero(counts[:, i] != valencies[i])
        if len(rows):
            x = int(rows[0])
            failures.append({'check': 'valency', 'relation': i, 'x': x,
                             'expected': int(valencies[i]), 'observed': int(counts[x, i])})

    checked = 0
    if not failures:
        expected = _expected_counts(tensor)
        if exhaustive:
            for x in range(instance.n):
                checked += _compare(instance, expected, x, np.arange(x, instance.n), failures)
                if len(failures) >= MAX_WITNESSES:
                    break
        else:
            rng = np.random.default_rng(seed)
            for k in range(1, CLASSES):
                for _ in range(samples):
                    x = int(rng.integers(instance.n))
                    partners = np.flatnonzero(rel[x] == k)
                    y = int(partners[rng.integers(len(partners))])
                    checked += _compare(instance, expected, x, [y], failures)
                    if len(failures) >= MAX_WITNESSES:
                        break

    report = IdentityReport('instance', checked, tuple(failures[:MAX_WITNESSES]),
                            {'n': instance.n, 'exhaustive': exhaustive, 'seed': seed})
    logger.info('instance validation at q=%d, m=%d: %s (%d pairs)', q, m,
                'pass' if report.passed else 'FAIL', checked)
    return report
