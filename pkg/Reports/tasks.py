try:
    from celery import shared_task
    from kombu.exceptions import OperationalError as BrokerUnavailable
except ImportError:
    # Without Celery the tasks are plain functions and run inline.
    def shared_task(*a, **k):
        def _decorator(f):
            return f
        return _decorator

    class BrokerUnavailable(Exception):
        pass

import logging

from django.conf import settings

logger = logging.getLogger(__name__)


def _as_data(records):
    from .serializers import record_to_data
    return [record_to_data(record) for record in records]


@shared_task
def run_params_point(q, m):
    from .checks import params_point
    return _as_data(params_point(q, m))


@shared_task
def run_hadamard_point(family, q, m, branch=0, mode='exact', precision=None):
    from .checks import hadamard_point
    return _as_data(hadamard_point(family, q, m, branch, mode, precision))


@shared_task
def run_nomura_point(family, q, m):
    from .checks import nomura_point
    return _as_data(nomura_point(family, q, m))


def run_grid(task, calls):
    """Run ``task`` once per argument tuple and return the records in call order.

    With CELERY_ENABLED every call is enqueued first and the results are
    collected in order; otherwise, or when the broker is unreachable, the
    calls run inline.
    """
    from .serializers import record_from_data

    if getattr(settings, 'CELERY_ENABLED', False) and hasattr(task, 'delay'):
        try:
            pending = [task.delay(*args) for args in calls]
        except BrokerUnavailable as exc:
            logger.warning('could not enqueue %s (%s); running inline',
                           getattr(task, 'name', task), exc)
            pending = None
        if pending is not None:
            results = [result.get() for result in pending]
            return [record_from_data(data) for batch in results for data in batch]
    return [record_from_data(data) for args in calls for data in task(*args)]
