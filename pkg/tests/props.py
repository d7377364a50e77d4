"""Counts of property examples that ran to completion, keyed by test name."""

from collections import Counter
from functools import wraps

PASSED_EXAMPLES: Counter = Counter()


def tracked(fn):
    @wraps(fn)
    def wrapper(*args, **kwargs):
        result = fn(*args, **kwargs)
        PASSED_EXAMPLES[fn.__name__] += 1
        return result

    return wrapper
