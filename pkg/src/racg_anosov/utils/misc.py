import os
from typing import Callable, Iterable, List, TypeVar
from joblib import Parallel, delayed
from loguru import logger

T = TypeVar("T")
R = TypeVar("R")


def mkdir_if_not_exists(folder):
    if folder and not os.path.exists(folder):
        os.makedirs(folder)


def default_threads() -> int:
    # RACG_ANOSOV_THREADS wins over the machine's CPU count
    env = os.environ.get("RACG_ANOSOV_THREADS")
    if env:
        try: return max(1, int(env))
        except ValueError: logger.warning(f"ignoring non-integer RACG_ANOSOV_THREADS={env!r}")
    return os.cpu_count() or 1


def parallel_map(fn: Callable[[T], R], items: Iterable[T], threads: int = 1) -> List[R]:
    """fn over items on a thread pool, results in input order"""
    items = list(items)
    if threads <= 1 or len(items) <= 1: return [fn(x) for x in items]
    return Parallel(n_jobs=threads, prefer="threads")(delayed(fn)(x) for x in items)


def update_nested_dict(dictionary, update_dict):
    # takes 2 dicts and overwrites the first with the second only on the changed values
    for key, value in update_dict.items():
        if key in dictionary and isinstance(value, dict) and isinstance(dictionary[key], dict):
            update_nested_dict(dictionary[key], value)
        else:
            dictionary[key] = value
