"""Small helpers shared by the linear-time passes."""

from __future__ import annotations

import gc
from contextlib import contextmanager
from itertools import accumulate


@contextmanager
def gc_paused():
    """Suspend the cyclic garbage collector.

    The label passes allocate millions of small lists and ints but never
    create reference cycles, so collection only costs time.
    """
    was_enabled = gc.isenabled()
    gc.disable()
    try:
        yield
    finally:
        if was_enabled:
            gc.enable()


def group_by_key(keys: list, n: int, descending: bool = False) -> tuple[list[int], list[int]]:
    """Counting sort of the indices ``i`` with ``keys[i]`` not None.

    Returns ``(flat, start)``: the indices with key ``k`` are
    ``flat[start[k]:start[k + 1]]``, increasing (or decreasing with
    ``descending``).
    """
    cnt = [0] * (n + 1)
    for k in keys:
        if k is not None:
            cnt[k + 1] += 1
    start = list(accumulate(cnt))
    pos = start[:]
    flat = [0] * start[n]
    idx = range(len(keys) - 1, -1, -1) if descending else range(len(keys))
    for i in idx:
        k = keys[i]
        if k is not None:
            flat[pos[k]] = i
            pos[k] += 1
    return flat, start
