"""Enumeration helpers shared across the test modules."""

from __future__ import annotations

from typing import Iterator


def partitions_last_zero(n: int, bound: int) -> Iterator[tuple[int, ...]]:
    """Weakly decreasing n-tuples with entries in [0, bound] ending in 0."""
    if n == 1:
        yield (0,)
        return

    def rec(k: int, mx: int):
        if k == n - 1:
            yield (0,)
            return
        for v in range(mx, -1, -1):
            for rest in rec(k + 1, v):
                yield (v,) + rest

    yield from rec(0, bound)


def decreasing_vectors(n: int, lo: int, hi: int,
                       total: int) -> Iterator[tuple[int, ...]]:
    """Weakly decreasing n-tuples with entries in [lo, hi] of given sum."""

    def rec(k: int, mx: int, rem: int):
        left = n - k
        if left == 0:
            if rem == 0:
                yield ()
            return
        for v in range(min(mx, hi), lo - 1, -1):
            if rem - v < (left - 1) * lo or rem - v > (left - 1) * v:
                continue
            for rest in rec(k + 1, v, rem - v):
                yield (v,) + rest

    yield from rec(0, hi, total)


def normalized_triples(n: int, bound: int):
    """All trace-zero triples with the first two weights twist-normalized
    (last part zero, parts in [0, bound]) and the third in [-bound, bound]."""
    for lam in partitions_last_zero(n, bound):
        for mu in partitions_last_zero(n, bound):
            s = sum(lam) + sum(mu)
            for nu in decreasing_vectors(n, -bound, bound, -s):
                yield lam, mu, nu
