"""Dominant GL(n) weights and r-subsets of [1;n].

A weight is a weakly decreasing tuple of integers (entries may be negative);
an index set is a strictly increasing tuple of integers in [1;n].  Both are
plain tuples so that every value is hashable and immutable.  The
``lambda_of_indexset`` correspondence attaches to an r-subset I of [1;n] the
partition with parts ``i_r - r >= ... >= i_1 - 1``: the partition indexing
the Schubert class of the Grassmannian of r-planes in n-space.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator, Sequence

Weight = tuple[int, ...]
IndexSet = tuple[int, ...]


def as_weight(parts: Iterable[int]) -> Weight:
    """Validate and freeze a weakly decreasing integer sequence."""
    w = tuple(int(p) for p in parts)
    for a, b in zip(w, w[1:]):
        if a < b:
            raise ValueError(f"weight {w} is not weakly decreasing")
    return w


def check_lengths(*weights: Sequence[int]) -> int:
    """Return the common length of the given weights, or raise."""
    lengths = {len(w) for w in weights}
    if len(lengths) != 1:
        raise ValueError(f"weights have mismatched lengths {sorted(lengths)}")
    return lengths.pop()


def total(w: Sequence[int]) -> int:
    """Sum of the parts, |w|."""
    return sum(w)


def dual(w: Sequence[int]) -> Weight:
    """Reversed negation (-w_n, ..., -w_1); the highest weight of the dual."""
    return tuple(-p for p in reversed(w))


def shift(w: Sequence[int], k: int) -> Weight:
    """Add k to every part (twist by the k-th power of the determinant)."""
    return tuple(p + k for p in w)


def type_of(w: Sequence[int]) -> IndexSet:
    """Positions j in [1;n-1] where w_j != w_{j+1}."""
    return tuple(j + 1 for j in range(len(w) - 1) if w[j] != w[j + 1])


def restrict(w: Sequence[int], index_set: Sequence[int]) -> Weight:
    """Subsequence (w_{i_1}, ..., w_{i_r}) of w along a 1-based index set."""
    n = len(w)
    for i in index_set:
        if not 1 <= i <= n:
            raise ValueError(f"index {i} out of range [1;{n}]")
    return tuple(w[i - 1] for i in index_set)


def as_index_set(values: Iterable[int], r: int | None = None,
                 n: int | None = None) -> IndexSet:
    """Validate a strictly increasing subset of [1;n] with r elements."""
    idx = tuple(int(v) for v in values)
    for a, b in zip(idx, idx[1:]):
        if a >= b:
            raise ValueError(f"index set {idx} is not strictly increasing")
    if idx and idx[0] < 1:
        raise ValueError(f"index set {idx} has entries below 1")
    if r is not None and len(idx) != r:
        raise ValueError(f"index set {idx} does not have {r} elements")
    if n is not None and idx and idx[-1] > n:
        raise ValueError(f"index set {idx} exceeds the range [1;{n}]")
    return idx


def complement(index_set: Sequence[int], n: int) -> IndexSet:
    """The complement of an index set inside [1;n], sorted."""
    chosen = set(index_set)
    return tuple(i for i in range(1, n + 1) if i not in chosen)


def index_sets(r: int, n: int) -> Iterator[IndexSet]:
    """All r-subsets of [1;n] in lexicographic order."""
    return combinations(range(1, n + 1), r)


def lambda_of_indexset(index_set: Sequence[int], r: int, n: int) -> Weight:
    """Partition (i_r - r, ..., i_1 - 1) attached to I in P(r, n).

    All parts lie in [0, n - r]; distinct index sets give distinct
    partitions.
    """
    idx = as_index_set(index_set, r=r, n=n)
    return tuple(idx[r - 1 - k] - (r - k) for k in range(r))


def parse_weight(text: str) -> Weight:
    """Parse the comma-separated text form, e.g. "4,3,3,2,2,0"."""
    text = text.strip()
    if not text:
        return ()
    return as_weight(int(tok) for tok in text.split(","))


def format_weight(w: Sequence[int]) -> str:
    """Comma-separated text form of a weight."""
    return ",".join(str(p) for p in w)
