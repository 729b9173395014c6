"""Brute-force Littlewood-Richardson numbers; the ground-truth oracle.

``lr_coefficient`` counts lattice skew tableaux directly, with no shortcut
shared with the inductive classifier, so the two routes stay independent.
Weights are first normalized by determinant twists (subtract the last part
of the first two factors, compensate on the third); the count is invariant
under such twists, and the tableau rule applies once the first two factors
are genuine partitions.

The optional ``cap`` argument stops the enumeration as soon as ``cap``
fillings are found, which is all the three-way classification ever needs.
"""

from __future__ import annotations

from enum import Enum
from functools import lru_cache
from typing import Sequence

from .weights import (
    Weight,
    as_index_set,
    as_weight,
    check_lengths,
    dual,
    lambda_of_indexset,
    shift,
    total,
)


class LrClass(Enum):
    """Three-way classification of a Littlewood-Richardson coefficient."""

    ZERO = "0"
    ONE = "1"
    AT_LEAST_TWO = ">=2"

    @property
    def token(self) -> str:
        return self.value


def classify_value(c: int) -> LrClass:
    """Map an exact coefficient to its class."""
    if c < 0:
        raise ValueError(f"coefficient {c} is negative")
    if c == 0:
        return LrClass.ZERO
    if c == 1:
        return LrClass.ONE
    return LrClass.AT_LEAST_TWO


def lr_class_from_token(token: str) -> LrClass:
    for member in LrClass:
        if member.value == token:
            return member
    raise ValueError(f"unknown class token {token!r}")


@lru_cache(maxsize=None)
def _count_tableaux(outer: Weight, inner: Weight, content: Weight,
                    cap: int | None) -> int:
    """Count semistandard fillings of outer/inner with the given content
    whose reverse reading word is a lattice word.

    Cells are filled in reading order (rows top to bottom, each row right
    to left), so the lattice condition can be checked incrementally.
    """
    n = len(outer)
    cells = []
    for i in range(n):
        for j in range(outer[i] - 1, inner[i] - 1, -1):
            cells.append((i, j))
    if len(cells) != sum(content):
        return 0

    grid = [[0] * outer[i] for i in range(n)]
    counts = [0] * (n + 1)          # counts[v] = occurrences of v so far
    remaining = list(content)
    found = 0

    def fill(k: int) -> bool:
        """Returns True when the cap was reached and search should stop."""
        nonlocal found
        if k == len(cells):
            found += 1
            return cap is not None and found >= cap
        i, j = cells[k]
        hi = grid[i][j + 1] if j + 1 < outer[i] else n
        lo = 1
        if i > 0 and j >= inner[i - 1]:
            lo = grid[i - 1][j] + 1
        for v in range(lo, hi + 1):
            if remaining[v - 1] == 0:
                continue
            if v > 1 and counts[v - 1] <= counts[v]:
                continue
            grid[i][j] = v
            counts[v] += 1
            remaining[v - 1] -= 1
            stop = fill(k + 1)
            grid[i][j] = 0
            counts[v] -= 1
            remaining[v - 1] += 1
            if stop:
                return True
        return False

    fill(0)
    return found


def lr_coefficient(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int],
                   cap: int | None = None) -> int:
    """The multiplicity of V_nu inside V_lam (x) V_mu for GL(n).

    Accepts arbitrary dominant GL(n) weights; twist-normalizes and counts
    skew tableaux of shape nu/lam with content mu.  Returns 0 whenever the
    weight totals disagree or nu/lam fails to be a skew shape.
    """
    lam, mu, nu = as_weight(lam), as_weight(mu), as_weight(nu)
    n = check_lengths(lam, mu, nu)
    if n == 0:
        return 1
    a, b = lam[-1], mu[-1]
    lam, mu, nu = shift(lam, -a), shift(mu, -b), shift(nu, -(a + b))
    if nu[-1] < 0:
        return 0
    if total(lam) + total(mu) != total(nu):
        return 0
    if any(lam[i] > nu[i] for i in range(n)):
        return 0
    return _count_tableaux(nu, lam, mu, cap)


def triple_coefficient(lam: Sequence[int], mu: Sequence[int],
                       nu: Sequence[int], cap: int | None = None) -> int:
    """Dimension of the GL(n)-invariants in V_lam (x) V_mu (x) V_nu.

    Equal to the coefficient of the dual of nu in V_lam (x) V_mu; zero
    unless |lam| + |mu| + |nu| = 0.
    """
    lam, mu, nu = as_weight(lam), as_weight(mu), as_weight(nu)
    check_lengths(lam, mu, nu)
    if total(lam) + total(mu) + total(nu) != 0:
        return 0
    return lr_coefficient(lam, mu, dual(nu), cap)


def c_ijk(r: int, n: int, index_i: Sequence[int], index_j: Sequence[int],
          index_k: Sequence[int], cap: int | None = None) -> int:
    """Structure constant of three Schubert classes of the Grassmannian of
    r-planes in n-space: the coefficient c with sigma_I sigma_J sigma_K =
    c [pt] when the codimensions add up to the dimension, 0 otherwise.
    """
    index_i = as_index_set(index_i, r=r, n=n)
    index_j = as_index_set(index_j, r=r, n=n)
    index_k = as_index_set(index_k, r=r, n=n)
    lam_i = lambda_of_indexset(index_i, r, n)
    lam_j = lambda_of_indexset(index_j, r, n)
    lam_k = lambda_of_indexset(index_k, r, n)
    return triple_coefficient(lam_i, lam_j, shift(lam_k, -2 * (n - r)), cap)
