"""Triple-arm quivers attached to products of three flag varieties.

A product Fl(a_1..a_p) x Fl(b_1..b_q) x Fl(c_1..c_r) of partial flag
varieties of GL(n) has a dense orbit exactly when the representation space
of the three-arm quiver with arm dimensions (a_*), (b_*), (c_*) and sink n
has a dense orbit of the product of general linear groups.  That in turn
holds exactly when the differential of the orbit map at a generic
representation is surjective.

``dense_orbit`` decides the predicate by random sampling over a large prime
field: full rank of the differential at any sample is an exact certificate
for density (rank can only drop at special points or under reduction mod
p), while repeated failure is reported as "not dense" with a one-sided
Monte Carlo guarantee.  If the generic differential were surjective, a
sample would be singular only if a fixed nonzero maximal minor (a
polynomial of degree at most dim Rep in the matrix entries) vanished on it,
so each independent trial misses with probability at most dim Rep / p.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

import numpy as np

DEFAULT_PRIME = 2**31 - 1
DEFAULT_TRIALS = 8

Matrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class TripleFlagQuiver:
    """Three increasing arms feeding a common sink of dimension n.

    Empty arms (constant weights; point flag varieties) are dropped so that
    the dimension vector stays strictly increasing along every arm.
    """

    arms: tuple[tuple[int, ...], ...]
    sink: int

    @classmethod
    def from_types(cls, type_a: Sequence[int], type_b: Sequence[int],
                   type_c: Sequence[int], n: int) -> "TripleFlagQuiver":
        arms = []
        for arm in (type_a, type_b, type_c):
            arm = tuple(sorted(arm))
            for a, b in zip(arm, arm[1:]):
                if a >= b:
                    raise ValueError(f"arm {arm} is not strictly increasing")
            if arm and not (1 <= arm[0] and arm[-1] < n):
                raise ValueError(f"arm {arm} exceeds the range [1;{n - 1}]")
            if arm:
                arms.append(arm)
        return cls(arms=tuple(arms), sink=int(n))

    def dimension_vector(self) -> tuple[int, ...]:
        """Vertex dimensions, arm by arm, sink last."""
        dims = [d for arm in self.arms for d in arm]
        dims.append(self.sink)
        return tuple(dims)

    def arrows(self) -> tuple[tuple[int, int], ...]:
        """(source, target) pairs as indices into ``dimension_vector``."""
        out = []
        offset = 0
        sink_index = sum(len(arm) for arm in self.arms)
        for arm in self.arms:
            for k in range(len(arm) - 1):
                out.append((offset + k, offset + k + 1))
            out.append((offset + len(arm) - 1, sink_index))
            offset += len(arm)
        return tuple(out)

    def rep_dim(self) -> int:
        dims = self.dimension_vector()
        return sum(dims[s] * dims[t] for s, t in self.arrows())

    def group_dim(self) -> int:
        return sum(d * d for d in self.dimension_vector())


def ringel_form(quiver: TripleFlagQuiver, alpha: Sequence[int],
                beta: Sequence[int]) -> int:
    """<alpha, beta> = sum_s alpha(s) beta(s) - sum_arrows alpha(ia) beta(ta)."""
    k = len(quiver.dimension_vector())
    if len(alpha) != k or len(beta) != k:
        raise ValueError(f"dimension vectors must have {k} entries")
    value = sum(a * b for a, b in zip(alpha, beta))
    value -= sum(alpha[s] * beta[t] for s, t in quiver.arrows())
    return value


def decomposition_certifies_dense(quiver: TripleFlagQuiver,
                        decomposition: Sequence[Sequence[int]]) -> bool:
    """Check a supplied canonical decomposition for a dense orbit.

    A generic representation decomposing with the given summand dimension
    vectors lies in a dense orbit iff every summand has self-pairing 1
    under the Ringel form.  The summands must add up to the quiver's own
    dimension vector; computing decompositions is out of scope here.
    """
    dims = quiver.dimension_vector()
    sums = [sum(part[i] for part in decomposition) for i in range(len(dims))]
    if tuple(sums) != dims:
        raise ValueError("decomposition does not sum to the dimension vector")
    return all(ringel_form(quiver, part, part) == 1 for part in decomposition)


@dataclass(frozen=True)
class OrbitDecision:
    """Outcome of the dense-orbit test.

    ``dense=True`` is exactly certified: the stored sample's orbit-map
    differential has full rank over F_prime, hence over the rationals.
    ``dense=False`` is one-sided Monte Carlo with miss probability at most
    (rep_dim / prime) per trial.
    """

    dense: bool
    rank: int
    rep_dim: int
    group_dim: int
    trials: int
    prime: int
    seed: int
    certificate: tuple[Matrix, ...] | None

    @property
    def error_bound(self) -> str:
        if self.dense:
            return "exact certificate (full rank over the prime field)"
        per = f"{self.rep_dim}/{self.prime}"
        return (f"one-sided Monte Carlo: if a dense orbit existed, all "
                f"{self.trials} trials would fail with probability at most "
                f"({per})^{self.trials}")


def orbit_map_matrix(quiver: TripleFlagQuiver,
                     maps: Sequence[Matrix]) -> list[list[int]]:
    """Matrix of (X_s) -> (X_ta u(a) - u(a) X_ia) at the representation
    with arrow matrices ``maps``.

    Rows run over the entries of the representation space, columns over the
    entries of the endomorphisms at every vertex.
    """
    dims = quiver.dimension_vector()
    arrows = quiver.arrows()
    col_offset = []
    acc = 0
    for d in dims:
        col_offset.append(acc)
        acc += d * d
    ncols = acc

    rows: list[list[int]] = []
    for a, (src, tgt) in enumerate(arrows):
        u = maps[a]
        ds, dt = dims[src], dims[tgt]
        for p in range(dt):
            for q in range(ds):
                row = [0] * ncols
                # derivative in X_tgt: (X u)_{pq} depends on X[p][m]
                base = col_offset[tgt]
                for m in range(dt):
                    row[base + p * dt + m] += u[m][q]
                # derivative in X_src: -(u X)_{pq} depends on X[m][q]
                base = col_offset[src]
                for m in range(ds):
                    row[base + m * ds + q] -= u[p][m]
                rows.append(row)
    return rows


def _rank_mod_p(rows: list[list[int]], p: int) -> int:
    if not rows:
        return 0
    m = np.array(rows, dtype=np.int64) % p
    nrows, ncols = m.shape
    rank = 0
    for c in range(ncols):
        pivot = None
        for i in range(rank, nrows):
            if m[i, c]:
                pivot = i
                break
        if pivot is None:
            continue
        if pivot != rank:
            m[[rank, pivot]] = m[[pivot, rank]]
        inv = pow(int(m[rank, c]), p - 2, p)
        m[rank] = (m[rank] * inv) % p
        col = m[:, c].copy()
        col[rank] = 0
        m = (m - np.outer(col, m[rank])) % p
        rank += 1
        if rank == nrows:
            break
    return rank


def dense_orbit(quiver: TripleFlagQuiver, seed: int,
                trials: int = DEFAULT_TRIALS,
                prime: int = DEFAULT_PRIME) -> OrbitDecision:
    """Decide whether the representation space has a dense orbit.

    Deterministic given (quiver, seed, trials, prime).
    """
    if trials < 1:
        raise ValueError("trials must be positive")
    dims = quiver.dimension_vector()
    arrows = quiver.arrows()
    rep_dim = quiver.rep_dim()
    group_dim = quiver.group_dim()
    if rep_dim == 0:
        return OrbitDecision(dense=True, rank=0, rep_dim=0,
                             group_dim=group_dim, trials=0, prime=prime,
                             seed=seed, certificate=())
    rng = random.Random(seed)
    best_rank = 0
    for t in range(1, trials + 1):
        maps = tuple(
            tuple(tuple(rng.randrange(prime) for _ in range(dims[src]))
                  for _ in range(dims[tgt]))
            for src, tgt in arrows)
        rank = _rank_mod_p(orbit_map_matrix(quiver, maps), prime)
        best_rank = max(best_rank, rank)
        if rank == rep_dim:
            return OrbitDecision(dense=True, rank=rank, rep_dim=rep_dim,
                                 group_dim=group_dim, trials=t, prime=prime,
                                 seed=seed, certificate=maps)
    return OrbitDecision(dense=False, rank=best_rank, rep_dim=rep_dim,
                         group_dim=group_dim, trials=trials, prime=prime,
                         seed=seed, certificate=None)
