"""Inductive 0 / 1 / >=2 classification of triple tensor multiplicities.

The recursion on the rank n works as follows for a trace-zero triple
(the zero-trace guard in front is forced by the weight condition and is
recorded in witnesses as a base case):

1. n = 1 decides by the trace alone.
2. For every r < n and every triple (I, J, K) of r-subsets whose Schubert
   structure constant on G(r, n) is 1 -- itself decided by this classifier
   at rank r -- evaluate phi = sum of the selected entries.  The first
   candidate with phi > 0 proves the coefficient vanishes; the first with
   phi = 0 factorizes the coefficient into a rank-r and a rank-(n-r)
   coefficient and combines their classes (0 if either is 0, 1 if both are
   1, otherwise >= 2).
3. If every candidate has phi < 0 the triple is an interior point, and the
   coefficient is 1 exactly when the product of the three flag varieties
   cut out by the weight types carries a dense orbit.

Verdicts are memoized on a canonical key (determinant-twist normalized and
sorted under the full permutation symmetry), so repeated and permuted
queries are free.  A classifier instance is deterministic given its seed
and trial count, which feed the dense-orbit test.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Iterable, Sequence

from .lr import LrClass, lr_class_from_token
from .quiver import (
    DEFAULT_PRIME,
    DEFAULT_TRIALS,
    OrbitDecision,
    TripleFlagQuiver,
    dense_orbit,
)
from .weights import (
    IndexSet,
    Weight,
    as_weight,
    check_lengths,
    complement,
    index_sets,
    lambda_of_indexset,
    restrict,
    shift,
    total,
    type_of,
)

Triple = tuple[IndexSet, IndexSet, IndexSet]

MEMO_FORMAT = "eigencone-memo/1"


def phi(index_i: Sequence[int], index_j: Sequence[int],
        index_k: Sequence[int], lam: Sequence, mu: Sequence, nu: Sequence):
    """|lam_I| + |mu_J| + |nu_K|; works for integer and rational entries."""
    if not len(index_i) == len(index_j) == len(index_k):
        raise ValueError("index sets must have a common size")
    return (sum(restrict(lam, index_i)) + sum(restrict(mu, index_j))
            + sum(restrict(nu, index_k)))


def canonical_key(lam: Weight, mu: Weight, nu: Weight) -> tuple[Weight, ...]:
    """Smallest twist-normalized representative of the permutation orbit."""
    best = None
    for x, y, z in permutations((lam, mu, nu)):
        a, b = x[-1], y[-1]
        cand = (shift(x, -a), shift(y, -b), shift(z, a + b))
        if best is None or cand < best:
            best = cand
    return best


# --------------------------------------------------------------------------
# witness records


@dataclass(frozen=True)
class BaseCase:
    reason: str   # "rank-one" or "nonzero-trace"

    def to_json(self) -> dict:
        return {"kind": "base-case", "reason": self.reason}


@dataclass(frozen=True)
class ViolatedInequality:
    r: int
    I: IndexSet
    J: IndexSet
    K: IndexSet
    phi: int

    def to_json(self) -> dict:
        return {"kind": "violated-inequality", "r": self.r,
                "I": list(self.I), "J": list(self.J), "K": list(self.K),
                "phi": self.phi}


@dataclass(frozen=True)
class Factorized:
    r: int
    I: IndexSet
    J: IndexSet
    K: IndexSet
    left: LrClass
    right: LrClass

    def to_json(self) -> dict:
        return {"kind": "factorized", "r": self.r,
                "I": list(self.I), "J": list(self.J), "K": list(self.K),
                "left": self.left.token, "right": self.right.token}


@dataclass(frozen=True)
class DenseOrbitStep:
    decision: OrbitDecision

    def to_json(self) -> dict:
        d = self.decision
        return {"kind": "dense-orbit", "dense": d.dense, "rank": d.rank,
                "rep_dim": d.rep_dim, "group_dim": d.group_dim,
                "trials": d.trials, "prime": d.prime, "seed": d.seed}


Record = BaseCase | ViolatedInequality | Factorized | DenseOrbitStep


@dataclass(frozen=True)
class HornWitness:
    """A verdict together with the decision record that justifies it."""

    verdict: LrClass
    trace: tuple[Record, ...]

    def to_json(self) -> dict:
        return {"verdict": self.verdict.token,
                "trace": [rec.to_json() for rec in self.trace]}


# --------------------------------------------------------------------------


class LrClassifier:
    """Memoized inductive classifier; deterministic given (seed, trials)."""

    def __init__(self, seed: int = 0, trials: int = DEFAULT_TRIALS,
                 prime: int = DEFAULT_PRIME):
        self.seed = seed
        self.trials = trials
        self.prime = prime
        self._verdicts: dict[tuple[Weight, ...], LrClass] = {}
        self._tables: dict[tuple[int, int], tuple[Triple, ...]] = {}
        self._dense: dict[tuple, OrbitDecision] = {}
        # journals of fresh decisive events, for cross-validation
        self.factorization_log: list[tuple] = []
        self.dense_log: list[tuple] = []

    # -- public API --------------------------------------------------------

    def classify(self, lam: Sequence[int], mu: Sequence[int],
                 nu: Sequence[int]) -> LrClass:
        """Classify the triple coefficient as 0, 1 or >= 2."""
        lam, mu, nu = as_weight(lam), as_weight(mu), as_weight(nu)
        n = check_lengths(lam, mu, nu)
        if n < 1:
            raise ValueError("weights must have length at least 1")
        key = canonical_key(lam, mu, nu)
        hit = self._verdicts.get(key)
        if hit is not None:
            return hit
        verdict = self._decide(*key)
        self._verdicts[key] = verdict
        return verdict

    def witness(self, lam: Sequence[int], mu: Sequence[int],
                nu: Sequence[int]) -> HornWitness:
        """Classify and report the decisive step for the triple as given
        (no canonicalization, so the record matches the input order)."""
        lam, mu, nu = as_weight(lam), as_weight(mu), as_weight(nu)
        n = check_lengths(lam, mu, nu)
        if n < 1:
            raise ValueError("weights must have length at least 1")
        if total(lam) + total(mu) + total(nu) != 0:
            reason = "rank-one" if n == 1 else "nonzero-trace"
            return HornWitness(LrClass.ZERO, (BaseCase(reason),))
        if n == 1:
            return HornWitness(LrClass.ONE, (BaseCase("rank-one"),))
        for r in range(1, n):
            for tri in self.one_triples(r, n):
                value = phi(*tri, lam, mu, nu)
                if value > 0:
                    return HornWitness(
                        LrClass.ZERO, (ViolatedInequality(r, *tri, value),))
                if value == 0:
                    left, right = self._split(lam, mu, nu, tri, n)
                    verdict = _combine(left, right)
                    return HornWitness(
                        verdict, (Factorized(r, *tri, left, right),))
        decision = self._dense_orbit(type_of(lam), type_of(mu), type_of(nu), n)
        verdict = LrClass.ONE if decision.dense else LrClass.AT_LEAST_TWO
        return HornWitness(verdict, (DenseOrbitStep(decision),))

    def one_triples(self, r: int, n: int) -> tuple[Triple, ...]:
        """All (I, J, K) in P(r, n)^3 whose structure constant is 1,
        in lexicographic order; cached per (r, n)."""
        key = (r, n)
        table = self._tables.get(key)
        if table is None:
            table = tuple(self._build_table(r, n))
            self._tables[key] = table
        return table

    def classify_structure_constant(self, r: int, n: int,
                                    index_i: Sequence[int],
                                    index_j: Sequence[int],
                                    index_k: Sequence[int]) -> LrClass:
        """Class of the Schubert structure constant on G(r, n)."""
        lam_i = lambda_of_indexset(index_i, r, n)
        lam_j = lambda_of_indexset(index_j, r, n)
        lam_k = lambda_of_indexset(index_k, r, n)
        return self.classify(lam_i, lam_j, shift(lam_k, -2 * (n - r)))

    def horn_member(self, lam: Sequence, mu: Sequence,
                    nu: Sequence) -> bool:
        """Membership of a rational spectrum triple in the Horn cone.

        True iff the totals cancel and phi_IJK <= 0 for every (I, J, K)
        with structure constant 1, over every r < n.
        """
        lam = _as_spectrum(lam)
        mu = _as_spectrum(mu)
        nu = _as_spectrum(nu)
        n = check_lengths(lam, mu, nu)
        if sum(lam) + sum(mu) + sum(nu) != 0:
            return False
        for r in range(1, n):
            for tri in self.one_triples(r, n):
                if phi(*tri, lam, mu, nu) > 0:
                    return False
        return True

    # -- memo persistence ---------------------------------------------------

    def export_memo(self) -> dict:
        """JSON-ready dump of the verdict memo."""
        entries = sorted(
            ([list(lam), list(mu), list(nu)], verdict.token)
            for (lam, mu, nu), verdict in self._verdicts.items())
        return {"format": MEMO_FORMAT, "seed": self.seed,
                "trials": self.trials, "prime": self.prime,
                "entries": [[triple, token] for triple, token in entries]}

    def load_memo(self, payload: dict) -> int:
        """Merge a dump produced by ``export_memo``; returns entry count."""
        if payload.get("format") != MEMO_FORMAT:
            raise ValueError("unrecognized memo format")
        config = (payload.get("seed"), payload.get("trials"),
                  payload.get("prime"))
        if config != (self.seed, self.trials, self.prime):
            raise ValueError(
                "memo was produced with a different seed/trials/prime")
        count = 0
        for (lam, mu, nu), token in payload.get("entries", []):
            key = (tuple(lam), tuple(mu), tuple(nu))
            self._verdicts[key] = lr_class_from_token(token)
            count += 1
        return count

    # -- internals ----------------------------------------------------------

    def _build_table(self, r: int, n: int) -> Iterable[Triple]:
        target = 2 * r * (n - r)
        subsets = list(index_sets(r, n))
        sizes = {idx: sum(lambda_of_indexset(idx, r, n)) for idx in subsets}
        for index_i in subsets:
            for index_j in subsets:
                need = target - sizes[index_i] - sizes[index_j]
                for index_k in subsets:
                    if sizes[index_k] != need:
                        continue
                    cls = self.classify_structure_constant(
                        r, n, index_i, index_j, index_k)
                    if cls is LrClass.ONE:
                        yield (index_i, index_j, index_k)

    def _split(self, lam, mu, nu, tri: Triple, n: int):
        index_i, index_j, index_k = tri
        left = self.classify(restrict(lam, index_i), restrict(mu, index_j),
                             restrict(nu, index_k))
        right = self.classify(restrict(lam, complement(index_i, n)),
                              restrict(mu, complement(index_j, n)),
                              restrict(nu, complement(index_k, n)))
        return left, right

    def _decide(self, lam: Weight, mu: Weight, nu: Weight) -> LrClass:
        n = len(lam)
        if total(lam) + total(mu) + total(nu) != 0:
            return LrClass.ZERO
        if n == 1:
            return LrClass.ONE
        for r in range(1, n):
            for tri in self.one_triples(r, n):
                value = phi(*tri, lam, mu, nu)
                if value > 0:
                    return LrClass.ZERO
                if value == 0:
                    left, right = self._split(lam, mu, nu, tri, n)
                    self.factorization_log.append(
                        (lam, mu, nu, r, *tri, left, right))
                    return _combine(left, right)
        # every candidate was strictly negative: interior point
        arms = (type_of(lam), type_of(mu), type_of(nu))
        decision = self._dense_orbit(*arms, n)
        self.dense_log.append((lam, mu, nu, arms, decision.dense))
        return LrClass.ONE if decision.dense else LrClass.AT_LEAST_TWO

    def _dense_orbit(self, type_a, type_b, type_c, n: int) -> OrbitDecision:
        key = (type_a, type_b, type_c, n)
        hit = self._dense.get(key)
        if hit is None:
            quiver = TripleFlagQuiver.from_types(type_a, type_b, type_c, n)
            hit = dense_orbit(quiver, seed=self.seed, trials=self.trials,
                              prime=self.prime)
            self._dense[key] = hit
        return hit


def _combine(left: LrClass, right: LrClass) -> LrClass:
    if LrClass.ZERO in (left, right):
        return LrClass.ZERO
    if left is LrClass.ONE and right is LrClass.ONE:
        return LrClass.ONE
    return LrClass.AT_LEAST_TWO


def _as_spectrum(values: Sequence) -> tuple[Fraction, ...]:
    spectrum = tuple(Fraction(v) for v in values)
    for a, b in zip(spectrum, spectrum[1:]):
        if a < b:
            raise ValueError(f"spectrum {spectrum} is not weakly decreasing")
    return spectrum


# module-level conveniences backed by a shared default instance
_DEFAULT = LrClassifier()


def is_lr_01(lam: Sequence[int], mu: Sequence[int],
             nu: Sequence[int]) -> HornWitness:
    """Classify with the default classifier and return the witness."""
    return _DEFAULT.witness(lam, mu, nu)


def classify_triple(lam: Sequence[int], mu: Sequence[int],
                    nu: Sequence[int]) -> LrClass:
    return _DEFAULT.classify(lam, mu, nu)


def horn_member(lam: Sequence, mu: Sequence, nu: Sequence) -> bool:
    return _DEFAULT.horn_member(lam, mu, nu)
