"""Minimal facet lists of the eigencones of types A, B and C.

Type A (unitary group of rank n): one inequality per triple (I, J, K) of
r-subsets, r < n, whose Schubert structure constant on G(r, n) equals 1;
the coefficients are 0/1 indicators and the trace equality is carried as
metadata.

Types C (Sp(2n)) and B (SO(2n+1)): one inequality per simple root index
r <= n and per triple of isotropic r-subsets passing two dimension
identities and whose two reduced triples both have structure constant 1
(on G(r, 2r) and on G(r, ambient - r)).  In the expanded form, an index i
of I with i <= n contributes +1 to coordinate i and an index i > n
contributes -1 to coordinate ambient+1-i; the self-barred middle index of
type B contributes nothing.

Every emitted inequality defines a facet; ``verify_irredundant`` certifies
this with an exact rational LP that exhibits, for each inequality, a
strictly dominant point where it is tight and every other inequality is
strictly slack.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Sequence

from .classify import LrClassifier
from .linprog import LpInfeasible, maximize
from .lr import LrClass
from .schubert import (
    dim_space,
    grassmann_inversion_set,
    isotropic_index_sets,
    isotropic_inversion_set,
    orthogonal_reduce,
    symplectic_reduce,
)
from .weights import IndexSet

GROUPS = ("A", "B", "C")

_SYMBOLS = ("ξ", "ζ", "η")    # xi, zeta, eta


@dataclass(frozen=True)
class Inequality:
    """One facet of an eigencone, in expanded coefficient form.

    The inequality reads  sum_i coeffs[0][i] xi_i + coeffs[1][i] zeta_i +
    coeffs[2][i] eta_i <= 0  over the dominant spectra of the group.
    """

    group: str
    rank: int
    root_index: int
    triple: tuple[IndexSet, IndexSet, IndexSet]
    coeffs: tuple[tuple[int, ...], ...]

    def evaluate(self, xi: Sequence, zeta: Sequence, eta: Sequence):
        return sum(c * v for block, spec in zip(self.coeffs, (xi, zeta, eta))
                   for c, v in zip(block, spec))

    def render(self) -> str:
        terms = []
        for symbol, block in zip(_SYMBOLS, self.coeffs):
            for i, c in enumerate(block, start=1):
                if c == 0:
                    continue
                sign = "+" if c > 0 else "−"
                terms.append((sign, f"{symbol}{i}"))
        if not terms:
            return "0 ≤ 0"
        first_sign, first = terms[0]
        text = first if first_sign == "+" else f"−{first}"
        for sign, term in terms[1:]:
            text += f" {sign} {term}"
        return text + " ≤ 0"

    def to_json(self) -> dict:
        i, j, k = self.triple
        return {"group": self.group, "rank": self.rank, "r": self.root_index,
                "I": list(i), "J": list(j), "K": list(k),
                "coeffs": [list(block) for block in self.coeffs]}


def trace_equality(n: int) -> tuple[tuple[int, ...], ...]:
    """Coefficients of the type A equality: all entries sum to zero."""
    ones = (1,) * n
    return (ones, ones, ones)


def _indicator(index_set: IndexSet, n: int) -> tuple[int, ...]:
    chosen = set(index_set)
    return tuple(1 if i in chosen else 0 for i in range(1, n + 1))


def _signed_indicator(index_set: IndexSet, n: int, ambient: int) -> tuple[int, ...]:
    out = [0] * n
    for i in index_set:
        if i <= n:
            out[i - 1] += 1
        elif ambient + 1 - i <= n:      # skips the self-barred n+1 in type B
            out[ambient - i] -= 1
    return tuple(out)


def facets_A(n: int, classifier: LrClassifier | None = None) -> list[Inequality]:
    """All facets of the Horn cone of rank n (n >= 2), sorted."""
    if n < 2:
        raise ValueError("type A needs rank >= 2")
    cls = classifier or LrClassifier()
    out = []
    for r in range(1, n):
        for tri in cls.one_triples(r, n):
            coeffs = tuple(_indicator(part, n) for part in tri)
            out.append(Inequality("A", n, r, tri, coeffs))
    return out


def _facets_isotropic(kind: str, n: int, cls: LrClassifier) -> list[Inequality]:
    ambient = 2 * n if kind == "C" else 2 * n + 1
    reduce_map = symplectic_reduce if kind == "C" else orthogonal_reduce
    out = []
    for r in range(1, n + 1):
        target = dim_space(kind, r, n)
        rect = (2 * r * (n - r) if kind == "C"
                else r * (2 * n + 1 - 2 * r))
        subsets = isotropic_index_sets(r, n, kind)
        data = {}
        for idx in subsets:
            codim = len(isotropic_inversion_set(idx, r, n, kind))
            reduced0, reduced2 = reduce_map(idx, r, n)
            codim0 = len(grassmann_inversion_set(reduced0, r, ambient - r))
            data[idx] = (codim, codim0, reduced0, reduced2)
        for tri in product(subsets, repeat=3):
            rows = [data[idx] for idx in tri]
            if sum(row[0] for row in rows) != target:
                continue
            if sum(row[1] for row in rows) != rect:
                continue
            tri2 = tuple(row[3] for row in rows)
            if cls.classify_structure_constant(r, 2 * r, *tri2) is not LrClass.ONE:
                continue
            tri0 = tuple(row[2] for row in rows)
            if cls.classify_structure_constant(r, ambient - r,
                                               *tri0) is not LrClass.ONE:
                continue
            coeffs = tuple(_signed_indicator(part, n, ambient) for part in tri)
            out.append(Inequality(kind, n, r, tri, coeffs))
    return out


def facets_C(n: int, classifier: LrClassifier | None = None) -> list[Inequality]:
    """All facets of the eigencone of the compact symplectic group Sp(2n)."""
    if n < 1:
        raise ValueError("type C needs rank >= 1")
    return _facets_isotropic("C", n, classifier or LrClassifier())


def facets_B(n: int, classifier: LrClassifier | None = None) -> list[Inequality]:
    """All facets of the eigencone of SO(2n+1)."""
    if n < 1:
        raise ValueError("type B needs rank >= 1")
    return _facets_isotropic("B", n, classifier or LrClassifier())


def facets(group: str, rank: int,
           classifier: LrClassifier | None = None) -> list[Inequality]:
    if group == "A":
        return facets_A(rank, classifier)
    if group == "B":
        return facets_B(rank, classifier)
    if group == "C":
        return facets_C(rank, classifier)
    raise ValueError(f"unknown group {group!r}")


# ---------------------------------------------------------------------------
# membership


def as_dominant_spectrum(values: Sequence, group: str,
                         rank: int) -> tuple[Fraction, ...]:
    """Validate a rational spectrum against the dominant chamber."""
    spec = tuple(Fraction(v) for v in values)
    if len(spec) != rank:
        raise ValueError(f"spectrum {spec} does not have {rank} entries")
    for a, b in zip(spec, spec[1:]):
        if a < b:
            raise ValueError(f"spectrum {spec} is not weakly decreasing")
    if group in ("B", "C") and spec and spec[-1] < 0:
        raise ValueError(f"type {group} spectra must end with a nonnegative "
                         f"entry, got {spec}")
    return spec


def member(group: str, rank: int, xi: Sequence, zeta: Sequence, eta: Sequence,
           facet_list: Sequence[Inequality] | None = None,
           classifier: LrClassifier | None = None):
    """Eigencone membership for dominant rational spectra.

    Returns (True, None) or (False, witness) where the witness is the first
    violated Inequality in the sorted list, or the string "trace" when the
    type A trace equality fails.
    """
    xi = as_dominant_spectrum(xi, group, rank)
    zeta = as_dominant_spectrum(zeta, group, rank)
    eta = as_dominant_spectrum(eta, group, rank)
    if group == "A" and sum(xi) + sum(zeta) + sum(eta) != 0:
        return False, "trace"
    if facet_list is None:
        facet_list = facets(group, rank, classifier)
    for ineq in facet_list:
        if ineq.evaluate(xi, zeta, eta) > 0:
            return False, ineq
    return True, None


# ---------------------------------------------------------------------------
# facet certification by exact LP


@dataclass(frozen=True)
class FacetCheck:
    inequality: Inequality
    is_facet: bool
    margin: Fraction
    witness: tuple[tuple[Fraction, ...], ...] | None

    def to_json(self) -> dict:
        return {"facet": self.inequality.to_json(),
                "is_facet": self.is_facet,
                "margin": str(self.margin),
                "witness": None if self.witness is None else
                [[str(v) for v in spec] for spec in self.witness]}


@dataclass(frozen=True)
class IrredundancyReport:
    group: str
    rank: int
    checks: tuple[FacetCheck, ...]

    @property
    def all_facets(self) -> bool:
        return all(c.is_facet for c in self.checks)

    def non_facets(self) -> list[FacetCheck]:
        return [c for c in self.checks if not c.is_facet]

    def to_json(self) -> dict:
        return {"group": self.group, "rank": self.rank,
                "all_facets": self.all_facets,
                "checks": [c.to_json() for c in self.checks]}


def _flat(coeffs: tuple[tuple[int, ...], ...]) -> list[int]:
    return [c for block in coeffs for c in block]


def verify_irredundant(facet_list: Sequence[Inequality], group: str,
                       rank: int) -> IrredundancyReport:
    """Certify that every listed inequality defines a facet.

    For each inequality f the LP searches, inside the box |x_i| <= 1, for a
    point with f tight, every other inequality slack by at least t, every
    chamber inequality strict by at least t, and t as large as possible.
    A positive optimum exhibits a strictly dominant relative-interior point
    of the face cut out by f, which is therefore a facet; an optimum of
    zero flags the inequality (an implementation bug, since the generators
    only emit facets).

    Variables are shifted to y = x + 1 >= 0 for the standard-form solver.
    """
    n = rank
    nx = 3 * n
    tvar = nx                       # objective variable, last column
    ncols = nx + 1

    def row(coeffs_x: Sequence[int], tcoeff: int, shift_const: int):
        # encodes  coeffs_x . x + tcoeff * t <= rhs  with x = y - 1
        r = [Fraction(c) for c in coeffs_x] + [Fraction(tcoeff)]
        return r, Fraction(shift_const + sum(coeffs_x))

    checks = []
    for f in facet_list:
        a_ub: list[list[Fraction]] = []
        b_ub: list[Fraction] = []
        a_eq: list[list[Fraction]] = []
        b_eq: list[Fraction] = []

        coeffs_f = _flat(f.coeffs)
        r, rhs = row(coeffs_f, 0, 0)
        a_eq.append(r)
        b_eq.append(rhs)
        if group == "A":
            r, rhs = row(_flat(trace_equality(n)), 0, 0)
            a_eq.append(r)
            b_eq.append(rhs)

        for g in facet_list:
            if g is f:
                continue
            r, rhs = row(_flat(g.coeffs), 1, 0)
            a_ub.append(r)
            b_ub.append(rhs)

        for block in range(3):
            base = block * n
            for i in range(n - 1):
                # x_{i+1} - x_i + t <= 0
                coeffs_x = [0] * nx
                coeffs_x[base + i] = -1
                coeffs_x[base + i + 1] = 1
                r, rhs = row(coeffs_x, 1, 0)
                a_ub.append(r)
                b_ub.append(rhs)
            if group in ("B", "C"):
                # t - x_n <= 0
                coeffs_x = [0] * nx
                coeffs_x[base + n - 1] = -1
                r, rhs = row(coeffs_x, 1, 0)
                a_ub.append(r)
                b_ub.append(rhs)

        for j in range(nx):         # y_j <= 2, i.e. x_j <= 1
            r = [Fraction(0)] * ncols
            r[j] = Fraction(1)
            a_ub.append(r)
            b_ub.append(Fraction(2))
        r = [Fraction(0)] * ncols
        r[tvar] = Fraction(1)
        a_ub.append(r)
        b_ub.append(Fraction(1))

        objective = [Fraction(0)] * ncols
        objective[tvar] = Fraction(1)
        try:
            value, y = maximize(objective, a_ub, b_ub, a_eq, b_eq)
        except LpInfeasible:
            raise LpInfeasible(
                f"facet LP infeasible for {f.to_json()}: inconsistent list")
        if value > 0:
            x = [y[j] - 1 for j in range(nx)]
            witness = tuple(tuple(x[b * n:(b + 1) * n]) for b in range(3))
        else:
            witness = None
        checks.append(FacetCheck(f, value > 0, value, witness))
    return IrredundancyReport(group, rank, tuple(checks))
