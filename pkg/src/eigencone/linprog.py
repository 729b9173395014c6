"""Exact rational linear programming by the two-phase simplex method.

Everything is a ``fractions.Fraction``; no floating point enters at any
step, so optima and certificates are exact.  Bland's smallest-index rule
guards against cycling.  Intended for the small dense problems that facet
certification produces (tens of variables, at most a few hundred rows).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

ZERO = Fraction(0)
ONE = Fraction(1)


class LpInfeasible(Exception):
    """The constraint system has no solution."""


class LpUnbounded(Exception):
    """The objective is unbounded above on the feasible region."""


def _simplex(tableau: list[list[Fraction]], basis: list[int],
             ncols: int) -> None:
    """Run Bland-rule pivoting in place until optimality.

    ``tableau`` holds one row per constraint plus the objective row last
    (stored as reduced costs; entry j > 0 means improving).  Column
    ``ncols`` is the right-hand side.
    """
    nrows = len(tableau) - 1
    while True:
        obj = tableau[-1]
        enter = next((j for j in range(ncols) if obj[j] > 0), None)
        if enter is None:
            return
        ratio = None
        leave = None
        for i in range(nrows):
            coeff = tableau[i][enter]
            if coeff > 0:
                r = tableau[i][ncols] / coeff
                if ratio is None or r < ratio or (r == ratio
                                                  and basis[i] < basis[leave]):
                    ratio, leave = r, i
        if leave is None:
            raise LpUnbounded()
        _pivot(tableau, basis, leave, enter, ncols)


def _pivot(tableau, basis, row, col, ncols) -> None:
    piv = tableau[row][col]
    inv = ONE / piv
    tableau[row] = [v * inv for v in tableau[row]]
    prow = tableau[row]
    for i, r in enumerate(tableau):
        if i == row:
            continue
        f = r[col]
        if f:
            tableau[i] = [a - f * b for a, b in zip(r, prow)]
    basis[row] = col


def maximize(objective: Sequence[Fraction],
             a_ub: Sequence[Sequence[Fraction]], b_ub: Sequence[Fraction],
             a_eq: Sequence[Sequence[Fraction]] = (),
             b_eq: Sequence[Fraction] = ()) -> tuple[Fraction, list[Fraction]]:
    """Maximize objective . x subject to a_ub x <= b_ub, a_eq x = b_eq, x >= 0.

    Returns (optimal value, optimizer).  Raises LpInfeasible / LpUnbounded.
    """
    nvars = len(objective)
    rows: list[tuple[list[Fraction], Fraction, str]] = []
    for coeffs, rhs in zip(a_ub, b_ub):
        row = [Fraction(c) for c in coeffs]
        rhs = Fraction(rhs)
        if rhs < 0:
            rows.append(([-c for c in row], -rhs, "ge"))
        else:
            rows.append((row, rhs, "le"))
    for coeffs, rhs in zip(a_eq, b_eq):
        row = [Fraction(c) for c in coeffs]
        rhs = Fraction(rhs)
        if rhs < 0:
            row, rhs = [-c for c in row], -rhs
        rows.append((row, rhs, "eq"))

    nslack = sum(1 for _, _, kind in rows if kind in ("le", "ge"))
    nart = sum(1 for _, _, kind in rows if kind in ("ge", "eq"))
    ncols = nvars + nslack + nart
    tableau: list[list[Fraction]] = []
    basis: list[int] = []
    slack_at = nvars
    art_at = nvars + nslack
    art_cols = []
    for coeffs, rhs, kind in rows:
        row = coeffs + [ZERO] * (nslack + nart) + [rhs]
        if kind == "le":
            row[slack_at] = ONE
            basis.append(slack_at)
            slack_at += 1
        elif kind == "ge":
            row[slack_at] = -ONE
            slack_at += 1
            row[art_at] = ONE
            basis.append(art_at)
            art_cols.append(art_at)
            art_at += 1
        else:
            row[art_at] = ONE
            basis.append(art_at)
            art_cols.append(art_at)
            art_at += 1
        tableau.append(row)

    if art_cols:
        # phase 1: maximize minus the sum of artificials
        obj = [ZERO] * (ncols + 1)
        for c in art_cols:
            obj[c] = -ONE
        tableau.append(obj)
        for i, b in enumerate(basis):
            if b in art_cols:
                tableau[-1] = [a + v for a, v in zip(tableau[-1], tableau[i])]
        _simplex(tableau, basis, ncols)
        if tableau[-1][ncols] != 0:
            raise LpInfeasible()
        tableau.pop()
        # pivot any artificial still in the basis out on a non-artificial
        for i, b in enumerate(basis):
            if b in art_cols:
                col = next((j for j in range(nvars + nslack)
                            if tableau[i][j] != 0), None)
                if col is not None:
                    _pivot(tableau, basis, i, col, ncols)
        # freeze artificial columns at zero
        for row in tableau:
            for c in art_cols:
                row[c] = ZERO

    # phase 2
    obj = [Fraction(c) for c in objective] + [ZERO] * (nslack + nart + 1)
    tableau.append(obj)
    for i, b in enumerate(basis):
        f = tableau[-1][b]
        if f:
            tableau[-1] = [a - f * v for a, v in zip(tableau[-1], tableau[i])]
    _simplex(tableau, basis, ncols)

    x = [ZERO] * nvars
    for i, b in enumerate(basis):
        if b < nvars:
            x[b] = tableau[i][ncols]
    value = -tableau[-1][ncols]
    return value, x
