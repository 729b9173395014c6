"""Inversion-set combinatorics for ordinary, two-step and isotropic flags.

Box conventions
---------------
Every inversion set is stored as a frozenset of 1-based ``(row, col)`` pairs.
For the Grassmannian of r-planes in n-space the diagram is the r x (n-r)
rectangle: rows carry the complement of I (top to bottom), columns carry I
(left to right), and a box is present exactly when its column label is
smaller than its row label.

For a two-step flag (I1 inside I2, sizes r1 < r2, ambient n) the diagram is
L-shaped: columns 1..r1 run the full height n - r1, columns r1+1..r2 exist
only in the bottom n - r2 rows.  Rows 1..r2-r1 are labelled by I2 - I1,
the remaining rows by the complement of I2; columns 1..r1 by I1 and the rest
by I2 - I1.  The same label comparison decides membership.

For the isotropic (type C, ambient N = 2n) and odd orthogonal (type B,
ambient N = 2n+1) Grassmannians with bar involution i -> N+1-i, the diagram
of an isotropic r-subset I is the part of the two-step diagram of
(I, complement of bar I) that satisfies ``row + col <= N + 1 - r`` (type C)
or ``row + col <= N - r`` (type B).  The type C bound keeps the long-root
boxes that the symmetry diagonal bisects; in type B no box meets the
diagonal, so the extreme anti-diagonal ``row + col = N - r`` plays its role.
``diagonal_count`` counts the boxes of the inversion set on that extreme
anti-diagonal; the type C convention is pinned by the worked values
delta({1,2,4,6}) = 3 and delta({4,6,7,8}) = 1 in the Lagrangian case n = 4.
"""

from __future__ import annotations

from typing import Sequence

from .weights import IndexSet, as_index_set, complement

Box = tuple[int, int]
BoxSet = frozenset[Box]


class IsotropyError(ValueError):
    """Raised when an index set meets its own bar image."""


# ---------------------------------------------------------------------------
# ordinary and two-step diagrams


def grassmann_inversion_set(index_set: Sequence[int], r: int, n: int) -> BoxSet:
    """Inversion set of a Schubert class of the Grassmannian G(r, n)."""
    cols = as_index_set(index_set, r=r, n=n)
    rows = complement(cols, n)
    return frozenset(
        (i + 1, j + 1)
        for i, row_label in enumerate(rows)
        for j, col_label in enumerate(cols)
        if col_label < row_label
    )


def check_twostep(index1: Sequence[int], index2: Sequence[int],
                  n: int) -> tuple[IndexSet, IndexSet]:
    """Validate a strictly nested pair I1 < I2 of subsets of [1;n]."""
    idx1 = as_index_set(index1, n=n)
    idx2 = as_index_set(index2, n=n)
    if not set(idx1) < set(idx2):
        raise ValueError(f"{idx1} is not strictly contained in {idx2}")
    return idx1, idx2


def _twostep_labels(idx1: IndexSet, idx2: IndexSet, n: int):
    middle = tuple(sorted(set(idx2) - set(idx1)))
    outside = complement(idx2, n)
    col_labels = idx1 + middle            # columns 1..r2
    row_labels = middle + outside         # rows 1..n-r1
    return col_labels, row_labels


def twostep_inversion_set(index1: Sequence[int], index2: Sequence[int],
                          n: int) -> BoxSet:
    """Inversion set of a Schubert class of the two-step flag variety."""
    idx1, idx2 = check_twostep(index1, index2, n)
    r1, r2 = len(idx1), len(idx2)
    col_labels, row_labels = _twostep_labels(idx1, idx2, n)
    boxes = set()
    for i, row_label in enumerate(row_labels, start=1):
        width = r1 if i <= r2 - r1 else r2
        for j in range(1, width + 1):
            if col_labels[j - 1] < row_label:
                boxes.add((i, j))
    return frozenset(boxes)


def word_of_twostep(index1: Sequence[int], index2: Sequence[int],
                    n: int) -> tuple[int, ...]:
    """Length-n word over {0,1,2}: 1 on I1, 2 on I2 - I1, 0 outside I2."""
    idx1, idx2 = check_twostep(index1, index2, n)
    in1, in2 = set(idx1), set(idx2)
    return tuple(1 if i in in1 else 2 if i in in2 else 0
                 for i in range(1, n + 1))


def _positions_of_ones(word: Sequence[int]) -> IndexSet:
    return tuple(pos for pos, letter in enumerate(word, start=1) if letter == 1)


def reduce_twostep(index1: Sequence[int], index2: Sequence[int],
                   n: int) -> tuple[IndexSet, IndexSet, IndexSet]:
    """The three letter-cancellation reductions of a two-step index.

    Returns (I0, I1, I2) where, writing the pair as a word over {0,1,2}:
    I0 records the 1s after erasing the 0s (a subset of [1;r2]),
    I1 records the 2s after erasing the 1s (a subset of [1;n-r1]),
    I2 records the 1s after erasing the 2s (a subset of [1;n-(r2-r1)]).
    """
    word = word_of_twostep(index1, index2, n)
    no_zeros = [w for w in word if w != 0]
    no_ones = [w for w in word if w != 1]
    no_twos = [w for w in word if w != 2]
    reduced0 = _positions_of_ones(no_zeros)
    reduced1 = tuple(pos for pos, letter in enumerate(no_ones, start=1)
                     if letter == 2)
    reduced2 = _positions_of_ones(no_twos)
    return reduced0, reduced1, reduced2


# ---------------------------------------------------------------------------
# isotropic index sets (kinds "C": ambient 2n, "B": ambient 2n+1)


def _ambient(kind: str, n: int) -> int:
    if kind == "C":
        return 2 * n
    if kind == "B":
        return 2 * n + 1
    raise ValueError(f"unknown kind {kind!r}; expected 'B' or 'C'")


def bar(i: int, ambient: int) -> int:
    """The involution i -> ambient + 1 - i on [1;ambient]."""
    return ambient + 1 - i


def bar_set(index_set: Sequence[int], ambient: int) -> IndexSet:
    return tuple(sorted(bar(i, ambient) for i in index_set))


def check_isotropic(index_set: Sequence[int], r: int, n: int,
                    kind: str) -> IndexSet:
    """Validate an r-subset of [1;ambient] avoiding its own bar image."""
    ambient = _ambient(kind, n)
    idx = as_index_set(index_set, r=r, n=ambient)
    clash = set(idx) & set(bar_set(idx, ambient))
    if clash:
        raise IsotropyError(
            f"{idx} meets its bar image at {tuple(sorted(clash))}")
    return idx


def isotropic_index_sets(r: int, n: int, kind: str) -> list[IndexSet]:
    """All isotropic r-subsets for the given kind, in lexicographic order."""
    from itertools import combinations

    ambient = _ambient(kind, n)
    out = []
    for idx in combinations(range(1, ambient + 1), r):
        if all(bar(i, ambient) not in idx for i in idx):
            out.append(idx)
    return out


def _iso_row_bound(kind: str, r: int, n: int) -> int:
    # boxes (i, j) of the ambient isotropic diagram satisfy i + j <= bound
    ambient = _ambient(kind, n)
    return ambient + 1 - r if kind == "C" else ambient - r


def isotropic_inversion_set(index_set: Sequence[int], r: int, n: int,
                            kind: str) -> BoxSet:
    """Inversion set of a Schubert class of an isotropic Grassmannian.

    Cut out of the two-step diagram of (I, complement of bar I) by the
    triangular region described in the module docstring.
    """
    idx = check_isotropic(index_set, r, n, kind)
    ambient = _ambient(kind, n)
    partner = complement(bar_set(idx, ambient), ambient)
    if partner == idx:              # type C with r = n: a single-step flag
        full = grassmann_inversion_set(idx, r, ambient)
    else:
        full = twostep_inversion_set(idx, partner, ambient)
    bound = _iso_row_bound(kind, r, n)
    return frozenset((i, j) for (i, j) in full if j <= r and i + j <= bound)


def symplectic_reduce(index_set: Sequence[int], r: int,
                      n: int) -> tuple[IndexSet, IndexSet]:
    """Reduction I -> (I0, I2) for the symplectic Grassmannian, ambient 2n.

    I0 lives in [1;2n-r] and indexes a class of G(r, 2n-r); I2 lives in
    [1;2r] and indexes a class of the Lagrangian-style G(r, 2r).  At r = n
    the pair (I, complement of bar I) collapses to a single step and the
    reduction degenerates to I0 = [1;r], I2 = I.
    """
    idx = check_isotropic(index_set, r, n, "C")
    ambient = 2 * n
    partner = complement(bar_set(idx, ambient), ambient)
    if partner == idx:
        return tuple(range(1, r + 1)), idx
    reduced0, _, reduced2 = reduce_twostep(idx, partner, ambient)
    return reduced0, reduced2


def orthogonal_reduce(index_set: Sequence[int], r: int,
                      n: int) -> tuple[IndexSet, IndexSet]:
    """Reduction I -> (I0, I2) for the odd orthogonal case, ambient 2n+1.

    I0 lives in [1;2n+1-r], I2 in [1;2r].  The midpoint n+1 is its own bar
    and is rejected by the isotropy check.
    """
    idx = check_isotropic(index_set, r, n, "B")
    ambient = 2 * n + 1
    partner = complement(bar_set(idx, ambient), ambient)
    reduced0, _, reduced2 = reduce_twostep(idx, partner, ambient)
    return reduced0, reduced2


def diagonal_count(index_set: Sequence[int], r: int, n: int,
                   kind: str) -> int:
    """Number of boxes of the inversion set on the extreme anti-diagonal."""
    boxes = isotropic_inversion_set(index_set, r, n, kind)
    diag = _iso_row_bound(kind, r, n)
    return sum(1 for (i, j) in boxes if i + j == diag)


def dim_space(kind: str, r: int, n: int) -> int:
    """Dimension of the relevant Grassmannian.

    A: r(n-r) for the ordinary G(r, n);
    C: 2r(n-r) + r(r+1)/2 for the isotropic G(r, 2n);
    B: r(2n+1-2r) + r(r-1)/2 for the odd orthogonal G(r, 2n+1).
    """
    if kind == "A":
        if not 1 <= r < n:
            raise ValueError(f"need 1 <= r < n, got r={r}, n={n}")
        return r * (n - r)
    if not 1 <= r <= n:
        raise ValueError(f"need 1 <= r <= n, got r={r}, n={n}")
    if kind == "C":
        return 2 * r * (n - r) + r * (r + 1) // 2
    if kind == "B":
        return r * (2 * n + 1 - 2 * r) + r * (r - 1) // 2
    raise ValueError(f"unknown kind {kind!r}")


def weyl_word(index_set: Sequence[int], r: int, n: int,
              kind: str) -> tuple[int, ...]:
    """Debug printer: the minimal coset representative as a permutation of
    [1;ambient], written one-line (sorted I, sorted middle, bars of I)."""
    idx = check_isotropic(index_set, r, n, kind)
    ambient = _ambient(kind, n)
    middle = complement(tuple(sorted(set(idx) | set(bar_set(idx, ambient)))),
                        ambient)
    bars = tuple(bar(i, ambient) for i in reversed(idx))
    return idx + middle + bars


# ---------------------------------------------------------------------------
# ASCII rendering (debug aid; orientation matches the usual figures)


def _render(boxes: BoxSet, row_labels: Sequence[int],
            col_labels: Sequence[int], width_of_row) -> str:
    cell = max((len(str(lbl)) for lbl in col_labels), default=1)
    header = "    " + " ".join(str(lbl).rjust(cell) for lbl in col_labels)
    lines = [header]
    for i, row_label in enumerate(row_labels, start=1):
        width = width_of_row(i)
        cells = []
        for j in range(1, len(col_labels) + 1):
            if j > width:
                mark = " "
            elif (i, j) in boxes:
                mark = "#"
            else:
                mark = "."
            cells.append(mark.rjust(cell))
        lines.append(f"{row_label:>3} " + " ".join(cells))
    return "\n".join(lines)


def render_grassmann(index_set: Sequence[int], r: int, n: int) -> str:
    cols = as_index_set(index_set, r=r, n=n)
    rows = complement(cols, n)
    boxes = grassmann_inversion_set(cols, r, n)
    return _render(boxes, rows, cols, lambda i: r)


def render_twostep(index1: Sequence[int], index2: Sequence[int],
                   n: int) -> str:
    idx1, idx2 = check_twostep(index1, index2, n)
    r1, r2 = len(idx1), len(idx2)
    col_labels, row_labels = _twostep_labels(idx1, idx2, n)
    boxes = twostep_inversion_set(idx1, idx2, n)
    return _render(boxes, row_labels, col_labels,
                   lambda i: r1 if i <= r2 - r1 else r2)


def render_isotropic(index_set: Sequence[int], r: int, n: int,
                     kind: str) -> str:
    idx = check_isotropic(index_set, r, n, kind)
    ambient = _ambient(kind, n)
    boxes = isotropic_inversion_set(idx, r, n, kind)
    bound = _iso_row_bound(kind, r, n)
    rows = list(range(r + 1, ambient + 1))
    return _render(boxes, rows, idx, lambda i: min(r, bound - i))
