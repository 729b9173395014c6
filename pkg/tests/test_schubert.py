from itertools import combinations

import pytest

from eigencone.schubert import (
    IsotropyError,
    bar_set,
    check_isotropic,
    diagonal_count,
    dim_space,
    grassmann_inversion_set,
    isotropic_index_sets,
    isotropic_inversion_set,
    orthogonal_reduce,
    reduce_twostep,
    render_grassmann,
    render_isotropic,
    render_twostep,
    symplectic_reduce,
    twostep_inversion_set,
    weyl_word,
    word_of_twostep,
)
from eigencone.weights import complement, index_sets, lambda_of_indexset, total


# -- ordinary Grassmannians ---------------------------------------------------


def test_grassmann_extremes():
    r, n = 3, 7
    assert len(grassmann_inversion_set(tuple(range(1, r + 1)), r, n)) \
        == r * (n - r)
    assert grassmann_inversion_set(tuple(range(n - r + 1, n + 1)), r, n) \
        == frozenset()


def test_grassmann_figure_staircase():
    boxes = grassmann_inversion_set((1, 4, 5, 7, 8, 10), 6, 10)
    assert len(boxes) == 10
    by_row = {}
    for i, j in boxes:
        by_row.setdefault(i, set()).add(j)
    assert by_row == {1: {1}, 2: {1}, 3: {1, 2, 3}, 4: {1, 2, 3, 4, 5}}


def test_grassmann_codimension_identity():
    for r, n in [(1, 4), (2, 4), (2, 5), (3, 6)]:
        for idx in index_sets(r, n):
            boxes = grassmann_inversion_set(idx, r, n)
            assert len(boxes) + total(lambda_of_indexset(idx, r, n)) \
                == r * (n - r)


def test_grassmann_injective():
    for r, n in [(2, 5), (3, 6)]:
        seen = set()
        for idx in index_sets(r, n):
            boxes = grassmann_inversion_set(idx, r, n)
            assert boxes not in seen
            seen.add(boxes)


# -- two-step flags -----------------------------------------------------------


def test_word_examples():
    assert word_of_twostep((1,), (1, 2), 2) == (1, 2)
    assert word_of_twostep((3, 7), (1, 3, 5, 6, 7, 8), 9) \
        == (2, 0, 1, 0, 2, 2, 1, 2, 0)
    with pytest.raises(ValueError):
        word_of_twostep((1,), (1,), 2)


def test_reduce_twostep_examples():
    reduced0, reduced1, reduced2 = reduce_twostep((3, 7), (1, 3, 5, 6, 7, 8), 9)
    assert reduced0 == (2, 5)
    assert reduced1 == (1, 4, 5, 6)
    assert reduced2 == (2, 4)
    assert reduce_twostep((1,), (1, 2), 2) == ((1,), (1,), (1,))
    assert reduce_twostep((1, 2), (1, 2, 3, 4), 6) \
        == ((1, 2), (1, 2), (1, 2))


def test_reduce_twostep_ranges():
    n = 7
    for r2 in range(2, n + 1):
        for idx2 in combinations(range(1, n + 1), r2):
            for r1 in range(1, r2):
                for idx1 in combinations(idx2, r1):
                    reduced0, reduced1, reduced2 = reduce_twostep(
                        idx1, idx2, n)
                    assert len(reduced0) == r1 and (not reduced0 or
                                                    reduced0[-1] <= r2)
                    assert len(reduced1) == r2 - r1 and (not reduced1 or
                                                         reduced1[-1] <= n - r1)
                    assert len(reduced2) == r1 and (not reduced2 or
                                                    reduced2[-1] <= n - (r2 - r1))


def test_word_round_trip():
    # the word determines the pair, and the reduction map is injective
    n = 6
    for r2 in range(2, n):
        for idx2 in combinations(range(1, n + 1), r2):
            for r1 in range(1, r2):
                seen = {}
                for idx1 in combinations(idx2, r1):
                    word = word_of_twostep(idx1, idx2, n)
                    assert tuple(i for i, w in enumerate(word, 1) if w == 1) \
                        == idx1
    images = {}
    for idx2 in combinations(range(1, n + 1), 4):
        for idx1 in combinations(idx2, 2):
            image = reduce_twostep(idx1, idx2, n)
            assert image not in images
            images[image] = (idx1, idx2)


def test_figure_twostep_diagram():
    boxes = twostep_inversion_set((3, 7), (1, 3, 5, 6, 7, 8), 9)
    by_col = {}
    for i, j in boxes:
        by_col.setdefault(j, set()).add(i)
    assert by_col == {1: {2, 3, 4, 6, 7}, 2: {4, 7}, 3: {5, 6, 7},
                      4: {7}, 5: {7}, 6: {7}}


def _tau(boxes, size):
    return frozenset((size + 1 - j, size + 1 - i) for i, j in boxes)


def test_twostep_antidiagonal_reflection():
    # for the middle two-step flag (r, n-r), reflecting the diagram in the
    # anti-diagonal lands on the partner pair built from the bar involution
    for n in range(3, 9):
        for r1 in range(1, (n - 1) // 2 + 1):
            r2 = n - r1
            if r2 <= r1:
                continue
            for idx2 in combinations(range(1, n + 1), r2):
                for idx1 in combinations(idx2, r1):
                    part2 = tuple(sorted(set(idx2) - set(idx1)))
                    part3 = complement(idx2, n)
                    bar3 = tuple(sorted(n + 1 - x for x in part3))
                    bar2 = tuple(sorted(n + 1 - x for x in part2))
                    partner = tuple(sorted(bar2 + bar3))
                    lhs = _tau(twostep_inversion_set(idx1, idx2, n), n - r1)
                    rhs = twostep_inversion_set(bar3, partner, n)
                    assert lhs == rhs


# -- isotropic index sets ------------------------------------------------------


def test_isotropy_checks():
    check_isotropic((3, 7, 10), 3, 5, "C")
    with pytest.raises(IsotropyError):
        check_isotropic((1, 10), 2, 5, "C")
    with pytest.raises(IsotropyError):
        check_isotropic((2,), 1, 1, "B")      # midpoint is its own bar
    assert bar_set((1, 4), 8) == (5, 8)


def test_isotropic_enumeration_counts():
    # choose r bar-pairs then one element of each
    from math import comb

    for n in range(1, 5):
        for r in range(1, n + 1):
            assert len(isotropic_index_sets(r, n, "C")) == comb(n, r) * 2**r
            assert len(isotropic_index_sets(r, n, "B")) == comb(n, r) * 2**r


def test_symplectic_reduce_examples():
    assert symplectic_reduce((3, 7, 10), 3, 5) == ((2, 5, 7), (2, 4, 6))
    for n in (1, 2, 3):
        evens = tuple(range(2, 2 * n + 1, 2))
        reduced0, reduced2 = symplectic_reduce(evens, n, n)
        assert reduced2 == evens
        assert reduced0 == tuple(range(1, n + 1))
    with pytest.raises(IsotropyError):
        symplectic_reduce((1, 10), 2, 5)


def test_orthogonal_reduce_examples():
    assert orthogonal_reduce((1,), 1, 1) == ((1,), (1,))
    assert orthogonal_reduce((3,), 1, 1) == ((2,), (2,))
    with pytest.raises(IsotropyError):
        orthogonal_reduce((2,), 1, 1)


def test_diagonal_counts_from_worked_examples():
    assert diagonal_count((1, 2, 4, 6), 4, 4, "C") == 3
    assert diagonal_count((4, 6, 7, 8), 4, 4, "C") == 1
    for n in (2, 3):
        evens = tuple(range(2, 2 * n + 1, 2))
        boxes = isotropic_inversion_set(evens, n, n, "C")
        diag = sum(1 for i, j in boxes if i + j == n + 1)
        assert diagonal_count(evens, n, n, "C") == diag


def test_dim_space():
    assert dim_space("A", 3, 6) == 9
    for n in (1, 2, 3, 5):
        assert dim_space("C", n, n) == n * (n + 1) // 2
    assert dim_space("B", 1, 1) == 1
    assert dim_space("C", 1, 2) == 3
    with pytest.raises(ValueError):
        dim_space("A", 3, 3)
    with pytest.raises(ValueError):
        dim_space("C", 3, 2)


def _iso_by_weyl(idx, r, n, kind):
    """Independent route: inversion set via the Weyl-group comparison rule."""
    ambient = 2 * n if kind == "C" else 2 * n + 1
    middle = tuple(i for i in range(1, ambient + 1)
                   if i not in idx and (ambient + 1 - i) not in idx)
    w = tuple(idx) + middle + tuple(ambient + 1 - i for i in reversed(idx))
    boxes = set()
    for j in range(1, r + 1):
        for i in range(1, ambient - r + 1):
            jbar = ambient + 1 - j
            inside = (r + i <= jbar) if kind == "C" else (r + i < jbar)
            if inside and w[j - 1] < w[r + i - 1]:
                boxes.add((i, j))
    return frozenset(boxes)


def test_isotropic_inversion_matches_weyl_rule():
    for kind in ("B", "C"):
        for n in range(1, 6):
            for r in range(1, n + 1):
                for idx in isotropic_index_sets(r, n, kind):
                    assert isotropic_inversion_set(idx, r, n, kind) \
                        == _iso_by_weyl(idx, r, n, kind)


def test_isotropic_twostep_symmetric_under_tau():
    # the two-step diagram of (I, complement of bar I) is tau-symmetric
    for kind in ("B", "C"):
        for n in range(1, 6):
            ambient = 2 * n if kind == "C" else 2 * n + 1
            for r in range(1, n + 1):
                for idx in isotropic_index_sets(r, n, kind):
                    partner = complement(bar_set(idx, ambient), ambient)
                    if partner == idx:
                        boxes = grassmann_inversion_set(idx, r, ambient)
                    else:
                        boxes = twostep_inversion_set(idx, partner, ambient)
                    assert boxes == _tau(boxes, ambient - r)


def test_isotropic_dimension_decomposition():
    # the rectangle part of the diagram counts the reduced class I0 on the
    # ordinary Grassmannian; in type C the triangle part counts I2 on the
    # rank-2r isotropic Grassmannian
    for kind, reduce_map in (("C", symplectic_reduce),
                             ("B", orthogonal_reduce)):
        for n in range(1, 5):
            ambient = 2 * n if kind == "C" else 2 * n + 1
            for r in range(1, n + 1):
                rect_rows = 2 * (n - r) if kind == "C" else 2 * (n - r) + 1
                for idx in isotropic_index_sets(r, n, kind):
                    boxes = isotropic_inversion_set(idx, r, n, kind)
                    reduced0, reduced2 = reduce_map(idx, r, n)
                    rect = {b for b in boxes if b[0] <= rect_rows}
                    tri = boxes - rect
                    assert len(rect) == len(grassmann_inversion_set(
                        reduced0, r, ambient - r))
                    if kind == "C":
                        assert len(tri) == len(isotropic_inversion_set(
                            reduced2, r, r, kind))


def test_weyl_word_printer():
    assert weyl_word((3, 7, 10), 3, 5, "C") == (3, 7, 10, 2, 5, 6, 9, 1, 4, 8)
    assert weyl_word((1,), 1, 1, "B") == (1, 2, 3)


def test_renderers_smoke():
    text = render_grassmann((1, 4, 5, 7, 8, 10), 6, 10)
    assert text.count("#") == 10
    text = render_twostep((3, 7), (1, 3, 5, 6, 7, 8), 9)
    assert text.count("#") == 13
    text = render_isotropic((1, 2, 4, 6), 4, 4, "C")
    assert text.count("#") == len(isotropic_inversion_set((1, 2, 4, 6),
                                                          4, 4, "C"))
