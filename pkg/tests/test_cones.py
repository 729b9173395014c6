import random
from fractions import Fraction
from itertools import permutations

import jsonschema
import pytest

from eigencone.cones import (
    Inequality,
    facets,
    facets_A,
    facets_B,
    facets_C,
    member,
    trace_equality,
    verify_irredundant,
)
from eigencone.schemas import load_schema
from eigencone.weights import dual


@pytest.fixture(scope="module")
def facet_lists(classifier):
    return {(g, r): facets(g, r, classifier)
            for g, r in [("A", 2), ("A", 3), ("A", 4),
                         ("B", 1), ("B", 2), ("C", 1), ("C", 2)]}


def test_facets_a2(facet_lists):
    fl = facet_lists[("A", 2)]
    assert len(fl) == 3
    triples = {f.triple for f in fl}
    assert triples == set(permutations(((1,), (2,), (2,)), 3)) | \
        {((1,), (2,), (2,)), ((2,), (1,), (2,)), ((2,), (2,), (1,))}
    assert all(f.root_index == 1 for f in fl)
    # ({1},{1},{1}) is not a candidate: codimension sum is off
    assert ((1,), (1,), (1,)) not in triples


def test_known_minimal_counts(facet_lists):
    # classical sizes of the minimal Horn lists
    assert len(facet_lists[("A", 3)]) == 12
    assert len(facet_lists[("A", 4)]) == 41
    # the r = 1 block of rank 3 comes from the projective plane
    assert sum(1 for f in facet_lists[("A", 3)] if f.root_index == 1) == 6


def test_facets_c1_is_triangle_cone(facet_lists):
    fl = facet_lists[("C", 1)]
    assert len(fl) == 3
    assert {f.coeffs for f in fl} == {
        ((1,), (-1,), (-1,)), ((-1,), (1,), (-1,)), ((-1,), (-1,), (1,))}


def test_facets_b1_matches_c1(facet_lists):
    assert {f.coeffs for f in facet_lists[("B", 1)]} \
        == {f.coeffs for f in facet_lists[("C", 1)]}


def test_c1_matches_a2_on_symmetric_spectra(facet_lists):
    # Sp(2) = SL(2): rank-1 symplectic membership agrees with rank-2
    # unitary membership of the symmetrized spectra
    rng = random.Random(5)
    fc1, fa2 = facet_lists[("C", 1)], facet_lists[("A", 2)]
    for _ in range(100):
        x, y, z = (Fraction(rng.randrange(0, 30), rng.randrange(1, 6))
                   for _ in range(3))
        in_c, _ = member("C", 1, (x,), (y,), (z,), fc1)
        in_a, _ = member("A", 2, (x, -x), (y, -y), (z, -z), fa2)
        assert in_c == in_a, (x, y, z)


def test_excluded_triple_c5():
    # the reduced triple of I = J = K = {3,7,10} has structure constant 2,
    # so it must fail the facet conditions
    from eigencone.classify import LrClassifier
    from eigencone.lr import LrClass
    from eigencone.schubert import symplectic_reduce

    cls = LrClassifier()
    reduced0, _ = symplectic_reduce((3, 7, 10), 3, 5)
    assert cls.classify_structure_constant(3, 7, reduced0, reduced0,
                                           reduced0) is LrClass.AT_LEAST_TWO


def test_permutation_closure(facet_lists):
    for fl in facet_lists.values():
        keyed = {(f.root_index, f.triple) for f in fl}
        for f in fl:
            for p in permutations(range(3)):
                tri = tuple(f.triple[i] for i in p)
                assert (f.root_index, tri) in keyed


def test_sorted_deterministic(facet_lists, classifier):
    for (g, r), fl in facet_lists.items():
        keys = [(f.root_index, f.triple) for f in fl]
        assert keys == sorted(keys)
        again = facets(g, r, classifier)
        assert [f.to_json() for f in again] == [f.to_json() for f in fl]


def test_facet_json_schema(facet_lists):
    schema = load_schema("facet_list")
    fl = facet_lists[("C", 2)]
    payload = {"group": "C", "rank": 2, "equality": None,
               "facets": [f.to_json() for f in fl], "verification": None}
    jsonschema.validate(payload, schema)


def test_render():
    ineq = Inequality("A", 2, 1, ((1,), (2,), (2,)),
                      ((1, 0), (0, 1), (0, 1)))
    assert ineq.render() == "ξ1 + ζ2 + η2 ≤ 0"
    ineq = Inequality("C", 1, 1, ((2,), (1,), (1,)),
                      ((-1,), (1,), (1,)))
    assert ineq.render() == "−ξ1 + ζ1 + η1 ≤ 0"


def test_trace_equality():
    assert trace_equality(2) == ((1, 1), (1, 1), (1, 1))


def test_member_trivial_cases(facet_lists):
    ok, _ = member("C", 2, (3, 1), (3, 1), (0, 0), facet_lists[("C", 2)])
    assert ok
    ok, why = member("A", 2, (1, 0), (1, 0), (0, 0), facet_lists[("A", 2)])
    assert not ok and why == "trace"
    ok, _ = member("A", 2, (1, 0), (1, 0), (-1, -1), facet_lists[("A", 2)])
    assert ok


def test_member_reports_first_violated(facet_lists):
    fl = facet_lists[("C", 1)]
    ok, why = member("C", 1, (5,), (1,), (1,), fl)
    assert not ok
    assert isinstance(why, Inequality)
    assert why is fl[0]


def test_member_scaling_invariance(facet_lists):
    rng = random.Random(11)
    fl = facet_lists[("C", 2)]
    for _ in range(50):
        xi, zeta, eta = (tuple(sorted((Fraction(rng.randrange(0, 12), 3)
                                       for _ in range(2)), reverse=True))
                         for _ in range(3))
        base, _ = member("C", 2, xi, zeta, eta, fl)
        c = Fraction(rng.randrange(1, 9), rng.randrange(1, 9))
        scaled, _ = member("C", 2, tuple(c * v for v in xi),
                           tuple(c * v for v in zeta),
                           tuple(c * v for v in eta), fl)
        assert scaled == base


def test_member_builds_default_facet_list():
    ok, _ = member("C", 1, (1,), (1,), (1,))
    assert ok
    ok, why = member("C", 1, (5,), (1,), (1,))
    assert not ok and isinstance(why, Inequality)


def test_member_validates_chamber():
    with pytest.raises(ValueError):
        member("C", 2, (0, 1), (1, 0), (1, 0), [])
    with pytest.raises(ValueError):
        member("B", 2, (1, -1), (1, 0), (1, 0), [])
    with pytest.raises(ValueError):
        member("A", 2, (1, 0, 0), (1, 0), (1, 0), [])


def test_rank_five_horn_count(classifier):
    # 3, 12, 41, 142: the classical sizes of the minimal Horn systems
    assert len(facets_A(5, classifier)) == 142


def test_rank_six_tables_match_oracle(classifier):
    # every structure-constant table behind facets_A(6) agrees with the
    # capped tableau count over the full index range
    from eigencone.lr import c_ijk
    from eigencone.weights import index_sets

    sizes = {}
    for r in range(1, 6):
        table = set(classifier.one_triples(r, 6))
        subsets = list(index_sets(r, 6))
        oracle = {(i, j, k)
                  for i in subsets for j in subsets for k in subsets
                  if c_ijk(r, 6, i, j, k, cap=2) == 1}
        assert table == oracle
        sizes[r] = len(table)
    assert sizes == {1: 21, 2: 126, 3: 227, 4: 126, 5: 21}


def test_b2_matches_c2_through_exceptional_isomorphism(facet_lists):
    # Spin(5) and Sp(4) are the same compact group; the Cartan
    # identification (x1, x2) -> (x1 + x2, x1 - x2) swaps long and short
    # roots, so membership must transport along it
    fb2, fc2 = facet_lists[("B", 2)], facet_lists[("C", 2)]
    rng = random.Random(17)
    inside = 0
    for _ in range(200):
        specs = [tuple(sorted((Fraction(rng.randrange(0, 25),
                                        rng.randrange(1, 5))
                               for _ in range(2)), reverse=True))
                 for _ in range(3)]
        in_b, _ = member("B", 2, *specs, fb2)
        folded = [(s[0] + s[1], s[0] - s[1]) for s in specs]
        in_c, _ = member("C", 2, *folded, fc2)
        assert in_b == in_c, specs
        inside += in_b
    assert 0 < inside < 200


def test_c3_matches_a6_on_symmetric_spectra(classifier):
    fc3 = facets_C(3, classifier)
    fa6 = facets_A(6, classifier)
    rng = random.Random(13)
    inside = 0
    for _ in range(100):
        specs = [tuple(sorted((Fraction(rng.randrange(0, 25),
                                        rng.randrange(1, 5))
                               for _ in range(3)), reverse=True))
                 for _ in range(3)]
        in_c, _ = member("C", 3, *specs, fc3)
        sym = [s + tuple(-v for v in reversed(s)) for s in specs]
        in_a, _ = member("A", 6, *sym, fa6)
        assert in_c == in_a, specs
        inside += in_c
    assert 0 < inside < 100


def test_rank_four_isotropic_counts(classifier):
    # regression pins; generation stays fast at this size
    assert len(facets_C(4, classifier)) == 474
    assert len(facets_B(4, classifier)) == 474


def test_rank_three_isotropic_cones(classifier):
    # the two rank-3 lists have the size reported in the eigencone
    # literature, and (xi, xi, 0) satisfies every inequality
    rng = random.Random(2)
    for build, group in ((facets_C, "C"), (facets_B, "B")):
        fl = build(3, classifier)
        assert len(fl) == 93
        for _ in range(20):
            xi = tuple(sorted((Fraction(rng.randrange(0, 20),
                                        rng.randrange(1, 4))
                               for _ in range(3)), reverse=True))
            ok, why = member(group, 3, xi, xi, (0, 0, 0), fl)
            assert ok, (group, xi, why)


def test_type_a_dual_pairs_inside(facet_lists):
    rng = random.Random(3)
    fl = facet_lists[("A", 3)]
    for _ in range(25):
        xi = tuple(sorted((Fraction(rng.randrange(-12, 12), 4)
                           for _ in range(3)), reverse=True))
        ok, _ = member("A", 3, xi, dual(xi), (0, 0, 0), fl)
        assert ok


def test_verify_irredundant_small(facet_lists):
    for key in [("A", 2), ("A", 3), ("C", 1), ("B", 1)]:
        fl = facet_lists[key]
        report = verify_irredundant(fl, *key)
        assert report.all_facets
        assert len(report.checks) == len(fl)
        for check in report.checks:
            assert check.margin > 0
            assert check.witness is not None
            # the witness point is tight on its facet, slack on the others
            xi, zeta, eta = check.witness
            assert check.inequality.evaluate(xi, zeta, eta) == 0
            for other in fl:
                if other is not check.inequality:
                    assert other.evaluate(xi, zeta, eta) < 0


def test_verify_flags_redundant_inequality():
    # the sum of two facets is implied by them and tight only on a
    # codimension-two set, so it must be flagged
    fl = list(facets_A(2))
    weak = Inequality("A", 2, 1, ((1,), (2,), (2,)),
                      ((1, 1), (1, 1), (0, 2)))
    report = verify_irredundant(fl + [weak], "A", 2)
    assert not report.all_facets
    flagged = [c for c in report.checks if not c.is_facet]
    assert [c.inequality for c in flagged] == [weak]


def test_group_validation():
    with pytest.raises(ValueError):
        facets("D", 2)
    with pytest.raises(ValueError):
        facets_A(1)
    with pytest.raises(ValueError):
        facets_B(0)
    with pytest.raises(ValueError):
        facets_C(0)
