from fractions import Fraction as F
from math import gcd

import pytest

from upsilonkit.plfun import pl_add, pl_constant, pl_equal, pl_eval
from upsilonkit.staircase import (
    LaurentPoly,
    alexander_oracle,
    alexander_torus,
    build_staircase,
    poly_divexact,
    semigroup_runs,
    staircase_steps,
    upsilon_staircase,
)


def coprime_pairs(qmax, pmin=2):
    return [(p, q) for p in range(pmin, qmax) for q in range(p + 1, qmax + 1)
            if gcd(p, q) == 1]


def semigroup_by_enumeration(p, q, bound):
    return sorted({a * p + b * q
                   for a in range(bound // p + 1)
                   for b in range(bound // q + 1)
                   if a * p + b * q <= bound})


class TestSemigroup:
    def test_t34(self):
        rs = semigroup_runs(3, 4)
        assert rs.runs == ((0, 0), (3, 4))
        assert rs.tail_start == 6

    def test_t23(self):
        rs = semigroup_runs(2, 3)
        assert rs.runs == ((0, 0),)
        assert rs.tail_start == 2

    def test_t79_prefix(self):
        rs = semigroup_runs(7, 9)
        assert rs.elements_upto(21) == [0, 7, 9, 14, 16, 18, 21]

    def test_unknot_conventions(self):
        assert semigroup_runs(1, 5) == semigroup_runs(1, 2)
        assert semigroup_runs(1, 5).tail_start == 0
        assert semigroup_runs(1, 5).runs == ()

    def test_against_enumeration(self):
        for p, q in coprime_pairs(12):
            rs = semigroup_runs(p, q)
            bound = rs.tail_start + 2 * p
            assert rs.elements_upto(bound) == semigroup_by_enumeration(p, q, bound)

    def test_run_gaps(self):
        for p, q in coprime_pairs(14):
            rs = semigroup_runs(p, q)
            assert rs.runs[0][0] == 0
            for (s, e), (s2, _) in zip(rs.runs, rs.runs[1:]):
                assert s <= e <= s2 - 2
            assert rs.runs[-1][1] <= rs.tail_start - 2
            assert rs.tail_start == (p - 1) * (q - 1)

    def test_bad_parameters(self):
        with pytest.raises(ValueError):
            semigroup_runs(4, 6)
        with pytest.raises(ValueError):
            semigroup_runs(4, 3)
        with pytest.raises(ValueError):
            semigroup_runs(0, 3)


class TestAlexander:
    def test_t34(self):
        assert alexander_torus(3, 4) == LaurentPoly(
            {0: 1, 1: -1, 3: 1, 5: -1, 6: 1})

    def test_t23(self):
        assert alexander_torus(2, 3) == LaurentPoly({0: 1, 1: -1, 2: 1})
        assert alexander_oracle(2, 3) == LaurentPoly({0: 1, 1: -1, 2: 1})

    def test_t25_oracle(self):
        assert alexander_oracle(2, 5) == LaurentPoly(
            {0: 1, 1: -1, 2: 1, 3: -1, 4: 1})

    def test_unknot(self):
        assert alexander_torus(1, 2) == LaurentPoly.one()
        assert alexander_oracle(1, 7) == LaurentPoly.one()

    def test_agreement_sweep(self):
        for p, q in coprime_pairs(16):
            assert alexander_torus(p, q) == alexander_oracle(p, q), (p, q)

    def test_coefficients_alternate(self):
        for p, q in coprime_pairs(14):
            terms = alexander_torus(p, q).sorted_terms()
            assert terms[0] == (0, 1)
            assert terms[-1][0] == (p - 1) * (q - 1)
            for i, (_, c) in enumerate(terms):
                assert c == (1 if i % 2 == 0 else -1)

    def test_divexact_rejects_inexact(self):
        with pytest.raises(ArithmeticError):
            poly_divexact(LaurentPoly({0: 1, 1: 1}), LaurentPoly({0: 1, 2: 1}))

    def test_poly_json_round_trip(self):
        poly = alexander_torus(3, 4)
        assert LaurentPoly.from_json(poly.to_json()) == poly
        assert poly.to_json()["terms"] == [
            {"exp": 0, "coef": 1}, {"exp": 1, "coef": -1}, {"exp": 3, "coef": 1},
            {"exp": 5, "coef": -1}, {"exp": 6, "coef": 1}]

    def test_repr(self):
        assert str(alexander_torus(3, 4)) == "1 - t + t^3 - t^5 + t^6"


class TestSteps:
    def test_t34(self):
        assert staircase_steps(3, 4) == [1, 2, 2, 1]

    def test_t23(self):
        assert staircase_steps(2, 3) == [1, 1]

    def test_t7_13_pattern(self):
        # family q = 2p-1: steps open [1, p-1, 1, p-2, 2, p-2, 2, p-3, 3, ...]
        assert staircase_steps(7, 13)[:11] == [1, 6, 1, 5, 2, 5, 2, 4, 3, 4, 3]

    def test_even_length_positive(self):
        for p, q in coprime_pairs(14):
            steps = staircase_steps(p, q)
            assert len(steps) % 2 == 0
            assert all(s > 0 for s in steps)

    def test_step_sums_equal_genus(self):
        for p, q in coprime_pairs(14):
            steps = staircase_steps(p, q)
            genus = (p - 1) * (q - 1) // 2
            assert sum(steps[0::2]) == genus
            assert sum(steps[1::2]) == genus


class TestStaircase:
    def test_t34_golden(self):
        st = build_staircase(3, 4)
        assert st.whites == ((0, 3), (1, 1), (3, 0))
        assert st.blacks == ((1, 3), (3, 1))
        assert st.genus == 3

    def test_t23(self):
        st = build_staircase(2, 3)
        assert st.whites == ((0, 1), (1, 0))
        assert st.blacks == ((1, 1),)
        assert st.genus == 1

    def test_t78_relative_prefix(self):
        st = build_staircase(7, 8)
        relative = [(a, alex - st.genus) for a, alex in st.whites]
        assert len(st.whites) == 7
        assert relative[:3] == [(0, 0), (1, -6), (3, -11)]

    def test_unknot(self):
        st = build_staircase(1, 9)
        assert st.whites == ((0, 0),)
        assert st.blacks == ()
        assert st.steps == ()
        assert st.genus == 0
        assert build_staircase(9, 1) == st

    def test_walk_and_normalization(self):
        for p, q in coprime_pairs(14):
            st = build_staircase(p, q)
            assert len(st.whites) == len(st.blacks) + 1
            assert min(a for a, _ in st.whites) == 0
            assert min(b for _, b in st.whites) == 0
            assert st.whites[0] == (0, st.genus)
            for i, (bx, by) in enumerate(st.blacks):
                wx, wy = st.whites[i]
                nx, ny = st.whites[i + 1]
                assert by == wy and bx == wx + st.steps[2 * i]
                assert nx == bx and ny == by - st.steps[2 * i + 1]

    def test_whites_count_matches_alexander(self):
        for p, q in coprime_pairs(14):
            positives = sum(1 for _, c in alexander_torus(p, q).sorted_terms()
                            if c > 0)
            assert len(build_staircase(p, q).whites) == positives
            assert len(build_staircase(p, q).whites) == \
                len(semigroup_runs(p, q).runs) + 1


class TestUpsilonStaircase:
    def test_t34(self):
        f = upsilon_staircase(3, 4)
        assert f.breakpoints == ((F(0), F(0)), (F(2, 3), F(-2)),
                                 (F(4, 3), F(-2)), (F(2), F(0)))

    def test_t23(self):
        f = upsilon_staircase(2, 3)
        assert f.breakpoints == ((F(0), F(0)), (F(1), F(-1)), (F(2), F(0)))

    def test_unknot_zero(self):
        assert pl_equal(upsilon_staircase(1, 4), pl_constant(0))

    def test_endpoints_and_symmetry(self):
        for p, q in coprime_pairs(12):
            f = upsilon_staircase(p, q)
            assert pl_eval(f, 0) == 0
            assert pl_eval(f, 2) == 0
            for t in (F(1, 5), F(1, 2), F(1), F(3, 2)):
                assert pl_eval(f, t) == pl_eval(f, 2 - t)

    def test_value_at_1_is_minus_genus_like(self):
        # upsilon(1) of T(p,q) is -2*min over whites of (alg+alex)/2
        st = build_staircase(5, 6)
        want = -min(a + b for a, b in st.whites)
        assert pl_eval(upsilon_staircase(5, 6), 1) == want

    def test_recursion_small(self):
        for p, q in coprime_pairs(12):
            lhs = upsilon_staircase(p, q)
            a, b = sorted((p, q - p))
            rhs = pl_add(upsilon_staircase(a, b), upsilon_staircase(p, p + 1))
            assert pl_equal(lhs, rhs), (p, q)
