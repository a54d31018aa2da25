import itertools
import random

import pytest

from upsilonkit.f2 import (
    F2AffineSpace,
    F2Matrix,
    affine_intersects,
    parity,
    rank,
    reduce_vector,
    solve,
    span_basis,
    vector_from_bits,
    vector_to_bits,
)


def _random_matrix(rng, nrows, ncols):
    return F2Matrix([rng.getrandbits(ncols) for _ in range(nrows)], ncols)


def _rowspan_size(m: F2Matrix) -> int:
    """Rank oracle: enumerate the whole row span (fine up to 2^12)."""
    span = {0}
    for r in m.rows:
        span |= {v ^ r for v in span}
    return len(span)


class TestRank:
    def test_identity(self):
        assert rank(F2Matrix.identity(3)) == 3

    def test_zero(self):
        assert rank(F2Matrix.zero(4, 5)) == 0

    def test_repeated_row(self):
        assert rank(F2Matrix.from_dense([[1, 1], [1, 1]])) == 1

    def test_rank_equals_transpose_rank(self):
        rng = random.Random(23)
        for _ in range(40):
            m = _random_matrix(rng, rng.randint(1, 9), rng.randint(1, 9))
            assert rank(m) == rank(m.transpose())

    def test_rank_against_rowspan_enumeration(self):
        rng = random.Random(29)
        for _ in range(40):
            m = _random_matrix(rng, rng.randint(1, 10), rng.randint(1, 8))
            assert 2 ** rank(m) == _rowspan_size(m)


class TestSolve:
    def test_identity(self):
        v = vector_from_bits([1, 0, 1])
        assert solve(F2Matrix.identity(3), v) == v

    def test_zero_inconsistent(self):
        assert solve(F2Matrix.zero(2, 3), [1, 0]) is None

    def test_underdetermined_any_solution(self):
        x = solve(F2Matrix.from_dense([[1, 1]]), [1])
        assert x in (0b01, 0b10)

    def test_solution_is_exact(self):
        rng = random.Random(31)
        for _ in range(50):
            nrows, ncols = rng.randint(1, 10), rng.randint(1, 10)
            a = _random_matrix(rng, nrows, ncols)
            x0 = rng.getrandbits(ncols)
            b = a.apply(x0)
            x = solve(a, b)
            assert x is not None
            assert a.apply(x) == b

    def test_inconsistent_detected(self):
        rng = random.Random(37)
        found_none = 0
        for _ in range(50):
            nrows, ncols = rng.randint(2, 8), rng.randint(1, 6)
            a = _random_matrix(rng, nrows, ncols)
            b = rng.getrandbits(nrows)
            x = solve(a, b)
            if x is None:
                found_none += 1
                # b must genuinely lie outside the column space
                cols = span_basis(a.transpose().rows)
                assert reduce_vector(b, cols) != 0
            else:
                assert a.apply(x) == b
        assert found_none > 0

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            solve(F2Matrix.identity(3), [1, 0])


class TestMatrixOps:
    def test_transpose_involution(self):
        rng = random.Random(41)
        for _ in range(20):
            m = _random_matrix(rng, rng.randint(1, 7), rng.randint(1, 7))
            assert m.transpose().transpose() == m

    def test_matmul_against_dense(self):
        rng = random.Random(43)
        for _ in range(20):
            a = _random_matrix(rng, rng.randint(1, 6), rng.randint(1, 6))
            b = _random_matrix(rng, a.ncols, rng.randint(1, 6))
            prod = a.matmul(b).to_dense()
            ad, bd = a.to_dense(), b.to_dense()
            for i in range(a.nrows):
                for j in range(b.ncols):
                    want = sum(ad[i][k] * bd[k][j] for k in range(a.ncols)) % 2
                    assert prod[i][j] == want

    def test_matmul_dimension_mismatch(self):
        with pytest.raises(ValueError):
            F2Matrix.identity(3).matmul(F2Matrix.identity(4))

    def test_row_width_checked(self):
        with pytest.raises(ValueError):
            F2Matrix([0b1000], 3)

    def test_bit_round_trip(self):
        bits = [1, 0, 1, 1, 0]
        assert vector_to_bits(vector_from_bits(bits), 5) == bits

    def test_parity(self):
        assert parity(0b1011) == 1
        assert parity(0b1001) == 0


class TestAffine:
    def test_equal_spaces_intersect(self):
        u = F2AffineSpace(0b101, [0b110], 3)
        assert affine_intersects(u, u)

    def test_parallel_distinct_lines(self):
        # base e1 vs e2, both with direction e3: never meet
        u = F2AffineSpace(0b001, [0b100], 3)
        v = F2AffineSpace(0b010, [0b100], 3)
        assert not affine_intersects(u, v)

    def test_symmetric(self):
        rng = random.Random(47)
        for _ in range(50):
            dim = rng.randint(1, 8)
            u = F2AffineSpace(rng.getrandbits(dim),
                              [rng.getrandbits(dim) for _ in range(rng.randint(0, 3))],
                              dim)
            v = F2AffineSpace(rng.getrandbits(dim),
                              [rng.getrandbits(dim) for _ in range(rng.randint(0, 3))],
                              dim)
            assert affine_intersects(u, v) == affine_intersects(v, u)

    def test_against_enumeration(self):
        rng = random.Random(53)
        for _ in range(40):
            dim = rng.randint(1, 6)
            def make():
                return F2AffineSpace(
                    rng.getrandbits(dim),
                    [rng.getrandbits(dim) for _ in range(rng.randint(0, 2))],
                    dim)
            u, v = make(), make()

            def points(s):
                dirs = s.directions
                pts = set()
                for coeffs in itertools.product((0, 1), repeat=len(dirs)):
                    x = s.base
                    for c, d in zip(coeffs, dirs):
                        if c:
                            x ^= d
                    pts.add(x)
                return pts

            assert affine_intersects(u, v) == bool(points(u) & points(v))

    def test_contains(self):
        u = F2AffineSpace(0b001, [0b110], 3)
        assert u.contains(0b001)
        assert u.contains(0b111)
        assert not u.contains(0b000)

    def test_directions_are_reduced(self):
        u = F2AffineSpace(0, [0b11, 0b11, 0b01], 2)
        assert u.rank() == 2

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            affine_intersects(F2AffineSpace(0, [], 2), F2AffineSpace(0, [], 3))
