"""Exact linear algebra: spec examples plus algebraic law properties."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from comodcat.errors import InputError, NoFactorization, NotInvertible
from comodcat.exact import (GF, QQ, DenseMap, column_space_canonical, compose,
                            kernel_basis, kronecker, solve_factor,
                            two_sided_inverse)

F5 = GF(5)
FIELDS = [QQ, F5]


def m(rows, field=QQ):
    return DenseMap.from_rows(rows, field)


SWAP = m([[0, 1], [1, 0]])
I2 = DenseMap.identity(2, QQ)


class TestCompose:
    def test_identity_law(self):
        f = m([[1, 2], [3, 4]])
        assert compose(I2, f) == f
        assert compose(f, I2) == f

    def test_swap_is_involution(self):
        assert compose(SWAP, SWAP) == I2

    def test_hand_multiplication(self):
        # [[1,1]] . [[1],[1]] = [[2]] by direct expansion
        assert compose(m([[1, 1]]), m([[1], [1]])) == m([[2]])

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            compose(m([[1, 1]]), m([[1, 1]]))

    def test_field_mismatch(self):
        with pytest.raises(ValueError):
            compose(DenseMap.identity(2, QQ), DenseMap.identity(2, F5))


class TestKronecker:
    def test_identities(self):
        assert kronecker(I2, DenseMap.identity(3, QQ)) == DenseMap.identity(6, QQ)

    def test_scalars(self):
        assert kronecker(m([[2]]), m([[3]])) == m([[6]])

    def test_index_convention(self):
        # enumerate all entries of swap ⊗ I2 by (i,j) -> i*2+j
        got = kronecker(SWAP, I2)
        expected = [[0] * 4 for _ in range(4)]
        for i1 in range(2):
            for j1 in range(2):
                for i2 in range(2):
                    for j2 in range(2):
                        v = (1 if (i1, j1) in ((0, 1), (1, 0)) else 0) * (i2 == j2)
                        expected[i1 * 2 + i2][j1 * 2 + j2] = v
        assert got == m(expected)
        for row in range(4):
            ones = [c for c in range(4) if got.entry(row, c) != 0]
            assert len(ones) == 1


class TestKernelBasis:
    def test_injective(self):
        k = kernel_basis(I2)
        assert (k.rows, k.cols) == (2, 0)

    def test_zero_map(self):
        assert kernel_basis(DenseMap.zeros(2, 2, QQ)) == I2

    def test_rank_one(self):
        f = m([[1, 1], [1, 1]])
        k = kernel_basis(f)
        assert k == m([[1], [-1]])
        assert compose(f, k).is_zero()

    @pytest.mark.parametrize("field", FIELDS)
    def test_canonical_form_idempotent(self, field):
        f = DenseMap.from_rows([[1, 2, 3], [2, 4, 6]], field)
        k = kernel_basis(f)
        assert column_space_canonical(k) == k


class TestSolveFactor:
    def test_identity_mono(self):
        g = m([[1, 2], [3, 4]])
        assert solve_factor(I2, g) == g

    def test_collinear(self):
        h = solve_factor(m([[1], [1]]), m([[2], [2]]))
        assert h == m([[2]])
        assert compose(m([[1], [1]]), h) == m([[2], [2]])

    def test_outside_image(self):
        with pytest.raises(NoFactorization):
            solve_factor(m([[1], [0]]), m([[0], [1]]))

    def test_rank_violation(self):
        with pytest.raises(ValueError):
            solve_factor(m([[1, 1], [1, 1]]), m([[1, 0], [1, 0]]))


class TestInverse:
    def test_identity(self):
        i3 = DenseMap.identity(3, QQ)
        assert two_sided_inverse(i3) == i3

    def test_involution(self):
        assert two_sided_inverse(SWAP) == SWAP

    def test_unipotent(self):
        assert two_sided_inverse(m([[1, 1], [0, 1]])) == m([[1, -1], [0, 1]])

    def test_singular(self):
        with pytest.raises(NotInvertible):
            two_sided_inverse(m([[1, 1], [1, 1]]))


def entries(field):
    if field is QQ:
        return st.integers(-4, 4).map(field.coerce)
    return st.integers(0, 4).map(field.coerce)


def matrices(rows, cols, field):
    return st.lists(st.lists(entries(field), min_size=cols, max_size=cols),
                    min_size=rows, max_size=rows).map(
        lambda rs: DenseMap.from_rows(rs, field))


@pytest.mark.parametrize("field", FIELDS)
class TestLaws:
    @given(data=st.data())
    def test_compose_associative(self, field, data):
        f = data.draw(matrices(2, 3, field))
        g = data.draw(matrices(3, 2, field))
        h = data.draw(matrices(2, 3, field))
        assert compose(h, compose(g, f)) == compose(compose(h, g), f)

    @given(data=st.data())
    def test_kronecker_functorial(self, field, data):
        f = data.draw(matrices(2, 2, field))
        g = data.draw(matrices(2, 2, field))
        f2 = data.draw(matrices(2, 2, field))
        g2 = data.draw(matrices(2, 2, field))
        lhs = kronecker(compose(g, f), compose(g2, f2))
        rhs = compose(kronecker(g, g2), kronecker(f, f2))
        assert lhs == rhs

    @given(data=st.data())
    def test_kernel_annihilates(self, field, data):
        f = data.draw(matrices(2, 3, field))
        assert compose(f, kernel_basis(f)).is_zero()

    @given(data=st.data())
    def test_solve_factor_unique(self, field, data):
        mono = DenseMap.from_rows([[1, 0], [2, 1], [0, 3]], field)
        h = data.draw(matrices(2, 2, field))
        assert solve_factor(mono, compose(mono, h)) == h


class TestScalars:
    def test_rational_parse(self):
        assert QQ.parse("3/6") == Fraction(1, 2)
        assert QQ.parse("-7") == Fraction(-7)

    def test_float_rejected(self):
        for bad in ("1.5", "1e3", float(1.5)):
            with pytest.raises(InputError):
                QQ.parse(bad) if isinstance(bad, str) else QQ.coerce(bad)

    def test_prime_field(self):
        assert F5.parse("1/2") == 3
        assert F5.mul(3, 2) == 1
        with pytest.raises(InputError):
            GF(6)

    def test_prime_field_inverses(self):
        p = GF(2**31 - 1)
        assert p.mul(p.inv(12345), 12345) == 1
