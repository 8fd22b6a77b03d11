"""Unit tests for the exact linear algebra kernel."""

import pytest
from hypothesis import given, settings, strategies as st
from sympy import QQ, Symbol

from whakit import linalg
from whakit.errors import InputError
from whakit.linalg import Subspace


small_ints = st.integers(min_value=-4, max_value=4)


def square(size):
    return st.lists(st.lists(small_ints, min_size=size, max_size=size), min_size=size, max_size=size)


def to_matrix(rows):
    return linalg.matrix([[QQ(x) for x in r] for r in rows], QQ)


class TestConstruction:
    """Building sparse matrices and reading them back."""

    def test_from_rows_drops_zeros(self):
        m = linalg.from_rows({0: {0: QQ(1), 1: QQ(0)}, 1: {}}, (2, 2), QQ)
        assert m.rep == {0: {0: QQ(1)}}

    def test_column_and_entries(self):
        v = linalg.column([QQ(1), QQ(0), QQ(-2)], QQ)
        assert v.shape == (3, 1)
        assert linalg.entries(v) == [QQ(1), QQ(0), QQ(-2)]

    def test_unit_vector(self):
        v = linalg.unit_vector(4, 2, QQ)
        assert linalg.entries(v) == [0, 0, 1, 0]

    def test_linear_combination(self):
        a, b = linalg.unit_vector(2, 0, QQ), linalg.unit_vector(2, 1, QQ)
        v = linalg.linear_combination([QQ(3), QQ(-1)], [a, b])
        assert linalg.entries(v) == [QQ(3), QQ(-1)]

    def test_first_difference(self):
        a = to_matrix([[1, 2], [3, 4]])
        b = to_matrix([[1, 2], [3, 5]])
        assert linalg.first_difference(a, a) is None
        assert linalg.first_difference(a, b) == (1, 1)


class TestTensorLegs:
    """Row-major leg indexing, permutations and reshapes."""

    @pytest.mark.parametrize("dims,index,legs", [
        ([2, 3], 5, (1, 2)),
        ([2, 3], 0, (0, 0)),
        ([3, 2, 2], 7, (1, 1, 1)),
        ([4], 3, (3,)),
    ])
    def test_decode_encode(self, dims, index, legs):
        assert linalg.decode_index(index, dims) == legs
        assert linalg.encode_index(legs, dims) == index

    def test_kron_index_convention(self):
        a, b = linalg.unit_vector(2, 1, QQ), linalg.unit_vector(3, 2, QQ)
        assert linalg.entries(linalg.kron(a, b)) == [0, 0, 0, 0, 0, 1]

    def test_permute_legs_swaps(self):
        P = linalg.permute_legs([2, 3], [1, 0], QQ)
        v = linalg.kron(linalg.unit_vector(2, 1, QQ), linalg.unit_vector(3, 2, QQ))
        w = linalg.kron(linalg.unit_vector(3, 2, QQ), linalg.unit_vector(2, 1, QQ))
        assert linalg.equal(linalg.mul(P, v), w)

    def test_reshape_flatten_inverse(self):
        m = to_matrix([[1, 2, 3], [4, 5, 6]])
        assert linalg.equal(linalg.reshape(linalg.flatten(m), 2, 3), m)

    def test_reshape_rejects_wrong_length(self):
        with pytest.raises(InputError):
            linalg.reshape(linalg.column([QQ(1)] * 5, QQ), 2, 3)

    @settings(max_examples=25, deadline=None)
    @given(square(2), square(2), square(2), square(2))
    def test_kron_mixed_product(self, a, b, c, d):
        A, B, C, D = map(to_matrix, (a, b, c, d))
        lhs = linalg.mul(linalg.kron(A, B), linalg.kron(C, D))
        rhs = linalg.kron(linalg.mul(A, C), linalg.mul(B, D))
        assert linalg.equal(lhs, rhs)


class TestElimination:
    """rref, rank, kernels, solving and inverses."""

    @settings(max_examples=40, deadline=None)
    @given(square(3))
    def test_rref_idempotent(self, rows):
        reduced, r = linalg.rref(to_matrix(rows))
        again, r2 = linalg.rref(reduced)
        assert r == r2
        assert linalg.equal(reduced, again)

    @settings(max_examples=40, deadline=None)
    @given(square(3))
    def test_rank_nullity(self, rows):
        m = to_matrix(rows)
        assert linalg.rank(m) + linalg.kernel(m).dim == 3

    @settings(max_examples=40, deadline=None)
    @given(square(3))
    def test_kernel_vectors_are_annihilated(self, rows):
        m = to_matrix(rows)
        for v in linalg.kernel(m).vectors():
            assert linalg.is_zero(linalg.mul(m, v))

    @settings(max_examples=40, deadline=None)
    @given(square(3), st.lists(small_ints, min_size=3, max_size=3))
    def test_solve_consistent_system(self, rows, x):
        m = to_matrix(rows)
        rhs = linalg.mul(m, linalg.column([QQ(c) for c in x], QQ))
        solution = linalg.solve(m, rhs)
        assert solution.consistent
        assert linalg.equal(linalg.mul(m, solution.particular), rhs)

    def test_solve_inconsistent(self):
        m = to_matrix([[1, 1], [1, 1]])
        assert not linalg.solve(m, linalg.column([QQ(1), QQ(2)], QQ)).consistent

    def test_solve_rejects_bad_rhs(self):
        with pytest.raises(InputError):
            linalg.solve(to_matrix([[1, 0], [0, 1]]), linalg.column([QQ(1)] * 3, QQ))

    @settings(max_examples=40, deadline=None)
    @given(square(3))
    def test_inverse_when_invertible(self, rows):
        m = to_matrix(rows)
        inv = linalg.inverse(m)
        assert (inv is not None) == linalg.is_invertible(m)
        if inv is not None:
            assert linalg.equal(linalg.mul(m, inv), linalg.identity(3, QQ))
            assert linalg.equal(linalg.mul(inv, m), linalg.identity(3, QQ))

    def test_inverse_rejects_rectangular(self):
        with pytest.raises(InputError):
            linalg.inverse(linalg.zeros(2, 3, QQ))

    def test_power(self):
        m = to_matrix([[1, 1], [0, 1]])
        assert linalg.equal(linalg.power(m, 5), to_matrix([[1, 5], [0, 1]]))
        assert linalg.equal(linalg.power(m, 0), linalg.identity(2, QQ))


class TestSubspace:
    """Canonical subspaces compare by their reduced bases."""

    def test_span_is_canonical(self):
        a = linalg.column([QQ(1), QQ(1), QQ(0)], QQ)
        b = linalg.column([QQ(0), QQ(1), QQ(1)], QQ)
        c = linalg.column([QQ(1), QQ(2), QQ(1)], QQ)
        assert Subspace.span([a, b], 3, QQ) == Subspace.span([c, a], 3, QQ)
        assert Subspace.span([a, b, c], 3, QQ).dim == 2

    def test_coordinates(self):
        a = linalg.column([QQ(1), QQ(1), QQ(0)], QQ)
        space = Subspace.span([a], 3, QQ)
        assert space.contains(linalg.scale(a, QQ(3)))
        assert space.coordinates(linalg.unit_vector(3, 2, QQ)) is None

    def test_intersection_and_sum(self):
        e = [linalg.unit_vector(3, i, QQ) for i in range(3)]
        U = Subspace.span([e[0], e[1]], 3, QQ)
        V = Subspace.span([e[1], e[2]], 3, QQ)
        assert U.intersection(V) == Subspace.span([e[1]], 3, QQ)
        assert (U + V) == Subspace.full(3, QQ)

    def test_restrict_detects_leaving_target(self):
        e = [linalg.unit_vector(2, i, QQ) for i in range(2)]
        line = Subspace.span([e[0]], 2, QQ)
        swap = to_matrix([[0, 1], [1, 0]])
        assert linalg.restrict(swap, line, line) is None
        assert linalg.restrict(linalg.identity(2, QQ), line, line) is not None


class TestEnumeration:
    """Bounded searches and polynomials of matrices."""

    def test_bounded_vectors_start_with_all_ones(self):
        assert next(linalg.bounded_vectors(3, 2)) == (1, 1, 1)

    def test_bounded_vectors_count(self):
        assert len(list(linalg.bounded_vectors(2, 1))) == 3 ** 2 - 1

    def test_bounded_vectors_empty_length(self):
        assert list(linalg.bounded_vectors(0, 3)) == []

    def test_shell_values(self):
        assert linalg.shell_values(2) == [1, -1, 2, -2, 0]

    def test_minimal_polynomial_of_projection(self):
        x = Symbol("x")
        P = to_matrix([[1, 0], [0, 0]])
        poly = linalg.minimal_polynomial(P, x)
        assert poly.degree() == 2
        assert linalg.is_zero(linalg.evaluate_polynomial(poly, P))
