"""Tests for exact scalars and the linear-algebra kernel."""
from fractions import Fraction

import pytest
import sympy

from rigiditylab.core.exceptions import NotReal, NotSymmetric, ParseError, SingularMatrix
from rigiditylab.linalg.matrix import (
    ExactMatrix,
    InertiaSignature,
    inertia,
    inverse,
    ldl_terms,
    nullspace_basis,
    rank,
    signature_matrix,
)
from rigiditylab.linalg.sampling import (
    cayley_orthogonal,
    cayley_transform,
    random_invertible,
    random_rational_vector,
)
from rigiditylab.linalg.scalars import (
    GaussianRational,
    I,
    rational_sqrt,
    scalar_from_json,
    scalar_to_json,
)


def _random_symmetric(seed, side, bound=5):
    flat = random_rational_vector(side * side, bound, seed)
    rows = [[flat[min(i, j) * side + max(i, j)] for j in range(side)] for i in range(side)]
    return ExactMatrix.from_rows(rows)


class TestScalars:
    """Tests for Fraction and GaussianRational scalars."""

    def test_i_squared(self):
        """Test i * i == -1 exactly."""
        assert I * I == -1

    def test_no_implicit_conjugation(self):
        """Test products of complex numbers do not conjugate."""
        z = GaussianRational(1, 2)
        assert z * z == GaussianRational(-3, 4)
        assert z * z.conjugate() == 5

    def test_json_form(self):
        """Test the p/q string form and the complex object form."""
        assert scalar_to_json(Fraction(-3, 6)) == "-1/2"
        assert scalar_to_json(Fraction(0)) == "0"
        assert scalar_to_json(GaussianRational(1, Fraction(2, 3))) == {"re": "1", "im": "2/3"}
        assert scalar_from_json("4/6") == Fraction(2, 3)
        assert scalar_from_json({"re": "0", "im": "1"}) == I

    def test_bad_literal(self):
        """Test an unparsable literal raises ParseError."""
        with pytest.raises(ParseError):
            scalar_from_json("one half")

    def test_rational_sqrt(self):
        """Test exact square roots of rational squares only."""
        assert rational_sqrt(Fraction(9, 4)) == Fraction(3, 2)
        assert rational_sqrt(Fraction(2)) is None
        assert rational_sqrt(Fraction(-1)) is None


class TestRank:
    """Tests for rank."""

    def test_identity(self):
        """Test 3x3 identity has rank 3."""
        assert rank(ExactMatrix.identity(3)) == 3

    def test_zero(self):
        """Test the 2x2 zero matrix has rank 0."""
        assert rank(ExactMatrix.zeros(2, 2)) == 0

    def test_proportional_rows(self):
        """Test [[1,2],[2,4]] has rank 1."""
        assert rank(ExactMatrix.from_rows([[1, 2], [2, 4]])) == 1

    def test_gaussian_entries(self):
        """Test rank over Q(i): (1, i) and (i, -1) are dependent."""
        m = ExactMatrix.from_rows([[1, I], [I, -1]])
        assert rank(m) == 1

    @pytest.mark.parametrize("seed", range(10))
    def test_agrees_with_sympy(self, seed):
        """Test rank matches sympy on random rational matrices with a forced dependency."""
        flat = random_rational_vector(12, 7, seed, denominator=3)
        rows = [list(flat[0:4]), list(flat[4:8]), list(flat[8:12])]
        rows.append([a + 2 * b for a, b in zip(rows[0], rows[1])])
        expected = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in r] for r in rows]).rank()
        assert rank(ExactMatrix.from_rows(rows)) == expected


class TestNullspace:
    """Tests for nullspace_basis."""

    def test_single_row(self):
        """Test [[1,1]] has the kernel spanned by (1,-1) up to scale."""
        basis = nullspace_basis(ExactMatrix.from_rows([[1, 1]]))
        assert len(basis) == 1
        x, y = basis[0]
        assert x == -y and x != 0

    def test_identity_has_trivial_kernel(self):
        """Test the 2x2 identity has an empty kernel basis."""
        assert nullspace_basis(ExactMatrix.identity(2)) == []

    def test_kernel_vectors_annihilated(self):
        """Test [[1,2,3]] has a 2-dimensional kernel annihilated by m."""
        m = ExactMatrix.from_rows([[1, 2, 3]])
        basis = nullspace_basis(m)
        assert len(basis) == 2
        for vec in basis:
            assert not any(m.apply(vec))
        assert rank(ExactMatrix.from_rows(basis)) == 2

    def test_count_is_cols_minus_rank(self):
        """Test the kernel dimension on a rank-2 3x4 matrix."""
        m = ExactMatrix.from_rows([[1, 0, 2, 1], [0, 1, 1, 1], [1, 1, 3, 2]])
        assert len(nullspace_basis(m)) == m.cols - rank(m) == 2


class TestInverse:
    """Tests for inverse."""

    def test_inverse(self):
        """Test m @ inverse(m) is the identity."""
        m = ExactMatrix.from_rows([[2, 1], [7, 4]])
        assert m @ inverse(m) == ExactMatrix.identity(2)

    def test_singular(self):
        """Test a singular matrix raises SingularMatrix."""
        with pytest.raises(SingularMatrix):
            inverse(ExactMatrix.from_rows([[1, 2], [2, 4]]))


class TestInertia:
    """Tests for inertia and the LDL^T terms."""

    def test_diagonal(self):
        """Test diag(2, -3) has one negative and one positive direction."""
        assert inertia(ExactMatrix.diagonal([2, -3])) == InertiaSignature(1, 1, 0)

    def test_zero_matrix(self):
        """Test the 3x3 zero matrix is all zero directions."""
        assert inertia(ExactMatrix.zeros(3, 3)) == InertiaSignature(0, 0, 3)

    def test_zero_diagonal_pivot(self):
        """Test [[0,1],[1,0]] needs a 2x2 pivot and has signature (1,1,0)."""
        assert inertia(ExactMatrix.from_rows([[0, 1], [1, 0]])) == InertiaSignature(1, 1, 0)

    @pytest.mark.parametrize("seed", range(5))
    def test_law_of_inertia(self, seed):
        """Test B^T diag(-1,1,0) B keeps signature (1,1,1) for invertible B."""
        b = random_invertible(3, 9, seed)
        m = b.T @ ExactMatrix.diagonal([-1, 1, 0]) @ b
        assert inertia(m).as_tuple() == (1, 1, 1)

    @pytest.mark.parametrize("seed", range(5))
    def test_terms_reassemble(self, seed):
        """Test sum d_j b_j b_j^T reproduces m and the term count is the rank."""
        m = _random_symmetric(seed, 4)
        terms = ldl_terms(m)
        total = ExactMatrix.zeros(4, 4)
        for d, b in terms:
            column = ExactMatrix.from_columns([b])
            total = total + (column @ column.T).scale(d)
        assert total == m
        assert len(terms) == rank(m) == inertia(m).rank

    def test_not_symmetric(self):
        """Test a non-symmetric matrix raises NotSymmetric."""
        with pytest.raises(NotSymmetric):
            inertia(ExactMatrix.from_rows([[1, 2], [3, 4]]))

    def test_not_real(self):
        """Test a complex symmetric matrix raises NotReal."""
        with pytest.raises(NotReal):
            inertia(ExactMatrix.from_rows([[I, 0], [0, 1]]))


class TestRandomGeneration:
    """Tests for seeded random vectors and Cayley matrices."""

    def test_deterministic(self):
        """Test the same seed gives the same vector."""
        assert random_rational_vector(2, 10, 42) == random_rational_vector(2, 10, 42)

    def test_range(self):
        """Test entries stay within the bound."""
        vec = random_rational_vector(3, 10**6, 1)
        assert len(vec) == 3
        assert all(abs(x) <= 10**6 for x in vec)

    def test_seeds_differ(self):
        """Test 100 seeds give 100 distinct vectors."""
        vectors = {random_rational_vector(3, 10**6, seed) for seed in range(100)}
        assert len(vectors) == 100

    def test_zero_skew_gives_identity(self):
        """Test the Cayley transform of A = 0 is the identity."""
        assert cayley_transform(ExactMatrix.zeros(2, 2)) == ExactMatrix.identity(2)

    @pytest.mark.parametrize("dim,s", [(2, 0), (2, 1), (3, 1), (3, 2), (4, 2)])
    def test_preserves_signature_form(self, dim, s):
        """Test O^T S O = S for both group components."""
        s_mat = signature_matrix(dim, s)
        for flip in (False, True):
            o = cayley_orthogonal(dim * 10 + s, dim, s, flip=flip)
            assert o.T @ s_mat @ o == s_mat

    @pytest.mark.parametrize("seed", range(20))
    def test_invertible_draws(self, seed):
        """Test small-bound draws still come back with full rank."""
        assert rank(random_invertible(2, 2, seed)) == 2

    def test_invertible_draws_are_capped(self, monkeypatch):
        """Test a run of singular draws ends in SingularMatrix instead of looping."""
        monkeypatch.setattr("rigiditylab.linalg.sampling.rank", lambda m: 0)
        with pytest.raises(SingularMatrix, match="16 draws"):
            random_invertible(2, 9, 0)
