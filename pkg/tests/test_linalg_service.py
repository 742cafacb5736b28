import numpy as np
import pytest

from app.core.config import settings
from app.services.linalg_service import MAX_PRIME, PrimeField, is_prime, prime_field


def test_is_prime_small_values():
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]


def test_field_rejects_composite_and_large_moduli():
    with pytest.raises(ValueError):
        PrimeField(15)
    with pytest.raises(ValueError):
        PrimeField(65537)  # prime, but not below MAX_PRIME
    assert 65537 > MAX_PRIME


def test_rref_is_canonical():
    F = prime_field(7)
    m = F.matrix([[2, 4, 1], [1, 2, 3]])
    R, pivots = F.rref(m)
    assert pivots == [0, 2]
    assert R.tolist() == [[1, 2, 0], [0, 0, 1]]


def test_kernel_and_solve_on_small_matrix():
    F = prime_field(5)
    m = F.matrix([[1, 2, 3], [2, 4, 1]])
    K = F.kernel_basis(m)
    assert K.shape == (3, 2)
    assert not F.mul(m, K).any()
    b = F.matrix([[1], [2]])
    x = F.solve(m, b)
    assert np.array_equal(F.mul(m, x), b)
    assert F.solve(F.matrix([[1, 1], [1, 1]]), F.matrix([[0], [1]])) is None


def test_zero_size_shapes():
    F = prime_field(3)
    assert F.rank(F.zeros(0, 4)) == 0
    assert F.kernel_basis(F.zeros(0, 3)).shape == (3, 3)
    assert F.image_basis(F.zeros(2, 0)).shape == (2, 0)
    assert F.mul(F.zeros(2, 0), F.zeros(0, 3)).shape == (2, 3)


def test_inverse_and_singular():
    F = prime_field(11)
    m = F.matrix([[2, 1], [1, 1]])
    inv = F.inverse(m)
    assert np.array_equal(F.mul(m, inv), F.identity(2))
    assert F.inverse(F.matrix([[1, 2], [2, 4]])) is None


def test_roots_over_small_field():
    F = prime_field(7)
    # x^2 - 1
    assert F.roots([6, 0, 1]) == [1, 6]
    # x^2 + 1 has no root mod 7
    assert F.roots([1, 0, 1]) == []


def test_cokernel_projection_kills_image():
    F = prime_field(13)
    m = F.matrix([[1, 0], [0, 0], [3, 0]])
    q = F.cokernel_projection(m)
    assert q.shape == (2, 3)
    assert not F.mul(q, m).any()
    assert F.rank(q) == 2


@pytest.mark.corpus
@pytest.mark.parametrize("p", [2, 101])
def test_random_matrices_satisfy_rank_nullity_and_solve(p):
    F = prime_field(p)
    rng = np.random.default_rng(settings.SEED)
    for _ in range(settings.RANDOM_MATRIX_SAMPLES):
        rows, cols = (int(k) for k in rng.integers(1, 7, size=2))
        m = F.random_matrix(rng, rows, cols)
        K = F.kernel_basis(m)
        assert F.rank(m) + K.shape[1] == cols
        assert not F.mul(m, K).any()
        x0 = F.random_matrix(rng, cols, 1)
        b = F.mul(m, x0)
        x = F.solve(m, b)
        assert x is not None
        assert np.array_equal(F.mul(m, x), b)


def test_rank_and_kernel_over_two_elements():
    F = prime_field(2)
    m = F.matrix([[1, 1], [1, 1]])
    assert F.rank(m) == 1
    assert F.kernel_basis(m).tolist() == [[1], [1]]
    assert F.cokernel_projection(F.matrix([[1], [0]])).tolist() == [[0, 1]]
    assert F.solve(F.matrix([[1, 0], [0, 0]]), F.matrix([[1], [0]])).tolist() == [[1], [0]]
