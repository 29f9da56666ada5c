import numpy as np
import pytest

from qstep import SingularMatrix
from qstep.linsolve import checked_solve, condition_number, gauss_solve


@pytest.mark.parametrize("n", [1, 2, 4, 6])
def test_matches_lapack(n):
    rng = np.random.default_rng(n)
    for _ in range(50):
        A = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
        b = rng.normal(size=n) + 1j * rng.normal(size=n)
        x = np.array(gauss_solve(A.tolist(), b.tolist()))
        assert np.allclose(x, np.linalg.solve(A, b), rtol=1e-10, atol=1e-12)


def test_needs_pivoting():
    A = [[0, 1], [1, 0]]
    assert gauss_solve(A, [2, 3]) == [3, 2]


def test_small_leading_entry_is_stable():
    A = [[1e-20, 1], [1, 1]]
    x = gauss_solve(A, [1, 2])
    assert x == pytest.approx([1, 1])


def test_singular():
    with pytest.raises(SingularMatrix):
        gauss_solve([[1, 2], [2, 4]], [1, 1])
    with pytest.raises(SingularMatrix):
        checked_solve([[1, 1], [1, 1 + 1e-15]], [1, 1])


def test_condition_number():
    assert condition_number(np.eye(3)) == pytest.approx(1.0)
    assert condition_number([[1, 0], [0, 1e-6]]) == pytest.approx(1e6)
