import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from gsgkit.eigen import JACOBI_MAX_ORDER, eig_symmetric, jacobi_eigh
from gsgkit.errors import ContractError, SizeError


def symmetric(n, rng):
    m = rng.standard_normal((n, n))
    return (m + m.T) / 2


@settings(max_examples=60, deadline=None)
@given(arrays(np.float64, st.tuples(st.integers(1, 12), st.integers(1, 12)).map(
    lambda t: (t[0], t[0])), elements=st.floats(-10, 10)))
def test_jacobi_matches_lapack(m):
    a = (m + m.T) / 2
    vals, vecs, _ = jacobi_eigh(a)
    ref = np.sort(np.linalg.eigvalsh(a))[::-1]
    scale = max(1.0, np.abs(a).max())
    assert np.allclose(vals, ref, atol=1e-10 * scale * len(a))
    assert np.all(np.diff(vals) <= 0)
    # residual and orthonormality of the eigenvectors
    assert np.allclose(a @ vecs, vecs * vals, atol=1e-9 * scale * len(a))
    assert np.allclose(vecs.T @ vecs, np.eye(len(a)), atol=1e-9)


def test_jacobi_residuals_medium(rng):
    for n in (30, 80):
        a = symmetric(n, rng)
        vals, vecs, sweeps = jacobi_eigh(a)
        assert 0 < sweeps < 30
        assert np.abs(a @ vecs - vecs * vals).max() < 1e-9
        assert abs(vals.sum() - np.trace(a)) < 1e-9 * n


def test_values_only_and_diagonal():
    vals, vecs, sweeps = jacobi_eigh(np.diag([1.0, 3.0, 2.0]), with_vectors=False)
    assert vecs is None and sweeps == 0
    assert vals.tolist() == [3.0, 2.0, 1.0]


def test_dispatch(rng):
    small = symmetric(20, rng)
    assert np.allclose(eig_symmetric(small, "jacobi"), eig_symmetric(small, "lapack"))
    big = symmetric(JACOBI_MAX_ORDER + 5, rng)
    vals = eig_symmetric(big)
    assert np.all(np.diff(vals) <= 0)
    assert np.allclose(vals, np.sort(np.linalg.eigvalsh(big))[::-1])
    with pytest.raises(ValueError):
        eig_symmetric(small, "qr")


def test_contract_errors():
    with pytest.raises(ContractError, match=r"\(0, 1\)"):
        eig_symmetric(np.array([[0.0, 1.0], [0.5, 0.0]]))
    with pytest.raises(ContractError):
        eig_symmetric(np.zeros((2, 3)))
    with pytest.raises(ContractError):
        eig_symmetric(np.array([[np.nan]]))
    with pytest.raises(SizeError):
        eig_symmetric(np.zeros((5001, 5001), dtype=np.float32))
