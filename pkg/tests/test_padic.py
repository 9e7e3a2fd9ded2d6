import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import int_quats
from quatlattice.errors import NotOddPrime
from quatlattice.padic import (det_mod, embed_pair, is_scalar_mod, matmul_mod, psi_matrix_mod_pk,
                               solve_cd)
from quatlattice.quat import imul, inorm

PRIMES = [3, 5, 7, 13, 17]


def test_reference_solutions():
    assert (solve_cd(5, 1).c, solve_cd(5, 1).d) == (2, 0)
    assert (solve_cd(3, 1).c, solve_cd(3, 1).d) == (1, 1)
    params = solve_cd(5, 3)
    assert params.d == 0 and (params.c ** 2 + 1) % 125 == 0


@pytest.mark.parametrize("p", PRIMES)
@pytest.mark.parametrize("k", range(1, 7))
def test_residual(p, k):
    params = solve_cd(p, k)
    assert params.residual() == 0
    assert 0 <= params.c < p ** k and 0 <= params.d < p ** k
    if p % 4 == 1:
        assert params.d == 0
    # the lift refines the lower precision solution
    low = solve_cd(p, 1)
    assert (params.c - low.c) % p == 0 and (params.d - low.d) % p == 0


def test_bad_inputs():
    with pytest.raises(NotOddPrime):
        solve_cd(9, 2)
    with pytest.raises(ValueError):
        solve_cd(5, 0)


@pytest.mark.parametrize("p", PRIMES)
def test_identity(p):
    assert psi_matrix_mod_pk((1, 0, 0, 0), solve_cd(p, 4)) == ((1, 0), (0, 1))


@given(st.sampled_from(PRIMES), st.integers(1, 6), int_quats, int_quats)
def test_determinant_and_homomorphism(p, k, x, y):
    params = solve_cd(p, k)
    m = params.modulus
    mx, my = psi_matrix_mod_pk(x, params), psi_matrix_mod_pk(y, params)
    assert det_mod(mx, m) == inorm(x) % m
    assert psi_matrix_mod_pk(imul(x, y), params) == matmul_mod(mx, my, m)


@given(st.sampled_from(PRIMES), st.integers(1, 6), st.integers(-100, 100))
def test_central_maps_to_scalar(p, k, t):
    params = solve_cd(p, k)
    assert is_scalar_mod(psi_matrix_mod_pk((t, 0, 0, 0), params), params.modulus)


def test_embed_pair():
    mp, ml = embed_pair((1, 2, 0, 0), 3, 5, 2)
    assert det_mod(mp, 9) == 5 and det_mod(ml, 25) == 5
