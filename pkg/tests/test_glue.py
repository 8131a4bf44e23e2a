import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import cyclic_draw, p2_companion_draw, residual, tail_after
from niep import complex_eigvec_pair, eigenvalues, normalize_perron, with_real_eigvec
from niep.construct import glue, p2_companion_replace, p3_replace, p3_small_matrix, remove_values
from niep.construct.glue import cone_K_p2, cone_L_p2
from niep.errors import ConeViolation, HRecoveryFailed, HypothesisViolated, PreconditionFailed
from niep.matrix import EigStructure
from niep.verify import certify

CYCLIC3 = np.roll(np.eye(3), 1, axis=1)
ALPHA, BETA = -0.5, math.sqrt(3) / 2


def test_glue_p3_cyclic():
    es = complex_eigvec_pair(normalize_perron(CYCLIC3), ALPHA, BETA)
    N = glue(es, p=3, a=0, t=1)
    assert N.shape == (4, 4) and N.min() >= 0
    _, mu = p3_replace(1, ALPHA, BETA, 0, 1, 1)
    assert certify(N, mu).passed


def test_glue_p2_swap_matrix():
    es = with_real_eigvec(normalize_perron([[0, 1], [1, 0]]), -1)
    res = p2_companion_replace(1, -1, 0, [0.3])
    N = glue(es, res.matrix, p=2)
    assert N.min() >= 0
    assert residual(eigenvalues(N), eigenvalues(res.matrix)) < 1e-10


def test_glue_p1():
    es = normalize_perron([[0, 2], [2, 0]])
    M = np.array([[1.0, 3.0], [0.5, 2.0]])
    N = glue(es, M, p=1)
    want = list(np.linalg.eigvals(M)) + [-2]
    assert certify(N, want).passed
    with pytest.raises(HypothesisViolated):
        glue(es, np.array([[1.0, 3.0], [0.5, 1.0]]), p=1)


def test_cone_membership_p2():
    # z = (1, -1)
    assert cone_K_p2(1, 0.5, 1, -1) and not cone_K_p2(1, 1.5, 1, -1)
    assert cone_L_p2(1, 0.5, 1, -1) and not cone_L_p2(1, -1.5, 1, -1)
    # z_min = 0 branch
    assert cone_L_p2(1, -1, 1, 0) and not cone_L_p2(-1, 2, 1, 0)


def test_glue_p2_k_outside_cone():
    es = with_real_eigvec(normalize_perron([[0, 1], [1, 0]]), -1)
    # one leading block row/column; K = K' X with X = [[1, 1], [rho - g, lam2 - g]], g = 0, rho = 1, lam2 = -1
    M = np.zeros((3, 3))
    M[1:, 1:] = [[0.0, 1.0], [1.0, 0.0]]
    # K' = (f, g) = (0, 1) gives K = (1, -1): k2 = -1 >= z_min k1 = -1 holds; push past it
    M[0, 1:] = [-0.5, 1.0]
    with pytest.raises(ConeViolation) as err:
        glue(es, M, p=2)
    assert err.value.tag == "K"


def test_glue_p2_l_outside_cone():
    es = with_real_eigvec(normalize_perron([[0, 1], [1, 0]]), -1)
    M = np.zeros((3, 3))
    M[1:, 1:] = [[0.0, 1.0], [1.0, 0.0]]
    M[1:, 0] = [-1.0, 0.0]
    with pytest.raises(ConeViolation) as err:
        glue(es, M, p=2)
    assert err.value.tag == "L"


def test_glue_p3_rejects_general_k_rows():
    es = complex_eigvec_pair(normalize_perron(CYCLIC3), ALPHA, BETA)
    M = p3_small_matrix(es, 0, 1)
    M[0, 2] += 0.1
    with pytest.raises(HRecoveryFailed):
        glue(es, M, p=3)


def test_glue_argument_errors():
    es = normalize_perron(CYCLIC3)
    with pytest.raises(PreconditionFailed):
        glue(es, p=2)
    with pytest.raises(PreconditionFailed):
        glue(es, np.eye(2), p=2)
    with pytest.raises(PreconditionFailed):
        glue(complex_eigvec_pair(es, ALPHA, BETA), p=3, t=-1)
    with pytest.raises(ValueError):
        glue(es, np.eye(5), p=4)


def test_remove_values():
    assert residual(remove_values([1, 2, 3], [2]), [1, 3]) == 0
    with pytest.raises(ValueError):
        remove_values([1, 2], [5])


def rngs():
    return st.integers(0, 2**32 - 1).map(np.random.default_rng)


@given(rngs())
def test_glue_p3_property(rng):
    B, alpha, beta, a, t = cyclic_draw(rng)
    es = complex_eigvec_pair(normalize_perron(B), alpha, beta)
    N = glue(es, p=3, a=a, t=t)
    _, mu = p3_replace(es.rho, alpha, beta, a, t, es.eta)
    rest = tail_after(np.linalg.eigvals(B), [es.rho, complex(alpha, beta), complex(alpha, -beta)])
    cert = certify(N, list(mu) + rest)
    assert cert.min_entry >= -1e-10 and cert.spectral_residual < 1e-8


@given(rngs())
def test_glue_p2_property(rng):
    d = None
    while d is None:
        d = p2_companion_draw(rng)
    rho, lam2, b1, tail, B = d
    res = p2_companion_replace(rho, lam2, b1, tail)
    es = with_real_eigvec(normalize_perron(B), lam2)
    N = glue(es, res.matrix, p=2)
    cert = certify(N, list(res.mu) + tail_after(np.linalg.eigvals(B), [rho, lam2]))
    assert cert.min_entry >= -1e-10 and cert.spectral_residual < 1e-8


def test_eigstructure_order():
    es = EigStructure(B=np.eye(3), rho=1.0)
    assert es.m == 3
