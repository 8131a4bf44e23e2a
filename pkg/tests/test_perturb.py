import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import conj_closed_lists, residual
from niep.construct import cubic_replace, diag_merge, guo_guo_perturb, guo_perturb, p3_replace
from niep.errors import (DiagonalTooSmall, NoConjugatePair, PreconditionFailed,
                         SecondEntryNotReal, SpectrumMismatch)


def test_guo_examples():
    assert guo_perturb([3, 1, -1], 0).entries == (3, 1, -1)
    assert guo_perturb([1, 0], 1, +1).entries == (2, 1)
    assert guo_perturb([1, 0], 1, -1).entries == (2, -1)


def test_guo_rounds_off_replacement_list():
    _, mu = p3_replace(26, -12, 2, 0, 550, 1)
    start = list(mu) + [complex(-1, 14), complex(-1, -14)]
    assert residual(mu, [42.7876, 5.17729, -11.9818, -33.9831]) < 1e-3
    sigma = start
    for index, target in ((1, 5), (2, -12), (3, -34)):
        sigma = guo_perturb(sigma, sigma[index].real - target, -1, index=index)
    assert residual(sigma, [43, 5, -12, -34, complex(-1, 14), complex(-1, -14)]) < 1e-9
    assert sigma[4] == start[4] and sigma[5] == start[5]


def test_guo_errors():
    with pytest.raises(SecondEntryNotReal):
        guo_perturb([2, 1j, -1j], 1)
    with pytest.raises(PreconditionFailed):
        guo_perturb([2, 1], -1)
    with pytest.raises(PreconditionFailed):
        guo_perturb([2, 1], 1, index=0)


def test_guo_guo_examples():
    assert guo_guo_perturb([2, 1j, -1j], 0).entries == (2, 1j, -1j)
    assert guo_guo_perturb([2, 1j, -1j], 1, "decrease").entries == (4, -1 + 1j, -1 - 1j)
    assert guo_guo_perturb([2, 1j, -1j], 1, "increase").entries == (6, 1 + 1j, 1 - 1j)
    with pytest.raises(NoConjugatePair):
        guo_guo_perturb([2, 1, 0], 1)
    with pytest.raises(ValueError):
        guo_guo_perturb([2, 1j, -1j], 1, "sideways")


@given(conj_closed_lists(max_size=8), st.sampled_from([1, -1]))
def test_guo_zero_delta_and_untouched_tail(rest, sign):
    sigma = [20.0, 3.0] + rest
    assert guo_perturb(sigma, 0.0, sign).entries == tuple(complex(z) for z in sigma)
    out = guo_perturb(sigma, 1.5, sign)
    assert out.entries[2:] == tuple(complex(z) for z in rest)


@given(conj_closed_lists(max_size=6), st.sampled_from(["decrease", "increase"]))
def test_guo_guo_zero_delta_and_untouched_tail(rest, mode):
    sigma = [20.0, complex(1, 2), complex(1, -2)] + rest
    assert guo_guo_perturb(sigma, 0.0, mode).entries == tuple(complex(z) for z in sigma)
    assert guo_guo_perturb(sigma, 0.7, mode).entries[3:] == tuple(complex(z) for z in rest)


def test_cubic_examples():
    _, mu = cubic_replace(3, 1, 0.5, 0, 0)
    assert residual(mu, [3, 1, 0.5]) < 1e-12
    with pytest.raises(PreconditionFailed):
        cubic_replace(3, 1, 0, 1, 2)
    w, mu = cubic_replace(2, 0, 0, 1, 0)
    # x (x - 2) x - x = x (x^2 - 2x - 1)
    assert np.allclose(w.b, [2, 1, 0])
    assert residual(mu, [0, 1 + math.sqrt(2), 1 - math.sqrt(2)]) < 1e-12
    assert mu[0] == pytest.approx(1 + math.sqrt(2))


def test_diag_merge_examples():
    assert diag_merge([5], [[5]], [3, -1]).entries == (5, -1)
    assert residual(diag_merge([2, 0], [[1, 1], [1, 1]], [1, -1]), [2, 0, -1]) == 0
    with pytest.raises(DiagonalTooSmall):
        diag_merge([2, -2], [[0, 2], [2, 0]], [1, 1j, -1j])
    with pytest.raises(SpectrumMismatch):
        diag_merge([3, 0], [[1, 1], [1, 1]], [1, -1])
