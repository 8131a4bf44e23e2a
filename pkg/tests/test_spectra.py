import itertools
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import conj_closed_lists
from niep import Spectrum, check_necessary, is_conjugate_closed, perron_of, power_sum, shift
from niep.errors import NoPerron, NotClosed
from niep.spectra import jll_gap, perron_first

SIGMA0 = [26, complex(-12, 2), complex(-12, -2), complex(-1, 14), complex(-1, -14)]


@pytest.mark.parametrize("sigma, expected", [
    ([1, 1j, -1j], True),
    ([1, 1j], False),
    ([8, 2], True),
])
def test_conjugate_closure(sigma, expected):
    assert is_conjugate_closed(sigma, 1e-9) is expected


def test_conjugate_closure_rejects_negative_tol():
    with pytest.raises(ValueError):
        is_conjugate_closed([1], -1.0)


def test_perron_examples():
    assert perron_of([9, 1, 2j, -2j]) == 9
    assert perron_of([1, -1]) == 1
    with pytest.raises(NoPerron):
        perron_of([1, 2j, -2j])


def test_perron_tie_takes_first_nonnegative_real():
    assert perron_first([-3, 3, 3j, -3j]).entries[0] == 3


def test_power_sums_of_sigma0():
    assert power_sum(SIGMA0, 1) == pytest.approx(0, abs=1e-12)
    assert power_sum(SIGMA0, 2) == pytest.approx(566, abs=1e-9)


def test_power_sum_small_cases():
    assert power_sum([1, -1], 7) == 0
    assert power_sum([1, 1j, -1j], 2) == pytest.approx(-1)
    with pytest.raises(NotClosed):
        power_sum([1, 1j], 1)


def test_check_necessary_sigma0():
    rep = check_necessary(SIGMA0, 4)
    assert rep.all_ok
    # s1^2 = 0 <= 5 * 566
    assert power_sum(SIGMA0, 1) ** 2 <= 5 * power_sum(SIGMA0, 2)


def test_check_necessary_failures_have_witnesses():
    rep = check_necessary([1, 1j], 3)
    assert not rep.closed and "closed" in rep.details
    rep = check_necessary([1, 2j, -2j], 2)
    assert not rep.perron_ok and rep.details["perron"]["max_modulus"] == pytest.approx(2)


def test_check_necessary_trace_and_jll_witnesses():
    rep = check_necessary([1, -2], 2)
    assert not rep.trace_sums_ok and rep.details["trace_sums"]["m"] == 1
    # s1 = 3, s2 = 1.38: s1^2 = 9 > 3 * s2
    rep = check_necessary([1, 1 + 0.9j, 1 - 0.9j], 2)
    assert not rep.jll_ok and (rep.details["jll"]["k"], rep.details["jll"]["m"]) == (1, 2)
    assert check_necessary([1, 1, 1 + 1e-3], 2).jll_ok


def test_default_mmax_is_twice_n():
    assert check_necessary([1, 0, 0]).m_max == 6


def test_shift_examples():
    assert shift([1, 0], 0).entries == (1, 0)
    assert shift([4, 2], 1).entries == (3, 1)
    s = shift(Spectrum([1, 5], perron_index=1), 2)
    assert s.perron_index == 1


def test_spectrum_json_round_trip():
    s = Spectrum(SIGMA0)
    assert Spectrum.from_json(s.to_json()).entries == s.entries
    assert s.to_json()[0] == [26.0, 0.0]


@given(conj_closed_lists(max_size=8))
def test_power_sum_residue_small(sigma):
    for m in range(1, 2 * len(sigma) + 1):
        power_sum(sigma, m, 1e-9)


@given(conj_closed_lists(max_size=8), st.floats(-10, 10))
def test_shift_preserves_jll_gap(sigma, delta):
    assert abs(jll_gap(shift(sigma, delta)) - jll_gap(sigma)) < 1e-9 * max(1.0, abs(jll_gap(sigma)))


@given(st.lists(st.floats(-5, 5), min_size=1, max_size=5), st.integers(0, 119))
def test_perron_permutation_invariant(rest, k):
    rho = max(abs(x) for x in rest) + 1.0
    sigma = [rho] + rest
    perms = list(itertools.permutations(sigma))
    assert perron_of(perms[k % len(perms)]) == rho


def test_constructed_spectra_pass_necessary_conditions():
    from niep.construct import p3_replace
    _, mu = p3_replace(26, -12, 2, 0, 550, 1)
    full = list(mu) + [complex(-1, 14), complex(-1, -14)]
    assert check_necessary(full).all_ok
    phi = (1 + math.sqrt(5)) / 2
    assert check_necessary([phi, 1 - phi, 1j, -1j]).all_ok
    assert np.isclose(power_sum(list(mu), 1), 2) and np.isclose(power_sum(full, 1), 0)
