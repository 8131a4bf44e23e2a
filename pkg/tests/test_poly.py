import json
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import conj_closed_lists, residual
from niep import (MonicPoly, char_poly, coeffs_from_power_sums, evaluate, from_roots, roots,
                  shifted_companion)
from niep.errors import NotClosed
from niep.poly import backward_error, roots_exact, taylor_shift

PHI = (1 + math.sqrt(5)) / 2


def test_from_roots_examples():
    assert from_roots([9, 1, 2j, -2j]).b == (10, -13, 40, -36)
    assert from_roots([5, 1 + 2j, 1 - 2j, -1]).b == (6, -8, 10, 25)
    assert from_roots([1, -1]).b == (0, 1)


def test_from_roots_not_closed():
    with pytest.raises(NotClosed):
        from_roots([1, 1j])


def test_power_sums_examples():
    assert coeffs_from_power_sums([0, 2]).b == (0, 1)
    # (x-2)(x-1)x = x^3 - 3x^2 + 2x
    expanded = np.polymul(np.polymul([1, -2], [1, -1]), [1, 0])
    assert coeffs_from_power_sums([3, 5, 9]).b == tuple(-expanded[1:])


def test_power_sums_golden_quartic():
    vals = np.array([PHI, 1 - PHI, 1j, -1j])
    s = [float(np.sum(vals**k).real) for k in range(1, 5)]
    assert s[:2] == pytest.approx([1, 1])
    oracle = np.polymul([1, -1, -1], [1, 0, 1])
    got = coeffs_from_power_sums(s)
    assert np.allclose(got.b, -oracle[1:], atol=1e-12)
    assert np.allclose(got.b, [1, 0, 1, 1], atol=1e-12)


@pytest.mark.parametrize("b, expected", [
    ((10, -13, 40, -36), [9, 1, 2j, -2j]),
    ((6, -8, 10, 25), [5, 1 + 2j, 1 - 2j, -1]),
    ((0, 1), [1, -1]),
])
def test_roots_examples(b, expected):
    z = roots(MonicPoly(b))
    assert residual(z, expected) < 1e-10
    # conjugate-paired output
    assert residual(z, np.conj(z)) == 0


def test_roots_backward_error_bound():
    p = MonicPoly((10, -13, 40, -36))
    z = roots(p)
    assert np.all(np.abs(evaluate(p, z)) / (1 + np.abs(z) ** p.n) < 1e-12)
    assert backward_error(p, z).max() < 1e-12


def test_roots_of_multiple_and_zero_roots():
    assert residual(roots(MonicPoly((4, -4))), [2, 2]) < 1e-7
    assert residual(roots(from_roots([0, 0, 0, 0, 1])), [0, 0, 0, 0, 1]) < 1e-12
    # nearby distinct real roots stay real
    z = roots(from_roots([1, 1 + 1e-6, 3]))
    assert np.all(z.imag == 0)


def test_shifted_companion_examples():
    assert np.array_equal(shifted_companion(MonicPoly((0, 1)), 0), [[0, 1], [1, 0]])
    p = MonicPoly((6, -8, 10, 25))
    C = shifted_companion(p, 0)
    assert list(C[-1]) == [25, 10, -8, 6]
    assert char_poly(C).b == p.b


def test_evaluate_examples():
    p = MonicPoly((0, 1))
    assert evaluate(p, 1) == 0
    assert evaluate(p, 2) == 3
    assert evaluate(MonicPoly((6, -8, 10, 25)), 5) == 0
    assert p(2) == 3


def test_monic_json_and_str():
    p = MonicPoly((6, -8, 10, 25))
    assert MonicPoly.from_json(json.dumps(p.to_json())) == p
    assert p.to_json() == {"n": 4, "b": [6, -8, 10, 25]}
    assert str(p) == "x^4 - 6x^3 + 8x^2 - 10x - 25"
    with pytest.raises(ValueError):
        MonicPoly.from_json({"n": 3, "b": [1, 2]})


def test_taylor_shift_matches_numpy():
    c = [1, -6, 8, -10, -25]
    shifted = taylor_shift(c, 2)
    # p(x + 2) evaluated at a few points
    for x in (-1.0, 0.5, 3.0):
        assert float(np.polyval(shifted, x)) == pytest.approx(np.polyval(c, x + 2))


def test_roots_exact_clustered_cluster():
    mu = [9.47859591, 1.35858655, 1.37517153, 1.35107444, 1.36735535, 1.35403871, 1.36568471]
    from fractions import Fraction
    exact = [Fraction(1)]
    for m in mu:
        f = Fraction(m)
        exact = [a - f * b for a, b in zip(exact + [0], [0] + exact)]
    z = roots_exact(exact)
    assert np.all(z.imag == 0)
    assert residual(z, mu) < 1e-12


@given(conj_closed_lists(max_size=10))
def test_round_trip(sigma):
    assert residual(roots(from_roots(sigma)), sigma) < 1e-8


@given(conj_closed_lists(max_size=10))
def test_power_sums_agree_with_expansion(sigma):
    vals = np.array(sigma)
    s = [float(np.sum(vals**k).real) for k in range(1, len(sigma) + 1)]
    got = np.array(coeffs_from_power_sums(s).b)
    want = np.array(from_roots(sigma).b)
    # coefficient magnitudes reach 10^n, so compare relative to each coefficient's scale
    scale = np.array([math.comb(len(sigma), k) * 10.0**k for k in range(1, len(sigma) + 1)])
    assert np.all(np.abs(got - want) <= 1e-9 * scale)


@given(st.lists(st.integers(-20, 20), min_size=1, max_size=8))
def test_char_poly_of_companion_is_exact(b):
    p = MonicPoly(b)
    assert np.max(np.abs(np.subtract(char_poly(shifted_companion(p, 0)).b, p.b))) <= 1e-12


@given(st.lists(st.floats(-5, 5), min_size=1, max_size=8))
def test_char_poly_of_float_companion(b):
    p = MonicPoly(b)
    assert np.max(np.abs(np.subtract(char_poly(shifted_companion(p, 0)).b, p.b))) <= 1e-12
