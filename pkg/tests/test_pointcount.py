from math import isqrt

import pytest

from cmrank.arith import is_prime, kronecker
from cmrank.catalog import curve, curves
from cmrank.errors import BadReductionError, NotPrimeError
from cmrank.pointcount import (
    count_points,
    count_points_enumeration,
    is_supersingular,
    reduce_curve,
)


def good_primes(c, bound):
    return [ell for ell in range(2, bound + 1)
            if is_prime(ell) and c.conductor % ell != 0]


def test_reduce_examples():
    rc = reduce_curve(curve(4), 13)
    assert rc.coeffs == (0, 0, 0, 12, 0)   # y^2 = x^3 - x over F_13
    with pytest.raises(BadReductionError):
        reduce_curve(curve(4), 2)
    rc2 = reduce_curve(curve(11), 2)
    assert rc2.ell == 2
    with pytest.raises(NotPrimeError):
        reduce_curve(curve(4), 15)


def test_count_frozen_values():
    # all four derived by brute pair enumeration
    assert count_points(reduce_curve(curve(4), 13)) .order == 8
    assert count_points(reduce_curve(curve(4), 13)).trace == 6
    assert count_points(reduce_curve(curve(4), 3)).order == 4
    assert count_points(reduce_curve(curve(11), 2)).order == 3
    assert count_points(reduce_curve(curve(11), 2)).trace == 0
    res = count_points(reduce_curve(curve(4), 11))
    assert (res.order, res.trace) == (12, 0)


def test_count_trace_order_relation():
    for c in curves():
        for ell in good_primes(c, 60):
            res = count_points(reduce_curve(c, ell))
            assert res.order == ell + 1 - res.trace
            assert res.trace ** 2 <= 4 * ell


def test_character_sum_equals_enumeration():
    for c in curves():
        for ell in good_primes(c, 50):
            rc = reduce_curve(c, ell)
            assert count_points(rc) == count_points_enumeration(rc), (c.D, ell)


def test_supersingular_examples():
    assert is_supersingular(curve(4), 11)
    assert not is_supersingular(curve(7), 2)    # N=2, a=1; 2 splits
    assert not is_supersingular(curve(4), 13)   # a=6


def test_supersingular_iff_inert_small():
    for c in curves():
        for ell in good_primes(c, 200):
            assert is_supersingular(c, ell) == (kronecker(c.field_disc, ell) == -1)


def test_cm_norm_equation_at_split_primes():
    # split ell: a = pi + pibar with pi pibar = ell in O_K forces
    # (4 ell - a^2) / |d_K| to be a perfect square
    for c in curves():
        for ell in good_primes(c, 200):
            if kronecker(c.field_disc, ell) != 1:
                continue
            a = count_points(reduce_curve(c, ell)).trace
            num = 4 * ell - a * a
            assert num % -c.field_disc == 0, (c.D, ell)
            v = num // -c.field_disc
            assert isqrt(v) ** 2 == v, (c.D, ell)
    # the worked instance: E_4 at 13 gives (52 - 36)/4 = 4 = 2^2
    a = count_points(reduce_curve(curve(4), 13)).trace
    assert (4 * 13 - a * a) // 4 == 4
