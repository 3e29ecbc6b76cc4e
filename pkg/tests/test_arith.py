from math import gcd

import pytest

from cmrank.arith import distinct_prime_factors, is_prime, kronecker, valuation
from cmrank.errors import NotPrimeError


def naive_primes(bound):
    sieve = [False, False] + [True] * (bound - 1)
    for n in range(2, bound + 1):
        if sieve[n]:
            for m in range(n * n, bound + 1, n):
                sieve[m] = False
    return [n for n, p in enumerate(sieve) if p]


def test_kronecker_frozen_values():
    assert kronecker(-4, 13) == 1       # 3^2 = 9 = -4 mod 13
    assert kronecker(-11, 2) == -1      # -11 = 5 mod 8
    assert kronecker(-7, 2) == 1        # -7 = 1 mod 8
    for a in (-17, -2, -1, 0, 1, 5, 100):
        assert kronecker(a, 1) == 1


def test_kronecker_n_zero_and_two():
    assert kronecker(1, 0) == 1
    assert kronecker(-1, 0) == 1
    for a in (0, 2, -2, 3, 5, 7):
        if a in (1, -1):
            continue
        assert kronecker(a, 0) == 0
    # (a/2) by the residue table
    for a in range(-40, 40):
        expected = 0 if a % 2 == 0 else (1 if a % 8 in (1, 7) else -1)
        assert kronecker(a, 2) == expected, a


def test_kronecker_multiplicative_in_n():
    for a in range(-50, 51):
        for m in range(1, 51):
            for n in range(1, 51):
                assert kronecker(a, m * n) == kronecker(a, m) * kronecker(a, n)


def test_kronecker_is_legendre_at_odd_primes():
    for n in naive_primes(60):
        if n == 2:
            continue
        squares = {x * x % n for x in range(1, n)}
        for a in range(-2 * n, 2 * n):
            if gcd(a, n) != 1:
                assert kronecker(a, n) == 0
            else:
                assert kronecker(a, n) == (1 if a % n in squares else -1)


def test_kronecker_euler_criterion():
    for n in naive_primes(200):
        if n == 2:
            continue
        for a in range(-n, n):
            assert kronecker(a, n) % n == pow(a, (n - 1) // 2, n)


def test_is_prime_small_exhaustive():
    primes = set(naive_primes(10000))
    for n in range(10001):
        assert is_prime(n) == (n in primes), n


def test_is_prime_frozen_values():
    assert is_prime(163)
    assert not is_prime(1)
    assert not is_prime(1849)           # 43^2
    assert not is_prime(561)            # Carmichael
    assert is_prime(2 ** 61 - 1)        # Mersenne
    assert not is_prime(2 ** 61 + 1)
    assert is_prime(18446744073709551557)   # largest prime below 2^64


def test_valuation():
    assert valuation(18, 3) == 2
    assert valuation(30, 5) == 1
    assert valuation(7, 3) == 0
    for n in (1, 12, 360, 2 ** 10 * 3 ** 4):
        for p in (2, 3, 5, 7):
            e = valuation(n, p)
            assert n % p ** e == 0 and (n % p ** (e + 1) != 0)
    with pytest.raises(ValueError):
        valuation(0, 3)
    with pytest.raises(NotPrimeError):
        valuation(10, 4)


def test_distinct_prime_factors():
    assert distinct_prime_factors(1) == ()
    assert distinct_prime_factors(58) == (2, 29)
    assert distinct_prime_factors(121) == (11,)
    assert distinct_prime_factors(360) == (2, 3, 5)
