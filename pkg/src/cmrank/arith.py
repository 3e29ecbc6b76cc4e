"""Exact integer primitives: Kronecker symbols, primality, p-adic valuation.

Everything here is pure, deterministic, and exact; Python integers make the
128-bit intermediate products that show up elsewhere (j-invariants, form
discriminants) a non-issue.
"""

from __future__ import annotations

from .errors import NotPrimeError

# Deterministic Miller-Rabin witnesses: this set is known to be correct for
# every n < 3.3e24, comfortably past 2^64.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a/n), the total extension of the Jacobi symbol.

    Conventions: (a/0) = 1 iff a = +-1 else 0; (a/1) = 1; (a/2) is 0 for
    even a, +1 for a = +-1 mod 8 and -1 for a = +-3 mod 8; (a/-1) = -1 iff
    a < 0.  For odd prime n this is the Legendre symbol, and the result is
    0 exactly when gcd(a, n) > 1.
    """
    if n == 0:
        return 1 if a in (1, -1) else 0
    k = 1
    if n < 0:
        n = -n
        if a < 0:
            k = -k
    while n % 2 == 0:
        n //= 2
        if a % 2 == 0:
            return 0
        if a % 8 in (3, 5):
            k = -k
    # n is now odd and positive: standard Jacobi reciprocity loop.
    a %= n
    while a != 0:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                k = -k
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            k = -k
        a %= n
    return k if n == 1 else 0


def is_prime(n: int) -> bool:
    """Deterministic primality for 64-bit integers (Miller-Rabin with a
    fixed witness set)."""
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def valuation(n: int, p: int) -> int:
    """Largest e with p^e dividing n (n >= 1, p prime)."""
    if n < 1:
        raise ValueError(f"valuation needs n >= 1, got {n}")
    if not is_prime(p):
        raise NotPrimeError(f"valuation needs a prime p, got {p}")
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def distinct_prime_factors(n: int) -> tuple[int, ...]:
    """Distinct primes dividing n, ascending (trial division; inputs here
    are conductors of a few hundred at most)."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return tuple(out)
