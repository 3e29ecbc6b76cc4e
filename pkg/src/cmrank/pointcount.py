"""Reduction of catalog curves mod good primes and exact point counts.

Counting is deliberately exhaustive, O(ell) per prime: the conductor
searches never need ell beyond a few hundred, and an enumeration this
simple doubles as its own oracle.  For odd ell we complete the square and
sum the quadratic character of the resulting cubic; for ell = 2 and 3 we
enumerate all affine pairs against the full Weierstrass equation, which
sidesteps every small-characteristic special case.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import is_prime
from .catalog import CMCurve, b_invariants, model_discriminant
from .errors import BadReductionError, NotPrimeError


@dataclass(frozen=True)
class ReducedCurve:
    """A catalog curve reduced mod a good prime ell (residue field F_ell)."""

    ell: int
    coeffs: tuple[int, int, int, int, int]


@dataclass(frozen=True)
class CountResult:
    """order = #E(F_ell) including the point at infinity; trace = ell + 1 - order."""

    order: int
    trace: int


def reduce_curve(curve: CMCurve, ell: int) -> ReducedCurve:
    """Reduce the model mod ell, insisting on good reduction."""
    if not is_prime(ell):
        raise NotPrimeError(f"ell={ell} is not prime")
    if curve.conductor % ell == 0:
        raise BadReductionError(
            f"E_{curve.D} has bad reduction at {ell} (conductor {curve.conductor})"
        )
    if model_discriminant(curve.a_invariants) % ell == 0:
        # cannot happen for a good prime of a globally minimal model
        raise BadReductionError(f"model of E_{curve.D} is singular mod {ell}")
    coeffs = tuple(a % ell for a in curve.a_invariants)
    return ReducedCurve(ell, coeffs)  # type: ignore[arg-type]


def count_points_enumeration(rc: ReducedCurve) -> CountResult:
    """Brute-force count: test every affine pair (x, y) against
    y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6, then add infinity."""
    ell = rc.ell
    a1, a2, a3, a4, a6 = rc.coeffs
    n = 1
    for x in range(ell):
        rhs = (((x + a2) * x + a4) * x + a6) % ell
        for y in range(ell):
            if (y * y + a1 * x * y + a3 * y) % ell == rhs:
                n += 1
    return CountResult(n, ell + 1 - n)


def count_points(rc: ReducedCurve) -> CountResult:
    """Exact #E(F_ell) and Frobenius trace.

    For odd ell, substitute z = 2y + a1 x + a3 to get z^2 = 4x^3 + b2 x^2
    + 2 b4 x + b6 and sum 1 + chi(f(x)) over x with chi the quadratic
    character mod ell; ell = 2 and 3 fall back to enumeration.
    """
    ell = rc.ell
    if ell <= 3:
        result = count_points_enumeration(rc)
    else:
        b2, b4, b6, _ = b_invariants(rc.coeffs)
        square = bytearray(ell)
        for t in range(1, ell):
            square[t * t % ell] = 1
        n = 1
        for x in range(ell):
            v = (((4 * x + b2) * x + 2 * b4) * x + b6) % ell
            n += 1 if v == 0 else (2 if square[v] else 0)
        result = CountResult(n, ell + 1 - n)
    assert result.trace * result.trace <= 4 * ell, "Hasse bound violated"
    return result


def is_supersingular(curve: CMCurve, ell: int) -> bool:
    """Supersingularity of the reduction at a good prime: trace 0 for
    ell >= 5, trace divisible by ell for ell = 2, 3."""
    trace = count_points(reduce_curve(curve, ell)).trace
    if ell >= 5:
        return trace == 0
    return trace % ell == 0
