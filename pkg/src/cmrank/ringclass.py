"""Class numbers of imaginary quadratic orders and ramification data.

For an order O_f = Z + f O_K inside a class-number-one field K, the class
number is

    h(O_f) = f / [O_K^* : O_f^*] * prod over primes ell | f of (1 - chi(ell)/ell)

with chi(ell) the Kronecker symbol (d_K / ell).  The symbol is evaluated at
the field discriminant rather than literally at -D so that f = 2 is covered
by the Kronecker convention (the even-conductor rows of the m = 2 table
need it).  Everything is cleared of denominators and computed in integer
arithmetic; class_number_by_forms() is the independent cross-check, counting
reduced primitive positive-definite binary quadratic forms the slow way.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd, isqrt

from . import catalog
from .arith import distinct_prime_factors, is_prime, kronecker, valuation
from .errors import InvalidDiscriminantError, NotPrimeError


class SplitType(enum.Enum):
    """Behavior of a rational prime in K/Q."""

    SPLIT = "split"
    INERT = "inert"
    RAMIFIED = "ramified"


@dataclass(frozen=True)
class OrderData:
    """An order O_f in the CM field of E_D."""

    D: int
    f: int
    h: int
    unit_index: int
    disc: int


@dataclass(frozen=True)
class RamifiedPrime:
    """A rational prime dividing an order conductor, with the data that
    decides its role in a dihedral tower."""

    ell: int
    split_type: SplitType
    self_conjugate: bool
    good_reduction: bool


def unit_index(D: int, f: int) -> int:
    """[O_K^* : O_f^*]: trivial for f = 1; for f > 1 it is 3 for D = 3
    (six units upstairs), 2 for D = 4 (four units), else 1."""
    if f < 1:
        raise ValueError(f"conductor must be >= 1, got {f}")
    catalog.curve(D)  # validates the label
    if f == 1:
        return 1
    if D == 3:
        return 3
    if D == 4:
        return 2
    return 1


def class_number_order(D: int, f: int) -> OrderData:
    """h(O_f) by the conductor formula, exactly in integer arithmetic."""
    c = catalog.curve(D)
    u = unit_index(D, f)
    num = f
    den = u
    for ell in distinct_prime_factors(f):
        num *= ell - kronecker(c.field_disc, ell)
        den *= ell
    # the formula always yields an integer; anything else is a bug
    assert num % den == 0, f"non-integral class number for D={D}, f={f}"
    h = num // den
    return OrderData(D=D, f=f, h=h, unit_index=u, disc=f * f * c.field_disc)


def class_number_by_forms(disc: int) -> int:
    """Count reduced primitive positive-definite forms (a, b, c) of the
    given discriminant: b^2 - 4ac = disc, |b| <= a <= c, gcd(a, b, c) = 1,
    and b >= 0 whenever |b| = a or a = c.

    Pure enumeration with a up to sqrt(|disc|/3); this is the oracle for
    class_number_order and shares none of its machinery.
    """
    if disc >= 0 or disc % 4 not in (0, 1):
        raise InvalidDiscriminantError(
            f"{disc} is not a negative discriminant (need disc < 0, disc = 0 or 1 mod 4)"
        )
    count = 0
    parity = disc & 1
    for a in range(1, isqrt(-disc // 3) + 1):
        foura = 4 * a
        target = disc % foura
        # b = a falls out of the loop when parities disagree, as it must
        for b in range(parity, a + 1, 2):
            if b * b % foura != target:
                continue
            c = (b * b - disc) // foura
            if c < a or gcd(gcd(a, b), c) != 1:
                continue
            # (a, b, c) and (a, -b, c) are distinct reduced forms unless
            # b = 0 or the form sits on the reduction boundary
            count += 1 if (b == 0 or b == a or a == c) else 2
    return count


def p_part_degree(D: int, f: int, p: int) -> int:
    """Degree of the maximal p-power subextension of the ring class field
    H_{O_f}/K, i.e. the p-part p^{v_p(h(O_f))} of the class number."""
    if p == 2 or not is_prime(p):
        raise NotPrimeError(f"p must be an odd prime, got {p}")
    return p ** valuation(class_number_order(D, f).h, p)


def split_type(D: int, ell: int) -> SplitType:
    """Behavior of the rational prime ell in K/Q via (d_K / ell)."""
    if not is_prime(ell):
        raise NotPrimeError(f"ell={ell} is not prime")
    chi = kronecker(catalog.curve(D).field_disc, ell)
    if chi == 1:
        return SplitType.SPLIT
    if chi == -1:
        return SplitType.INERT
    return SplitType.RAMIFIED


def ramified_primes(D: int, f: int) -> tuple[RamifiedPrime, ...]:
    """One record per rational prime dividing f: these are exactly the
    primes whose primes-above ramify in H_{O_f}/K."""
    c = catalog.curve(D)
    if f < 1:
        raise ValueError(f"conductor must be >= 1, got {f}")
    out = []
    for ell in distinct_prime_factors(f):
        st = split_type(D, ell)
        out.append(
            RamifiedPrime(
                ell=ell,
                split_type=st,
                self_conjugate=st is not SplitType.SPLIT,
                good_reduction=c.conductor % ell != 0,
            )
        )
    return tuple(out)
