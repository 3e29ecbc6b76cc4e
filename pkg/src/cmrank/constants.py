"""Arithmetic local constants at good primes and the rank-growth prediction.

The local constant delta_v at a self-conjugate ramified prime v of good
reduction (away from p) is decided by a single point count: delta_v = (1,1)
exactly when p divides #E(F_ell), and (0,0) otherwise.  Values are kept as
pairs of residues mod 2 -- the two coordinates track the two residue
components of O/pO when p splits in O, and coincide by construction when p
is inert -- so every delta produced here has equal coordinates.

Summing over a dihedral tower: split ramified primes cancel in conjugate
pairs, unramified self-conjugate primes split completely and contribute
nothing, and each self-conjugate ramified good prime contributes (1,1).
That last fact is forced for curves over Q (the CM field is never contained
in the base), so a (0,0) at such a prime means corrupted data, not
mathematics, and raises ConsistencyError.  With m such primes, rank growth
rk_O E(F) >= [F:K] follows whenever rk_O E(K) + m is odd -- conditionally on
the Shafarevich-Tate conjecture, and every Prediction says so.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import NamedTuple

from .arith import is_prime, kronecker
from .catalog import CMCurve, curve as catalog_curve
from .errors import (
    BadReductionError,
    ConsistencyError,
    EllEqualsPError,
    NotPrimeError,
    NotSelfConjugateError,
    TowerInvariantError,
)
from .pointcount import count_points, reduce_curve
from .ringclass import RamifiedPrime, ramified_primes

SHAFAREVICH_TATE_CAVEAT = "assumes the Shafarevich-Tate conjecture"


@dataclass(frozen=True)
class Delta:
    """A local constant value in (Z/2)^2."""

    e1: int
    e2: int

    def __post_init__(self) -> None:
        if self.e1 not in (0, 1) or self.e2 not in (0, 1):
            raise ValueError("delta components are residues mod 2")


DELTA_ZERO = Delta(0, 0)
DELTA_ONE = Delta(1, 1)


@dataclass(frozen=True)
class TowerSpec:
    """A dihedral tower Q < K < F cut out of ring class fields.

    conductors are the rational primes whose orders supply the tower; all
    primes of K ramifying in F/K lie above them.  m counts the
    self-conjugate ones, which the construction requires to be good
    reduction primes different from p.
    """

    D: int
    p: int
    conductors: tuple[int, ...]
    degree: int
    ramified: tuple[RamifiedPrime, ...]
    m: int


def make_tower(D: int, p: int, conductors: tuple[int, ...] | list[int],
               degree: int | None = None) -> TowerSpec:
    """Assemble and validate a TowerSpec from conductor primes.

    degree defaults to p^(number of conductors), matching the recipes where
    each conductor contributes exactly one degree-p layer.
    """
    c = catalog_curve(D)
    conductors = tuple(sorted(conductors))
    if not conductors:
        raise TowerInvariantError("a tower needs at least one conductor prime")
    if len(set(conductors)) != len(conductors):
        raise TowerInvariantError(f"conductors must be distinct, got {conductors}")
    if p == 2 or not is_prime(p):
        raise TowerInvariantError(f"p must be an odd prime, got {p}")
    for f in conductors:
        if not is_prime(f):
            raise TowerInvariantError(f"conductor {f} is not prime")
    if degree is None:
        degree = p ** len(conductors)
    d = degree
    while d % p == 0:
        d //= p
    if d != 1 or degree == 1:
        raise TowerInvariantError(f"[F:K]={degree} is not a positive power of p={p}")
    ramified = ramified_primes(D, prod(conductors))
    for rp in ramified:
        if rp.ell == p:
            raise TowerInvariantError(
                f"conductor prime {rp.ell} equals p; the tower must be unramified above p"
            )
        if rp.self_conjugate and not rp.good_reduction:
            raise TowerInvariantError(
                f"self-conjugate conductor prime {rp.ell} divides the conductor "
                f"of E_{c.D}; the parity criterion needs good reduction there"
            )
    m = sum(1 for rp in ramified if rp.self_conjugate)
    return TowerSpec(D=D, p=p, conductors=conductors, degree=degree,
                     ramified=ramified, m=m)


def delta_good_selfconj(curve: CMCurve, p: int, ell: int) -> Delta:
    """delta_v at the self-conjugate prime v above ell, assuming v ramifies
    in the ambient tower (not checkable locally; the caller asserts it).

    Criterion: (1,1) iff p divides #E(F_ell).
    """
    if p == 2 or not is_prime(p):
        raise NotPrimeError(f"p must be an odd prime, got {p}")
    if not is_prime(ell):
        raise NotPrimeError(f"ell={ell} is not prime")
    if ell == p:
        raise EllEqualsPError(
            f"ell = p = {p}; the point-count criterion needs v away from p"
        )
    if curve.conductor % ell == 0:
        raise BadReductionError(
            f"E_{curve.D} has bad reduction at {ell}; delta is not defined here"
        )
    if kronecker(curve.field_disc, ell) == 1:
        raise NotSelfConjugateError(
            f"{ell} splits in the CM field of E_{curve.D}, so v^c != v"
        )
    order = count_points(reduce_curve(curve, ell)).order
    return DELTA_ONE if order % p == 0 else DELTA_ZERO


class DeltaSum(NamedTuple):
    m: int
    parity: int


def delta_sum_for_tower(curve: CMCurve, p: int, tower: TowerSpec) -> DeltaSum:
    """Sum the local constants over the tower's ramified primes.

    Split conductors contribute (0,0) (their two primes are swapped by
    conjugation and cancel); each self-conjugate conductor is evaluated via
    delta_good_selfconj and must come out (1,1) -- for curves over Q the CM
    field never sits inside the base field, so anything else is an
    internal-consistency failure.
    """
    if tower.D != curve.D or tower.p != p:
        raise TowerInvariantError(
            f"tower built for (D={tower.D}, p={tower.p}) but evaluated at "
            f"(D={curve.D}, p={p})"
        )
    for rp in tower.ramified:
        if rp.ell == p:
            raise TowerInvariantError(f"tower ramifies at {rp.ell} = p")
        if rp.self_conjugate and not rp.good_reduction:
            raise TowerInvariantError(
                f"tower has a self-conjugate bad-reduction prime {rp.ell}"
            )
    m = 0
    for rp in tower.ramified:
        if not rp.self_conjugate:
            continue
        d = delta_good_selfconj(curve, p, rp.ell)
        if d != DELTA_ONE:
            order = count_points(reduce_curve(curve, rp.ell)).order
            raise ConsistencyError(
                f"delta at self-conjugate ramified prime {rp.ell} of E_{curve.D} "
                f"came out {d} (#E(F_{rp.ell}) = {order}, p = {p}); "
                f"this contradicts the supersingularity of inert primes"
            )
        m += 1
    if m != tower.m:
        raise TowerInvariantError(
            f"tower records m={tower.m} but {m} self-conjugate ramified primes found"
        )
    return DeltaSum(m=m, parity=m % 2)


@dataclass(frozen=True)
class PredictionBranch:
    """One parity hypothesis on rk_O E(K) and the bound it yields.

    min_rank is the guaranteed lower bound [F:K] for rk_O E(F) when the
    parity sum is odd, and None when the criterion gives nothing.
    """

    assumed_rank_parity: int
    parity_sum: int
    min_rank: int | None


@dataclass(frozen=True)
class Prediction:
    branches: tuple[PredictionBranch, ...]
    caveat: str = SHAFAREVICH_TATE_CAVEAT

    @property
    def unconditional_over_parity(self) -> bool:
        """True when every branch yields the bound (rank parity known)."""
        return all(b.min_rank is not None for b in self.branches)


def predict_rank_growth(curve: CMCurve, p: int, tower: TowerSpec) -> Prediction:
    """Apply the parity criterion: rank grows to at least [F:K] on every
    branch where rk_O E(K) + m is odd.  Curves with unresolved rank (two
    possible parities) get two conditional branches."""
    m = delta_sum_for_tower(curve, p, tower).m
    branches = []
    for parity in curve.rank_over_K.parities():
        parity_sum = (parity + m) % 2
        branches.append(
            PredictionBranch(
                assumed_rank_parity=parity,
                parity_sum=parity_sum,
                min_rank=tower.degree if parity_sum == 1 else None,
            )
        )
    return Prediction(branches=tuple(branches))
