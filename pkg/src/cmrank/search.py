"""Conductor searches: the three recipes behind the result tables.

Each recipe scans primes f in increasing order and keeps those giving a
ring class field with a p-part of degree exactly p:

  m = 0: f splits in K (the two primes above f are conjugate-swapped).
  m = 1: f inert in K (one self-conjugate ramified prime).
  m = 2: two distinct inert conductors, tower = compositum, degree p^2.

"Degree exactly p" means p divides h(O_f) exactly once (v_p = 1); merely
p | h admits conductors whose p-part is larger and does not reproduce the
published tables.  Good reduction (f not dividing the curve conductor) and
f != p are checked explicitly even where the splitting condition already
implies them: the towers must satisfy the parity criterion's hypotheses by
construction, not by accident.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from . import catalog
from .arith import is_prime, kronecker, valuation
from .constants import (
    Prediction,
    PredictionBranch,
    TowerSpec,
    make_tower,
    predict_rank_growth,
)
from .errors import SearchExhaustedError
from .ringclass import RamifiedPrime, SplitType, class_number_order

DEFAULT_BOUND = 400

# Table layout from the source of the rank catalog: the odd-or-uncertain
# rank curves get the even-m recipes, the even-or-uncertain ones get m = 1.
TABLE12_LABELS = (4, 7, 8, 11, 19, 43, 67, 163)
TABLE3_LABELS = (3, 4, 7)
TABLE_PRIMES = (3, 5, 7)


class RecipeCase(enum.Enum):
    M0 = "m0"
    M1 = "m1"
    M2 = "m2"


@dataclass(frozen=True)
class SearchResult:
    D: int
    p: int
    case: RecipeCase
    conductors: tuple[int, ...]
    tower: TowerSpec
    prediction: Prediction

    def to_dict(self) -> dict:
        return {
            "D": self.D,
            "p": self.p,
            "case": self.case.value,
            "conductors": list(self.conductors),
            "degree": self.tower.degree,
            "m": self.tower.m,
            "ramified": [
                {
                    "ell": rp.ell,
                    "split_type": rp.split_type.value,
                    "self_conjugate": rp.self_conjugate,
                    "good_reduction": rp.good_reduction,
                }
                for rp in self.tower.ramified
            ],
            "prediction": {
                "branches": [
                    {
                        "assumed_rank_parity": b.assumed_rank_parity,
                        "parity_sum": b.parity_sum,
                        "min_rank": b.min_rank,
                    }
                    for b in self.prediction.branches
                ],
                "caveat": self.prediction.caveat,
            },
        }

    @classmethod
    def from_dict(cls, d: dict) -> "SearchResult":
        tower = TowerSpec(
            D=d["D"],
            p=d["p"],
            conductors=tuple(d["conductors"]),
            degree=d["degree"],
            ramified=tuple(
                RamifiedPrime(
                    ell=rp["ell"],
                    split_type=SplitType(rp["split_type"]),
                    self_conjugate=rp["self_conjugate"],
                    good_reduction=rp["good_reduction"],
                )
                for rp in d["ramified"]
            ),
            m=d["m"],
        )
        prediction = Prediction(
            branches=tuple(
                PredictionBranch(
                    assumed_rank_parity=b["assumed_rank_parity"],
                    parity_sum=b["parity_sum"],
                    min_rank=b["min_rank"],
                )
                for b in d["prediction"]["branches"]
            ),
            caveat=d["prediction"]["caveat"],
        )
        return cls(
            D=d["D"],
            p=d["p"],
            case=RecipeCase(d["case"]),
            conductors=tuple(d["conductors"]),
            tower=tower,
            prediction=prediction,
        )


def conductor_qualifies(D: int, p: int, f: int, want: SplitType) -> bool:
    """All recipe conditions on a single conductor candidate f."""
    c = catalog.curve(D)
    if not is_prime(f) or f == p or c.conductor % f == 0:
        return False
    chi = kronecker(c.field_disc, f)
    if chi != (1 if want is SplitType.SPLIT else -1):
        return False
    return valuation(class_number_order(D, f).h, p) == 1


def _scan(D: int, p: int, bound: int, want: SplitType, how_many: int) -> list[int]:
    found: list[int] = []
    for f in range(2, bound + 1):
        if conductor_qualifies(D, p, f, want):
            found.append(f)
            if len(found) == how_many:
                return found
    raise SearchExhaustedError(
        f"no {'pair of ' if how_many == 2 else ''}conductor primes <= {bound} "
        f"qualify for D={D}, p={p}, {want.value} recipe"
    )


def _result(D: int, p: int, case: RecipeCase, conductors: list[int],
            expected_m: int) -> SearchResult:
    tower = make_tower(D, p, conductors)
    assert tower.m == expected_m, f"recipe produced m={tower.m}, wanted {expected_m}"
    curve = catalog.curve(D)
    prediction = predict_rank_growth(curve, p, tower)
    return SearchResult(D=D, p=p, case=case, conductors=tower.conductors,
                        tower=tower, prediction=prediction)


def search_m0(D: int, p: int, bound: int = DEFAULT_BOUND) -> SearchResult:
    """Smallest split conductor prime: degree-p tower, no self-conjugate
    ramification."""
    fs = _scan(D, p, bound, SplitType.SPLIT, 1)
    return _result(D, p, RecipeCase.M0, fs, expected_m=0)


def search_m1(D: int, p: int, bound: int = DEFAULT_BOUND) -> SearchResult:
    """Smallest inert conductor prime: degree-p tower with one
    self-conjugate ramified prime."""
    fs = _scan(D, p, bound, SplitType.INERT, 1)
    return _result(D, p, RecipeCase.M1, fs, expected_m=1)


def search_m2(D: int, p: int, bound: int = DEFAULT_BOUND) -> SearchResult:
    """Two smallest inert conductor primes: compositum tower of degree p^2
    with two self-conjugate ramified primes."""
    fs = _scan(D, p, bound, SplitType.INERT, 2)
    return _result(D, p, RecipeCase.M2, fs, expected_m=2)


_SEARCHERS = {
    RecipeCase.M0: search_m0,
    RecipeCase.M1: search_m1,
    RecipeCase.M2: search_m2,
}


def search(case: RecipeCase, D: int, p: int, bound: int = DEFAULT_BOUND) -> SearchResult:
    return _SEARCHERS[case](D, p, bound)


@dataclass(frozen=True)
class TableCell:
    D: int
    p: int
    case: RecipeCase
    result: SearchResult | None
    error: str | None

    @property
    def ok(self) -> bool:
        return self.result is not None


@dataclass(frozen=True)
class Tables:
    """The three result tables: m = 0 and m = 2 over the eight curves whose
    rank over K can be odd, m = 1 over the three whose rank can be even."""

    table1: tuple[TableCell, ...]
    table2: tuple[TableCell, ...]
    table3: tuple[TableCell, ...]

    def all_cells(self) -> tuple[TableCell, ...]:
        return self.table1 + self.table2 + self.table3


def _cells(case: RecipeCase, labels: tuple[int, ...], bound: int) -> tuple[TableCell, ...]:
    cells = []
    for D in labels:
        for p in TABLE_PRIMES:
            try:
                res: SearchResult | None = _SEARCHERS[case](D, p, bound)
                err = None
            except SearchExhaustedError as exc:
                res, err = None, str(exc)
            cells.append(TableCell(D=D, p=p, case=case, result=res, error=err))
    return tuple(cells)


def generate_tables(bound: int = DEFAULT_BOUND) -> Tables:
    """All three tables; cells whose search exhausts the bound carry the
    error message instead of a result."""
    return Tables(
        table1=_cells(RecipeCase.M0, TABLE12_LABELS, bound),
        table2=_cells(RecipeCase.M2, TABLE12_LABELS, bound),
        table3=_cells(RecipeCase.M1, TABLE3_LABELS, bound),
    )
