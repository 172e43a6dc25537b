# SPDX-License-Identifier: CC-BY-NC-4.0

"""
Divisors X of dimension n on a quadric cone Q of rank 3 or 4 in P^{n+2}.

Sign convention: a rank-4 class (a, b) with a, b >= 0 means that on the
smooth locus U of Q the ideal of X is the pullback of O_{Q1}(-a, -b), where
Q1 = P^1 x P^1 is the base of the cone. A rank-3 class s means the pullback
of O_{P^1}(-s) from the conic base; since the conic has degree 2, twisting by
O_Q(k) moves the P^1 degree by 2k. Translation from the other common
conventions: O(a, b) with a, b <= 0 is (-a, -b) here, and O(-a, -a + 1) is
the linked type (a, a - 1).

Projecting from the vertex gives pi_* O_U = sum_m S^m V (x) O_{Q1}(-m) with
dim V = n - 1 (rank 4) or n (rank 3), so for i in {0, 1}

    h^i(Q, I_{X/Q}(k)) = sum_m dim S^m V * h^i(Q1, O(k - a - m, k - b - m)).

Only i in {0, 1} are served: for i >= 2 the cohomology of U is infinite
dimensional and no longer equals that of Q.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Tuple

import sympy as sp

from regbound.betti import BettiTable, koszul
from regbound.bott import LineBundleOnPn, ProductLineBundle, binom, coh_line, coh_product
from regbound.errors import DomainError
from regbound.sequences import (
    Presentation,
    SheafExpr,
    ShortExactSeq,
    ideal_table_from_presentation,
    twisted_o,
)
from regbound.tables import K, ZERO, CohTable, Interval, Support, binomial_polynomial


@dataclass(frozen=True)
class QuadricDivisorSpec:
    n: int
    rank: int
    divisor_class: Tuple[int, ...]

    def __post_init__(self):
        if self.n < 2:
            raise DomainError(f"divisor dimension must be >= 2, got {self.n}")
        if self.rank == 4:
            if len(self.divisor_class) != 2:
                raise DomainError("a rank-4 class is a pair (a, b)")
            a, b = self.divisor_class
            if a < 0 or b < 0 or a + b < 1:
                raise DomainError(f"class (a, b) must be nonnegative and nonzero, got {(a, b)}")
            if abs(a - b) > 1:
                raise DomainError(
                    f"class {(a, b)} has |a - b| >= 2; X would be singular along the vertex "
                    "without being a divisor of the allowed type"
                )
        elif self.rank == 3:
            if len(self.divisor_class) != 1 or self.divisor_class[0] < 1:
                raise DomainError("a rank-3 class is a single positive degree s")
        else:
            raise DomainError(f"quadric rank must be 3 or 4, got {self.rank}")

    @classmethod
    def rank4(cls, n: int, a: int, b: int) -> QuadricDivisorSpec:
        return cls(n, 4, (a, b))

    @classmethod
    def rank3(cls, n: int, s: int) -> QuadricDivisorSpec:
        return cls(n, 3, (s,))

    @property
    def ambient(self) -> int:
        return self.n + 2

    @property
    def vertex_dimension(self) -> int:
        return self.n - 2 if self.rank == 4 else self.n - 1

    @property
    def v_dimension(self) -> int:
        return self.n - 1 if self.rank == 4 else self.n

    @property
    def degree(self) -> int:
        return sum(self.divisor_class)

    def describe(self) -> str:
        return f"rank-{self.rank} cone in P^{self.ambient}, class {self.divisor_class}"


class ClassificationKind(Enum):
    COMPLETE_INTERSECTION = "complete-intersection"
    LINKED_TO_LINEAR = "linked-to-linear"


@dataclass(frozen=True)
class Classification:
    """For a CI, ``degree`` is the second hypersurface's; when linked, it is a."""

    kind: ClassificationKind
    degree: int

    def to_json(self):
        return {"kind": self.kind.value, "degree": self.degree}


def classify(spec: QuadricDivisorSpec) -> Classification:
    if spec.degree % 2 == 0:
        return Classification(ClassificationKind.COMPLETE_INTERSECTION, spec.degree // 2)
    return Classification(ClassificationKind.LINKED_TO_LINEAR, (spec.degree + 1) // 2)


def _sym_dim(m: int, v: int) -> int:
    return binom(m + v - 1, m)


def series_coh(spec: QuadricDivisorSpec, i: int, k: int) -> int:
    if i not in (0, 1):
        raise DomainError(f"series cohomology is only available for i in {{0, 1}}, got i={i}")
    v = spec.v_dimension
    if spec.rank == 4:
        a, b = spec.divisor_class
        # h^0 factors need m <= k - max(a, b); mixed h^0 h^1 terms need m <= k - min(a, b).
        last = max(0, k - min(a, b) + 2)
        return sum(
            _sym_dim(m, v) * coh_product(ProductLineBundle((1, 1), (k - a - m, k - b - m)), i)
            for m in range(last + 1)
        )
    if i == 1:
        return _acm_first_cohomology(spec, k)
    (s,) = spec.divisor_class
    return sum(
        _sym_dim(m, v) * coh_line(LineBundleOnPn(1, 2 * k - s - 2 * m), 0) for m in range(max(0, k) + 1)
    )


def _acm_first_cohomology(spec: QuadricDivisorSpec, k: int) -> int:
    """
    On a rank-3 cone the series over U diverges for i = 1. There
    h^1(Q, I_{X/Q}(k)) = h^1(P, I_X(k)), read from the table of the closed-form
    resolution of X.
    """
    return resolved_ideal_table(spec).exact(1, k)


@lru_cache(maxsize=256)
def series_support(spec: QuadricDivisorSpec, i: int) -> Support:
    if i not in (0, 1):
        raise DomainError(f"series cohomology is only available for i in {{0, 1}}, got i={i}")
    if spec.rank == 4:
        a, b = spec.divisor_class
        lo, hi = min(a, b) - 1, max(a, b) + 1
    else:
        c = (spec.divisor_class[0] + 1) // 2
        lo, hi = c - 1, c + 1
    if i == 1:
        return Support(lo, hi)
    return Support(lo, hi, ZERO, _h0_tail(spec))


def _h0_tail(spec: QuadricDivisorSpec) -> sp.Expr:
    m = sp.Symbol("m", integer=True, nonnegative=True)
    v = spec.v_dimension
    sym = binomial_polynomial(m + v - 1, v - 1)
    if spec.rank == 4:
        a, b = spec.divisor_class
        summand = sym * (K - a - m + 1) * (K - b - m + 1)
        upper = K - max(a, b)
    else:
        s = spec.divisor_class[0]
        summand = sym * (2 * K - s - 2 * m + 1)
        upper = K - (s + 1) // 2
    return sp.expand(sp.summation(sp.expand(summand), (m, 0, upper)))


@dataclass(frozen=True)
class SeriesExpr(SheafExpr):
    """I_{X/Q} pushed forward to P^{n+2}; rows i >= 2 are left unknown."""

    spec: QuadricDivisorSpec
    twist: int = 0

    @property
    def ambient(self) -> int:
        return self.spec.ambient

    def table(self) -> CohTable:
        spec, shift = self.spec, self.twist

        def evaluate(i, k):
            if i <= 1:
                return Interval.of(series_coh(spec, i, k + shift))
            return Interval.unknown()

        supports = {i: series_support(spec, i).shifted(shift) for i in (0, 1)}
        return CohTable(spec.ambient, evaluate, supports, f"I_X/Q ({spec.describe()})")


def depth_at_vertex(spec: QuadricDivisorSpec) -> int:
    return 3 if spec.rank == 4 else 2


def vertex_containment(spec: QuadricDivisorSpec) -> bool:
    return classify(spec).kind is ClassificationKind.LINKED_TO_LINEAR


def resolution(spec: QuadricDivisorSpec) -> BettiTable:
    """0 -> S(-a-1)^2 -> S(-2) + S(-a)^2 -> I_X -> 0 for the linked case."""
    classification = classify(spec)
    if classification.kind is ClassificationKind.COMPLETE_INTERSECTION:
        raise DomainError(f"{spec.describe()} is a complete intersection; use koszul instead")
    a = classification.degree
    if a < 2:
        raise DomainError(f"the linked resolution needs a >= 2, got a={a}")
    generators = {2: 1}
    generators[a] = generators.get(a, 0) + 2
    return BettiTable.from_rows(spec.ambient, [generators, {a + 1: 2}])


def ideal_resolution(spec: QuadricDivisorSpec) -> BettiTable:
    classification = classify(spec)
    if classification.kind is ClassificationKind.COMPLETE_INTERSECTION:
        return koszul(spec.ambient, (2, classification.degree))
    return resolution(spec)


@lru_cache(maxsize=64)
def resolved_ideal_table(spec: QuadricDivisorSpec) -> CohTable:
    return ideal_table_from_presentation(Presentation(spec.ambient, spec.n, betti=ideal_resolution(spec)))


def hilbert_function_on_ambient(spec: QuadricDivisorSpec, k: int) -> int:
    """h^0(P^{n+2}, I_X(k)) = h^0(O(k - 2)) + h^0(Q, I_{X/Q}(k))."""
    return coh_line(LineBundleOnPn(spec.ambient, k - 2), 0) + series_coh(spec, 0, k)


def cone_sequence(spec: QuadricDivisorSpec) -> ShortExactSeq:
    """0 -> O(-2) -> I_X -> I_{X/Q} -> 0 with the ideal of X unknown."""
    return ShortExactSeq(
        twisted_o(spec.ambient, -2),
        None,
        SeriesExpr(spec),
        label=f"cone sequence ({spec.describe()})",
    )


def presentation(spec: QuadricDivisorSpec) -> Presentation:
    return Presentation(spec.ambient, spec.n, betti=ideal_resolution(spec), sequence=cone_sequence(spec))
