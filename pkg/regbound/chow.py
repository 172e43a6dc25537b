# SPDX-License-Identifier: CC-BY-NC-4.0

"""
Chern classes in the Chow ring Z[h]/(h^{N+1}) of P^N.

Coefficients are sympy integers or integer polynomials in the family
parameter ``t``, so a whole family such as Omega^1(2 + t) is one computation.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import Iterable, Sequence, Tuple, Union

import sympy as sp

from regbound.bott import binom
from regbound.errors import DegenerateLocusError, DomainError

T = sp.Symbol("t", integer=True)

Coefficient = Union[int, sp.Expr]


@dataclass(frozen=True)
class ChowClass:
    """sum_i c_i h^i, truncated above h^N."""

    N: int
    coefficients: Tuple[sp.Expr, ...]

    @classmethod
    def of(cls, N: int, coefficients: Sequence[Coefficient]) -> ChowClass:
        if N < 1:
            raise DomainError(f"ambient dimension must be >= 1, got {N}")
        padded = [sp.expand(sp.sympify(c)) for c in coefficients[: N + 1]]
        padded += [sp.Integer(0)] * (N + 1 - len(padded))
        return cls(N, tuple(padded))

    @classmethod
    def one(cls, N: int) -> ChowClass:
        return cls.of(N, [1])

    def __getitem__(self, i: int) -> sp.Expr:
        if 0 <= i <= self.N:
            return self.coefficients[i]
        return sp.Integer(0)

    def __mul__(self, other: ChowClass) -> ChowClass:
        self._check_same_ring(other)
        product = [sp.Integer(0)] * (self.N + 1)
        for i, a in enumerate(self.coefficients):
            for j in range(self.N + 1 - i):
                product[i + j] += a * other.coefficients[j]
        return ChowClass.of(self.N, product)

    def inverse(self) -> ChowClass:
        """Inverse of a class with constant term 1."""
        if sp.expand(self[0] - 1) != 0:
            raise DomainError(f"only classes with constant term 1 are invertible, got {self[0]}")
        inverse = [sp.Integer(1)] + [sp.Integer(0)] * self.N
        for m in range(1, self.N + 1):
            inverse[m] = -sp.Add(*[self[i] * inverse[m - i] for i in range(1, m + 1)])
        return ChowClass.of(self.N, inverse)

    def dual(self) -> ChowClass:
        return ChowClass.of(self.N, [(-1) ** i * c for i, c in enumerate(self.coefficients)])

    def specialize(self, t: int) -> ChowClass:
        return ChowClass.of(self.N, [c.subs(T, t) for c in self.coefficients])

    def _check_same_ring(self, other: ChowClass) -> None:
        if other.N != self.N:
            raise DomainError(f"Chow rings of P^{self.N} and P^{other.N} do not mix")

    def render(self) -> str:
        terms = []
        for i, c in enumerate(self.coefficients):
            if c == 0:
                continue
            monomial = "" if i == 0 else ("h" if i == 1 else f"h^{i}")
            if i == 0:
                terms.append(str(c))
            elif c == 1:
                terms.append(monomial)
            else:
                terms.append(f"({c}){monomial}" if c.is_Add else f"{c}{monomial}")
        return " + ".join(terms).replace("+ -", "- ") or "0"

    def to_json(self):
        return [str(c) for c in self.coefficients]


@dataclass(frozen=True)
class BundleChernData:
    rank: int
    total: ChowClass

    def __post_init__(self):
        if self.rank < 1:
            raise DomainError(f"bundle rank must be positive, got {self.rank}")
        if sp.expand(self.total[0] - 1) != 0:
            raise DomainError("a total Chern class starts with 1")
        for i in range(self.rank + 1, self.total.N + 1):
            if sp.expand(self.total[i]) != 0:
                raise DomainError(f"c_{i} is nonzero on a bundle of rank {self.rank}")

    @property
    def N(self) -> int:
        return self.total.N

    def c(self, i: int) -> sp.Expr:
        return self.total[i]

    def specialize(self, t: int) -> BundleChernData:
        return BundleChernData(self.rank, self.total.specialize(t))


@dataclass(frozen=True)
class Dual:
    """Marks an operand of sum_dual_chern to be dualized."""

    data: BundleChernData


def line_bundle_chern(N: int, degree: Coefficient) -> BundleChernData:
    return BundleChernData(1, ChowClass.of(N, [1, degree]))


def split_bundle_chern(N: int, degrees: Iterable[Coefficient]) -> BundleChernData:
    return sum_dual_chern([line_bundle_chern(N, a) for a in degrees])


def chern_twist(data: BundleChernData, L_deg: Coefficient) -> BundleChernData:
    """c_k(E(L)) = sum_i binom(r - i, k - i) c_i(E) L^(k - i)."""
    r = data.rank
    L = sp.sympify(L_deg)
    twisted = []
    for k in range(data.N + 1):
        twisted.append(sp.Add(*[binom(r - i, k - i) * data.c(i) * L ** (k - i) for i in range(k + 1)]))
    return BundleChernData(r, ChowClass.of(data.N, twisted))


def chern_of_omega(n: int) -> BundleChernData:
    """Omega^1_{P^n}: total class (1 - h)^(n+1) from the Euler sequence."""
    if n < 1:
        raise DomainError(f"projective space dimension must be >= 1, got {n}")
    return BundleChernData(n, ChowClass.of(n, [(-1) ** i * binom(n + 1, i) for i in range(n + 1)]))


def sum_dual_chern(operands: Iterable[Union[BundleChernData, Dual]]) -> BundleChernData:
    """Whitney sum of the operands; Dual(...) operands enter dualized."""
    operands = list(operands)
    if not operands:
        raise DomainError("a direct sum needs at least one summand")
    total = None
    rank = 0
    for operand in operands:
        data = operand.data if isinstance(operand, Dual) else operand
        cls = data.total.dual() if isinstance(operand, Dual) else data.total
        total = cls if total is None else total * cls
        rank += data.rank
    return BundleChernData(rank, total)


def virtual_class(positive: Iterable[BundleChernData], negative: Iterable[BundleChernData]) -> ChowClass:
    """Total class of sum(positive) - sum(negative) in K-theory."""
    positive, negative = list(positive), list(negative)
    N = (positive or negative)[0].N
    total = ChowClass.one(N)
    for data in positive:
        total = total * data.total
    for data in negative:
        total = total * data.total.inverse()
    return total


def dependency_locus_degree(data: BundleChernData, source: BundleChernData = None) -> sp.Expr:
    """
    Degree of the codimension-2 locus where a map source -> data drops rank.

    ``source`` defaults to the trivial bundle of rank ``data.rank - 1``; the
    degree is c_2 of the virtual bundle data - source.
    """
    source_rank = data.rank - 1 if source is None else source.rank
    if data.rank - source_rank != 1:
        raise DomainError(f"dependency locus needs rank difference 1, got {data.rank} - {source_rank}")
    if data.N < 2:
        raise DomainError("a codimension-2 locus needs N >= 2")
    total = virtual_class([data], [] if source is None else [source])
    degree = sp.expand(total[2])
    if degree == 0:
        raise DegenerateLocusError("c_2 of the presenting bundle vanishes identically")
    return degree


def locus_degree_from_resolution(N: int, modules: Sequence[Sequence[Tuple[int, int]]], codim: int) -> sp.Expr:
    """
    Degree of a codimension-e subscheme from its ideal resolution.

    ``modules[i]`` lists (twist, multiplicity) pairs of F_i. In codimension e,
    c_e(I_X) = (-1)^e (e-1)! deg X and lower Chern classes vanish.
    """
    positive, negative = [], []
    for i, module in enumerate(modules):
        bundles = [line_bundle_chern(N, twist) for twist, count in module for _ in range(count)]
        (positive if i % 2 == 0 else negative).extend(bundles)
    total = virtual_class(positive, negative)
    for i in range(1, codim):
        if sp.expand(total[i]) != 0:
            raise DomainError(f"c_{i} of the ideal sheaf is {total[i]}, expected 0 in codimension {codim}")
    degree = sp.expand(total[codim] * (-1) ** codim / factorial(codim - 1))
    if degree == 0:
        raise DegenerateLocusError("the resolution has vanishing top Chern class")
    return degree
