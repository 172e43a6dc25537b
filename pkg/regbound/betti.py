# SPDX-License-Identifier: CC-BY-NC-4.0

"""
Graded Betti tables of ideal resolutions over S = k[x_0..x_N].

Tables are input data (Koszul complexes, closed-form resolutions from the
quadric module, catalog tables); nothing here computes syzygies. Convention:
beta_0 lists the minimal generators of the ideal, and the regularity of a
table is reg(I_X), which is also what reg(X) means throughout the package.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from math import factorial
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

import sympy as sp

from regbound.bott import binom
from regbound.errors import DomainError, NonExactTableError
from regbound.tables import K, ZERO, binomial_polynomial, evaluate_tail, is_zero


@dataclass(frozen=True)
class BettiTable:
    N: int
    entries: Tuple[Tuple[int, int, int], ...]

    def __post_init__(self):
        if self.N < 1:
            raise DomainError(f"ambient dimension must be >= 1, got {self.N}")
        for i, j, beta in self.entries:
            if i < 0 or beta < 0:
                raise DomainError(f"invalid Betti entry beta_{i},{j} = {beta}")

    @classmethod
    def from_rows(cls, N: int, rows: Sequence[Mapping[int, int]]) -> BettiTable:
        """Build from rows[i] = {j: beta_ij}."""
        entries = []
        for i, row in enumerate(rows):
            for j, beta in sorted(row.items()):
                if beta:
                    entries.append((i, j, beta))
        return cls(N, tuple(entries))

    @property
    def length(self) -> int:
        """Index of the last nonzero homological degree."""
        return max((i for i, _, _ in self.entries), default=-1)

    def row(self, i: int) -> Dict[int, int]:
        return {j: beta for ii, j, beta in self.entries if ii == i}

    def rows(self) -> List[Dict[int, int]]:
        return [self.row(i) for i in range(self.length + 1)]

    def beta(self, i: int, j: int) -> int:
        return self.row(i).get(j, 0)

    @property
    def generator_count(self) -> int:
        return sum(self.row(0).values())

    def to_json(self) -> Dict:
        return {"N": self.N, "rows": [{str(j): b for j, b in row.items()} for row in self.rows()]}


@dataclass(frozen=True)
class GradedDims:
    """
    Graded dimensions k -> dim M_k, listed inside a window, with closed-form
    tails outside it (zero for finitely supported modules).
    """

    values: Tuple[Tuple[int, int], ...]
    lo: int = 0
    hi: int = -1
    below: Optional[sp.Expr] = ZERO
    above: Optional[sp.Expr] = ZERO

    def __post_init__(self):
        for k, value in self.values:
            if value < 0:
                raise DomainError(f"graded dimension at {k} is negative: {value}")

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, int]) -> GradedDims:
        values = tuple(sorted((k, v) for k, v in mapping.items() if v))
        if not values:
            return cls(())
        return cls(values, values[0][0], values[-1][0])

    def __getitem__(self, k: int) -> int:
        if k < self.lo and self.below is not None:
            return evaluate_tail(self.below, k)
        if k > self.hi and self.above is not None:
            return evaluate_tail(self.above, k)
        return dict(self.values).get(k, 0)

    @property
    def is_finite(self) -> bool:
        return is_zero(self.below) and is_zero(self.above)

    def nonzero_degrees(self) -> List[int]:
        if not self.is_finite:
            raise DomainError("graded dimensions are not finitely supported")
        return [k for k, v in self.values if v]

    def is_zero(self) -> bool:
        return self.is_finite and not self.values

    def shifted(self, j: int) -> GradedDims:
        """M(j), i.e. degree k holds M_{k+j}."""
        return GradedDims.from_mapping({k - j: v for k, v in self.values})

    def to_json(self) -> Dict[str, int]:
        return {str(k): v for k, v in self.values if v}


def koszul(N: int, degrees: Sequence[int]) -> BettiTable:
    """Betti table of the ideal of a complete intersection of the given degrees."""
    e = len(degrees)
    if not 1 <= e <= N:
        raise DomainError(f"a complete intersection in P^{N} needs 1 <= e <= {N} equations, got {e}")
    if any(d < 1 for d in degrees):
        raise DomainError(f"degrees must be positive, got {tuple(degrees)}")
    rows = []
    for size in range(1, e + 1):
        rows.append(Counter(sum(subset) for subset in combinations(degrees, size)))
    return BettiTable.from_rows(N, rows)


def regularity_of_table(table: BettiTable) -> int:
    if not table.entries:
        raise DomainError("the zero table has no regularity")
    return max(j - i for i, j, _ in table.entries)


def hilbert_function(table: BettiTable, k: int) -> int:
    """dim of the degree-k piece of the resolved ideal."""
    N = table.N
    value = sum((-1) ** i * beta * binom(k - j + N, N) for i, j, beta in table.entries)
    if value < 0:
        raise NonExactTableError(f"Betti table gives negative Hilbert function {value} at k={k}")
    return value


def variety_hilbert_function(table: BettiTable, k: int) -> int:
    return binom(k + table.N, table.N) - hilbert_function(table, k)


def hilbert_polynomial(table: BettiTable) -> sp.Expr:
    """Hilbert polynomial of the ideal, in the twist variable k."""
    N = table.N
    terms = [(-1) ** i * beta * binomial_polynomial(K - j + N, N) for i, j, beta in table.entries]
    return sp.expand(sp.Add(*terms))


def variety_hilbert_polynomial(table: BettiTable) -> sp.Expr:
    return sp.expand(binomial_polynomial(K + table.N, table.N) - hilbert_polynomial(table))


def degree_and_sectional_genus(polynomial: sp.Expr, n: int) -> Tuple[int, int]:
    """
    Degree and sectional genus of an n-dimensional variety from its Hilbert
    polynomial. The curve section polynomial is the (n-1)-fold backward
    difference P(k) - P(k-1) iterated, and the genus is 1 - P_C(0).
    """
    if n < 1:
        raise DomainError(f"dimension must be >= 1, got {n}")
    poly = sp.Poly(sp.expand(polynomial), K)
    if poly.degree() != n:
        raise DomainError(f"Hilbert polynomial has degree {poly.degree()}, expected {n}")
    degree = poly.LC() * factorial(n)
    if not degree.is_integer:
        raise DomainError(f"non-integral degree {degree}")
    curve = sp.expand(polynomial)
    for _ in range(n - 1):
        curve = sp.expand(curve - curve.subs(K, K - 1))
    return int(degree), int(1 - curve.subs(K, 0))


def render_betti(table: BettiTable) -> str:
    """Macaulay-style diagonal layout: column i, row j - i."""
    columns = range(table.length + 1)
    shifts = sorted({j - i for i, j, _ in table.entries})
    cells = {(i, j - i): beta for i, j, beta in table.entries}
    width = max([len(str(b)) for _, _, b in table.entries] + [len(str(table.length)), 1])
    header = "       " + " ".join(str(i).rjust(width) for i in columns)
    totals = [sum(table.row(i).values()) for i in columns]
    lines = [header, "total: " + " ".join(str(t).rjust(width) for t in totals)]
    for shift in shifts:
        entries = [str(cells[(i, shift)]) if (i, shift) in cells else "." for i in columns]
        lines.append(f"{shift:>5}: " + " ".join(e.rjust(width) for e in entries))
    return "\n".join(lines)
