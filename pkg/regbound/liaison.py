# SPDX-License-Identifier: CC-BY-NC-4.0

"""
Deficiency modules and the liaison duality.

If X1 and X2 of dimension n in P^N are linked by a complete intersection X
with degrees d_1..d_e (e = N - n) and d = sum d_i, then

    M^{n-i+1}(X2) = M^i(X1)^dual (N + 1 - d),

and only graded dimensions are compared:

    dim M^{n-i+1}(X2)_k = dim M^i(X1)_{d-N-1-k}.

The graded dual is (M^dual)_k = dual of M_{-k}.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from regbound.betti import GradedDims, koszul
from regbound.errors import CertificationError, DomainError
from regbound.sequences import (
    OpaqueExpr,
    ShortExactSeq,
    ideal_pins,
    les_solve,
    support_vanishing,
    table_from_resolution,
)
from regbound.tables import CohTable


@dataclass(frozen=True)
class DeficiencyModules:
    """modules[i - 1] holds the graded dimensions of M^i(X), for i = 1..n."""

    N: int
    n: int
    d: int
    modules: Tuple[GradedDims, ...]

    def __post_init__(self):
        if not 1 <= self.n < self.N:
            raise DomainError(f"dimension {self.n} does not fit in P^{self.N}")
        if len(self.modules) != self.n:
            raise DomainError(f"expected {self.n} deficiency modules, got {len(self.modules)}")
        for i, module in enumerate(self.modules, start=1):
            # Asserted for locally Cohen-Macaulay X, not proven.
            if not module.is_finite:
                raise DomainError(f"M^{i} is not finitely supported")

    def module(self, i: int) -> GradedDims:
        if not 1 <= i <= self.n:
            raise DomainError(f"deficiency module index {i} outside [1, {self.n}]")
        return self.modules[i - 1]

    @property
    def is_acm(self) -> bool:
        return all(m.is_zero() for m in self.modules)

    def shifted(self, i: int, j: int) -> DeficiencyModules:
        """Replace M^i by M^i(j)."""
        modules = list(self.modules)
        modules[i - 1] = modules[i - 1].shifted(j)
        return DeficiencyModules(self.N, self.n, self.d, tuple(modules))

    def to_json(self):
        return {
            "N": self.N,
            "n": self.n,
            "d": self.d,
            "modules": {str(i): m.to_json() for i, m in enumerate(self.modules, start=1)},
        }


def deficiency_modules(table: CohTable, n: int, d: int) -> DeficiencyModules:
    """M^1..M^n from an ideal table whose rows 1..n have certified finite support."""
    modules = []
    for i in range(1, n + 1):
        support = table.support(i)
        if not (support.vanishes_below and support.vanishes_above):
            raise CertificationError(f"row {i} of {table.label or 'table'} is not certified finitely supported")
        modules.append(GradedDims.from_mapping({k: table.exact(i, k) for k in range(support.lo, support.hi + 1)}))
    return DeficiencyModules(table.top, n, d, tuple(modules))


def duality_check(m1: DeficiencyModules, m2: DeficiencyModules) -> Tuple[bool, List[Tuple[int, int]]]:
    """
    Compare M(X2) with the twisted dual of M(X1). A witness (i, k) means
    dim M^{n-i+1}(X2)_k != dim M^i(X1)_{d-N-1-k}.
    """
    if (m1.N, m1.n, m1.d) != (m2.N, m2.n, m2.d):
        raise DomainError(
            f"linked pair must share (N, n, d); got {(m1.N, m1.n, m1.d)} and {(m2.N, m2.n, m2.d)}"
        )
    N, n, d = m1.N, m1.n, m1.d
    shift = d - N - 1
    witnesses = []
    for i in range(1, n + 1):
        source = m1.module(i)
        target = m2.module(n - i + 1)
        ks = set(target.nonzero_degrees()) | {shift - k for k in source.nonzero_degrees()}
        for k in sorted(ks):
            if target[k] != source[shift - k]:
                witnesses.append((i, k))
    return not witnesses, witnesses


def linked_ideal_sequence(x1_table: CohTable, ci_degrees: Sequence[int], n: int) -> ShortExactSeq:
    """
    0 -> I_X -> I_{X1} -> omega_{X2}(N + 1 - d) -> 0 for a complete
    intersection X of the given degrees containing X1.
    """
    N = x1_table.top
    e = len(ci_degrees)
    if e != N - n:
        raise DomainError(f"linking {n}-dimensional varieties in P^{N} needs {N - n} equations, got {e}")
    d = sum(ci_degrees)
    ci_table = table_from_resolution(koszul(N, ci_degrees), ideal_pins(N, n))
    return ShortExactSeq(
        OpaqueExpr(ci_table),
        OpaqueExpr(x1_table),
        None,
        hints=support_vanishing(N, n, "omega rows above dim X"),
        label=f"linkage by CI{tuple(ci_degrees)}",
        notes=(("d", d), ("twist", N + 1 - d)),
    )


def dualizing_table(seq: ShortExactSeq) -> CohTable:
    """omega_{X2} in its natural grading, solved from a linkage sequence."""
    twist = seq.note("twist")
    if twist is None:
        raise DomainError(f"{seq.label or 'sequence'} is not a linkage sequence")
    return les_solve(seq).twisted(-twist)
