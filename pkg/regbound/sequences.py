# SPDX-License-Identifier: CC-BY-NC-4.0

"""
Long-exact-sequence rank solver.

A short exact sequence 0 -> A -> B -> C -> 0 of sheaves on P^N with two
known slots gives, at every twist k, the long exact sequence

    0 -> H^0(A) -> H^0(B) -> H^0(C) -> H^1(A) -> ... -> H^N(C) -> 0.

Only dimensions are tracked. With r_j the rank of the map leaving group j,
dim V_j = r_{j-1} + r_j and r = 0 at both ends; interval propagation of that
relation to a fixed point splits the sequence at zero groups and solves a
segment exactly when it holds a single unknown group. Segments with two or
more unknowns stay intervals.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

import sympy as sp

from regbound.betti import BettiTable
from regbound.bott import (
    LineBundleOnPn,
    ProductLineBundle,
    TwistedDifferential,
    binom,
    coh_line,
    coh_omega,
    coh_product,
    line_support,
    omega_support,
    product_support,
)
from regbound.errors import CertificationError, DomainError, InconsistentSequenceError
from regbound.tables import K, ZERO, CohTable, Interval, Support, euler_characteristic, is_zero


class SheafExpr:
    """A sheaf on P^ambient with computable cohomology, twisted by ``twist``."""

    twist: int = 0

    @property
    def ambient(self) -> int:
        raise NotImplementedError

    def table(self) -> CohTable:
        raise NotImplementedError

    def twisted(self, j: int) -> SheafExpr:
        return replace(self, twist=self.twist + j)


@dataclass(frozen=True)
class LineBundleSum(SheafExpr):
    """
    A direct sum of line bundles. A summand on P^m with m < N is a line bundle
    on a linear subspace pushed forward to P^N.
    """

    N: int
    summands: Tuple[LineBundleOnPn, ...]
    twist: int = 0

    def __post_init__(self):
        for bundle in self.summands:
            if bundle.n > self.N:
                raise DomainError(f"summand on P^{bundle.n} does not fit in P^{self.N}")

    @property
    def ambient(self) -> int:
        return self.N

    def table(self) -> CohTable:
        summands = [b.twisted(self.twist) for b in self.summands]

        def evaluate(i, k):
            return Interval.of(sum(coh_line(b.twisted(k), i) for b in summands if i <= b.n))

        supports = {}
        for i in range(self.N + 1):
            support = Support(0, 0)
            for bundle in summands:
                if i <= bundle.n:
                    support = support + line_support(bundle, i)
            supports[i] = support
        return CohTable(self.N, evaluate, supports, self.describe())

    def describe(self) -> str:
        parts = []
        for b in self.summands:
            power = f"^{b.r}" if b.r > 1 else ""
            space = "" if b.n == self.N else f"_P{b.n}"
            parts.append(f"O{space}({b.k + self.twist}){power}")
        return " + ".join(parts) or "0"


def twisted_o(N: int, k: int = 0, r: int = 1) -> LineBundleSum:
    return LineBundleSum(N, (LineBundleOnPn(N, k, r),))


@dataclass(frozen=True)
class OmegaExpr(SheafExpr):
    bundle: TwistedDifferential
    twist: int = 0

    @property
    def ambient(self) -> int:
        return self.bundle.n

    def table(self) -> CohTable:
        bundle = self.bundle.twisted(self.twist)
        supports = {q: omega_support(bundle, q) for q in range(bundle.n + 1)}
        return CohTable(
            bundle.n,
            lambda i, k: Interval.of(coh_omega(bundle.twisted(k), i)),
            supports,
            f"Omega^{bundle.p}({bundle.k})",
        )


@dataclass(frozen=True)
class ProductExpr(SheafExpr):
    """A line bundle on P^n1 x P^n2 embedded in P^N, twisted along O(1, 1)."""

    bundle: ProductLineBundle
    N: int
    twist: int = 0

    @property
    def ambient(self) -> int:
        return self.N

    def table(self) -> CohTable:
        bundle = self.bundle.twisted(self.twist)
        top = bundle.dimension

        def evaluate(i, k):
            return Interval.of(coh_product(bundle.twisted(k), i) if i <= top else 0)

        supports = {
            i: product_support(bundle, i) if i <= top else Support(0, 0) for i in range(self.N + 1)
        }
        return CohTable(self.N, evaluate, supports, f"O{bundle.degrees}")


@dataclass(frozen=True)
class OpaqueExpr(SheafExpr):
    source: CohTable
    twist: int = 0

    @property
    def ambient(self) -> int:
        return self.source.top

    def table(self) -> CohTable:
        return self.source.twisted(self.twist)


@dataclass(frozen=True)
class ShortExactSeq:
    """0 -> left -> middle -> right -> 0 with exactly one slot left as None."""

    left: Optional[SheafExpr]
    middle: Optional[SheafExpr]
    right: Optional[SheafExpr]
    hints: Optional[CohTable] = None
    label: str = ""
    notes: Tuple[Tuple[str, object], ...] = ()

    def __post_init__(self):
        missing = [slot for slot in self.slots if slot is None]
        if len(missing) != 1:
            raise DomainError(f"a short exact sequence needs exactly one unknown slot, got {len(missing)}")
        ambients = {slot.ambient for slot in self.slots if slot is not None}
        if len(ambients) != 1:
            raise DomainError(f"slots live on different projective spaces: {sorted(ambients)}")
        if self.hints is not None and self.hints.top != self.ambient:
            raise DomainError("hints must describe a sheaf on the same projective space")

    @property
    def slots(self) -> Tuple[Optional[SheafExpr], ...]:
        return (self.left, self.middle, self.right)

    @property
    def unknown_slot(self) -> int:
        return self.slots.index(None)

    @property
    def ambient(self) -> int:
        return next(slot.ambient for slot in self.slots if slot is not None)

    def note(self, key: str):
        return dict(self.notes).get(key)

    def with_hints(self, hints: Optional[CohTable]) -> ShortExactSeq:
        return replace(self, hints=hints)


def propagate(groups: Sequence[Interval]) -> List[Interval]:
    """
    Tighten the dimensions of an exact sequence 0 -> V_0 -> ... -> V_{L-1} -> 0.

    ranks[j] is the rank of the map entering V_j, so V_j = ranks[j] + ranks[j+1]
    with ranks[0] = ranks[L] = 0.
    """
    values = list(groups)
    length = len(values)
    ranks = [Interval.of(0)] + [Interval.unknown() for _ in range(length - 1)] + [Interval.of(0)]
    for _ in range(4 * length + 4):
        before = (list(values), list(ranks))
        for j in range(length):
            ranks[j + 1] = ranks[j + 1].intersect(values[j].minus(ranks[j]))
        for j in reversed(range(length)):
            ranks[j] = ranks[j].intersect(values[j].minus(ranks[j + 1]))
        for j in range(length):
            values[j] = values[j].intersect(ranks[j] + ranks[j + 1])
        if (values, ranks) == before:
            return values
    return values


class _Unknown:
    pass


_UNKNOWN = _Unknown()

# Twists whose solved row one les_solve table keeps.
SOLVED_TWISTS_PER_TABLE = 256


def _solve_tails(groups: List) -> List[Optional[sp.Expr]]:
    """
    Closed forms of the unknown groups far from every window.

    ``groups`` holds a tail expression (None when uncertified) for known
    groups and _UNKNOWN for unknown ones. A maximal segment between zero
    groups with one unknown and certified neighbours has alternating sum 0.
    """
    solved: List[Optional[sp.Expr]] = [None] * len(groups)
    segment: List[int] = []

    def close(segment):
        unknowns = [p for p in segment if groups[p] is _UNKNOWN]
        if len(unknowns) != 1 or any(groups[p] is None for p in segment):
            return
        u = unknowns[0]
        total = sum(((-1) ** (p + u + 1)) * groups[p] for p in segment if p != u)
        solved[u] = sp.expand(sp.sympify(total))

    for position, group in enumerate(groups):
        if group is not _UNKNOWN and is_zero(group):
            close(segment)
            segment = []
        else:
            segment.append(position)
    close(segment)
    return solved


def les_solve(seq: ShortExactSeq) -> CohTable:
    """Cohomology table of the unknown slot of ``seq``, evaluated lazily per twist."""
    top = seq.ambient
    unknown = seq.unknown_slot
    known = [slot.table() if slot is not None else None for slot in seq.slots]
    hints = seq.hints

    @lru_cache(maxsize=SOLVED_TWISTS_PER_TABLE)
    def solve_at(k: int) -> Tuple[Interval, ...]:
        groups = []
        for i in range(top + 1):
            for slot in range(3):
                if slot == unknown:
                    groups.append(hints.value(i, k) if hints is not None else Interval.unknown())
                else:
                    groups.append(known[slot].value(i, k))
        try:
            solved = propagate(groups)
        except InconsistentSequenceError as e:
            raise InconsistentSequenceError(f"{seq.label or 'sequence'} at k={k}: {e}") from e
        return tuple(solved[3 * i + unknown] for i in range(top + 1))

    supports = _derive_supports(known, unknown, hints, top)
    return CohTable(top, lambda i, k: solve_at(k)[i], supports, seq.label)


def _derive_supports(known, unknown, hints, top) -> Dict[int, Support]:
    windows = []
    for table in known:
        if table is not None:
            windows.extend(table.support(i) for i in range(top + 1))
    if hints is not None:
        hinted = (hints.support(i) for i in range(top + 1))
        windows.extend(s for s in hinted if s.below is not None or s.above is not None)
    lo = min(s.lo for s in windows)
    hi = max(s.hi for s in windows)

    tails = {}
    for side in ("below", "above"):
        groups = []
        for i in range(top + 1):
            for slot in range(3):
                if slot == unknown:
                    hinted = getattr(hints.support(i), side) if hints is not None else None
                    groups.append(_UNKNOWN if hinted is None else hinted)
                else:
                    groups.append(getattr(known[slot].support(i), side))
        solved = _solve_tails(groups)
        rows = []
        for i in range(top + 1):
            position = 3 * i + unknown
            rows.append(solved[position] if groups[position] is _UNKNOWN else groups[position])
        tails[side] = rows
    return {i: Support(lo, hi, tails["below"][i], tails["above"][i]) for i in range(top + 1)}


def ideal_pins(N: int, n: int) -> CohTable:
    """
    Vanishing known for the ideal sheaf of any n-dimensional X in P^N:
    h^i(I_X(k)) = h^{i-1}(O_X(k)) = 0 for n+2 <= i <= N-1, and
    h^N(I_X(k)) = h^N(O(k)) when n <= N-2. Other rows are unconstrained.
    """
    ambient = twisted_o(N).table()

    def evaluate(i, k):
        if n + 2 <= i <= N - 1:
            return Interval.of(0)
        if i == N and n <= N - 2:
            return ambient.value(N, k)
        return Interval.unknown()

    supports = {}
    for i in range(N + 1):
        if n + 2 <= i <= N - 1:
            supports[i] = Support(0, 0)
        elif i == N and n <= N - 2:
            supports[i] = ambient.support(N)
        else:
            supports[i] = Support.uncertified()
    return CohTable(N, evaluate, supports, f"pins(dim {n})")


def support_vanishing(N: int, n: int, label: str = "") -> CohTable:
    """Hints for a sheaf supported in dimension n: rows above n vanish."""

    def evaluate(i, k):
        return Interval.of(0) if i > n else Interval.unknown()

    supports = {i: Support(0, 0) if i > n else Support.uncertified() for i in range(N + 1)}
    return CohTable(N, evaluate, supports, label)


def resolution_modules(betti: BettiTable) -> List[LineBundleSum]:
    """F_i = sum_j S(-j)^beta_ij as sheaves on P^N."""
    return [
        LineBundleSum(betti.N, tuple(LineBundleOnPn(betti.N, -j, beta) for j, beta in sorted(row.items())))
        for row in betti.rows()
    ]


def table_from_resolution(betti: BettiTable, hints: Optional[CohTable] = None) -> CohTable:
    """Chain les_solve over the syzygy sequences 0 -> K_i -> F_i -> K_{i-1} -> 0."""
    modules = resolution_modules(betti)
    if not modules:
        raise DomainError("an empty Betti table resolves nothing")
    if len(modules) == 1:
        table = modules[0].table()
        return table if hints is None else table.intersect(hints)
    kernel = modules[-1].table()
    for i in range(len(modules) - 2, 0, -1):
        kernel = les_solve(ShortExactSeq(OpaqueExpr(kernel), modules[i], None, label=f"syzygy {i - 1}"))
    return les_solve(ShortExactSeq(OpaqueExpr(kernel), modules[0], None, hints=hints, label="ideal"))


@dataclass(frozen=True)
class Presentation:
    """
    How the ideal sheaf of an n-dimensional X in P^N is presented.

    ``sequence`` has the ideal in its unknown slot twisted by ``c1_offset``;
    ``betti`` is a graded resolution of the saturated ideal.
    """

    N: int
    n: int
    betti: Optional[BettiTable] = None
    sequence: Optional[ShortExactSeq] = None
    c1_offset: int = 0

    def __post_init__(self):
        if self.betti is None and self.sequence is None:
            raise DomainError("a presentation needs a Betti table or a short exact sequence")
        if self.betti is not None and self.betti.N != self.N:
            raise DomainError(f"Betti table lives on P^{self.betti.N}, expected P^{self.N}")
        if self.sequence is not None and self.sequence.ambient != self.N:
            raise DomainError(f"sequence lives on P^{self.sequence.ambient}, expected P^{self.N}")


def ideal_table_from_presentation(presentation: Presentation, source: str = "auto") -> CohTable:
    """
    h^i(I_X(k)) in the natural grading of I_X.

    ``source`` is "betti", "sequence" or "auto"; with both presentations
    available, "auto" solves the sequence with the resolution's table as
    hints, which can only narrow it.
    """
    if source not in ("auto", "betti", "sequence"):
        raise DomainError(f"unknown presentation source {source!r}")
    pins = ideal_pins(presentation.N, presentation.n)
    resolved = None
    if presentation.betti is not None and source in ("auto", "betti"):
        resolved = table_from_resolution(presentation.betti, pins)
    if source == "betti" and resolved is None:
        raise DomainError("presentation has no Betti table")
    if presentation.sequence is None or source == "betti":
        if resolved is None:
            raise DomainError("presentation has no short exact sequence")
        return resolved
    hints = pins if resolved is None else pins.intersect(resolved)
    offset = presentation.c1_offset
    solved = les_solve(presentation.sequence.with_hints(hints.twisted(offset)))
    return solved.twisted(-offset)


def euler_polynomial(table: CohTable) -> sp.Expr:
    """chi(F(k)) as a polynomial, read off the certified upper tails."""
    total = ZERO
    for i in range(table.top + 1):
        above = table.support(i).above
        if above is None:
            raise CertificationError(f"row {i} of {table.label or 'table'} has no certified upper tail")
        total += (-1) ** i * above
    return sp.expand(total)


def euler_defect(seq: ShortExactSeq, solved: CohTable, k: int) -> int:
    """chi(middle) - chi(left) - chi(right) at twist k; 0 for a consistent solve."""
    tables = [slot.table() if slot is not None else solved for slot in seq.slots]
    chis = [euler_characteristic(t, k) for t in tables]
    return chis[1] - chis[0] - chis[2]


def _intermediate_vanishing(n: int, p: int) -> CohTable:
    def evaluate(i, k):
        if 0 < i < n and not (i == p and k == 0):
            return Interval.of(0)
        return Interval.unknown()

    supports = {i: Support(-1, 1) if 0 < i < n else Support.uncertified() for i in range(n + 1)}
    return CohTable(n, evaluate, supports, f"vanishing(Omega^{p})")


def differentials_from_euler_sequence(n: int, p: int) -> CohTable:
    """
    h^q(Omega^p(k)) on P^n derived from the sequences
    0 -> Omega^p(k) -> wedge^p V (x) O(k - p) -> Omega^{p-1}(k) -> 0,
    given only that intermediate cohomology can sit nowhere but (q, k) = (p, 0).
    """
    if not 0 <= p <= n:
        raise DomainError(f"form degree p={p} outside [0, {n}]")
    if p == 0:
        return twisted_o(n).table()
    previous = differentials_from_euler_sequence(n, p - 1)
    seq = ShortExactSeq(
        None,
        twisted_o(n, -p, binom(n + 1, p)),
        OpaqueExpr(previous),
        hints=_intermediate_vanishing(n, p),
        label=f"Euler sequence for Omega^{p}",
    )
    return les_solve(seq)
