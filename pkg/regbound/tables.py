# SPDX-License-Identifier: CC-BY-NC-4.0

"""
Cohomology tables: lazily evaluated maps (i, k) -> dimension or interval.

A table row i carries a Support: a window [lo, hi] of twists outside of which
the row is given by a closed form in k (a polynomial, often 0). Scans that
need "for all k >= k0" conclusions read these tails instead of evaluating
infinitely many cells.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import Callable, Dict, Optional

import sympy as sp

from regbound.errors import DomainError, InconsistentSequenceError, UncertainValueError

# Twist variable of every table tail.
K = sp.Symbol("k", integer=True)
ZERO = sp.Integer(0)


def binomial_polynomial(top, n: int) -> sp.Expr:
    """binom(top, n) as a polynomial in the symbols of ``top``."""
    if n < 0:
        return ZERO
    product = sp.Integer(1)
    for j in range(n):
        product *= (top - j)
    return sp.expand(product / factorial(n))


def is_zero(expr: Optional[sp.Expr]) -> bool:
    return expr is not None and sp.expand(expr) == 0


def evaluate_tail(expr: sp.Expr, k: int) -> int:
    value = sp.expand(expr).subs(K, k)
    if not value.is_integer:
        raise DomainError(f"tail polynomial {expr} is not integral at k={k}")
    return int(value)


@dataclass(frozen=True)
class Interval:
    """Dimension bounds [lo, hi]; hi=None means no upper bound is known."""

    lo: int
    hi: Optional[int] = None

    def __post_init__(self):
        if self.lo < 0:
            raise DomainError(f"dimension lower bound {self.lo} is negative")
        if self.hi is not None and self.hi < self.lo:
            raise InconsistentSequenceError(f"empty dimension interval [{self.lo}, {self.hi}]")

    @classmethod
    def of(cls, value: int) -> Interval:
        return cls(value, value)

    @classmethod
    def unknown(cls) -> Interval:
        return cls(0, None)

    @property
    def is_exact(self) -> bool:
        return self.hi == self.lo

    @property
    def value(self) -> int:
        if not self.is_exact:
            raise UncertainValueError(f"value is only known as {self.render()}")
        return self.lo

    def overlaps(self, other: Interval) -> bool:
        lo = max(self.lo, other.lo)
        return (self.hi is None or lo <= self.hi) and (other.hi is None or lo <= other.hi)

    def intersect(self, other: Interval) -> Interval:
        if not self.overlaps(other):
            raise InconsistentSequenceError(
                f"dimension bounds {self.render()} and {other.render()} are incompatible"
            )
        his = [h for h in (self.hi, other.hi) if h is not None]
        return Interval(max(self.lo, other.lo), min(his) if his else None)

    def __add__(self, other: Interval) -> Interval:
        hi = None if self.hi is None or other.hi is None else self.hi + other.hi
        return Interval(self.lo + other.lo, hi)

    def minus(self, other: Interval) -> Interval:
        """Bounds on x with x + other = self, clamped at 0."""
        lo = 0 if other.hi is None else max(0, self.lo - other.hi)
        hi = None if self.hi is None else self.hi - other.lo
        if hi is not None and hi < lo:
            raise InconsistentSequenceError(
                f"forced dimension {self.render()} minus {other.render()} is negative"
            )
        return Interval(lo, hi)

    def render(self) -> str:
        if self.is_exact:
            return str(self.lo)
        return f"{self.lo}..{'' if self.hi is None else self.hi}"

    def to_json(self):
        if self.is_exact:
            return self.lo
        return {"lo": self.lo, "hi": self.hi}


@dataclass(frozen=True)
class Support:
    """
    Window [lo, hi] for one cohomology row.

    For k < lo the row equals ``below`` and for k > hi it equals ``above``;
    a tail of None is not certified.
    """

    lo: int
    hi: int
    below: Optional[sp.Expr] = ZERO
    above: Optional[sp.Expr] = ZERO

    @classmethod
    def uncertified(cls) -> Support:
        return cls(0, 0, None, None)

    @property
    def vanishes_above(self) -> bool:
        return is_zero(self.above)

    @property
    def vanishes_below(self) -> bool:
        return is_zero(self.below)

    def shifted(self, j: int) -> Support:
        """Support of k -> row(k + j)."""
        return Support(
            self.lo - j,
            self.hi - j,
            _shift_expr(self.below, j),
            _shift_expr(self.above, j),
        )

    def __add__(self, other: Support) -> Support:
        return Support(
            min(self.lo, other.lo),
            max(self.hi, other.hi),
            _add_expr(self.below, other.below),
            _add_expr(self.above, other.above),
        )

    def tail_value(self, k: int) -> Optional[int]:
        """The certified closed-form value at k, or None inside the window."""
        if k < self.lo and self.below is not None:
            return evaluate_tail(self.below, k)
        if k > self.hi and self.above is not None:
            return evaluate_tail(self.above, k)
        return None

    def to_json(self) -> Dict:
        return {
            "lo": self.lo,
            "hi": self.hi,
            "below": None if self.below is None else str(self.below),
            "above": None if self.above is None else str(self.above),
        }


def _shift_expr(expr, j):
    return None if expr is None else sp.expand(expr.subs(K, K + j))


def _add_expr(a, b):
    return None if a is None or b is None else sp.expand(a + b)


Evaluator = Callable[[int, int], Interval]


class CohTable:
    """h^i(F(k)) for 0 <= i <= top, evaluated on demand."""

    def __init__(self, top: int, evaluator: Evaluator, supports: Dict[int, Support], label: str = ""):
        self.top = top
        self._evaluator = evaluator
        self._supports = supports
        self.label = label

    def _check_index(self, i: int) -> None:
        if not 0 <= i <= self.top:
            raise DomainError(f"cohomological index {i} outside [0, {self.top}] for {self.label or 'table'}")

    def value(self, i: int, k: int) -> Interval:
        self._check_index(i)
        return self._evaluator(i, k)

    def exact(self, i: int, k: int) -> int:
        value = self.value(i, k)
        if not value.is_exact:
            raise UncertainValueError(
                f"h^{i} of {self.label or 'table'} at k={k} is only known as {value.render()}"
            )
        return value.lo

    def support(self, i: int) -> Support:
        self._check_index(i)
        return self._supports.get(i, Support.uncertified())

    def twisted(self, j: int) -> CohTable:
        """The table of F(j): row(i)(k) = self(i, k + j)."""
        if j == 0:
            return self
        base = self
        return CohTable(
            self.top,
            lambda i, k: base.value(i, k + j),
            {i: s.shifted(j) for i, s in self._supports.items()},
            self.label,
        )

    def intersect(self, other: CohTable) -> CohTable:
        """Cellwise intersection of two tables describing the same sheaf."""
        if other.top != self.top:
            raise DomainError(f"cannot intersect tables with tops {self.top} and {other.top}")
        first, second = self, other
        supports = {}
        for i in range(self.top + 1):
            supports[i] = _narrower_support(first.support(i), second.support(i))
        return CohTable(
            self.top,
            lambda i, k: first.value(i, k).intersect(second.value(i, k)),
            supports,
            self.label or other.label,
        )


def _narrower_support(a: Support, b: Support) -> Support:
    below = a.below if a.below is not None else b.below
    above = a.above if a.above is not None else b.above
    # The window must cover both so that the chosen tails are valid outside it.
    return Support(min(a.lo, b.lo), max(a.hi, b.hi), below, above)


def euler_characteristic(table: CohTable, k: int) -> int:
    return sum((-1) ** i * table.exact(i, k) for i in range(table.top + 1))
