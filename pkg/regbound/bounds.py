# SPDX-License-Identifier: CC-BY-NC-4.0

"""
Regularity bounds, symbolic and scanned.

The symbolic half propagates regularity bounds through tensor, symmetric and
exterior powers, twists and determinants, with every bound an affine form in
a formal degree ``d``. The premises of a bound chain are vanishing theorems
that are not checked here; they travel with the result as named axioms.

The scanning half reads certified cohomology tables: reg(X) is the least m
with h^i(I_X(m - i)) = 0 for every i >= 1, and X is k-normal when
h^1(I_X(k)) = 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterable, List, Optional, Tuple, Union

import sympy as sp

from regbound.bott import binom
from regbound.chow import split_bundle_chern
from regbound.errors import CertificationError, DomainError
from regbound.tables import CohTable, Interval, evaluate_tail, is_zero

# Formal degree of the variety.
D = sp.Symbol("d", integer=True)

Bound = Union[int, sp.Expr]


@dataclass(frozen=True)
class Atom:
    name: str
    rank: int
    bound: Bound

    def __post_init__(self):
        if self.rank < 1:
            raise DomainError(f"{self.name} must have positive rank, got {self.rank}")


@dataclass(frozen=True)
class Tensor:
    left: RegTerm
    right: RegTerm

    @property
    def rank(self) -> int:
        return self.left.rank * self.right.rank


@dataclass(frozen=True)
class Sym:
    k: int
    term: RegTerm

    @property
    def rank(self) -> int:
        return binom(self.term.rank + self.k - 1, self.k)


@dataclass(frozen=True)
class Wedge:
    k: int
    term: RegTerm

    def __post_init__(self):
        if not 1 <= self.k <= self.term.rank:
            raise DomainError(f"wedge^{self.k} of a rank-{self.term.rank} bundle is zero or undefined")

    @property
    def rank(self) -> int:
        return binom(self.term.rank, self.k)


@dataclass(frozen=True)
class Twist:
    term: RegTerm
    j: int

    @property
    def rank(self) -> int:
        return self.term.rank


@dataclass(frozen=True)
class Det:
    term: RegTerm

    @property
    def rank(self) -> int:
        return 1


RegTerm = Union[Atom, Tensor, Sym, Wedge, Twist, Det]


def _affine(expr: Bound) -> sp.Expr:
    expr = sp.expand(sp.sympify(expr))
    if expr.free_symbols - {D}:
        raise DomainError(f"bound {expr} involves symbols other than d")
    if sp.Poly(expr, D).degree() > 1:
        raise DomainError(f"bound {expr} is not affine in d")
    return expr


def propagate_bound(term: RegTerm) -> sp.Expr:
    """
    reg(F (x) G) <= reg F + reg G, reg S^k F and reg wedge^k F <= k reg F,
    reg F(j) = reg F - j, and det F = wedge^rank F.
    """
    if isinstance(term, Atom):
        return _affine(term.bound)
    if isinstance(term, Tensor):
        return _affine(propagate_bound(term.left) + propagate_bound(term.right))
    if isinstance(term, (Sym, Wedge)):
        if term.k < 0:
            raise DomainError(f"power {term.k} is negative")
        return _affine(term.k * propagate_bound(term.term))
    if isinstance(term, Twist):
        return _affine(propagate_bound(term.term) - term.j)
    if isinstance(term, Det):
        return propagate_bound(Wedge(term.term.rank, term.term))
    raise DomainError(f"not a regularity term: {term!r}")


def render_term(term: RegTerm) -> str:
    if isinstance(term, Atom):
        return term.name
    if isinstance(term, Tensor):
        return f"{render_term(term.left)} (x) {render_term(term.right)}"
    if isinstance(term, Sym):
        return f"S^{term.k}({render_term(term.term)})"
    if isinstance(term, Wedge):
        return f"wedge^{term.k}({render_term(term.term)})"
    if isinstance(term, Twist):
        return f"{render_term(term.term)}({term.j})"
    return f"det({render_term(term.term)})"


@dataclass(frozen=True)
class Axiom:
    name: str
    statement: str

    def to_json(self) -> Dict[str, str]:
        return {"name": self.name, "statement": self.statement}


class Setting(Enum):
    THREEFOLD_P5 = "threefold-p5"
    SURFACE_P4 = "surface-p4"


_PROJECTION_FIBERS = Axiom(
    "projection-fibers",
    "a generic projection from a point has fibres of length at most the rank of E, "
    "so pi_* O_X is a quotient of O(-r+1) + ... + O(-1) + O with kernel E",
)

_AXIOMS = {
    Setting.THREEFOLD_P5: (
        Axiom("kodaira-vanishing", "h^2(O_X(-1)) = 0"),
        Axiom("barth-larsen", "h^1(O_X) = 0 for a smooth threefold in P^5"),
        Axiom("zak-linear-normality", "X is linearly normal"),
        Axiom("no-hyperquadric", "h^0(I_X(2)) = 0"),
    ),
    Setting.SURFACE_P4: (
        Axiom("kodaira-vanishing", "h^1(O_S(-1)) = 0"),
        Axiom("regular-surface", "h^1(O_S) = 0"),
        Axiom("zak-linear-normality", "S is linearly normal"),
        Axiom("no-hyperquadric", "h^0(I_S(2)) = 0"),
    ),
}

_EXCEPTIONS = {
    Setting.THREEFOLD_P5: (),
    Setting.SURFACE_P4: ("the Veronese surface is excluded",),
}


@dataclass(frozen=True)
class ChainResult:
    setting: Setting
    term: RegTerm
    bound: sp.Expr
    axioms: Tuple[Axiom, ...]
    assumptions: Tuple[Axiom, ...]
    exceptions: Tuple[str, ...] = ()
    steps: Tuple[str, ...] = field(default=())

    def to_json(self):
        return {
            "setting": self.setting.value,
            "term": render_term(self.term),
            "bound": f"reg <= {self.bound}",
            "axioms": [a.to_json() for a in self.axioms],
            "assumptions": [a.to_json() for a in self.assumptions],
            "exceptions": list(self.exceptions),
            "steps": list(self.steps),
        }


def _setting_shape(setting: Setting) -> Tuple[int, int]:
    """(ambient of the projection target, rank of E)."""
    return (4, 4) if setting is Setting.THREEFOLD_P5 else (3, 3)


def split_c1(setting: Setting) -> int:
    """c_1 of O(-r+1) + ... + O(-1) + O on the projection target."""
    target, rank = _setting_shape(setting)
    return int(split_bundle_chern(target, [-j for j in range(rank)]).c(1))


def det_twist(setting: Setting) -> sp.Expr:
    """det E = O(c_1(split) - d); the -d is taken as given, not computed from pi_* O_X."""
    return sp.expand(split_c1(setting) - D)


def bound_chain(setting: Union[Setting, str]) -> ChainResult:
    """
    reg(X) <= reg(E) with E = wedge^{r-1} E* (x) det E, E* (-3)-regular and
    reg(det E) = -(c_1 of det E).
    """
    setting = Setting(setting)
    _, rank = _setting_shape(setting)
    twist = det_twist(setting)
    dual = Atom("E*", rank, -3)
    det = Atom("det E", 1, -twist)
    term = Tensor(Wedge(rank - 1, dual), det)
    bound = propagate_bound(term)
    steps = (
        f"E* is (-3)-regular, so reg wedge^{rank - 1} E* <= {propagate_bound(term.left)}",
        f"det E = O({twist}), so reg det E = {propagate_bound(det)}",
        f"reg X <= reg E <= {bound}",
    )
    return ChainResult(
        setting,
        term,
        bound,
        _AXIOMS[setting],
        (_PROJECTION_FIBERS,),
        _EXCEPTIONS[setting],
        steps,
    )


@dataclass(frozen=True)
class BoundBranch:
    name: str
    bound: sp.Expr
    min_degree: int
    parity: Optional[int] = None

    def applies(self, d: int) -> bool:
        return d >= self.min_degree and (self.parity is None or d % 2 == self.parity)

    def at(self, d: int) -> int:
        return int(self.bound.subs(D, d))


def global_threefold_bound() -> Tuple[BoundBranch, ...]:
    """Smooth threefolds in P^5: off any hyperquadric, or on one and linked, or on one and a CI."""
    return (
        BoundBranch("not-on-quadric", bound_chain(Setting.THREEFOLD_P5).bound, 1),
        BoundBranch("quadric-linked", (D + 1) / 2, 3, parity=1),
        BoundBranch("quadric-ci", D / 2 + 1, 4, parity=0),
    )


def threefold_bound_at(d: int) -> int:
    branches = [b for b in global_threefold_bound() if b.applies(d)]
    if not branches:
        raise DomainError(f"no smooth threefold branch applies in degree {d}")
    return max(b.at(d) for b in branches)


def extremal_degrees() -> List[int]:
    """Degrees where some branch reaches reg = d - 1."""
    found = set()
    for branch in global_threefold_bound():
        for root in sp.solve(sp.Eq(branch.bound, D - 1), D):
            if root.is_integer and branch.applies(int(root)):
                found.add(int(root))
    return sorted(found)


def strictly_below_from(start: int) -> bool:
    """True when every branch stays strictly below d - 1 for all real d >= start."""
    x = sp.Symbol("x", real=True)
    for branch in global_threefold_bound():
        gap = sp.expand(branch.bound.subs(D, x) - (x - 1))
        if gap.is_number:
            if not gap < 0:
                return False
            continue
        region = sp.solve_univariate_inequality(gap < 0, x, relational=False)
        if not sp.Interval(start, sp.oo).is_subset(region):
            return False
    return True


@dataclass(frozen=True)
class RegScanResult:
    reg: int
    first_normal_from: Optional[int]
    failures: Tuple[Tuple[int, int], ...]

    def to_json(self):
        return {
            "reg": self.reg,
            "first_normal_from": self.first_normal_from,
            "failures": [{"i": i, "k": k} for i, k in self.failures],
        }


def _last_nonzero(table: CohTable, i: int, probe: int) -> Optional[int]:
    """Largest k with h^i(F(k)) != 0, or None when the row vanishes identically."""
    support = table.support(i)
    if not is_zero(support.above):
        raise CertificationError(f"row {i} of {table.label or 'table'} has no certified vanishing for large k")
    for k in range(support.hi, support.lo - 1, -1):
        value = table.value(i, k)
        if not value.is_exact:
            raise CertificationError(f"h^{i} at k={k} is only known as {value.render()}; cannot certify")
        if value.lo:
            return k
    if support.below is None:
        for k in range(support.lo - 1, support.lo - 1 - probe, -1):
            value = table.value(i, k)
            if not value.is_exact:
                raise CertificationError(f"h^{i} at k={k} is only known as {value.render()}; cannot certify")
            if value.lo:
                return k
        raise CertificationError(f"row {i} of {table.label or 'table'} has no certified lower tail")
    if is_zero(support.below):
        return None
    k = support.lo - 1
    while evaluate_tail(support.below, k) == 0:
        k -= 1
    return k


def regularity_scan(table: CohTable, dim_x: int, probe: int = 12) -> RegScanResult:
    if dim_x < 0 or dim_x >= table.top:
        raise DomainError(f"variety dimension {dim_x} does not fit in P^{table.top}")
    lasts = {}
    for i in range(1, min(dim_x + 1, table.top) + 1):
        last = _last_nonzero(table, i, probe)
        if last is not None:
            lasts[i] = last
    if not lasts:
        raise CertificationError("no nonvanishing row; the table does not describe a proper subvariety")
    reg = max(last + i + 1 for i, last in lasts.items())
    first_normal = lasts[1] + 1 if 1 in lasts else None
    return RegScanResult(reg, first_normal, tuple(sorted(lasts.items())))


@dataclass(frozen=True)
class NormalityRow:
    k: int
    h1: Interval

    @property
    def normal(self) -> Optional[bool]:
        if self.h1.is_exact:
            return self.h1.lo == 0
        return False if self.h1.lo > 0 else None

    def to_json(self):
        return {"k": self.k, "h1": self.h1.to_json(), "normal": self.normal}


def normality_scan(table: CohTable, ks: Iterable[int]) -> List[NormalityRow]:
    return [NormalityRow(k, table.value(1, k)) for k in ks]


def normality_bound_holds(result: RegScanResult, d: int) -> bool:
    """X is k-normal for every k >= d - 4."""
    return result.first_normal_from is None or result.first_normal_from <= d - 4
