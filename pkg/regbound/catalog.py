# SPDX-License-Identifier: CC-BY-NC-4.0

"""
Built-in varieties and the wiring from each to the engines.

The registry itself is package data (catalog.yml). Every invariant reported
here is computed through the other modules; the only numbers stated per
variant are the defining metadata (ambient, dimension, degree formula).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import prod
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple, Union

import sympy as sp
import yaml

from regbound import quadrics
from regbound.betti import (
    BettiTable,
    degree_and_sectional_genus,
    hilbert_function,
    koszul,
    variety_hilbert_function,
)
from regbound.bott import LineBundleOnPn, ProductLineBundle, TwistedDifferential, coh_product
from regbound.bounds import RegScanResult, regularity_scan
from regbound.chow import (
    T,
    chern_of_omega,
    chern_twist,
    dependency_locus_degree,
    locus_degree_from_resolution,
    split_bundle_chern,
)
from regbound.errors import DomainError, RegboundError
from regbound.quadrics import QuadricDivisorSpec
from regbound.sequences import (
    LineBundleSum,
    OmegaExpr,
    Presentation,
    ProductExpr,
    ShortExactSeq,
    euler_polynomial,
    ideal_table_from_presentation,
    twisted_o,
)
from regbound.tables import K, CohTable, binomial_polynomial

CATALOG_PATH = Path(__file__).with_name("catalog.yml")


def _structure_sequence(N: int, structure_sheaf) -> ShortExactSeq:
    return ShortExactSeq(None, twisted_o(N), structure_sheaf, label="structure sequence")


def _resolution_degree(betti: BettiTable, codim: int) -> sp.Expr:
    modules = [[(-j, beta) for j, beta in sorted(row.items())] for row in betti.rows()]
    return locus_degree_from_resolution(betti.N, modules, codim)


@dataclass(frozen=True)
class CompleteIntersection:
    N: int
    degrees: Tuple[int, ...]

    def __post_init__(self):
        koszul(self.N, self.degrees)

    @property
    def dim(self) -> int:
        return self.N - len(self.degrees)

    @property
    def degree(self) -> int:
        return prod(self.degrees)

    @property
    def label(self) -> str:
        return f"CI{self.degrees} in P^{self.N}"

    def presentation(self) -> Presentation:
        return Presentation(self.N, self.dim, betti=koszul(self.N, self.degrees))

    def chern_degree(self) -> sp.Expr:
        """Top Chern class of the bundle whose section cuts X."""
        return split_bundle_chern(self.N, self.degrees).c(len(self.degrees))

    def reference_sectional_genus(self) -> Optional[int]:
        """Adjunction on the curve section, a complete intersection in P^{e+1}."""
        e = len(self.degrees)
        return 1 + self.degree * (sum(self.degrees) - e - 2) // 2


@dataclass(frozen=True)
class PalatiniScroll:
    t: int = 0

    N = 5
    dim = 3

    def __post_init__(self):
        if self.t < 0:
            raise DomainError(f"Palatini parameter t must be >= 0, got {self.t}")

    @property
    def degree(self) -> int:
        return 10 * self.t ** 2 + 16 * self.t + 7

    @property
    def label(self) -> str:
        return f"Palatini scroll X_{self.t}"

    def bundle(self):
        """Chern data of Omega^1_{P^5}(2 + t), over the symbolic family parameter."""
        return chern_twist(chern_of_omega(self.N), 2 + T)

    def c1(self) -> int:
        return int(self.bundle().specialize(self.t).c(1))

    def presentation(self) -> Presentation:
        """0 -> O^4 -> Omega^1(2 + t) -> I_X(c_1) -> 0."""
        seq = ShortExactSeq(
            twisted_o(self.N, 0, self.N - 1),
            OmegaExpr(TwistedDifferential(self.N, 1, 2 + self.t)),
            None,
            label=f"dependency locus X_{self.t}",
        )
        return Presentation(self.N, self.dim, sequence=seq, c1_offset=self.c1())

    def chern_degree(self) -> sp.Expr:
        return dependency_locus_degree(self.bundle()).subs(T, self.t)

    def reference_sectional_genus(self) -> Optional[int]:
        return 4 if self.t == 0 else None


@dataclass(frozen=True)
class SegreThreefold:
    N = 5
    dim = 3
    degree = 3

    @property
    def label(self) -> str:
        return "Segre P^1 x P^2 in P^5"

    def betti(self) -> BettiTable:
        """2x2 minors of a generic 2x3 matrix of linear forms."""
        return BettiTable.from_rows(self.N, [{2: 3}, {3: 2}])

    def structure_sheaf(self) -> ProductExpr:
        return ProductExpr(ProductLineBundle((1, 2), (0, 0)), self.N)

    def presentation(self) -> Presentation:
        return Presentation(
            self.N, self.dim, betti=self.betti(), sequence=_structure_sequence(self.N, self.structure_sheaf())
        )

    def chern_degree(self) -> sp.Expr:
        return _resolution_degree(self.betti(), self.N - self.dim)

    def reference_sectional_genus(self) -> Optional[int]:
        """The curve section is a twisted cubic."""
        return 0


@dataclass(frozen=True)
class TwoSkewLines:
    N = 3
    dim = 1
    degree = 2

    @property
    def label(self) -> str:
        return "two skew lines in P^3"

    def betti(self) -> BettiTable:
        return BettiTable.from_rows(self.N, [{2: 4}, {3: 4}, {4: 1}])

    def structure_sheaf(self) -> LineBundleSum:
        return LineBundleSum(self.N, (LineBundleOnPn(1, 0, 2),))

    def presentation(self) -> Presentation:
        return Presentation(
            self.N, self.dim, betti=self.betti(), sequence=_structure_sequence(self.N, self.structure_sheaf())
        )

    def chern_degree(self) -> sp.Expr:
        return _resolution_degree(self.betti(), self.N - self.dim)

    def reference_sectional_genus(self) -> Optional[int]:
        return -1


@dataclass(frozen=True)
class QuadricDivisor:
    spec: QuadricDivisorSpec

    @property
    def N(self) -> int:
        return self.spec.ambient

    @property
    def dim(self) -> int:
        return self.spec.n

    @property
    def degree(self) -> int:
        return self.spec.degree

    @property
    def label(self) -> str:
        return f"divisor on a {self.spec.describe()}"

    def presentation(self) -> Presentation:
        return quadrics.presentation(self.spec)

    def chern_degree(self) -> sp.Expr:
        return _resolution_degree(quadrics.ideal_resolution(self.spec), 2)

    def reference_sectional_genus(self) -> Optional[int]:
        return None


VarietySpec = Union[CompleteIntersection, PalatiniScroll, SegreThreefold, TwoSkewLines, QuadricDivisor]


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    kind: str
    description: str
    params: Tuple[Tuple[str, object], ...]

    def spec(self, **overrides) -> VarietySpec:
        params = dict(self.params)
        params.update({key: value for key, value in overrides.items() if value is not None})
        if self.kind == "complete-intersection":
            return CompleteIntersection(int(params["N"]), tuple(int(d) for d in params["degrees"]))
        if self.kind == "palatini-scroll":
            return PalatiniScroll(int(params["t"]))
        if self.kind == "segre-threefold":
            return SegreThreefold()
        if self.kind == "two-skew-lines":
            return TwoSkewLines()
        if self.kind == "quadric-divisor":
            divisor_class = tuple(int(c) for c in params["class"])
            return QuadricDivisor(QuadricDivisorSpec(int(params["n"]), int(params["rank"]), divisor_class))
        raise DomainError(f"catalog entry {self.name!r} has unknown kind {self.kind!r}")

    def to_json(self):
        return {"name": self.name, "kind": self.kind, "description": self.description, "params": dict(self.params)}


def _freeze(value):
    return tuple(value) if isinstance(value, list) else value


@lru_cache(maxsize=4)
def load_catalog(path: Path = CATALOG_PATH) -> Dict[str, CatalogEntry]:
    with open(path, "r", encoding="utf-8") as f:
        data = yaml.safe_load(f)
    if not data or "varieties" not in data:
        raise DomainError(f"{path} has no 'varieties' list")
    entries = {}
    for item in data["varieties"]:
        params = tuple(sorted((key, _freeze(value)) for key, value in (item.get("params") or {}).items()))
        entry = CatalogEntry(item["name"], item["kind"], item.get("description", ""), params)
        entries[entry.name] = entry
    return entries


def catalog_names() -> List[str]:
    return list(load_catalog())


def get_entry(name: str) -> CatalogEntry:
    entries = load_catalog()
    if name not in entries:
        raise DomainError(f"unknown variety {name!r}; known: {', '.join(entries)}")
    return entries[name]


def build_spec(name: str, **overrides) -> VarietySpec:
    return get_entry(name).spec(**overrides)


def presentation(spec: VarietySpec) -> Presentation:
    return spec.presentation()


@lru_cache(maxsize=64)
def ideal_table(spec: VarietySpec, source: str = "auto") -> CohTable:
    table = ideal_table_from_presentation(presentation(spec), source)
    table.label = f"I_X ({spec.label})"
    return table


def variety_hilbert_polynomial(spec: VarietySpec) -> sp.Expr:
    """chi(O_X(k)) = chi(O(k)) - chi(I_X(k))."""
    return sp.expand(binomial_polynomial(K + spec.N, spec.N) - euler_polynomial(ideal_table(spec)))


@dataclass(frozen=True)
class InvariantRecord:
    label: str
    dim: int
    codim: int
    degree: int
    sectional_genus: int
    reg: int
    first_normal_from: Optional[int]
    hilbert_polynomial: str
    failures: Tuple[Tuple[int, int], ...]

    def to_json(self):
        return {
            "variety": self.label,
            "dim": self.dim,
            "codim": self.codim,
            "degree": self.degree,
            "sectional_genus": self.sectional_genus,
            "reg": self.reg,
            "first_normal_from": self.first_normal_from,
            "hilbert_polynomial": self.hilbert_polynomial,
            "failures": [{"i": i, "k": k} for i, k in self.failures],
        }


def regularity(spec: VarietySpec) -> RegScanResult:
    return regularity_scan(ideal_table(spec), spec.dim)


def invariants(spec: VarietySpec) -> InvariantRecord:
    poly = variety_hilbert_polynomial(spec)
    degree, genus = degree_and_sectional_genus(poly, spec.dim)
    scan = regularity(spec)
    return InvariantRecord(
        spec.label,
        spec.dim,
        spec.N - spec.dim,
        degree,
        genus,
        scan.reg,
        scan.first_normal_from,
        str(poly),
        scan.failures,
    )


def degree_triple_check(spec: VarietySpec) -> Tuple[bool, List[str]]:
    """Metadata, Chern and Hilbert-polynomial degrees must agree. Returns (is_valid, issues)."""
    issues = []
    degrees = {"metadata": spec.degree}
    try:
        degrees["chern"] = int(spec.chern_degree())
    except RegboundError as e:
        issues.append(f"Chern degree unavailable: {e}")
    try:
        degrees["hilbert"] = degree_and_sectional_genus(variety_hilbert_polynomial(spec), spec.dim)[0]
    except RegboundError as e:
        issues.append(f"Hilbert degree unavailable: {e}")
    if len(set(degrees.values())) > 1:
        issues.append("degree mismatch: " + ", ".join(f"{k}={v}" for k, v in degrees.items()))
    return not issues, issues


def genus_check(spec: VarietySpec) -> Tuple[bool, List[str]]:
    """Derived sectional genus against the reference value, when one is recorded."""
    expected = spec.reference_sectional_genus()
    if expected is None:
        return True, []
    _, genus = degree_and_sectional_genus(variety_hilbert_polynomial(spec), spec.dim)
    if genus != expected:
        return False, [f"sectional genus {genus} derived from the Hilbert polynomial, reference value {expected}"]
    return True, []


def cross_check(spec: VarietySpec, margin: int = 5) -> Tuple[bool, List[str]]:
    """
    Resolution and sequence presentations must agree: exactly where both
    tables are exact, and by overlapping intervals elsewhere.
    """
    p = presentation(spec)
    if p.betti is None or p.sequence is None:
        return True, []
    issues = []
    first = ideal_table(spec, "betti")
    second = ideal_table(spec, "sequence")
    reg = regularity(spec).reg
    for i in range(spec.dim + 2):
        for k in range(-margin, reg + margin + 1):
            a, b = first.value(i, k), second.value(i, k)
            if a.is_exact and b.is_exact:
                if a.lo != b.lo:
                    issues.append(f"h^{i} at k={k}: resolution gives {a.lo}, sequence gives {b.lo}")
            elif not a.overlaps(b):
                issues.append(f"h^{i} at k={k}: {a.render()} and {b.render()} are disjoint")
    return not issues, issues


def hilbert_function_check(spec: VarietySpec, ks: Sequence[int]) -> Tuple[bool, List[str]]:
    """
    h^0(I_X(k)) from the solved table against independent closed forms:
    the resolution's Hilbert function, the quadric series, and for the
    Segre threefold the Kunneth count h^0(O(k, k)) of the coordinate ring.
    """
    issues = []
    table = ideal_table(spec)
    betti = presentation(spec).betti
    for k in ks:
        solved = table.exact(0, k)
        if betti is not None and solved != hilbert_function(betti, k):
            issues.append(f"k={k}: table gives {solved}, resolution gives {hilbert_function(betti, k)}")
        if isinstance(spec, QuadricDivisor):
            series = quadrics.hilbert_function_on_ambient(spec.spec, k)
            if solved != series:
                issues.append(f"k={k}: table gives {solved}, quadric series gives {series}")
        if isinstance(spec, SegreThreefold) and k >= 0:
            kunneth = coh_product(ProductLineBundle((1, 2), (k, k)), 0)
            if variety_hilbert_function(spec.betti(), k) != kunneth:
                issues.append(f"k={k}: coordinate ring has dimension {variety_hilbert_function(spec.betti(), k)}, "
                              f"Kunneth gives {kunneth}")
    return not issues, issues

