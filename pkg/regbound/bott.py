# SPDX-License-Identifier: CC-BY-NC-4.0

"""
Closed-form cohomology of line bundles and twisted differentials on P^n and of
line bundles on P^n1 x P^n2.

Every ``coh_*`` function has a ``*_support`` companion describing the family
k -> h^q(bundle twisted by k): a window of k outside which the value is 0 or a
stated polynomial in k.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Tuple

from regbound.errors import DomainError
from regbound.tables import K, ZERO, Support, binomial_polynomial


def binom(a: int, b: int) -> int:
    """Binomial coefficient with binom(a, b) = 0 whenever b < 0 or a < b."""
    if b < 0 or a < b:
        return 0
    return comb(a, b)


@dataclass(frozen=True)
class LineBundleOnPn:
    """O_{P^n}(k)^r."""

    n: int
    k: int
    r: int = 1

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"projective space dimension must be >= 1, got {self.n}")
        if self.r < 1:
            raise DomainError(f"rank multiplier must be >= 1, got {self.r}")

    def twisted(self, j: int) -> LineBundleOnPn:
        return LineBundleOnPn(self.n, self.k + j, self.r)


@dataclass(frozen=True)
class TwistedDifferential:
    """Omega^p_{P^n}(k)."""

    n: int
    p: int
    k: int

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"projective space dimension must be >= 1, got {self.n}")
        if not 0 <= self.p <= self.n:
            raise DomainError(f"form degree p={self.p} outside [0, {self.n}]")

    def twisted(self, j: int) -> TwistedDifferential:
        return TwistedDifferential(self.n, self.p, self.k + j)

    @property
    def rank(self) -> int:
        return binom(self.n, self.p)


@dataclass(frozen=True)
class ProductLineBundle:
    """O(a, b) on P^n1 x P^n2."""

    dims: Tuple[int, int]
    degrees: Tuple[int, int]

    def __post_init__(self):
        if len(self.dims) != 2 or len(self.degrees) != 2:
            raise DomainError("products have exactly two factors")
        if min(self.dims) < 1:
            raise DomainError(f"factor dimensions must be >= 1, got {self.dims}")

    @property
    def dimension(self) -> int:
        return self.dims[0] + self.dims[1]

    def twisted(self, j: int) -> ProductLineBundle:
        """Twist along the diagonal, i.e. by the Segre hyperplane class O(1, 1)."""
        return ProductLineBundle(self.dims, (self.degrees[0] + j, self.degrees[1] + j))


def _check_q(q: int, top: int) -> None:
    if not 0 <= q <= top:
        raise DomainError(f"cohomological index q={q} outside [0, {top}]")


def coh_line(bundle: LineBundleOnPn, q: int) -> int:
    n, k = bundle.n, bundle.k
    _check_q(q, n)
    if q == 0 and k >= 0:
        return bundle.r * binom(n + k, n)
    if q == n and k <= -n - 1:
        return bundle.r * binom(-k - 1, n)
    return 0


def coh_omega(bundle: TwistedDifferential, q: int) -> int:
    """Bott's formula for h^q(P^n, Omega^p(k))."""
    n, p, k = bundle.n, bundle.p, bundle.k
    _check_q(q, n)
    if q == 0 and k > p:
        return binom(k + n - p, k) * binom(k - 1, p)
    if q == p and k == 0:
        return 1
    if q == n and k < p - n:
        return binom(-k + p, -k) * binom(-k - 1, n - p)
    return 0


def coh_product(bundle: ProductLineBundle, q: int) -> int:
    """Kunneth: sum over i + j = q of h^i(O(a)) h^j(O(b))."""
    (n1, n2), (a, b) = bundle.dims, bundle.degrees
    _check_q(q, n1 + n2)
    total = 0
    for i in range(max(0, q - n2), min(n1, q) + 1):
        total += coh_line(LineBundleOnPn(n1, a), i) * coh_line(LineBundleOnPn(n2, b), q - i)
    return total


def line_support(bundle: LineBundleOnPn, q: int) -> Support:
    n, k0, r = bundle.n, bundle.k, bundle.r
    _check_q(q, n)
    lo, hi = -k0 - n - 1, -k0 + 1
    if q == 0:
        return Support(lo, hi, ZERO, r * binomial_polynomial(K + k0 + n, n))
    if q == n:
        return Support(lo, hi, r * binomial_polynomial(-K - k0 - 1, n), ZERO)
    return Support(lo, hi)


def omega_support(bundle: TwistedDifferential, q: int) -> Support:
    n, p, k0 = bundle.n, bundle.p, bundle.k
    _check_q(q, n)
    lo, hi = -k0 - n - 2, -k0 + p + 2
    if q == 0:
        above = binomial_polynomial(K + k0 + n - p, n - p) * binomial_polynomial(K + k0 - 1, p)
        return Support(lo, hi, ZERO, above)
    if q == n:
        below = binomial_polynomial(-K - k0 + p, p) * binomial_polynomial(-K - k0 - 1, n - p)
        return Support(lo, hi, below, ZERO)
    return Support(lo, hi)


def product_support(bundle: ProductLineBundle, q: int) -> Support:
    """Support along diagonal twists k -> O(a + k, b + k)."""
    (n1, n2), (a, b) = bundle.dims, bundle.degrees
    _check_q(q, n1 + n2)
    lo, hi = -max(a, b) - n1 - n2 - 2, -min(a, b) + 2
    if q == 0:
        above = binomial_polynomial(K + a + n1, n1) * binomial_polynomial(K + b + n2, n2)
        return Support(lo, hi, ZERO, above)
    if q == n1 + n2:
        below = binomial_polynomial(-K - a - 1, n1) * binomial_polynomial(-K - b - 1, n2)
        return Support(lo, hi, below, ZERO)
    return Support(lo, hi)
