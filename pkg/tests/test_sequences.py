# SPDX-License-Identifier: CC-BY-NC-4.0

import pytest
import sympy as sp

from regbound.betti import BettiTable, hilbert_function, koszul
from regbound.bott import LineBundleOnPn, TwistedDifferential, coh_omega
from regbound.catalog import PalatiniScroll, TwoSkewLines
from regbound.errors import DomainError, InconsistentSequenceError
from regbound.sequences import (
    LineBundleSum,
    OmegaExpr,
    Presentation,
    ShortExactSeq,
    differentials_from_euler_sequence,
    euler_defect,
    euler_polynomial,
    ideal_pins,
    ideal_table_from_presentation,
    les_solve,
    propagate,
    table_from_resolution,
    twisted_o,
)
from regbound.tables import K, Interval, binomial_polynomial


def test_propagate_single_unknown():
    solved = propagate([Interval.of(1), Interval.unknown(), Interval.of(2)])
    assert solved[1] == Interval.of(3)


def test_propagate_leaves_two_unknowns_open():
    solved = propagate([Interval.of(2), Interval.unknown(), Interval.unknown()])
    assert solved[1].lo == 2
    assert not solved[1].is_exact


def test_propagate_detects_inconsistency():
    with pytest.raises(InconsistentSequenceError):
        propagate([Interval.of(1), Interval.of(0), Interval.of(0)])


def test_short_exact_sequence_validation():
    with pytest.raises(DomainError):
        ShortExactSeq(None, None, twisted_o(3))
    with pytest.raises(DomainError):
        ShortExactSeq(twisted_o(3), twisted_o(4), None)
    with pytest.raises(DomainError):
        Presentation(3, 1)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_euler_sequence_reproduces_bott(n):
    for p in range(min(2, n) + 1):
        table = differentials_from_euler_sequence(n, p)
        for k in range(-10, 11):
            for q in range(n + 1):
                assert table.exact(q, k) == coh_omega(TwistedDifferential(n, p, k), q), (p, q, k)


@pytest.mark.parametrize("t", [0, 1, 2, 3])
def test_palatini_first_cohomology_spike(t):
    table = ideal_table_from_presentation(PalatiniScroll(t).presentation())
    spike = 4 * t + 2
    for k in range(-5, spike + 11):
        assert table.exact(1, k) == (1 if k == spike else 0), k
    assert table.support(1).vanishes_above
    assert table.support(1).vanishes_below


def test_palatini_sections():
    table = ideal_table_from_presentation(PalatiniScroll(0).presentation())
    assert table.exact(0, 2) == 0
    assert table.exact(0, 3) == 0
    assert table.exact(0, 4) == 11


@pytest.mark.parametrize("t", [0, 1])
def test_palatini_sequence_conserves_euler_characteristic(t):
    p = PalatiniScroll(t).presentation()
    seq = p.sequence.with_hints(ideal_pins(p.N, p.n).twisted(p.c1_offset))
    solved = les_solve(seq)
    for k in range(-8, 12):
        assert euler_defect(seq, solved, k) == 0


def _within(inner: Interval, outer: Interval) -> bool:
    upper = outer.hi is None or (inner.hi is not None and inner.hi <= outer.hi)
    return inner.lo >= outer.lo and upper


def test_combined_presentation_only_narrows():
    p = TwoSkewLines().presentation()
    auto = ideal_table_from_presentation(p, "auto")
    betti = ideal_table_from_presentation(p, "betti")
    sequence = ideal_table_from_presentation(p, "sequence")
    for i in range(4):
        for k in range(-4, 7):
            assert _within(auto.value(i, k), betti.value(i, k)), (i, k)
            assert _within(auto.value(i, k), sequence.value(i, k)), (i, k)
    assert auto.exact(1, 0) == 1
    assert not sequence.value(1, 0).is_exact


def test_unknown_source_is_rejected():
    with pytest.raises(DomainError):
        ideal_table_from_presentation(TwoSkewLines().presentation(), "bogus")
    with pytest.raises(DomainError):
        ideal_table_from_presentation(PalatiniScroll(0).presentation(), "betti")


@pytest.mark.parametrize(
    "betti,n",
    [
        (koszul(5, (2, 2)), 3),
        (BettiTable.from_rows(5, [{2: 3}, {3: 2}]), 3),
        (BettiTable.from_rows(3, [{2: 4}, {3: 4}, {4: 1}]), 1),
    ],
)
def test_resolved_sections_match_hilbert_function(betti, n):
    table = table_from_resolution(betti, ideal_pins(betti.N, n))
    for k in range(-3, 8):
        assert table.exact(0, k) == hilbert_function(betti, k)


def test_euler_polynomial_of_line_bundles():
    assert sp.expand(euler_polynomial(twisted_o(3).table()) - binomial_polynomial(K + 3, 3)) == 0
    pushed = LineBundleSum(3, (LineBundleOnPn(1, 0, 2),))
    assert sp.expand(euler_polynomial(pushed.table()) - (2 * K + 2)) == 0


def test_omega_expr_twists():
    table = OmegaExpr(TwistedDifferential(5, 1, 0)).twisted(2).table()
    assert table.exact(0, 0) == 15
