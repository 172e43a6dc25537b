# SPDX-License-Identifier: CC-BY-NC-4.0

import pytest
import sympy as sp

from regbound import catalog
from regbound.betti import BettiTable, koszul, regularity_of_table
from regbound.bounds import (
    D,
    Atom,
    Det,
    NormalityRow,
    Setting,
    Sym,
    Tensor,
    Twist,
    Wedge,
    bound_chain,
    extremal_degrees,
    normality_bound_holds,
    normality_scan,
    propagate_bound,
    regularity_scan,
    render_term,
    split_c1,
    strictly_below_from,
    threefold_bound_at,
)
from regbound.catalog import PalatiniScroll, TwoSkewLines
from regbound.errors import CertificationError, DomainError
from regbound.sequences import ideal_pins, ideal_table_from_presentation, table_from_resolution
from regbound.tables import Interval


def test_propagation_rules():
    f = Atom("F", 2, 3)
    assert propagate_bound(Sym(2, f)) == 6
    assert propagate_bound(Wedge(2, f)) == 6
    assert propagate_bound(Twist(f, 2)) == 1
    assert propagate_bound(Tensor(f, Atom("G", 1, -1))) == 2
    assert sp.expand(propagate_bound(Det(Atom("E", 3, D))) - 3 * D) == 0
    assert Sym(2, f).rank == 3
    assert render_term(Tensor(Wedge(1, f), Twist(f, 1))) == "wedge^1(F) (x) F(1)"


def test_non_affine_bounds_are_rejected():
    with pytest.raises(DomainError):
        propagate_bound(Atom("F", 1, D ** 2))
    with pytest.raises(DomainError):
        propagate_bound(Atom("F", 1, sp.Symbol("y")))
    with pytest.raises(DomainError):
        Wedge(3, Atom("F", 2, 0))
    with pytest.raises(DomainError):
        Atom("F", 0, 0)


def test_propagation_is_monotone():
    previous = None
    for b in range(-4, 5):
        current = propagate_bound(Tensor(Sym(2, Atom("F", 2, b)), Twist(Atom("G", 1, b), -1)))
        if previous is not None:
            assert current >= previous
        previous = current


@pytest.mark.parametrize("setting", list(Setting))
def test_bound_chain(setting):
    result = bound_chain(setting)
    assert sp.expand(result.bound - (D - 3)) == 0
    assert len(result.axioms) == 4
    names = {axiom.name for axiom in result.axioms}
    assert {"kodaira-vanishing", "zak-linear-normality", "no-hyperquadric"} <= names
    record = result.to_json()
    assert record["bound"] == "reg <= d - 3"
    assert record["assumptions"][0]["name"] == "projection-fibers"


def test_surface_chain_excludes_veronese():
    assert any("Veronese" in e for e in bound_chain("surface-p4").exceptions)
    assert bound_chain("threefold-p5").exceptions == ()


def test_split_c1():
    assert split_c1(Setting.THREEFOLD_P5) == -6
    assert split_c1(Setting.SURFACE_P4) == -3


def test_threefold_bound():
    assert threefold_bound_at(3) == 2
    assert threefold_bound_at(4) == 3
    assert threefold_bound_at(7) == 4
    assert threefold_bound_at(10) == 7
    with pytest.raises(DomainError):
        threefold_bound_at(0)


def test_extremal_degrees():
    assert extremal_degrees() == [3, 4]
    assert strictly_below_from(5)
    assert not strictly_below_from(3)
    for d in range(5, 40):
        assert threefold_bound_at(d) < d - 1


@pytest.mark.parametrize("t", [0, 1, 2])
def test_palatini_scan(t):
    spec = PalatiniScroll(t)
    result = catalog.regularity(spec)
    assert result.first_normal_from == 4 * t + 3
    # h^1 spike at 4t + 2 against h^4(I(5t - 2)) = h^5(O(-6)^4) = 4.
    assert result.reg == max(4 * t + 4, 5 * t + 3)
    assert result.reg <= spec.degree - 3
    assert normality_bound_holds(result, spec.degree)


@pytest.mark.parametrize(
    "name,reg,first_normal_from",
    [("ci22", 3, None), ("segre", 2, None), ("skew-lines", 2, 1), ("quadric-linked", 3, None), ("p3-linear", 1, None)],
)
def test_catalog_scans(name, reg, first_normal_from):
    result = catalog.regularity(catalog.build_spec(name))
    assert result.reg == reg
    assert result.first_normal_from == first_normal_from


@pytest.mark.parametrize(
    "betti,n",
    [
        (koszul(5, (2, 2)), 3),
        (koszul(4, (2, 3)), 2),
        (koszul(3, (3, 4)), 1),
        (BettiTable.from_rows(5, [{2: 3}, {3: 2}]), 3),
    ],
)
def test_scan_agrees_with_betti_regularity(betti, n):
    table = table_from_resolution(betti, ideal_pins(betti.N, n))
    assert regularity_scan(table, n).reg == regularity_of_table(betti)


def test_skew_lines_scan_agrees_with_betti_regularity():
    spec = TwoSkewLines()
    assert catalog.regularity(spec).reg == regularity_of_table(spec.betti())


def test_uncertified_table_is_refused():
    table = ideal_table_from_presentation(TwoSkewLines().presentation(), "sequence")
    with pytest.raises(CertificationError):
        regularity_scan(table, 1)


def test_normality_scan():
    table = catalog.ideal_table(PalatiniScroll(0))
    rows = normality_scan(table, range(0, 7))
    assert [row.normal for row in rows] == [True, True, False, True, True, True, True]
    assert rows[2].to_json() == {"k": 2, "h1": 1, "normal": False}


def test_normality_row_with_intervals():
    assert NormalityRow(0, Interval(0, 2)).normal is None
    assert NormalityRow(0, Interval(1, 2)).normal is False
