# SPDX-License-Identifier: CC-BY-NC-4.0

import pytest
import sympy as sp

from regbound import catalog, quadrics
from regbound.catalog import CatalogEntry, CompleteIntersection, PalatiniScroll
from regbound.errors import DomainError
from regbound.sequences import SOLVED_TWISTS_PER_TABLE
from regbound.tables import K

ALL_NAMES = ["ci22", "palatini", "segre", "skew-lines", "quadric-linked", "quadric-ci", "p3-linear"]


def test_catalog_names():
    assert catalog.catalog_names() == ALL_NAMES


def test_entries_serialize():
    entry = catalog.get_entry("ci22")
    assert entry.to_json()["params"] == {"N": 5, "degrees": (2, 2)}
    assert entry.kind == "complete-intersection"


@pytest.mark.parametrize(
    "name,degree,genus,reg,first_normal_from",
    [
        ("palatini", 7, 4, 4, 3),
        ("segre", 3, 0, 2, None),
        ("ci22", 4, 1, 3, None),
        ("skew-lines", 2, -1, 2, 1),
    ],
)
def test_invariants(name, degree, genus, reg, first_normal_from):
    record = catalog.invariants(catalog.build_spec(name))
    assert record.degree == degree
    assert record.sectional_genus == genus
    assert record.reg == reg
    assert record.first_normal_from == first_normal_from
    assert record.to_json()["codim"] == record.codim


@pytest.mark.parametrize("t", [0, 1, 2, 3])
def test_palatini_family(t):
    spec = PalatiniScroll(t)
    assert spec.c1() == 4 + 5 * t
    assert spec.chern_degree() == spec.degree == 10 * t * t + 16 * t + 7


def test_palatini_rejects_negative_parameter():
    with pytest.raises(DomainError):
        PalatiniScroll(-1)


@pytest.mark.parametrize("name", ALL_NAMES)
def test_degree_triple_check(name):
    ok, issues = catalog.degree_triple_check(catalog.build_spec(name))
    assert ok, issues


@pytest.mark.parametrize("name", ["segre", "skew-lines", "quadric-linked", "quadric-ci"])
def test_presentations_agree(name):
    ok, issues = catalog.cross_check(catalog.build_spec(name))
    assert ok, issues


@pytest.mark.parametrize("name", ALL_NAMES)
def test_hilbert_function_check(name):
    ok, issues = catalog.hilbert_function_check(catalog.build_spec(name), range(-2, 8))
    assert ok, issues


def test_hilbert_polynomial_of_skew_lines():
    poly = catalog.variety_hilbert_polynomial(catalog.build_spec("skew-lines"))
    assert sp.expand(poly - (2 * K + 2)) == 0


def test_overrides():
    assert catalog.build_spec("palatini", t=2).degree == 79
    assert catalog.build_spec("palatini", t=None) == PalatiniScroll(0)
    assert catalog.build_spec("ci22", degrees=[2, 3]) == CompleteIntersection(5, (2, 3))


def test_unknown_variety():
    with pytest.raises(DomainError, match="unknown variety"):
        catalog.build_spec("veronese")
    with pytest.raises(DomainError):
        CatalogEntry("x", "bogus", "", ()).spec()


def test_malformed_catalog_file(tmp_path):
    path = tmp_path / "catalog.yml"
    path.write_text("entries: []\n", encoding="utf-8")
    with pytest.raises(DomainError):
        catalog.load_catalog(path)


@pytest.mark.parametrize("name", ALL_NAMES)
def test_genus_check(name):
    ok, issues = catalog.genus_check(catalog.build_spec(name))
    assert ok, issues


def test_complete_intersection_reference_genus():
    assert CompleteIntersection(3, (2, 3)).reference_sectional_genus() == 4
    assert CompleteIntersection(5, (2, 2)).reference_sectional_genus() == 1
    assert PalatiniScroll(1).reference_sectional_genus() is None


@pytest.mark.parametrize(
    "cached",
    [catalog.load_catalog, catalog.ideal_table, quadrics.series_support, quadrics.resolved_ideal_table],
)
def test_caches_are_bounded(cached):
    assert cached.cache_info().maxsize is not None


def test_values_survive_cache_eviction():
    assert SOLVED_TWISTS_PER_TABLE < 340
    table = catalog.ideal_table(catalog.build_spec("palatini", t=3))
    for k in range(-40, 300):
        table.value(1, k)
    assert table.exact(1, 14) == 1
