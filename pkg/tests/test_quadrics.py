# SPDX-License-Identifier: CC-BY-NC-4.0

import pytest

from regbound import quadrics
from regbound.betti import hilbert_function, regularity_of_table
from regbound.errors import DomainError
from regbound.quadrics import ClassificationKind, QuadricDivisorSpec
from regbound.sequences import ideal_table_from_presentation


@pytest.mark.parametrize(
    "n,rank,divisor_class",
    [(2, 4, (1, 0)), (3, 4, (3, 2)), (3, 4, (3, 3)), (4, 4, (0, 1)), (2, 3, (1,)), (3, 3, (4,))],
)
def test_accepted_classes(n, rank, divisor_class):
    spec = QuadricDivisorSpec(n, rank, divisor_class)
    assert spec.ambient == n + 2
    assert spec.degree == sum(divisor_class)


@pytest.mark.parametrize(
    "n,rank,divisor_class",
    [
        (1, 4, (1, 0)),
        (3, 4, (3, 1)),
        (3, 4, (0, 0)),
        (3, 4, (-1, 0)),
        (3, 4, (2,)),
        (3, 3, (0,)),
        (3, 3, (1, 1)),
        (3, 5, (1, 1)),
    ],
)
def test_refused_classes(n, rank, divisor_class):
    with pytest.raises(DomainError):
        QuadricDivisorSpec(n, rank, divisor_class)


def test_geometry_of_the_cone():
    spec = QuadricDivisorSpec.rank4(3, 3, 2)
    assert spec.vertex_dimension == 1
    assert spec.v_dimension == 2
    assert "rank-4" in spec.describe()
    conic = QuadricDivisorSpec.rank3(3, 3)
    assert conic.vertex_dimension == 2
    assert conic.v_dimension == 3


def test_classify():
    linked = quadrics.classify(QuadricDivisorSpec.rank4(3, 3, 2))
    assert linked.kind is ClassificationKind.LINKED_TO_LINEAR
    assert linked.degree == 3
    ci = quadrics.classify(QuadricDivisorSpec.rank4(3, 3, 3))
    assert ci.kind is ClassificationKind.COMPLETE_INTERSECTION
    assert ci.degree == 3
    assert quadrics.classify(QuadricDivisorSpec.rank3(2, 4)).to_json() == {
        "kind": "complete-intersection",
        "degree": 2,
    }
    assert quadrics.classify(QuadricDivisorSpec.rank3(2, 3)).kind is ClassificationKind.LINKED_TO_LINEAR


@pytest.mark.parametrize("n", [2, 3, 4])
def test_series_sections(n):
    for a in range(2, 6):
        linked = QuadricDivisorSpec.rank4(n, a, a - 1)
        assert quadrics.series_coh(linked, 0, a - 1) == 0
        assert quadrics.series_coh(linked, 0, a) == 2
        assert quadrics.series_coh(linked, 0, a + 1) == 2 * n + 4
        ci = QuadricDivisorSpec.rank4(n, a, a)
        assert quadrics.series_coh(ci, 0, a) == 1


def test_rank_four_series_has_no_first_cohomology():
    for a, b in [(1, 0), (2, 1), (3, 3), (4, 5)]:
        spec = QuadricDivisorSpec.rank4(3, a, b)
        for k in range(-6, 12):
            assert quadrics.series_coh(spec, 1, k) == 0


def test_series_only_serves_low_rows():
    with pytest.raises(DomainError):
        quadrics.series_coh(QuadricDivisorSpec.rank4(3, 3, 2), 2, 0)
    with pytest.raises(DomainError):
        quadrics.series_support(QuadricDivisorSpec.rank4(3, 3, 2), 2)


def test_linked_resolution():
    for a in range(2, 9):
        spec = QuadricDivisorSpec.rank4(3, a, a - 1)
        table = quadrics.resolution(spec)
        assert regularity_of_table(table) == a
        assert table.generator_count == 3
        assert table.rows()[1] == {a + 1: 2}


def test_resolution_refusals():
    with pytest.raises(DomainError):
        quadrics.resolution(QuadricDivisorSpec.rank4(3, 3, 3))
    with pytest.raises(DomainError):
        quadrics.resolution(QuadricDivisorSpec.rank4(3, 1, 0))


@pytest.mark.parametrize(
    "spec",
    [
        QuadricDivisorSpec.rank4(3, 3, 2),
        QuadricDivisorSpec.rank4(2, 2, 2),
        QuadricDivisorSpec.rank4(4, 4, 5),
        QuadricDivisorSpec.rank3(2, 3),
        QuadricDivisorSpec.rank3(3, 5),
        QuadricDivisorSpec.rank3(2, 4),
    ],
)
def test_series_matches_resolution(spec):
    betti = quadrics.ideal_resolution(spec)
    for k in range(-2, 10):
        assert quadrics.hilbert_function_on_ambient(spec, k) == hilbert_function(betti, k), k


def test_depth_and_vertex():
    assert quadrics.depth_at_vertex(QuadricDivisorSpec.rank4(3, 3, 2)) == 3
    assert quadrics.depth_at_vertex(QuadricDivisorSpec.rank3(3, 3)) == 2
    assert quadrics.vertex_containment(QuadricDivisorSpec.rank4(3, 3, 2))
    assert not quadrics.vertex_containment(QuadricDivisorSpec.rank4(3, 3, 3))


@pytest.mark.parametrize(
    "spec",
    [QuadricDivisorSpec.rank4(3, 3, 2), QuadricDivisorSpec.rank4(2, 4, 4), QuadricDivisorSpec.rank3(2, 3)],
)
def test_series_support_tails(spec):
    support = quadrics.series_support(spec, 0)
    for k in range(support.hi + 1, support.hi + 7):
        assert support.tail_value(k) == quadrics.series_coh(spec, 0, k)
    for k in range(support.lo - 5, support.lo):
        assert support.tail_value(k) == 0 == quadrics.series_coh(spec, 0, k)


@pytest.mark.parametrize("divisor_class", [(3, 2), (3, 3)])
def test_cone_sequence_table(divisor_class):
    spec = QuadricDivisorSpec(3, 4, divisor_class)
    table = ideal_table_from_presentation(quadrics.presentation(spec), "sequence")
    for k in range(-2, 9):
        assert table.exact(0, k) == quadrics.hilbert_function_on_ambient(spec, k)
        assert table.exact(1, k) == 0


def test_rank_three_first_cohomology_is_read_from_resolution():
    spec = QuadricDivisorSpec.rank3(2, 3)
    for k in range(-3, 8):
        assert quadrics.series_coh(spec, 1, k) == 0
        assert quadrics.resolved_ideal_table(spec).exact(1, k) == 0
