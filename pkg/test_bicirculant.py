#!/usr/bin/env python3
"""
Tests for the bicirculant parameter model, realization and isomorphism transforms.
"""

import sys
import os
from math import gcd

import pytest
from hypothesis import assume, given, settings, strategies as st

# Add current directory to path to import the toolkit modules
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from bicirculant import (BicirculantSpec, EdgeKind, Family, GrwSpec, HaarSpec, IGraphSpec,
                         build, canonical_key, check_isomorphism, classify_family, decompose,
                         inner, is_connected, multiplier_spec, outer, petersen_exception_multiplier,
                         shift_spec, swap_sides, traversal_component_count)
from errors import InvalidSpec, NotAUnit, NotInS


def test_build_rose_window_counts():
    """R(9;1,3,2) has 18 vertices, 9+9 rim edges, 18 spokes and is 4-regular."""
    graph = build(GrwSpec(9, 1, 3, 2))
    assert graph.n == 18
    assert graph.count(EdgeKind.OUTER) == 9
    assert graph.count(EdgeKind.INNER) == 9
    assert graph.count(EdgeKind.SPOKE) == 18
    assert all(graph.degree(x) == 4 for x in graph.vertices)


def test_build_prism():
    graph = build(BicirculantSpec.create(3, {1, 2}, {0}, {1, 2}))
    assert graph.n == 6
    assert len(graph.edges) == 9
    assert all(graph.degree(x) == 3 for x in graph.vertices)


def test_build_petersen_lift_is_four_regular():
    graph = build(GrwSpec(10, 2, 4, 1))
    assert graph.n == 20
    assert all(graph.degree(x) == 4 for x in graph.vertices)


def test_half_rim_edges_collapse():
    spec = BicirculantSpec.create(4, {2}, {0}, {1, 3})
    graph = build(spec)
    assert spec.has_half_rim
    assert graph.count(EdgeKind.OUTER) == 2
    assert graph.degree(outer(0)) == 2


def test_invalid_specs():
    with pytest.raises(InvalidSpec):
        IGraphSpec(6, 3, 1)
    with pytest.raises(InvalidSpec):
        GrwSpec(6, 1, 2, 0)
    with pytest.raises(InvalidSpec):
        BicirculantSpec.create(5, {1}, {1}, {1}, symmetric=True)
    with pytest.raises(InvalidSpec):
        BicirculantSpec.create(5, {1}, {0}, {2})
    with pytest.raises(InvalidSpec):
        HaarSpec(5, {1, 2})


def test_connectivity():
    assert is_connected(GrwSpec(12, 3, 4, 2))
    split = BicirculantSpec.create(6, {2}, {0, 2}, {2}, symmetric=True)
    assert not is_connected(split)
    assert traversal_component_count(build(split)) == 2
    assert is_connected(BicirculantSpec.create(10, {4}, {0, 1}, {2}, symmetric=True))


def test_decompose_rim_graph_of_petersen_lift():
    """Deleting the type-1 spokes of R(10;2,4,1) leaves two copies of G(5,2)."""
    decomposition = decompose(BicirculantSpec.create(10, {2}, {0}, {4}, symmetric=True))
    assert decomposition.delta == 2
    assert decomposition.quotient == IGraphSpec(5, 1, 2).to_bicirculant()
    assert decomposition.components[1] == frozenset(
        v for i in range(1, 10, 2) for v in (outer(i), inner(i)))
    assert decomposition.lift(1, inner(2)) == inner(5)


def test_decompose_connected_spec():
    spec = GrwSpec(9, 1, 3, 2)
    decomposition = decompose(spec)
    assert decomposition.delta == 1
    assert decomposition.components[0] == frozenset(build(spec).vertices)


def test_shift_by_zero_is_identity():
    spec = GrwSpec(9, 1, 3, 2).to_bicirculant()
    shifted, mapping = shift_spec(spec, 0)
    assert shifted == spec
    assert all(x == y for x, y in mapping.items())


def test_shift_spoke_types():
    spec = BicirculantSpec.create(8, {1, 7}, {0, 2, 3}, {1, 7})
    shifted, mapping = shift_spec(spec, 2)
    assert shifted.S == frozenset({0, 1, 6})
    assert mapping[inner(5)] == inner(3)
    assert mapping[outer(5)] == outer(5)


def test_shift_requires_spoke_type():
    with pytest.raises(NotInS):
        shift_spec(GrwSpec(9, 1, 3, 2), 1)


def test_multiplier_to_generalized_petersen_form():
    image, _ = multiplier_spec(IGraphSpec(7, 2, 3), 4)
    assert image == IGraphSpec(7, 1, 5).to_bicirculant()
    assert image == IGraphSpec(7, 1, 2).to_bicirculant()


def test_multiplier_rejects_non_units():
    with pytest.raises(NotAUnit):
        multiplier_spec(IGraphSpec(8, 1, 3), 2)


def test_multiplier_and_canonical_key():
    spec = GrwSpec(12, 3, 4, 2)
    image, _ = multiplier_spec(spec, 5)
    assert image == GrwSpec(12, 3, 8, 10).to_bicirculant()
    assert canonical_key(image) == canonical_key(spec)


def test_swap_sides_is_checked():
    spec = GrwSpec(12, 3, 4, 2)
    swapped, mapping = swap_sides(spec)
    assert swapped == BicirculantSpec.create(12, {4, 8}, {0, 10}, {3, 9})
    assert mapping[outer(5)] == inner(5)
    assert check_isomorphism(build(spec), build(swapped), mapping)
    identity = {x: x for x in build(spec).vertices}
    assert not check_isomorphism(build(spec), build(swapped), identity)


def test_canonical_key_merges_rim_swap():
    assert canonical_key(IGraphSpec(5, 1, 2)) == canonical_key(IGraphSpec(5, 2, 1))
    assert canonical_key(IGraphSpec(8, 1, 3)) != canonical_key(IGraphSpec(8, 1, 1))


def test_classify_petersen_exception():
    report = classify_family(IGraphSpec(5, 1, 2))
    assert report.family is Family.GENERALIZED_PETERSEN
    assert report.petersen_exception
    assert report.tags == ['IGraph', 'GeneralizedPetersen', 'PetersenException']


def test_classify_generalized_petersen_via_multiplier():
    report = classify_family(IGraphSpec(7, 2, 3))
    assert report.family is Family.GENERALIZED_PETERSEN
    assert not report.petersen_exception
    assert report.params['r'] == 4
    assert report.params['k'] == 2


def test_classify_other_families():
    assert classify_family(HaarSpec(6, {0, 1, 2})).family is Family.HAAR
    grw = classify_family(GrwSpec(9, 1, 3, 2))
    assert grw.family is Family.GRW
    assert grw.params == {'a': 1, 'b': 3, 'c': 2}
    tab = classify_family(BicirculantSpec.create(8, {1}, {0, 1, 2}, {3}, symmetric=True))
    assert tab.family is Family.TABACJN
    assert classify_family(IGraphSpec(6, 2, 2)).family is Family.IGRAPH


def test_petersen_exception_multiplier():
    assert petersen_exception_multiplier(11, 1, 2) is not None
    assert petersen_exception_multiplier(11, 3, 5) is not None
    assert petersen_exception_multiplier(7, 1, 2) is None
    assert petersen_exception_multiplier(11, 1, 3) is None


@settings(max_examples=40, deadline=None)
@given(m=st.integers(3, 12), a=st.integers(1, 11), b=st.integers(1, 11), c=st.integers(1, 11),
       r=st.integers(1, 11))
def test_transforms_preserve_edges(m, a, b, c, r):
    """Both transforms check their bijection against the edge sets; a failure raises."""
    assume(a % m and b % m and c % m and 2 * (a % m) != m and 2 * (b % m) != m)
    spec = GrwSpec(m, a, b, c)
    shifted, _ = shift_spec(spec, c)
    assert 0 in shifted.S and (-c) % m in shifted.S
    if gcd(r, m) == 1:
        image, _ = multiplier_spec(spec, r)
        assert canonical_key(image) == canonical_key(spec)
    else:
        with pytest.raises(NotAUnit):
            multiplier_spec(spec, r)


@settings(max_examples=30, deadline=None)
@given(m=st.integers(3, 14), a=st.integers(1, 13), b=st.integers(1, 13), c=st.integers(1, 13))
def test_connectivity_matches_traversal(m, a, b, c):
    assume(a % m and b % m and c % m and 2 * (a % m) != m and 2 * (b % m) != m)
    spec = GrwSpec(m, a, b, c)
    expected = decompose(spec).delta
    assert traversal_component_count(build(spec)) == expected
    assert is_connected(spec) == (expected == 1)


if __name__ == "__main__":
    pytest.main([__file__])
