#!/usr/bin/env python3
"""
Tests for I-graph cycle classification, edge surgery and elusive cycle resolution.
"""

import sys
import os
from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

# Add current directory to path to import the toolkit modules
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from bicirculant import EdgeKind, Graph, IGraphSpec, Side, build, edge, inner, outer
from errors import (ClassificationFailed, Disconnected, NotApplicable, PreconditionUnmet,
                    SurgeryBroken)
from graph_io import parse_sequence
from hamilton_search import HamiltonCycle, enumerate_hamilton_cycles, verify_cycle, verify_path
from igraph_analysis import (CycleKind, ResolutionKind, Surgery, UsableKind, _fire, apply_surgery,
                             classify_cycle, hook_edges, resolution_audit, shift_cycle,
                             sign_variants, special_case_paths, stride_cycle, trichotomy_audit,
                             usable_cycle)
from surgery_rules import RULES_BY_ID, matches, surgery_edges, symbol_vertex

# all eight spokes, outer rim pairs at +-1 and inner rim pairs at +-3
ALTERNATING_I_8_1_3 = HamiltonCycle((
    inner(0), outer(0), outer(1), inner(1), inner(6), outer(6), outer(7), inner(7),
    inner(4), outer(4), outer(5), inner(5), inner(2), outer(2), outer(3), inner(3)))

PRISM_CYCLE = HamiltonCycle((outer(0), outer(1), outer(2), inner(2), inner(1), inner(0)))

# b = -2a: both ordered special subpaths, spoke u3v3 on the cycle
SPECIAL_I_9_1_7 = HamiltonCycle(tuple(parse_sequence(
    "u0 u1 u2 v2 v4 v6 u6 u7 u8 v8 v1 v3 u3 u4 u5 v5 v7 v0")))
# the rims of the cycle above exchanged; a = -2b in I(9;7,1)
SPECIAL_I_9_7_1 = HamiltonCycle(tuple(parse_sequence(
    "v0 v1 v2 u2 u4 u6 v6 v7 v8 u8 u1 u3 v3 v4 v5 u5 u7 u0")))


def test_hook_edges():
    edges = hook_edges(0, 2, 3, 7)
    assert edges == (edge(outer(0), outer(2)), edge(outer(3), outer(5)),
                     edge(inner(0), inner(3)), edge(inner(2), inner(5)))


def test_sign_variants_are_distinct_pairs():
    assert sign_variants(2, 3, 7) == [(2, 3), (5, 3), (2, 4), (5, 4)]
    assert len(sign_variants(1, 1, 2)) == 1


def test_stride_cycle_for_equal_rims():
    """I(5;1,1): v0, u0..u4, v4..v1, and the Hamilton path v0 -> v1 inside it."""
    spec = IGraphSpec(5, 1, 1)
    cycle, witness = stride_cycle(spec)
    graph = build(spec)
    assert len(cycle) == 10
    assert cycle.vertices[:3] == (inner(0), outer(0), outer(1))
    assert verify_cycle(graph, cycle.vertices)
    assert witness.variant == 'v'
    assert witness.path.endpoints == (inner(0), inner(1))
    assert witness.companion.endpoints == (outer(0), outer(1))
    assert verify_path(graph, witness.companion.vertices, endpoints=(outer(0), outer(1)))


def test_stride_cycle_for_opposite_rims():
    for spec in (IGraphSpec(5, 2, 3), IGraphSpec(4, 1, 1), IGraphSpec(7, 3, 4)):
        cycle, _ = stride_cycle(spec)
        assert verify_cycle(build(spec), cycle.vertices)


def test_stride_cycle_needs_symmetric_rims():
    with pytest.raises(NotApplicable):
        stride_cycle(IGraphSpec(7, 2, 3))


def test_classify_alternating_cycle():
    spec = IGraphSpec(8, 1, 3)
    assert verify_cycle(build(spec), ALTERNATING_I_8_1_3.vertices)
    cls = classify_cycle(spec, ALTERNATING_I_8_1_3)
    assert cls.kind is CycleKind.ALTERNATING
    assert cls.spokes == 8
    assert cls.to_record(8) == {'class': 'Alternating', 'spokes': 8, 'in_scope': True}


def test_alternating_cycle_outside_trichotomy():
    spec = IGraphSpec(6, 1, 1)
    cycle = HamiltonCycle((outer(0), inner(0), inner(1), outer(1), outer(2), inner(2),
                           inner(3), outer(3), outer(4), inner(4), inner(5), outer(5)))
    record = classify_cycle(spec, cycle).to_record(6)
    assert record['class'] == 'Alternating'
    assert record['note'] == 'outside-trichotomy'


def test_classify_prism_cycles():
    spec = IGraphSpec(3, 1, 1)
    for cycle in enumerate_hamilton_cycles(build(spec)):
        cls = classify_cycle(spec, cycle)
        assert cls.kind in (CycleKind.TWO_HOOKED, CycleKind.UNCLASSIFIED)
        assert not cls.in_scope


def test_classify_rejects_bad_input():
    with pytest.raises(ClassificationFailed):
        classify_cycle(IGraphSpec(3, 1, 1), HamiltonCycle((outer(0), outer(1), outer(2))))
    with pytest.raises(Disconnected):
        classify_cycle(IGraphSpec(6, 2, 2), PRISM_CYCLE)


def test_classify_every_cycle_of_i_7_2_3():
    spec = IGraphSpec(7, 2, 3)
    graph = build(spec)
    enumeration = enumerate_hamilton_cycles(graph, cap=50)
    assert len(enumeration) > 0
    for cycle in enumeration:
        cls = classify_cycle(spec, cycle)
        assert cls.kind in (CycleKind.ALTERNATING, CycleKind.FOUR_HOOKED, CycleKind.TWO_HOOKED)
        if cls.kind is CycleKind.FOUR_HOOKED:
            assert set(cls.hook.edges(7)) <= cycle.edges()
        if cls.kind is CycleKind.TWO_HOOKED:
            side_ends = {x.side for x in cls.witness.path.endpoints}
            assert len(side_ends) == 1
            assert verify_path(graph, cls.witness.path.vertices)


def test_empty_surgery_keeps_cycle():
    graph = build(IGraphSpec(3, 1, 1))
    result = apply_surgery(graph, PRISM_CYCLE, Surgery(expect='cycle'))
    assert result.vertices == PRISM_CYCLE.canonicalized().vertices


def test_surgery_opens_cycle_into_path():
    graph = build(IGraphSpec(3, 1, 1))
    surgery = Surgery(remove=frozenset({edge(outer(0), outer(1))}),
                      endpoints=(outer(1), outer(0)))
    path = apply_surgery(graph, PRISM_CYCLE, surgery)
    assert path.endpoints == (outer(1), outer(0))
    assert len(path) == 6


def test_broken_surgery_reports_check():
    graph = build(IGraphSpec(3, 1, 1))
    with pytest.raises(SurgeryBroken) as info:
        apply_surgery(graph, PRISM_CYCLE, Surgery(remove=frozenset({edge(outer(0), inner(1))})))
    assert info.value.check == 'edges'
    with pytest.raises(SurgeryBroken) as info:
        apply_surgery(graph, PRISM_CYCLE, Surgery(
            remove=frozenset({edge(outer(0), outer(1)), edge(inner(1), inner(2))})))
    assert info.value.check == 'degree'
    with pytest.raises(SurgeryBroken) as info:
        apply_surgery(graph, PRISM_CYCLE, Surgery(add=frozenset({edge(outer(0), outer(1))})))
    assert info.value.check == 'edges'


def test_special_case_preconditions():
    spec = IGraphSpec(7, 1, 3)
    with pytest.raises(NotApplicable):
        special_case_paths(spec, PRISM_CYCLE, 'a=b')
    with pytest.raises(PreconditionUnmet):
        special_case_paths(spec, PRISM_CYCLE, 'b=-2a')


@pytest.mark.parametrize('spec, cycle, which', [
    (IGraphSpec(9, 1, 7), SPECIAL_I_9_1_7, 'b=-2a'),
    (IGraphSpec(9, 7, 1), SPECIAL_I_9_7_1, 'a=-2b'),
])
def test_special_case_paths_by_surgery(spec, cycle, which):
    graph = build(spec)
    assert verify_cycle(graph, cycle.vertices)
    paths = special_case_paths(spec, cycle, which)
    assert paths.p == 3
    assert paths.fallbacks == ()
    assert paths.outer_path.endpoints == (outer(0), outer(3))
    assert paths.inner_path.endpoints == (inner(0), inner(3))
    assert verify_path(graph, paths.outer_path.vertices, endpoints=(outer(0), outer(3)))
    assert verify_path(graph, paths.inner_path.vertices, endpoints=(inner(0), inner(3)))
    first, second = paths.pair
    assert (first.vertices[0], first.vertices[-1]) == (outer(0), inner(3))
    assert (second.vertices[0], second.vertices[-1]) == (outer(3), inner(0))
    assert set(first.vertices) | set(second.vertices) == set(graph.vertices)
    assert paths.to_record()['fallbacks'] == []


def test_special_case_congruence_must_hold():
    with pytest.raises(PreconditionUnmet):
        special_case_paths(IGraphSpec(9, 1, 7), SPECIAL_I_9_1_7, 'a=-2b')


# Cycles of an elusive frame u0 ua .. ub uab .. vab va .. vb v0 .. for a = 1, b = 10, m = 101,
# where every small combination of a and b is a different vertex; '*' holds the unnamed ones.
RULE_TEMPLATES = {
    'I.a1': "u0 ua v-a+b v-a v-a-b * u-a+b ub uab vab va va-b vb v0 v-b u-a",
    'I.a2': "u0 ua v-a-b v-a v-a+b * u-a+b ub uab vab va va-b vb v0 v-b u-a",
    'I.b1': "u0 ua * u-a+b ub uab v-a+b v-a v-a-b vab va va-b vb v0 v-b u-a",
    'I.b2': "u0 ua * u-a+b ub uab v-a-b v-a v-a+b vab va va-b vb v0 v-b u-a",
    'I.c1': "u0 ua * u-a+b ub uab vab va va-b v-a+b v-a v-a-b vb v0 v-b u-a",
    'I.c2': "u0 ua * u-a+b ub uab vab va va-b v-a-b v-a v-a+b vb v0 v-b u-a",
    'I.d1': "u0 ua * u-a+b ub uab vab va va-b vb v0 v-b v-a-b v-a v-a+b u-a",
    'I.d2': "u0 ua * u-a+b ub uab vab va va-b vb v0 v-b u-b ua-b v-a+b v-a v-a-b u-a-b u-a",
    'I.d3': "u0 ua * u-a+b ub uab vab va va-b ua-b vb v0 v-b u-b u-a-b v-a+b v-a v-a-b u-a",
    'I.d4': "u0 ua * u-a+b ub uab vab va va-b ua-b u-b u-a-b vb v0 v-b v-a+b v-a v-a-b u-a",
    'II.a1': "u0 ua * u-a+b ub uab vab va va-b ua-b vb v0 v-b u-b v-a u-a",
    'II.a2': "u0 ua * v-a+b u-a+b ub uab vab va va-b vb v0 v-b u-b ua-b v-a u-a",
    'II.a3': "u0 ua v-a-b u-a-b * u-a+b ub uab vab va va-b vb v0 v-b u-b ua-b v-a+b v-a u-a",
    'II.a4': "u0 ua u-a-b v-a-b * u-a+b ub uab vab va va-b vb v0 v-b u-b ua-b v-a+b v-a u-a",
    'II.a5': "u0 ua * u-a+b ub uab vab va va-b vb v0 v-b u-b ua-b u-a-b v-a-b v-a+b v-a u-a",
    'II.b1': "u0 ua * u-a+b ub uab vab va va-b vb v0 v-b v-a-b u-a-b u-b ua-b v-a+b v-a u-a",
    'II.b2': "u0 ua * u-a+b ub uab vab va va-b vb v0 v-b u-a-b u-b ua-b v-a-b v-a u-a",
    'II.b3': "u0 ua * u-a+b ub uab vab va va-b ua-b u-b u-a-b vb v0 v-b v-a u-a",
    'III.0': "u0 ua u2a v2a * u-a+b ub uab vab va va-b ua-b u2a+b v2a+b vb v0",
    'III.a1': "u0 ua u2a v2a v2a+b u2a+b * u2a-b v2a-b u-a+b ub uab vab va va-b ua-b vb v0",
    'III.a2': "u0 ua u2a v2a v2a+b u2a+b * v2a-b u2a-b u-a+b ub uab vab va va-b ua-b vb v0",
    'III.b1': "u0 ua u2a v2a v2a-b u2a-b * u-a+b ub uab vab va va-b ua-b u-b v-b vb v0",
    'III.b2': "u0 ua u2a v2a v2a-b * u-a+b ub uab vab va va-b ua-b u2a-b v-b u-b vb v0",
    'A2.a1': "u0 ua u2a v2a v2a-b v2a+b u2a+b * u-b v-b u-a+b ub uab vab va va-b ua-b u2a-b vb v0",
    'A2.a2': "u0 ua u2a v2a v2a-b * u-b v-b v2a+b u2a+b u-a+b ub uab vab va va-b ua-b u2a-b vb v0",
    'A2.a3': "u0 ua u2a v2a v2a-b * u-b v-b u-a+b ub uab vab va va-b ua-b u2a-b v2a+b u2a+b vb v0",
    'A2.b1': "u0 ua u2a v2a v2a-b * u-a+b ub uab vab va va-b ua-b u2a-b v2a+b u2a+b u-b v-b vb v0",
    'A2.b2': "u0 ua u2a v2a v2a-b * u-a+b ub uab vab va va-b ua-b u2a-b u-b v-b v2a+b u2a+b vb v0",
    'A2.c1': ("u0 ua u2a v2a v2a-b v2a+b u2a+b * u-a+b ub uab vab va va-b ua-b u2a-b "
              "ua+2b va+2b u-b v-b vb v0"),
    'A2.c2': ("u0 ua u2a v2a v2a-b v2a+b u2a+b * v-a u-a u-a+b ub uab vab va va-b ua-b u2a-b "
              "u-b v-b vb v0"),
    'A2.c3': ("u0 ua u2a v2a v2a-b u-a v-a v2a+b u2a+b * u-a+b ub uab vab va va-b ua-b u2a-b "
              "u-b v-b vb v0"),
    'A2.c4': ("u0 ua u2a v2a v2a-b v2a+b u2a+b * u-a+b ub uab vab va va-b ua-b u2a-b "
              "u-b v-b u-a v-a vb v0"),
    'A2.c5': ("u0 ua u2a v2a v2a-b v2a+b u2a+b * u-a+b ub uab vab va va-b ua-b u2a-b "
              "v-a+b v-a u-a u-b v-b vb v0"),
    'A2.c6': ("u0 ua u2a v2a v2a-b v2a+b u2a+b va+2b ua+2b u2b * u-a+b ub uab vab va va-b "
              "ua-b u2a-b u-b v-b v2b vb v0"),
    'A2.c7': ("u0 ua u2a v2a v2a-b v2a+b u2a+b * va+2b ua+2b u2a+2b u-a+b ub uab vab va va-b "
              "ua-b u2a-b u-b v-b vb v0"),
    'A2.c8': ("u0 ua u2a v2a v2a-b v2a+b u2a+b * u-a+b ub uab vab va va-b ua-b u2a-b "
              "va+2b ua+2b u-b v-b vb v0"),
    'A2.c9': ("u0 ua u2a v2a v2a-b v2a+2b v2a+b u2a+b * u-a+b ub uab vab va va-b ua-b u2a-b "
              "u-b v-b u2a+2b ua+2b va+2b vb v0"),
    'A2.c10': ("u0 ua u2a v2a v2a-b v2a+b u2a+b * u-a+b ub uab vab va va-b ua-b u2a-b "
               "u-b v-b va+2b ua+2b u2b u-a+2b v2b vb v0"),
    'A2.1a': ("u0 ua u2a v2a v2a-b v2a+b u2a+b * u-a v-a v-a+b u-a+b ub uab vab va va-b "
              "ua-b u2a-b u-b v-b v-a+2b u-a+2b vb v0"),
    'A2.1b': ("u0 ua u2a v2a v2a-b v2a+b u2a+b * u-a v-a v-a+b v-a+2b u-a+b ub uab vab va "
              "va-b ua-b u2a-b u-b v-b v2b vb v0"),
    'A2.1c': ("u0 ua u2a v2a v2a-b v2a+b u2a+b * u-a v-a v-a-b v-a+b u-a+b ub uab vab va "
              "va-b ua-b u2a-b u-a-b u-b v-b vb v0"),
    'A2.2': ("u0 ua u2a v2a v2a-b va+2b ua+2b u2a+2b v2a+b u2a+b * v-a+b u-a+b ub uab vab "
             "va va-b ua-b u2a-b v-a-b v-a u-a u2b u-a+2b u-b v-b vb v0"),
    'A2.3a': ("u0 ua u2a v2a v2a-b v2a+b u2a+b * v2b u2b ua+2b va+2b u-a+b ub uab vab va "
              "va-b ua-b u2a-b u-b v-b v-a+2b u-a+2b vb v0"),
    'A2.3b': ("u0 ua u2a v2a v2a-b v2a+b u2a+b * v-a+b u-a+b ub uab vab va va-b ua-b u2a-b "
              "u-b v-b v-a+2b u-a+2b vb v0"),
    'A2.4': ("u0 ua u2a v2a v2a-b v2a+b u2a+b * u2b v2b u-a+2b v-a+2b v-a+b u-a+b ub uab "
             "vab va va-b ua-b u2a-b u-b v-b vb v0"),
}


def template_cycle(template, a, b, m):
    named = [symbol_vertex(s, a, b, m) for s in template.split() if s != '*']
    rest = [x for x in sorted({outer(i) for i in range(m)} | {inner(i) for i in range(m)})
            if x not in set(named)]
    seq = []
    for s in template.split():
        seq.extend(rest if s == '*' else [symbol_vertex(s, a, b, m)])
    return HamiltonCycle(tuple(seq))


def host_graph(edges, m):
    """Graph carrying just the given edges."""
    kinds = {}
    for e in edges:
        x, y = tuple(e)
        if x.side is not y.side:
            kinds[e] = (EdgeKind.SPOKE, 0)
        else:
            kinds[e] = (EdgeKind.OUTER if x.side is Side.OUTER else EdgeKind.INNER, 0)
    return Graph(m, kinds)


def test_every_rule_has_a_template():
    assert set(RULE_TEMPLATES) == set(RULES_BY_ID) - {'III.special'}


@pytest.mark.parametrize('rule_id', list(RULE_TEMPLATES))
def test_rule_fires_on_its_template(rule_id):
    a, b, m = 1, 10, 101
    rule = RULES_BY_ID[rule_id]
    cycle = template_cycle(RULE_TEMPLATES[rule_id], a, b, m)
    assert len(set(cycle.vertices)) == len(cycle) == 2 * m
    assert matches(rule, cycle.vertices, cycle.edges(), a, b, m)

    _, add, _ = surgery_edges(rule, a, b, m)
    graph = host_graph(cycle.edges() | add, m)
    resolution = _fire(IGraphSpec(m, a, b), graph, cycle, rule, a, b)
    assert resolution is not None
    assert resolution.rule_id == rule_id and not resolution.fallback
    if rule.result == 'path':
        assert resolution.kind is ResolutionKind.TWO_HOOKED
        path = resolution.witness.path
        assert len(set(path.vertices)) == 2 * m
        assert path.endpoints[0].side is path.endpoints[1].side
        assert resolution.witness.companion is not None
    else:
        assert resolution.kind is ResolutionKind.STANDARD
        assert resolution.hook.shift == 0 and not resolution.hook.elusive



def test_usable_forms():
    with pytest.raises(NotApplicable):
        usable_cycle(IGraphSpec(5, 1, 2))
    stride = usable_cycle(IGraphSpec(5, 1, 1))
    assert stride.kind is UsableKind.TWO_HOOKED and stride.source == 'stride'
    alternating = usable_cycle(IGraphSpec(8, 1, 3))
    assert alternating.kind is UsableKind.ALTERNATING
    assert verify_cycle(build(IGraphSpec(8, 1, 3)), alternating.cycle.vertices)


def test_usable_form_for_odd_m():
    spec = IGraphSpec(7, 2, 3)
    form = usable_cycle(spec)
    assert form.kind in (UsableKind.STANDARD_4, UsableKind.TWO_HOOKED, UsableKind.SPECIAL)
    if form.kind is UsableKind.STANDARD_4:
        assert not form.hook.elusive and form.hook.shift == 0
    if form.kind is UsableKind.TWO_HOOKED:
        assert form.witness.companion is not None


def test_trichotomy_audit_small_range():
    records = trichotomy_audit(max_m=7)
    assert records
    assert all(r['ok'] for r in records)
    assert {r['class'] for r in records} <= {'Alternating', 'FourHooked', 'TwoHooked'}


def test_resolution_audit_small_range():
    records = resolution_audit(max_m=7)
    assert all(r['ok'] for r in records)
    assert all(r['outcome'] in ('Standard4Hooked', 'TwoHookedWitness', 'SpecialCase') for r in records)


def test_resolution_audit_marks_fallbacks():
    records = resolution_audit(max_m=10)
    assert all(r['ok'] for r in records)
    counts = Counter(r['rule_id'] for r in records)
    assert sum(counts.values()) == len(records)
    for r in records:
        assert r['fallback'] == (r['rule_id'] not in RULES_BY_ID)
        if r['fallback']:
            assert r['rule_id'] in ('relabel-scan', 'search') or r['rule_id'].startswith('spoke-swap:')


@settings(max_examples=30, deadline=None)
@given(s=st.integers(-10, 10), t=st.integers(-10, 10))
def test_shift_cycle_composes(s, t):
    m = 3
    once = shift_cycle(PRISM_CYCLE, s + t, m)
    twice = shift_cycle(shift_cycle(PRISM_CYCLE, s, m), t, m)
    assert once.vertices == twice.vertices
    assert shift_cycle(PRISM_CYCLE, m, m).vertices == PRISM_CYCLE.vertices


def test_shifted_cycles_stay_enumerated():
    graph = build(IGraphSpec(3, 1, 1))
    cycles = {c.vertices for c in enumerate_hamilton_cycles(graph)}
    for vertices in cycles:
        shifted = shift_cycle(HamiltonCycle(vertices), 1, 3).canonicalized()
        assert shifted.vertices in cycles


if __name__ == "__main__":
    pytest.main([__file__])
