#!/usr/bin/env python3
"""
Declarative surgery rules for elusive 4-hooked Hamilton cycles of I(m;a,b).

A rule is evaluated on a type-1 elusive cycle C read in the direction in which
u_a follows u_0, so that u_0,u_a,u_b,u_{a+b},v_{a+b},v_a,v_b,v_0 appear in this
cyclic order.  Vertices are written symbolically ('u0', 'u-a+b', 'v2a-b', ...)
and evaluated for the concrete hook residues (a, b).

Preconditions:
    paths    - vertex sequences that are consecutive on C (either direction)
    absent   - edges not on C
    forward  - sequences in cyclic order along the reading direction
    either   - sequences in cyclic order along one of the two directions

Results:
    path     - remove/add gives a Hamilton path (2-hooked witness after shifting)
    cycle    - remove/add gives a Hamilton cycle that is standard after `relabel`
    relabel  - adding `relabel` to every subscript makes C standard
    special  - the subpath configuration left for the b = -2a / a = -2b congruences
"""

import re
from dataclasses import dataclass

from bicirculant import Side, Vertex, edge

_TERM = re.compile(r'([+-]?)(\d*)([ab])')


def coefficients(expr):
    """'-a+2b' -> (-1, 2); '0' -> (0, 0)."""
    expr = expr.replace(' ', '')
    if expr in ('', '0'):
        return (0, 0)
    ka = kb = 0
    consumed = 0
    for match in _TERM.finditer(expr):
        if match.start() != consumed:
            raise ValueError(f"bad subscript expression '{expr}'")
        sign = -1 if match.group(1) == '-' else 1
        k = int(match.group(2)) if match.group(2) else 1
        if match.group(3) == 'a':
            ka += sign * k
        else:
            kb += sign * k
        consumed = match.end()
    if consumed != len(expr):
        raise ValueError(f"bad subscript expression '{expr}'")
    return (ka, kb)


def symbol_vertex(symbol, a, b, m):
    side = {'u': Side.OUTER, 'v': Side.INNER}[symbol[0]]
    ka, kb = coefficients(symbol[1:])
    return Vertex(side, (ka * a + kb * b) % m)


def symbol_sequence(text, a, b, m):
    return [symbol_vertex(s, a, b, m) for s in text.split()]


def symbol_edge(text, a, b, m):
    x, y = symbol_sequence(text, a, b, m)
    return edge(x, y)


def symbol_shift(expr, a, b, m):
    ka, kb = coefficients(expr)
    return (ka * a + kb * b) % m


@dataclass(frozen=True)
class SurgeryRule:
    rule_id: str
    paths: tuple = ()
    absent: tuple = ()
    forward: tuple = ()
    either: tuple = ()
    remove: tuple = ()
    add: tuple = ()
    result: str = 'path'
    endpoints: str = None
    relabel: str = None


def distinct(seq):
    return list(dict.fromkeys(seq))


def in_cyclic_order(position, seq, n, backward=False):
    """True when the vertices of seq are met in this order along the cycle.

    Coincident vertices (for small m) count once, at their first place in seq.
    """
    seq = distinct(seq)
    origin = position[seq[0]]
    last = 0
    for x in seq[1:]:
        step = (origin - position[x]) % n if backward else (position[x] - origin) % n
        if step <= last:
            return False
        last = step
    return True


def matches(rule, cycle_vertices, cycle_edges, a, b, m):
    """Evaluate the rule's precondition on an oriented cycle."""
    position = {x: i for i, x in enumerate(cycle_vertices)}
    n = len(cycle_vertices)
    for text in rule.paths:
        seq = distinct(symbol_sequence(text, a, b, m))
        if any(edge(x, y) not in cycle_edges for x, y in zip(seq, seq[1:])):
            return False
    for text in rule.absent:
        if symbol_edge(text, a, b, m) in cycle_edges:
            return False
    for text in rule.forward:
        if not in_cyclic_order(position, symbol_sequence(text, a, b, m), n):
            return False
    for text in rule.either:
        seq = symbol_sequence(text, a, b, m)
        if not (in_cyclic_order(position, seq, n) or in_cyclic_order(position, seq, n, backward=True)):
            return False
    return True


def surgery_edges(rule, a, b, m):
    remove = frozenset(symbol_edge(t, a, b, m) for t in rule.remove)
    add = frozenset(symbol_edge(t, a, b, m) for t in rule.add)
    endpoints = tuple(symbol_sequence(rule.endpoints, a, b, m)) if rule.endpoints else None
    return remove, add, endpoints


# Subpaths shared by the cases below
CASE_I = ('ua u0 u-a', 'v-a+b v-a v-a-b', 'v0 v-b')
CASE_II = ('ua u0 u-a v-a', 'v0 v-b')
CASE_III = ('vb v0 u0 ua u2a v2a', 'ub uab vab va va-b ua-b')
ASSUMPTION_2 = ('vb v0 u0 ua u2a v2a v2a-b', 'ub uab vab va va-b ua-b u2a-b',
                'u2a+b v2a+b', 'u-b v-b')
ASSUMPTION_2C = ASSUMPTION_2
C_ORDERS = ('va u-b vb', 'ua u2a+b ub')

# Long exchanges reused by several orderings
_SWEEP_V = dict(
    remove=('v0 vb', 'v2a v2a-b', 'u2a+b v2a+b', 'u-b v-b', 'ub uab', 'va-b ua-b'),
    add=('v2a v2a+b', 'uab u2a+b', 'u-b ua-b', 'v0 v-b', 'ub vb'),
)
_SWEEP_U = dict(
    remove=('u0 v0', 'v2a v2a-b', 'u-b v-b', 'u2a+b v2a+b', 'ub uab', 'ua-b u2a-b'),
    add=('v0 v-b', 'v2a v2a+b', 'u2a-b v2a-b', 'u-b ua-b', 'uab u2a+b'),
)
_SWEEP_NEG_A = dict(
    remove=('u0 v0', 'u-a v-a', 'u-b v-b', 'u2a+b v2a+b', 'v0 vb', 'v2a v2a-b', 'ub uab',
            'ua-b u2a-b'),
    add=('v0 v-b', 'u0 u-a', 'v2a v2a+b', 'u2a-b v2a-b', 'uab u2a+b', 'ub vb', 'u-b ua-b'),
)
_SWEEP_A_2B = dict(
    remove=('u2a+b v2a+b', 'uab vab', 'ua+2b va+2b', 'u-b v-b', 'v0 vb', 'v2a v2a-b', 'ub uab',
            'ua-b u2a-b'),
    add=('v0 v-b', 'v2a v2a+b', 'u2a-b v2a-b', 'uab u2a+b', 'ub vb', 'vab va+2b', 'u-b ua-b'),
)

RULES = (
    # (v_{-a+b}, v_{-a}, v_{-a-b}) on C
    SurgeryRule('I.a1', paths=CASE_I, forward=('ua v-a+b v-a v-a-b ub',),
                remove=('v-a v-a-b', 'u0 u-a', 'v0 v-b'), add=('u-a v-a', 'u0 v0'),
                endpoints='v-b v-a-b'),
    SurgeryRule('I.a2', paths=CASE_I, forward=('ua v-a-b v-a v-a+b ub',),
                result='relabel', relabel='a'),
    SurgeryRule('I.b1', paths=CASE_I, forward=('uab v-a+b v-a v-a-b vab',),
                remove=('ub u-a+b', 'v0 vb', 'v-a v-a+b'), add=('ub vb', 'u-a+b v-a+b'),
                endpoints='v0 v-a'),
    SurgeryRule('I.b2', paths=CASE_I, forward=('uab v-a-b v-a v-a+b vab',),
                remove=('ub u-a+b', 'u0 u-a', 'v-a v-a+b'), add=('u-a v-a', 'u-a+b v-a+b'),
                endpoints='u0 ub'),
    SurgeryRule('I.c1', paths=CASE_I, forward=('va v-a+b v-a v-a-b vb',),
                remove=('ub u-a+b', 'v0 vb', 'v-a v-a+b'), add=('ub vb', 'u-a+b v-a+b'),
                endpoints='v0 v-a'),
    SurgeryRule('I.c2', paths=CASE_I, forward=('va v-a-b v-a v-a+b vb',),
                remove=('u0 u-a', 'v0 v-b', 'v-a v-a-b'), add=('u-a v-a', 'u0 v0'),
                endpoints='v-b v-a-b'),
    SurgeryRule('I.d1', paths=CASE_I, forward=('v0 v-a-b v-a v-a+b u0',),
                remove=('u0 u-a', 'ub u-a+b', 'v-a v-a+b'), add=('u-a v-a', 'u-a+b v-a+b'),
                endpoints='u0 ub'),
    SurgeryRule('I.d2', paths=CASE_I + ('ua-b u-b v-b',), forward=('v0 v-a+b v-a v-a-b u0',),
                remove=('u-a-b v-a-b', 'u-b v-b'), add=('u-b u-a-b',),
                endpoints='v-b v-a-b'),
    SurgeryRule('I.d3', paths=CASE_I + ('u-a-b u-b v-b',), forward=('v0 v-a+b v-a v-a-b u0',),
                remove=('u-b v-b', 'ua-b va-b'), add=('u-b ua-b',),
                endpoints='v-b va-b'),
    SurgeryRule('I.d4', paths=CASE_I + ('u-a-b u-b ua-b',), forward=('v0 v-a+b v-a v-a-b u0',),
                result='relabel', relabel='b'),

    # (u_a, u_0, u_{-a}, v_{-a}) on C
    SurgeryRule('II.a1', paths=CASE_II + ('u-b v-b',), absent=('u-b ua-b',),
                remove=('ua-b va-b', 'u-b v-b'), add=('u-b ua-b',),
                endpoints='v-b va-b'),
    SurgeryRule('II.a2', paths=CASE_II + ('u-b v-b', 'u-b ua-b'), absent=('v-a v-a+b',),
                remove=('u-a+b v-a+b', 'u-a v-a'), add=('v-a v-a+b',),
                endpoints='u-a u-a+b'),
    SurgeryRule('II.a3', paths=CASE_II + ('u-b v-b', 'u-b ua-b', 'v-a v-a+b'),
                either=('v-a u-a v-a-b u-a-b',),
                remove=('u-a-b v-a-b', 'u-a v-a'), add=('v-a v-a-b',),
                endpoints='u-a u-a-b'),
    SurgeryRule('II.a4', paths=CASE_II + ('u-b v-b', 'u-b ua-b', 'v-a v-a+b'),
                either=('v-a u-a u-a-b v-a-b',),
                remove=('ub u-a+b', 'va va-b', 'u-a-b v-a-b', 'v0 vb', 'u-b ua-b', 'u-a v-a',
                        'u0 ua'),
                add=('u0 v0', 'ua va', 'ub vb', 'ua-b va-b', 'u-b u-a-b', 'v-a v-a-b'),
                endpoints='u-a u-a+b'),
    SurgeryRule('II.a5', paths=CASE_II + ('u-b v-b', 'u-b ua-b', 'v-a v-a+b'),
                either=('v-a u-a u-a-b v-a-b',),
                remove=('ub u-a+b', 'va va-b', 'u-a-b v-a-b', 'v0 vb', 'u-b ua-b', 'u0 ua',
                        'v-a v-a+b'),
                add=('u0 v0', 'ua va', 'ub vb', 'ua-b va-b', 'u-b u-a-b', 'v-a v-a-b',
                     'v-a+b u-a+b'),
                result='cycle', relabel='a+b'),
    SurgeryRule('II.b1', paths=CASE_II + ('u-a-b u-b ua-b', 'v-a+b v-a'),
                forward=('v0 u-a-b u-b ua-b u0', 'v0 v-a+b v-a u-a u0'),
                remove=('u-a v-a', 'u-a-b v-a-b'), add=('v-a v-a-b',),
                endpoints='u-a u-a-b'),
    SurgeryRule('II.b2', paths=CASE_II + ('u-a-b u-b ua-b', 'v-a-b v-a'),
                result='relabel', relabel='a+b'),
    SurgeryRule('II.b3', paths=CASE_II + ('u-a-b u-b ua-b',),
                result='relabel', relabel='b'),

    # the two ordered subpaths; the congruences b = -2a and a = -2b are set aside
    SurgeryRule('III.special', paths=CASE_III, forward=('vb v0 u0 ua', 'ub uab vab va va-b ua-b'),
                result='special'),
    SurgeryRule('III.0', paths=CASE_III + ('u2a+b v2a+b',), either=('uab vab u2a+b v2a+b',),
                remove=('uab vab', 'u2a+b v2a+b'), add=('uab u2a+b',),
                endpoints='vab v2a+b'),
    SurgeryRule('III.a1', paths=CASE_III + ('u2a v2a v2a+b u2a+b', 'u2a-b v2a-b'),
                either=('u2a v2a u2a-b v2a-b',),
                remove=('u2a v2a', 'u2a-b v2a-b'), add=('v2a v2a-b',),
                endpoints='u2a u2a-b'),
    SurgeryRule('III.a2', paths=CASE_III + ('u2a v2a v2a+b u2a+b', 'u2a-b v2a-b'),
                either=('u2a v2a v2a-b u2a-b',),
                remove=('ua-b va-b', 'u2a-b v2a-b'), add=('ua-b u2a-b',),
                endpoints='va-b v2a-b'),
    SurgeryRule('III.b1', paths=CASE_III + ('u2a v2a v2a-b', 'va-b ua-b u-b v-b', 'u2a-b v2a-b'),
                remove=('ua-b va-b', 'u2a-b v2a-b'), add=('ua-b u2a-b',),
                endpoints='va-b v2a-b'),
    SurgeryRule('III.b2', paths=CASE_III + ('u2a v2a v2a-b', 'va-b ua-b u2a-b', 'u-b v-b'),
                either=('v0 u0 v-b u-b',),
                remove=('u0 v0', 'u-b v-b'), add=('v0 v-b',),
                endpoints='u0 u-b'),

    # remaining configurations of the ordered-subpath case
    SurgeryRule('A2.a1', paths=ASSUMPTION_2, forward=('ua u2a+b u-b ub',), **_SWEEP_V),
    SurgeryRule('A2.a2', paths=ASSUMPTION_2, forward=('ua u-b u2a+b ub',), **_SWEEP_U),
    SurgeryRule('A2.a3', paths=ASSUMPTION_2, forward=('ua u-b ub', 'va u2a+b vb'), **_SWEEP_V),
    SurgeryRule('A2.b1', paths=ASSUMPTION_2, forward=('va u2a+b u-b vb',), **_SWEEP_V),
    SurgeryRule('A2.b2', paths=ASSUMPTION_2, forward=('va u-b u2a+b vb',), **_SWEEP_U),
    SurgeryRule('A2.c1', paths=ASSUMPTION_2C + ('ua+2b va+2b',), forward=C_ORDERS,
                either=('uab vab ua+2b va+2b',),
                remove=('uab vab', 'ua+2b va+2b'), add=('vab va+2b',),
                endpoints='uab ua+2b'),
    SurgeryRule('A2.c2', paths=ASSUMPTION_2C + ('u-a v-a',), forward=C_ORDERS,
                either=('u0 v0 u-a v-a',),
                remove=('u0 v0', 'u-a v-a'), add=('u0 u-a',),
                endpoints='v0 v-a'),
    SurgeryRule('A2.c3', paths=ASSUMPTION_2C + ('u-a v-a',),
                forward=C_ORDERS + ('ua u-a u2a+b ub',), **_SWEEP_NEG_A),
    SurgeryRule('A2.c4', paths=ASSUMPTION_2C + ('u-a v-a',),
                forward=C_ORDERS + ('va u-b u-a vb',), **_SWEEP_NEG_A),
    SurgeryRule('A2.c5', paths=ASSUMPTION_2C + ('v-a+b v-a u-a',),
                forward=C_ORDERS + ('va v-a u-b vb',),
                remove=('v0 vb', 'ub u-a+b', 'v-a v-a+b'), add=('ub vb', 'u-a+b v-a+b'),
                endpoints='v0 v-a'),
    SurgeryRule('A2.c6', paths=ASSUMPTION_2C + ('va+2b ua+2b u2b',),
                forward=C_ORDERS + ('ua ua+2b ub',),
                remove=('vb v2b', 'u2b ua+2b', 'ub uab'), add=('ub vb', 'u2b v2b'),
                endpoints='uab ua+2b'),
    SurgeryRule('A2.c7', paths=ASSUMPTION_2C + ('va+2b ua+2b u2a+2b',),
                forward=C_ORDERS + ('ua u2a+b ua+2b ub',), **_SWEEP_A_2B),
    SurgeryRule('A2.c8', paths=ASSUMPTION_2C + ('ua+2b va+2b',),
                forward=C_ORDERS + ('va ua+2b u-b vb',), **_SWEEP_A_2B),
    SurgeryRule('A2.c9', paths=ASSUMPTION_2C + ('u2a+2b ua+2b va+2b',),
                forward=C_ORDERS + ('va u-b ua+2b vb',),
                remove=('v0 vb', 'v2a v2a-b', 'v2a+b v2a+2b', 'ub uab', 'ua-b u2a-b', 'u-b v-b',
                        'ua+2b u2a+2b'),
                add=('v0 v-b', 'v2a v2a+b', 'u2a-b v2a-b', 'u2a+2b v2a+2b', 'u-b ua-b',
                     'ub vb')),
    SurgeryRule('A2.c10', paths=ASSUMPTION_2C + ('u-a+2b u2b ua+2b va+2b',),
                forward=C_ORDERS + ('va u2b vb',),
                remove=('vb v2b', 'ub u-a+b', 'u2b u-a+2b'), add=('ub vb', 'u2b v2b'),
                endpoints='u-a+b u-a+2b'),
    SurgeryRule('A2.1a', paths=ASSUMPTION_2C + ('u-a v-a v-a+b u-a+b', 'u-a+2b v-a+2b'),
                forward=C_ORDERS, either=('u-a+2b v-a+2b u-a+b v-a+b',),
                remove=('u-a+2b v-a+2b', 'u-a+b v-a+b'), add=('v-a+b v-a+2b',),
                endpoints='u-a+2b u-a+b'),
    SurgeryRule('A2.1b', paths=ASSUMPTION_2C + ('u-a v-a v-a+b v-a+2b',), forward=C_ORDERS,
                remove=('vb v2b', 'v-a+b v-a+2b', 'ub u-a+b'), add=('ub vb', 'u-a+b v-a+b'),
                endpoints='v2b v-a+2b'),
    SurgeryRule('A2.1c', paths=ASSUMPTION_2C + ('u-a v-a v-a-b',), forward=C_ORDERS,
                remove=('v0 vb', 'v2a v2a-b', 'u2a+b v2a+b', 'v-a v-a-b', 'ub uab', 'ua-b u2a-b',
                        'u-b u-a-b'),
                add=('ub vb', 'v2a v2a+b', 'u2a-b v2a-b', 'uab u2a+b', 'u-a-b v-a-b',
                     'u-b ua-b')),
    SurgeryRule('A2.2', paths=ASSUMPTION_2C + ('ua+2b va+2b', 'u-a+b v-a+b', 'u-a v-a'),
                forward=C_ORDERS,
                remove=('ua+2b va+2b', 'u-a+b v-a+b', 'u-a v-a', 'u0 ua', 'va vab',
                        'u2b u-a+2b'),
                add=('u0 u-a', 'ua va', 'vab va+2b', 'u2b ua+2b', 'v-a v-a+b')),
    SurgeryRule('A2.3a', paths=ASSUMPTION_2C + ('v2b u2b ua+2b va+2b', 'u-a+2b v-a+2b'),
                forward=C_ORDERS, either=('v2b u2b v-a+2b u-a+2b',),
                remove=('u2b v2b', 'u-a+2b v-a+2b'), add=('u2b u-a+2b',),
                endpoints='v2b v-a+2b'),
    SurgeryRule('A2.3b', paths=ASSUMPTION_2C + ('u-a+b v-a+b', 'u-a+2b v-a+2b'),
                forward=C_ORDERS, either=('v-a+2b u-a+2b v-a+b u-a+b',),
                remove=('u-a+b v-a+b', 'u-a+2b v-a+2b'), add=('v-a+b v-a+2b',),
                endpoints='u-a+2b u-a+b'),
    SurgeryRule('A2.4', paths=ASSUMPTION_2C + ('u-a+2b v-a+2b v-a+b u-a+b', 'u2b v2b'),
                forward=C_ORDERS, either=('u2b v2b u-a+2b v-a+2b',),
                remove=('u2b v2b', 'u-a+2b v-a+2b'), add=('u2b u-a+2b',),
                endpoints='v2b v-a+2b'),
)

RULES_BY_ID = {rule.rule_id: rule for rule in RULES}

# Paths for the b = -2a configuration, written for p = 3a
SPECIAL_OUTER_PATH = SurgeryRule(
    'special.u', remove=('u0 v0', 'v2a v4a', 'u3a u4a'), add=('v0 v2a', 'u4a v4a'),
    endpoints='u0 u3a')
SPECIAL_INNER_PATH = SurgeryRule(
    'special.v', remove=('v0 v-2a', 'u0 ua', 'u-a u-2a', 'va v3a'),
    add=('u0 u-a', 'ua va', 'u-2a v-2a'), endpoints='v0 v3a')

# The same surgeries with the rims exchanged, for a = -2b and p = 3b
SPECIAL_OUTER_PATH_B = SurgeryRule(
    'special.u.b', remove=('u0 u-2b', 'v0 vb', 'v-b v-2b', 'ub u3b'),
    add=('v0 v-b', 'ub vb', 'u-2b v-2b'), endpoints='u0 u3b')
SPECIAL_INNER_PATH_B = SurgeryRule(
    'special.v.b', remove=('u0 v0', 'u2b u4b', 'v3b v4b'), add=('u0 u2b', 'u4b v4b'),
    endpoints='v0 v3b')

SPECIAL_PATHS = {
    'b=-2a': (SPECIAL_OUTER_PATH, SPECIAL_INNER_PATH),
    'a=-2b': (SPECIAL_OUTER_PATH_B, SPECIAL_INNER_PATH_B),
}


# Hook-edge exchanges for 4-hooked cycles whose main wiring fails
HOOK_EXCHANGES = (
    SurgeryRule('hook.1', remove=('u0 ua', 'ub uab', 'va vab'), add=('ua va', 'uab vab'),
                endpoints='u0 ub'),
    SurgeryRule('hook.2', remove=('u0 ua', 'ub uab', 'v0 vb'), add=('u0 v0', 'ub vb'),
                endpoints='ua uab'),
    SurgeryRule('hook.3', remove=('v0 vb', 'va vab', 'u0 ua'), add=('u0 v0', 'ua va'),
                endpoints='vb vab'),
    SurgeryRule('hook.4', remove=('v0 vb', 'va vab', 'ub uab'), add=('ub vb', 'uab vab'),
                endpoints='v0 va'),
)
