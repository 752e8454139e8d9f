#!/usr/bin/env python3
"""
Hamilton cycles of I-graphs I(m;a,b)

Every Hamilton cycle of a connected I(m;a,b) with a != +-b is alternating,
4-hooked or 2-hooked.  This module classifies cycles with machine-checked
witnesses, performs verified edge surgery, and turns elusive 4-hooked cycles
into something the rose window constructions can use.
"""

import logging
from collections import Counter
from dataclasses import dataclass, replace
from enum import Enum
from math import gcd

import surgery_rules
from bicirculant import (EdgeKind, IGraphSpec, Side, build, edge, gcd_all, inner, outer,
                         petersen_exception_multiplier)
from errors import (ClassificationFailed, Disconnected, MissingOuterEdge, NotApplicable,
                    PreconditionUnmet, ResolutionFailed, SearchBudgetExceeded, SurgeryBroken)
from hamilton_search import (HamiltonCycle, HamiltonPath, SearchStatus, canonical_order,
                             enumerate_hamilton_cycles, find_hamilton_cycle, find_hamilton_path,
                             verify_cycle, verify_path, walk_edges)

logger = logging.getLogger(__name__)


class CycleKind(Enum):
    ALTERNATING = 'Alternating'
    FOUR_HOOKED = 'FourHooked'
    TWO_HOOKED = 'TwoHooked'
    UNCLASSIFIED = 'Unclassified'


class Flavor(Enum):
    STANDARD = 'standard'
    ELUSIVE1 = 'elusive1'
    ELUSIVE2 = 'elusive2'


HOOK_NAMES = ('u0', 'ua', 'ub', 'uab', 'v0', 'va', 'vb', 'vab')

ELUSIVE_ORDERS = {
    ('u0', 'ua', 'ub', 'uab', 'vab', 'va', 'vb', 'v0'): Flavor.ELUSIVE1,
    ('u0', 'ua', 'va', 'vab', 'v0', 'vb', 'ub', 'uab'): Flavor.ELUSIVE2,
}


def shift_cycle(cycle, t, m):
    """Add t to every subscript (an automorphism of every bicirculant)."""
    return HamiltonCycle(tuple(x.shifted(t, m) for x in cycle.vertices), cycle.verified)


def shift_path(path, t, m):
    return HamiltonPath(tuple(x.shifted(t, m) for x in path.vertices), path.verified)


def hook_vertices(t, a, b, m):
    return {
        'u0': outer(t % m), 'ua': outer((t + a) % m),
        'ub': outer((t + b) % m), 'uab': outer((t + a + b) % m),
        'v0': inner(t % m), 'va': inner((t + a) % m),
        'vb': inner((t + b) % m), 'vab': inner((t + a + b) % m),
    }


def hook_edges(t, a, b, m):
    """u_t u_{t+a}, u_{t+b} u_{t+a+b}, v_t v_{t+b}, v_{t+a} v_{t+a+b}."""
    h = hook_vertices(t, a, b, m)
    return (edge(h['u0'], h['ua']), edge(h['ub'], h['uab']),
            edge(h['v0'], h['vb']), edge(h['va'], h['vab']))


def hook_order(cycle, t, a, b, m):
    """Names of the eight hook vertices in the order met when u_{t+a} follows u_t."""
    h = hook_vertices(t, a, b, m)
    oriented = cycle.oriented(h['u0'], h['ua'])
    position = {x: i for i, x in enumerate(oriented.vertices)}
    return tuple(sorted(HOOK_NAMES, key=lambda name: position[h[name]]))


def sign_variants(a, b, m):
    """(a,b), (-a,b), (a,-b), (-a,-b): relabelings of the same graph."""
    variants = []
    for x, y in ((a, b), (-a, b), (a, -b), (-a, -b)):
        pair = (x % m, y % m)
        if pair not in variants:
            variants.append(pair)
    return variants


@dataclass(frozen=True)
class HookLabel:
    """Shift t and hook residues (a, b) under which the cycle carries the four hook edges."""

    shift: int
    a: int
    b: int
    flavor: Flavor
    order: tuple

    @property
    def elusive(self):
        return self.flavor is not Flavor.STANDARD

    def edges(self, m):
        return hook_edges(self.shift, self.a, self.b, m)

    def to_record(self, m):
        return {
            'shift': self.shift,
            'hook_a': self.a,
            'hook_b': self.b,
            'flavor': self.flavor.value,
            'order': list(self.order),
            'hook_edges': [' '.join(str(x) for x in sorted(e)) for e in self.edges(m)],
        }


def find_hook_label(cycle, a, b, m, standard_only=False):
    """First (t, sign variant) whose hook edges all lie on the cycle."""
    edges = cycle.edges()
    for t in range(m):
        for ha, hb in sign_variants(a, b, m):
            if not all(e in edges for e in hook_edges(t, ha, hb, m)):
                continue
            order = hook_order(cycle, t, ha, hb, m)
            flavor = ELUSIVE_ORDERS.get(order, Flavor.STANDARD)
            if standard_only and flavor is not Flavor.STANDARD:
                continue
            return HookLabel(t, ha, hb, flavor, order)
    return None


def anchored_standard(cycle, hook, m):
    """Relabel so the hook sits at shift 0."""
    return shift_cycle(cycle, -hook.shift, m), replace(hook, shift=0)


@dataclass(frozen=True)
class TwoHookedWitness:
    """Hamilton path v_0 -> v_offset ('v') or u_0 -> u_offset ('u') plus its companion path.

    The companion runs u_0 -> u_offset for the 'v' variant and v_0 -> v_offset for 'u'.
    """

    variant: str
    offset: int
    path: HamiltonPath
    companion: HamiltonPath = None
    derivation: str = 'search'

    def to_record(self):
        record = {
            'variant': self.variant,
            'offset': self.offset,
            'path': self.path.tokens(),
            'derivation': self.derivation,
        }
        if self.companion is not None:
            record['companion'] = self.companion.tokens()
        return record


def anchored_path(path, side, offset, m):
    """Shift, and reverse if needed, a path side_x .. side_{x+-offset} to side_0 .. side_offset."""
    x, y = path.endpoints
    if x.side is not side or y.side is not side:
        return None
    d = (y.index - x.index) % m
    if d == offset % m:
        return shift_path(path, -x.index, m)
    if d == (-offset) % m:
        return shift_path(path.reversed(), -y.index, m)
    return None


def normalize_two_hooked(spec, path, derivation):
    for variant, side, offset in (('v', Side.INNER, spec.a), ('u', Side.OUTER, spec.b)):
        anchored = anchored_path(path, side, offset, spec.m)
        if anchored is not None:
            return TwoHookedWitness(variant, offset, anchored, derivation=derivation)
    return None


def companion_path(spec, cycle, variant):
    """Delete a rim edge of the right side from a Hamilton cycle and anchor the path."""
    m = spec.m
    side, offset = (Side.OUTER, spec.a) if variant == 'v' else (Side.INNER, spec.b)
    seq = cycle.vertices
    n = len(seq)
    for i in range(n):
        x, y = seq[i], seq[(i + 1) % n]
        if x.side is side and y.side is side and (y.index - x.index) % m in (offset % m, (-offset) % m):
            return anchored_path(HamiltonPath(seq[i + 1:] + seq[:i + 1], cycle.verified), side, offset, m)
    raise MissingOuterEdge(f"no {side.name.lower()} rim edge of type {offset} on the cycle")


def with_companion(spec, witness, cycle):
    return replace(witness, companion=companion_path(spec, cycle, witness.variant))


@dataclass(frozen=True)
class Surgery:
    remove: frozenset = frozenset()
    add: frozenset = frozenset()
    expect: str = 'path'
    endpoints: tuple = None
    label: str = ''


def apply_surgery(graph, base, surgery):
    """Replace edges of a Hamilton cycle or path of graph; the result is verified or SurgeryBroken."""
    label = surgery.label or 'surgery'
    base_edges = base.edges()
    if not surgery.remove <= base_edges:
        raise SurgeryBroken(f"{label}: removed edges are not on the base", 'edges')
    if surgery.add & base_edges:
        raise SurgeryBroken(f"{label}: added edges are already on the base", 'edges')
    for e in surgery.add:
        if len(e) != 2 or not graph.has_edge(*e):
            raise SurgeryBroken(f"{label}: added pair is not an edge of the graph", 'edges')

    edges = (base_edges - surgery.remove) | surgery.add
    degree = Counter(x for e in edges for x in e)
    if any(d > 2 for d in degree.values()):
        raise SurgeryBroken(f"{label}: a vertex gets degree above 2", 'degree')
    if set(base.vertices) - set(degree):
        raise SurgeryBroken(f"{label}: a vertex is left uncovered", 'coverage')
    ends = [x for x, d in degree.items() if d == 1]
    if len(ends) != (0 if surgery.expect == 'cycle' else 2):
        raise SurgeryBroken(f"{label}: {len(ends)} vertices of degree 1", 'degree')
    walked = walk_edges(edges)
    if walked is None or len(walked[0]) != len(base.vertices):
        raise SurgeryBroken(f"{label}: result splits into several pieces", 'connectivity')
    seq, _ = walked

    if surgery.expect == 'cycle':
        check = verify_cycle(graph, seq)
        if not check:
            raise SurgeryBroken(f"{label}: {check}", 'verification')
        return HamiltonCycle(canonical_order(seq), True, True)

    if surgery.endpoints is not None:
        if set(ends) != set(surgery.endpoints):
            raise SurgeryBroken(f"{label}: path ends at {sorted(ends)}", 'endpoints')
        if seq[0] != surgery.endpoints[0]:
            seq = seq[::-1]
    check = verify_path(graph, seq, vertices=base.vertices)
    if not check:
        raise SurgeryBroken(f"{label}: {check}", 'verification')
    return HamiltonPath(tuple(seq), True)


def rule_surgery(rule, a, b, m):
    remove, add, endpoints = surgery_rules.surgery_edges(rule, a, b, m)
    expect = 'cycle' if rule.result == 'cycle' else 'path'
    return Surgery(remove, add, expect, endpoints, rule.rule_id)


def hook_exchanges(spec, graph, cycle, hook):
    """2-hooked witnesses from exchanging three hook edges for two spokes."""
    m = spec.m
    local = shift_cycle(cycle, -hook.shift, m)
    for rule in surgery_rules.HOOK_EXCHANGES:
        try:
            path = apply_surgery(graph, local, rule_surgery(rule, hook.a, hook.b, m))
        except SurgeryBroken:
            continue
        witness = normalize_two_hooked(spec, path, rule.rule_id)
        if witness is not None:
            yield witness


def spoke_swaps(spec, graph, cycle):
    """2-hooked witnesses from dropping spokes u_xv_x, u_yv_y (y - x = +-a, +-b) for the rim edge x~y."""
    m = spec.m
    edges = cycle.edges()
    steps = ((spec.a, Side.OUTER), (-spec.a, Side.OUTER), (spec.b, Side.INNER), (-spec.b, Side.INNER))
    for x in range(m):
        spoke_x = edge(outer(x), inner(x))
        if spoke_x not in edges:
            continue
        for step, side in steps:
            y = (x + step) % m
            spoke_y = edge(outer(y), inner(y))
            rim = edge(outer(x), outer(y)) if side is Side.OUTER else edge(inner(x), inner(y))
            if spoke_y not in edges or rim in edges:
                continue
            surgery = Surgery(frozenset((spoke_x, spoke_y)), frozenset((rim,)), 'path',
                              label=f"spoke-swap:{x},{y}")
            try:
                path = apply_surgery(graph, cycle, surgery)
            except SurgeryBroken:
                continue
            witness = normalize_two_hooked(spec, path, surgery.label)
            if witness is not None:
                yield witness


def search_two_hooked(spec, graph, budget=None):
    """Hamilton path v_0 -> v_a, else u_0 -> u_b, by search."""
    exhausted = False
    for x, y in ((inner(0), inner(spec.a)), (outer(0), outer(spec.b))):
        outcome = find_hamilton_path(graph, x, y, budget)
        if outcome.found:
            return normalize_two_hooked(spec, outcome.result, 'search')
        exhausted |= outcome.status is SearchStatus.BUDGET
    if exhausted:
        raise SearchBudgetExceeded(f"2-hooked path search on {spec} ran out of budget")
    return None


def derive_two_hooked(spec, graph, cycle, hook=None, budget=None, search=True):
    """2-hooked witness (with companion) derived from cycle by surgery, else by search."""
    candidates = hook_exchanges(spec, graph, cycle, hook) if hook is not None else iter(())
    for witness in candidates:
        return with_companion(spec, witness, cycle)
    for witness in spoke_swaps(spec, graph, cycle):
        return with_companion(spec, witness, cycle)
    if not search:
        return None
    witness = search_two_hooked(spec, graph, budget)
    if witness is None:
        return None
    logger.debug(f"2-hooked witness for {spec} found by search")
    return with_companion(spec, witness, cycle)


@dataclass
class CycleClass:
    kind: CycleKind
    hook: HookLabel = None
    witness: TwoHookedWitness = None
    spokes: int = 0
    in_scope: bool = True

    def to_record(self, m):
        record = {'class': self.kind.value, 'spokes': self.spokes, 'in_scope': self.in_scope}
        if self.hook is not None:
            record.update(self.hook.to_record(m))
        if self.witness is not None:
            record['witness'] = self.witness.to_record()
        if not self.in_scope:
            record['note'] = 'outside-trichotomy'
        return record


def _require_connected(spec):
    if not isinstance(spec, IGraphSpec):
        raise NotApplicable(f"{spec} is not an I-graph")
    if gcd_all(spec.m, (spec.a, spec.b)) != 1:
        raise Disconnected(f"{spec} is disconnected")


def classify_cycle(spec, cycle, budget=None):
    """Alternating, 4-hooked (standard/elusive1/elusive2) or 2-hooked, with a witness.

    For a = +-b the trichotomy is not claimed: alternating and 2-hooked are still
    detected, anything else is reported as Unclassified with in_scope False.
    """
    _require_connected(spec)
    m = spec.m
    graph = build(spec)
    check = verify_cycle(graph, cycle.vertices)
    if not check:
        raise ClassificationFailed(f"not a Hamilton cycle of {spec}: {check}")
    spokes = sum(1 for e in cycle.edges() if graph.kind(*e) is EdgeKind.SPOKE)
    in_scope = not spec.symmetric_rims

    if spokes == m:
        return CycleClass(CycleKind.ALTERNATING, spokes=spokes, in_scope=in_scope)
    if in_scope:
        hook = find_hook_label(cycle, spec.a, spec.b, m)
        if hook is not None:
            return CycleClass(CycleKind.FOUR_HOOKED, hook=hook, spokes=spokes)
    witness = derive_two_hooked(spec, graph, cycle, budget=budget)
    if witness is not None:
        return CycleClass(CycleKind.TWO_HOOKED, witness=witness, spokes=spokes, in_scope=in_scope)
    if not in_scope:
        return CycleClass(CycleKind.UNCLASSIFIED, spokes=spokes, in_scope=False)
    raise ClassificationFailed(f"no class witnessed for a cycle of {spec}",
                               cycle=[str(x) for x in cycle.vertices])


def stride_cycle(spec):
    """v_0,u_0,u_a,...,u_{(m-1)a},v_{(m-1)a},...,v_a for a = +-b, and the path v_0 -> v_a inside it."""
    if not spec.symmetric_rims:
        raise NotApplicable(f"{spec} does not have a = +-b")
    m, a = spec.m, spec.a
    if gcd(m, a) != 1:
        raise Disconnected(f"{spec} is disconnected")
    seq = ((inner(0),) + tuple(outer((k * a) % m) for k in range(m))
           + tuple(inner((k * a) % m) for k in range(m - 1, 0, -1)))
    graph = build(spec)
    check = verify_cycle(graph, seq)
    if not check:
        raise ClassificationFailed(f"stride cycle of {spec} failed: {check}")
    cycle = HamiltonCycle(seq, True)
    path = HamiltonPath(seq, True)
    witness = with_companion(spec, TwoHookedWitness('v', a, path, derivation='stride'), cycle)
    return cycle, witness


class ResolutionKind(Enum):
    STANDARD = 'Standard4Hooked'
    TWO_HOOKED = 'TwoHookedWitness'
    SPECIAL = 'SpecialCase'


@dataclass
class Resolution:
    """Outcome of resolving an elusive cycle.

    `cycle` is the type-1 normalized input for SPECIAL and TWO_HOOKED, and the
    standard cycle (hook at shift 0) for STANDARD.  a, b are the hook residues of
    the normalized labeling.
    """

    kind: ResolutionKind
    cycle: HamiltonCycle
    a: int
    b: int
    hook: HookLabel = None
    witness: TwoHookedWitness = None
    congruence: str = None
    subpaths: tuple = ()
    rule_id: str = None
    fallback: bool = False
    misfires: tuple = ()

    def to_record(self):
        record = {
            'outcome': self.kind.value,
            'hook_a': self.a,
            'hook_b': self.b,
            'rule_id': self.rule_id,
            'fallback': self.fallback,
            'misfires': list(self.misfires),
        }
        if self.witness is not None:
            record['witness'] = self.witness.to_record()
        if self.congruence is not None:
            record['congruence'] = self.congruence
            record['subpaths'] = [[str(x) for x in p] for p in self.subpaths]
        return record


def special_congruence(a, b, m):
    if (b + 2 * a) % m == 0:
        return 'b=-2a'
    if (a + 2 * b) % m == 0:
        return 'a=-2b'
    return None


def standard_label_at(cycle, a, b, m):
    if not all(e in cycle.edges() for e in hook_edges(0, a, b, m)):
        return None
    order = hook_order(cycle, 0, a, b, m)
    if order in ELUSIVE_ORDERS:
        return None
    return HookLabel(0, a, b, Flavor.STANDARD, order)


def normalize_elusive(spec, cycle, hook):
    """Type-1 elusive cycle with its hook at 0, read so that u_a follows u_0.

    Type 2 becomes type 1 of the relabeled graph I(m;-a,b) after adding -a to
    every subscript and reversing the direction.
    """
    m = spec.m
    a, b = hook.a, hook.b
    normalized = shift_cycle(cycle, -hook.shift, m)
    if hook.flavor is Flavor.ELUSIVE2:
        normalized = shift_cycle(normalized, -a, m)
        a = (-a) % m
    normalized = normalized.oriented(outer(0), outer(a))
    if ELUSIVE_ORDERS.get(hook_order(normalized, 0, a, b, m)) is not Flavor.ELUSIVE1:
        raise ResolutionFailed(f"normalization of an elusive cycle of {spec} is not of type 1")
    return normalized, a, b


def _fire(spec, graph, cycle, rule, a, b):
    m = spec.m
    if rule.result == 'relabel':
        shifted = shift_cycle(cycle, surgery_rules.symbol_shift(rule.relabel, a, b, m), m)
        label = standard_label_at(shifted, a, b, m)
        if label is None:
            return None
        return Resolution(ResolutionKind.STANDARD, shifted, a, b, hook=label, rule_id=rule.rule_id)
    try:
        result = apply_surgery(graph, cycle, rule_surgery(rule, a, b, m))
    except SurgeryBroken as e:
        logger.debug(f"rule {rule.rule_id} broken at check '{e.check}'")
        return None
    if rule.result == 'cycle':
        shifted = shift_cycle(result, surgery_rules.symbol_shift(rule.relabel, a, b, m), m)
        label = standard_label_at(shifted, a, b, m)
        if label is None:
            found = find_hook_label(shifted, a, b, m, standard_only=True)
            if found is None:
                return None
            shifted, label = anchored_standard(shifted, found, m)
        return Resolution(ResolutionKind.STANDARD, shifted, label.a, label.b, hook=label,
                          rule_id=rule.rule_id)
    witness = normalize_two_hooked(spec, result, rule.rule_id)
    if witness is None:
        return None
    return Resolution(ResolutionKind.TWO_HOOKED, cycle, a, b,
                      witness=with_companion(spec, witness, cycle), rule_id=rule.rule_id)


def resolve_elusive(spec, cycle, hook=None, budget=None):
    """Standard 4-hooked cycle, 2-hooked witness or the special subpath case for an elusive cycle."""
    _require_connected(spec)
    m = spec.m
    if hook is None:
        hook = find_hook_label(cycle, spec.a, spec.b, m)
    if hook is None or not hook.elusive:
        raise NotApplicable(f"cycle of {spec} is not elusive 4-hooked")
    graph = build(spec)
    normalized, a, b = normalize_elusive(spec, cycle, hook)
    vertices, edges = normalized.vertices, normalized.edges()

    misfires = []
    for rule in surgery_rules.RULES:
        if not surgery_rules.matches(rule, vertices, edges, a, b, m):
            continue
        if rule.result == 'special':
            which = special_congruence(a, b, m)
            if which is None:
                continue
            subpaths = tuple(tuple(surgery_rules.symbol_sequence(text, a, b, m))
                             for text in rule.forward)
            logger.info(f"{spec}: special subpath case {which}")
            return Resolution(ResolutionKind.SPECIAL, normalized, a, b, congruence=which,
                              subpaths=subpaths, rule_id=rule.rule_id, misfires=tuple(misfires))
        outcome = _fire(spec, graph, normalized, rule, a, b)
        if outcome is None:
            logger.warning(f"{spec}: rule {rule.rule_id} matched but did not verify")
            misfires.append(rule.rule_id)
            continue
        logger.debug(f"{spec}: resolved by rule {rule.rule_id}")
        outcome.misfires = tuple(misfires)
        return outcome

    found = find_hook_label(normalized, a, b, m, standard_only=True)
    if found is not None:
        standard, label = anchored_standard(normalized, found, m)
        return Resolution(ResolutionKind.STANDARD, standard, label.a, label.b, hook=label,
                          rule_id='relabel-scan', fallback=True, misfires=tuple(misfires))
    for witness in spoke_swaps(spec, graph, normalized):
        return Resolution(ResolutionKind.TWO_HOOKED, normalized, a, b,
                          witness=with_companion(spec, witness, normalized),
                          rule_id=witness.derivation, fallback=True,
                          misfires=tuple(misfires))

    witness = search_two_hooked(spec, graph, budget)
    if witness is not None:
        logger.warning(f"{spec}: elusive cycle resolved by search fallback")
        return Resolution(ResolutionKind.TWO_HOOKED, normalized, a, b,
                          witness=with_companion(spec, witness, normalized),
                          rule_id='search', fallback=True, misfires=tuple(misfires))
    raise ResolutionFailed(f"no rule, surgery or search resolves an elusive cycle of {spec}",
                           misfires=misfires)


@dataclass
class SpecialPaths:
    which: str
    p: int
    outer_path: HamiltonPath
    inner_path: HamiltonPath
    pair: tuple
    fallbacks: tuple = ()

    def to_record(self):
        return {
            'congruence': self.which,
            'p': self.p,
            'outer_path': self.outer_path.tokens(),
            'inner_path': self.inner_path.tokens(),
            'pair': [path.tokens() for path in self.pair],
            'fallbacks': list(self.fallbacks),
        }


def _special_path(graph, cycle, rule, endpoints, a, b, budget):
    m = graph.m
    try:
        return apply_surgery(graph, cycle, rule_surgery(rule, a, b, m)), False
    except SurgeryBroken as e:
        logger.debug(f"{rule.rule_id} broken at check '{e.check}', searching")
    outcome = find_hamilton_path(graph, *endpoints, budget=budget)
    return outcome.unwrap(f"Hamilton path {endpoints[0]} -> {endpoints[1]}"), True


def special_case_paths(spec, cycle, which, a=None, b=None, budget=None):
    """Paths u_0 -> u_p, v_0 -> v_p and a partitioning pair {u_0 -> v_p, u_p -> v_0}.

    p = 3a when b = -2a and p = 3b when a = -2b; (a, b) are the hook residues of
    the cycle's labeling and default to the graph's own.
    """
    m = spec.m
    a = spec.a if a is None else a % m
    b = spec.b if b is None else b % m
    if which not in surgery_rules.SPECIAL_PATHS:
        raise NotApplicable(f"unknown congruence '{which}'")
    holds = (b + 2 * a) % m == 0 if which == 'b=-2a' else (a + 2 * b) % m == 0
    if not holds:
        raise PreconditionUnmet(f"{which} does not hold for a={a}, b={b} mod {m}")
    graph = build(spec)
    try:
        oriented = cycle.oriented(outer(0), outer(a))
    except ValueError:
        raise PreconditionUnmet(f"u0 u{a} is not on the cycle")
    rule = surgery_rules.RULES_BY_ID['III.special']
    if not surgery_rules.matches(rule, oriented.vertices, oriented.edges(), a, b, m):
        raise PreconditionUnmet("the two ordered subpaths are not on the cycle")

    p = (3 * a if which == 'b=-2a' else 3 * b) % m
    pair = _spoke_split(graph, oriented, p)

    outer_rule, inner_rule = surgery_rules.SPECIAL_PATHS[which]
    fallbacks = []
    outer_path, used = _special_path(graph, oriented, outer_rule, (outer(0), outer(p)), a, b, budget)
    if used:
        fallbacks.append('outer_path')
    inner_path, used = _special_path(graph, oriented, inner_rule, (inner(0), inner(p)), a, b, budget)
    if used:
        fallbacks.append('inner_path')
    if fallbacks:
        logger.warning(f"{spec}: special-case paths {fallbacks} found by search")
    return SpecialPaths(which, p, outer_path, inner_path, pair, tuple(fallbacks))


def _spoke_split(graph, oriented, p):
    """Drop u_0v_0 and u_pv_p from a cycle read u_0 ... v_0; the halves must run u_0 -> v_p and u_p -> v_0."""
    seq = oriented.vertices
    if seq[-1] != inner(0) or edge(outer(p), inner(p)) not in oriented.edges():
        raise PreconditionUnmet(f"spokes u0v0 and u{p}v{p} are not both on the cycle")
    i = min(seq.index(outer(p)), seq.index(inner(p)))
    pair = (HamiltonPath(seq[:i + 1], True), HamiltonPath(seq[i + 1:], True))
    for path, ends in zip(pair, ((outer(0), inner(p)), (outer(p), inner(0)))):
        check = verify_path(graph, path.vertices, endpoints=ends, vertices=path.vertices)
        if not check:
            raise PreconditionUnmet(f"partition pair failed: {check}")
    return pair



class UsableKind(Enum):
    ALTERNATING = 'Alternating'
    STANDARD_4 = 'Standard4Hooked'
    TWO_HOOKED = 'TwoHooked'
    SPECIAL = 'SpecialSubpaths'


@dataclass
class UsableForm:
    kind: UsableKind
    cycle: HamiltonCycle
    hook: HookLabel = None
    witness: TwoHookedWitness = None
    special: SpecialPaths = None
    resolution: Resolution = None
    source: str = 'search'

    def to_record(self):
        record = {'form': self.kind.value, 'source': self.source, 'cycle': self.cycle.tokens()}
        if self.hook is not None:
            record.update({'hook_a': self.hook.a, 'hook_b': self.hook.b, 'order': list(self.hook.order)})
        if self.witness is not None:
            record['witness'] = self.witness.to_record()
        if self.special is not None:
            record['special'] = self.special.to_record()
        if self.resolution is not None:
            record['resolution'] = self.resolution.to_record()
        return record


def find_alternating_cycle(spec, budget=None):
    """Hamilton cycle through all m spokes, or None."""
    graph = build(spec)
    required = [(outer(i), inner(i)) for i in range(spec.m)]
    outcome = find_hamilton_cycle(graph, budget, required_edges=required)
    if outcome.status is SearchStatus.BUDGET:
        logger.debug(f"alternating search on {spec} ran out of budget")
    return outcome.result if outcome.found else None


def usable_from_cycle(spec, cycle, budget=None):
    m = spec.m
    cls = classify_cycle(spec, cycle, budget)
    if cls.kind is CycleKind.ALTERNATING:
        return UsableForm(UsableKind.ALTERNATING, cycle)
    if cls.kind is CycleKind.TWO_HOOKED:
        return UsableForm(UsableKind.TWO_HOOKED, cycle, witness=cls.witness, source=cls.witness.derivation)
    if cls.kind is not CycleKind.FOUR_HOOKED:
        raise ClassificationFailed(f"cycle of {spec} has no usable class")
    if not cls.hook.elusive:
        standard, label = anchored_standard(cycle, cls.hook, m)
        return UsableForm(UsableKind.STANDARD_4, standard, hook=label)

    resolution = resolve_elusive(spec, cycle, cls.hook, budget)
    if resolution.kind is ResolutionKind.STANDARD:
        return UsableForm(UsableKind.STANDARD_4, resolution.cycle, hook=resolution.hook,
                          resolution=resolution, source=resolution.rule_id)
    if resolution.kind is ResolutionKind.TWO_HOOKED:
        return UsableForm(UsableKind.TWO_HOOKED, resolution.cycle, witness=resolution.witness,
                          resolution=resolution, source=resolution.rule_id)
    special = special_case_paths(spec, resolution.cycle, resolution.congruence,
                                 resolution.a, resolution.b, budget)
    return UsableForm(UsableKind.SPECIAL, resolution.cycle, special=special,
                      resolution=resolution, source=resolution.rule_id)


def usable_cycle(spec, budget=None):
    """A verified form the rose window constructions accept, for a connected non-exception I-graph."""
    _require_connected(spec)
    m = spec.m
    if petersen_exception_multiplier(m, spec.a, spec.b) is not None:
        raise NotApplicable(f"{spec} is isomorphic to G({m},2) with {m} = 5 (mod 6)")
    if spec.symmetric_rims:
        cycle, witness = stride_cycle(spec)
        return UsableForm(UsableKind.TWO_HOOKED, cycle, witness=witness, source='stride')
    if m % 2 == 0:
        alternating = find_alternating_cycle(spec, budget)
        if alternating is not None:
            return UsableForm(UsableKind.ALTERNATING, alternating, source='alternating-search')
    cycle = find_hamilton_cycle(build(spec), budget).unwrap(f"Hamilton cycle of {spec}")
    return usable_from_cycle(spec, cycle, budget)


def igraph_specs(max_m, min_m=3):
    """Connected I(m;a,b), 1 <= a, b < m/2, a != b."""
    for m in range(min_m, max_m + 1):
        reps = range(1, (m + 1) // 2)
        for a in reps:
            for b in reps:
                if a != b and gcd_all(m, (a, b)) == 1:
                    yield IGraphSpec(m, a, b)


def trichotomy_audit(max_m=10, min_m=3, cap=None, budget=None):
    """Classify every enumerated Hamilton cycle of every connected I(m;a,b), a != +-b."""
    records = []
    for spec in igraph_specs(max_m, min_m):
        enumeration = enumerate_hamilton_cycles(build(spec), cap=cap, force=True, budget=budget)
        logger.info(f"audit {spec}: {len(enumeration)} cycle(s)")
        for cycle in enumeration:
            record = {'spec': str(spec), 'cycle': ' '.join(cycle.tokens())}
            try:
                record.update(classify_cycle(spec, cycle, budget).to_record(spec.m))
                record['ok'] = True
            except ClassificationFailed as e:
                logger.error(f"audit {spec}: {e.message}")
                record.update({'class': 'Failed', 'ok': False, 'error': e.message})
            records.append(record)
    return records


def resolution_audit(max_m=10, min_m=3, cap=None, budget=None):
    """Resolve every elusive cycle met while enumerating connected I(m;a,b), a != +-b."""
    records = []
    for spec in igraph_specs(max_m, min_m):
        for cycle in enumerate_hamilton_cycles(build(spec), cap=cap, force=True, budget=budget):
            hook = find_hook_label(cycle, spec.a, spec.b, spec.m)
            if hook is None or not hook.elusive:
                continue
            record = {'spec': str(spec), 'cycle': ' '.join(cycle.tokens()), 'flavor': hook.flavor.value}
            try:
                resolution = resolve_elusive(spec, cycle, hook, budget)
                record.update(resolution.to_record())
                record['ok'] = True
            except ResolutionFailed as e:
                logger.error(f"resolution audit {spec}: {e.message}")
                record.update({'outcome': 'Failed', 'ok': False, 'error': e.message})
            records.append(record)
    logger.info(f"resolution audit up to m={max_m}: {len(records)} elusive cycle(s)")
    return records
