#!/usr/bin/env python3
"""
Hamilton cycles in connected generalized rose window graphs R(m;a,b,c)

Deleting the spokes of type c leaves H = I(m;a,b), a union of lambda+1 isomorphic
I-graphs H_0..H_lambda with u^i_x = u_{x+ic}, v^i_x = v_{x+ic}.  A usable form of
one component (alternating cycle, 2-hooked witness, standard 4-hooked cycle or
the special path family) is copied into every layer and the layers are stitched
with type-c spokes u^i_x v^{i+1}_x.  Every assembled cycle is verified against
the full graph before it is returned.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum

from bicirculant import (BicirculantSpec, EdgeKind, GrwSpec, IGraphSpec, Side, Vertex, build,
                         decompose, edge, gcd_all, inner, outer, petersen_exception_multiplier)
from errors import (Disconnected, ElusiveInput, IsomorphismCheckFailed, MissingOuterEdge,
                    NoValidX, NotAlternating, NotApplicable, OddM0, PathsInconsistent,
                    WiringFailed, WitnessInvalid)
from graph_io import parse_spec, parse_vertex, spec_text
from hamilton_search import (HamiltonCycle, canonical_order, find_hamilton_cycle,
                             find_hamilton_path, verify_cycle, verify_path, walk_edges)
from igraph_analysis import (UsableKind, anchored_standard, derive_two_hooked, hook_vertices,
                             usable_cycle)

logger = logging.getLogger(__name__)


class Route(Enum):
    CONNECTED_H = 'ConnectedH'
    CONNECTED_H_PETERSEN = 'ConnectedH_PetersenPath'
    ALTERNATING = 'AlternatingConstruction'
    TWO_HOOKED = 'TwoHookedConstruction'
    PATH_PAIR = 'TwoHookedRemark10'
    FOUR_HOOKED = 'FourHookedConstruction'
    PETERSEN_EXCEPTION = 'PetersenExceptionConstruction'


@dataclass
class ConstructionContext:
    grw: GrwSpec
    g: int
    m0: int
    component: IGraphSpec
    graph: object
    component_graph: object
    exception: bool = False

    @property
    def lam(self):
        return self.g - 1

    def lift(self, layer, x):
        """Global vertex of the component-local vertex x in layer H_layer."""
        return Vertex(x.side, (self.g * x.index + layer * self.grw.c) % self.grw.m)

    def spoke(self, layer, k):
        """u^layer_k v^{layer+1}_k, a spoke of type c."""
        return edge(self.lift(layer, outer(k)), self.lift(layer + 1, inner(k)))


@dataclass
class Certificate:
    grw: GrwSpec
    route: Route
    params: dict = field(default_factory=dict)
    cycle: HamiltonCycle = None
    verified: bool = False

    def to_record(self):
        return {
            'spec': spec_text(self.grw),
            'route': self.route.value,
            'params': self.params,
            'cycle': self.cycle.tokens(),
            'verified': self.verified,
        }

    @classmethod
    def from_record(cls, record):
        grw = parse_spec(record['spec'])
        cycle = HamiltonCycle(tuple(parse_vertex(t) for t in record['cycle']))
        return cls(grw, Route(record['route']), dict(record.get('params', {})), cycle,
                   bool(record.get('verified', False)))


def context(grw):
    """Layers of H and their labelings, cross-checked against the decomposition of H."""
    if not grw.connected:
        raise Disconnected(f"{grw} is disconnected: gcd(m,a,b,c) != 1")
    m, a, b = grw.m, grw.a, grw.b
    g = gcd_all(m, (a, b))
    m0 = m // g
    h_spec = BicirculantSpec.create(m, {a}, {0}, {b}, symmetric=True)
    decomposition = decompose(h_spec)
    component = IGraphSpec(m0, a // g, b // g)
    if decomposition.delta != g or decomposition.quotient != component.to_bicirculant():
        raise IsomorphismCheckFailed(f"components of H for {grw} do not match {component}")

    graph = build(grw)
    h_edges = {e for e, (kind, offset) in graph.edge_kinds.items()
               if not (kind is EdgeKind.SPOKE and offset == grw.c)}
    if h_edges != build(h_spec).edge_set():
        raise IsomorphismCheckFailed(f"removing type-{grw.c} spokes from {grw} does not leave H")

    component_graph = build(component)
    ctx = ConstructionContext(grw, g, m0, component, graph, component_graph,
                              petersen_exception_multiplier(m0, component.a, component.b) is not None)
    for layer in range(g):
        image = {edge(ctx.lift(layer, x), ctx.lift(layer, y)) for x, y in component_graph.edges}
        members = {ctx.lift(layer, x) for x in component_graph.vertices}
        if not image <= h_edges or members != decomposition.components[(layer * grw.c) % g]:
            raise IsomorphismCheckFailed(f"layer {layer} labeling of {grw} is not an isomorphism")
    logger.debug(f"{grw}: lambda={ctx.lam}, components {component}, exception={ctx.exception}")
    return ctx


def _layer_edges(ctx, layer, paths):
    edges = set()
    for path in paths:
        for x, y in zip(path, path[1:]):
            edges.add(edge(ctx.lift(layer, x), ctx.lift(layer, y)))
    return edges


def _close(ctx, edges):
    walked = walk_edges(edges)
    if walked is None or not walked[1] or len(walked[0]) != ctx.graph.n:
        raise WiringFailed(f"assembled edges of {ctx.grw} do not form a Hamilton cycle")
    check = verify_cycle(ctx.graph, walked[0])
    if not check:
        raise WiringFailed(f"assembled cycle of {ctx.grw} fails verification: {check}")
    return HamiltonCycle(canonical_order(walked[0]), True, True)


def _shifted(path, t, m0):
    return tuple(x.shifted(t, m0) for x in path)


def _translation(entries, exits, m0):
    """Least t with entries + t = exits as sets."""
    target = set(exits)
    for t in sorted({(f - e) % m0 for f in target for e in entries}):
        if {(e + t) % m0 for e in entries} == target:
            return t
    return None


def _end_vertices(paths):
    return [x for path in paths for x in (path[0], path[-1])]


def _ends(paths):
    return [x.index for x in _end_vertices(paths)]


def ladder(ctx, top, strands, bottom):
    """Stitch layer paths into a cycle.

    H_0 carries `top` (paths ending on outer vertices), each middle layer a
    translate of `strands` (inner start, outer end) and H_lambda a translate of
    `bottom` (paths ending on inner vertices).  Translates are chosen so that the
    inner ends of each layer meet the outer ends of the layer above.
    """
    m0 = ctx.m0
    if any(x.side is not Side.OUTER for x in _end_vertices(top)):
        raise WiringFailed("top paths must end on outer vertices")
    if any(s[0].side is not Side.INNER or s[-1].side is not Side.OUTER for s in strands):
        raise WiringFailed("middle strands must run from an inner to an outer vertex")
    if any(x.side is not Side.INNER for x in _end_vertices(bottom)):
        raise WiringFailed("bottom paths must end on inner vertices")

    edges = _layer_edges(ctx, 0, top)
    exits = _ends(top)
    shifts = []
    for layer in range(1, ctx.lam):
        t = _translation([s[0].index for s in strands], exits, m0)
        if t is None:
            raise WiringFailed(f"layer {layer} strands do not meet the layer above")
        edges |= {ctx.spoke(layer - 1, k) for k in exits}
        edges |= _layer_edges(ctx, layer, [_shifted(s, t, m0) for s in strands])
        exits = [(s[-1].index + t) % m0 for s in strands]
        shifts.append(t)
    t = _translation(_ends(bottom), exits, m0)
    if t is None:
        raise WiringFailed("bottom paths do not meet the layer above")
    edges |= {ctx.spoke(ctx.lam - 1, k) for k in exits}
    edges |= _layer_edges(ctx, ctx.lam, [_shifted(p, t, m0) for p in bottom])
    shifts.append(t)
    return _close(ctx, edges), shifts


def _require_layers(ctx):
    if ctx.lam < 1:
        raise NotApplicable(f"{ctx.grw} has a connected H; layer constructions need lambda >= 1")


def _tokens(seq):
    return [str(x) for x in seq]


def _cut(cycle_vertices, removed):
    """Paths left after deleting `removed` edges from a cycle, in cycle order."""
    seq = list(cycle_vertices)
    n = len(seq)
    start = next(i for i in range(n) if edge(seq[i], seq[(i + 1) % n]) in removed)
    seq = seq[start + 1:] + seq[:start + 1]
    pieces = [[seq[0]]]
    for x, y in zip(seq, seq[1:]):
        if edge(x, y) in removed:
            pieces.append([y])
        else:
            pieces[-1].append(y)
    return [tuple(p) for p in pieces]


def assemble_alternating(ctx, cycle_vertices):
    m0 = ctx.m0
    seq = list(cycle_vertices)
    n = len(seq)
    i = next((i for i in range(n) if seq[i].side is Side.INNER
              and seq[(i + 1) % n] == outer(seq[i].index)), None)
    if i is None:
        raise NotAlternating("cycle does not start a spoke from an inner vertex")
    seq = seq[i:] + seq[:i]
    x = [seq[2 * k].index for k in range(m0)]
    top = [(outer(x[k]), inner(x[k]), inner(x[(k + 1) % m0]), outer(x[(k + 1) % m0]))
           for k in range(1, m0, 2)]
    bottom = [(inner(x[k]), outer(x[k]), outer(x[k + 1]), inner(x[k + 1])) for k in range(0, m0, 2)]
    strands = [(inner(xk), outer(xk)) for xk in x]
    cycle, _ = ladder(ctx, top, strands, bottom)
    return cycle


def alternating_construction(ctx, cycle):
    """Spokes of the alternating cycle in every middle layer, its rim edges split between H_0 and H_lambda."""
    _require_layers(ctx)
    if ctx.m0 % 2:
        raise OddM0(f"alternating cycles need an even m0, got {ctx.m0}")
    check = verify_cycle(ctx.component_graph, cycle.vertices)
    spokes = sum(1 for e in cycle.edges() if ctx.component_graph.kind(*e) is EdgeKind.SPOKE) if check else 0
    if spokes != ctx.m0:
        raise NotAlternating(f"cycle of {ctx.component} is not an alternating Hamilton cycle")
    result = assemble_alternating(ctx, cycle.vertices)
    return Certificate(ctx.grw, Route.ALTERNATING, {'component_cycle': _tokens(cycle.vertices)},
                       result, True)


def assemble_two_hooked(ctx, variant, offset, path, companion):
    graph = ctx.component_graph
    m0 = ctx.m0
    side = Side.INNER if variant == 'v' else Side.OUTER
    ends = (Vertex(side, 0), Vertex(side, offset % m0))
    companion_ends = (Vertex(side.other, 0), Vertex(side.other, offset % m0))
    if not verify_path(graph, path, endpoints=ends) or path[0] != ends[0]:
        raise WitnessInvalid(f"witness is not a Hamilton path {ends[0]} -> {ends[1]}")
    if companion is None or not verify_path(graph, companion, endpoints=companion_ends):
        raise WitnessInvalid(f"companion is not a Hamilton path {companion_ends[0]} -> {companion_ends[1]}")

    split_side = Side.OUTER if variant == 'v' else Side.INNER
    i = next((i for i in range(len(path) - 1)
              if path[i].side is split_side and path[i + 1].side is split_side), None)
    if i is None:
        raise MissingOuterEdge(f"witness has no {split_side.name.lower()} rim edge to split at")
    head, tail = tuple(path[:i + 1]), tuple(path[i + 1:])
    if variant == 'v':
        top, strands, bottom = [companion], [head, tail[::-1]], [path]
    else:
        top, strands, bottom = [path], [head[::-1], tail], [companion]
    cycle, shifts = ladder(ctx, top, strands, bottom)
    return cycle, {'split': [str(path[i]), str(path[i + 1])], 'shifts': shifts}


def two_hooked_construction(ctx, witness):
    """Companion path on H_0, the witness split at a rim edge in middle layers, the witness on H_lambda."""
    _require_layers(ctx)
    cycle, extra = assemble_two_hooked(ctx, witness.variant, witness.offset, witness.path.vertices,
                                       witness.companion.vertices if witness.companion else None)
    params = {
        'variant': witness.variant,
        'offset': witness.offset,
        'path': witness.path.tokens(),
        'companion': witness.companion.tokens(),
        'derivation': witness.derivation,
    }
    params.update(extra)
    return Certificate(ctx.grw, Route.TWO_HOOKED, params, cycle, True)


def assemble_path_pair(ctx, p, outer_path, inner_path, pair):
    graph = ctx.component_graph
    m0 = ctx.m0
    p %= m0
    if not verify_path(graph, outer_path, endpoints=(outer(0), outer(p))):
        raise PathsInconsistent(f"expected a Hamilton path u0 -> u{p}")
    if not verify_path(graph, inner_path, endpoints=(inner(0), inner(p))):
        raise PathsInconsistent(f"expected a Hamilton path v0 -> v{p}")
    first, second = pair
    if set(first) & set(second) or set(first) | set(second) != set(graph.vertices):
        raise PathsInconsistent("the path pair does not partition the vertices")
    allowed = ({frozenset((outer(0), inner(p))), frozenset((outer(p), inner(0)))},
               {frozenset((outer(0), inner(0))), frozenset((outer(p), inner(p)))})
    if {frozenset((q[0], q[-1])) for q in pair} not in allowed:
        raise PathsInconsistent("the path pair has the wrong endpoints")
    for q in pair:
        if not verify_path(graph, q, vertices=q):
            raise PathsInconsistent("a pair path uses a non-edge")
    strands = [tuple(q) if q[0].side is Side.INNER else tuple(q)[::-1] for q in pair]
    cycle, _ = ladder(ctx, [tuple(outer_path)], strands, [tuple(inner_path)])
    return cycle


def path_pair_construction(ctx, paths):
    """u_0 -> u_p on H_0, the partitioning pair in middle layers, v_0 -> v_p on H_lambda."""
    _require_layers(ctx)
    cycle = assemble_path_pair(ctx, paths.p, paths.outer_path.vertices, paths.inner_path.vertices,
                               tuple(q.vertices for q in paths.pair))
    params = paths.to_record()
    return Certificate(ctx.grw, Route.PATH_PAIR, params, cycle, True)


def assemble_four_hooked(ctx, cycle_vertices, a, b):
    h = hook_vertices(0, a, b, ctx.m0)
    outer_hooks = {edge(h['u0'], h['ua']), edge(h['ub'], h['uab'])}
    inner_hooks = {edge(h['v0'], h['vb']), edge(h['va'], h['vab'])}
    n = len(cycle_vertices)
    on_cycle = {edge(cycle_vertices[i], cycle_vertices[(i + 1) % n]) for i in range(n)}
    if not (outer_hooks | inner_hooks) <= on_cycle:
        raise WitnessInvalid("the four hook edges are not on the cycle")
    top = _cut(cycle_vertices, outer_hooks)
    bottom = _cut(cycle_vertices, inner_hooks)
    strands = [p if p[0].side is Side.INNER else p[::-1] for p in _cut(cycle_vertices, outer_hooks | inner_hooks)]
    cycle, _ = ladder(ctx, top, strands, bottom)
    return cycle


def four_hooked_construction(ctx, cycle, hook, budget=None):
    """Four strands per middle layer joined at subscripts 0, b, a, a+b.

    Orderings the strands cannot carry fall back to a 2-hooked witness derived
    from the same cycle.
    """
    _require_layers(ctx)
    if hook.elusive:
        raise ElusiveInput("elusive 4-hooked cycles must be resolved first")
    if hook.shift:
        cycle, hook = anchored_standard(cycle, hook, ctx.m0)
    try:
        result = assemble_four_hooked(ctx, cycle.vertices, hook.a, hook.b)
    except WiringFailed as e:
        logger.info(f"{ctx.grw}: hook ordering {'-'.join(hook.order)} needs a 2-hooked witness ({e.message})")
        witness = derive_two_hooked(ctx.component, ctx.component_graph, cycle, hook, budget)
        if witness is None:
            raise WiringFailed(f"no 2-hooked witness for the 4-hooked cycle of {ctx.component}")
        certificate = two_hooked_construction(ctx, witness)
        certificate.params['derived_from'] = Route.FOUR_HOOKED.value
        return certificate
    params = {'component_cycle': _tokens(cycle.vertices), 'hook_a': hook.a, 'hook_b': hook.b,
              'order': list(hook.order)}
    return Certificate(ctx.grw, Route.FOUR_HOOKED, params, result, True)


def exception_choices(ctx):
    """Smallest x != 0 with x + c != 0 (mod m0), then y != x likewise (y only for even lambda)."""
    m0 = ctx.m0
    c = ctx.grw.c % m0
    valid = [x for x in range(1, m0) if (x + c) % m0 != 0]
    if not valid:
        raise NoValidX(f"no valid x for {ctx.grw}")
    x = valid[0]
    y = None
    if ctx.lam % 2 == 0:
        rest = [y for y in valid if y != x]
        if not rest:
            raise NoValidX(f"no valid y for {ctx.grw}")
        y = rest[0]
    return x, y


def assemble_petersen_exception(ctx, x, y, paths):
    lam, c = ctx.lam, ctx.grw.c % ctx.m0
    edges = set()
    for layer in range(1, lam):
        edges |= _layer_edges(ctx, layer, [paths['odd'] if layer % 2 else paths['even']])
        edges.add(ctx.spoke(layer, x if layer % 2 else 0))
    last = x if lam % 2 else y
    edges |= _layer_edges(ctx, lam, [paths['last']])
    edges.add(ctx.spoke(lam, last))
    edges |= _layer_edges(ctx, 0, [paths['first']])
    edges.add(ctx.spoke(0, 0))
    graph = ctx.component_graph
    expected = {
        'odd': (inner(0), outer(x)),
        'even': (inner(x), outer(0)),
        'last': (inner(0), outer(x)) if lam % 2 else (inner(x), outer(y)),
        'first': (inner((last + c) % ctx.m0), outer(0)),
    }
    for key, ends in expected.items():
        if key in paths and not verify_path(graph, paths[key], endpoints=ends):
            raise WiringFailed(f"layer path '{key}' is not a Hamilton path {ends[0]} -> {ends[1]}")
    return _close(ctx, edges)


def petersen_exception_construction(ctx, budget=None):
    """Alternate v_0 -> u_x and v_x -> u_0 across layers and close through H_0."""
    _require_layers(ctx)
    if not ctx.exception:
        raise NotApplicable(f"components of {ctx.grw} are not G(n,2) with n = 5 (mod 6)")
    x, y = exception_choices(ctx)
    graph = ctx.component_graph
    c = ctx.grw.c % ctx.m0

    def search(start, end):
        return find_hamilton_path(graph, start, end, budget).unwrap(
            f"Hamilton path {start} -> {end} in {ctx.component}").vertices

    paths = {}
    if ctx.lam >= 2:
        paths['odd'] = search(inner(0), outer(x))
    if ctx.lam >= 3:
        paths['even'] = search(inner(x), outer(0))
    if ctx.lam % 2:
        paths['last'] = paths.get('odd') or search(inner(0), outer(x))
        paths['first'] = search(inner((x + c) % ctx.m0), outer(0))
    else:
        paths['last'] = search(inner(x), outer(y))
        paths['first'] = search(inner((y + c) % ctx.m0), outer(0))
    cycle = assemble_petersen_exception(ctx, x, y, paths)
    params = {'x': x, 'y': y, 'paths': {key: _tokens(p) for key, p in paths.items()}}
    return Certificate(ctx.grw, Route.PETERSEN_EXCEPTION, params, cycle, True)


def assemble_connected(ctx, cycle_vertices):
    return _close(ctx, _layer_edges(ctx, 0, [tuple(cycle_vertices) + (cycle_vertices[0],)]))


def assemble_connected_petersen(ctx, path):
    edges = _layer_edges(ctx, 0, [path])
    edges.add(edge(ctx.lift(0, path[0]), ctx.lift(0, path[-1])))
    return _close(ctx, edges)


def connected_h(ctx, budget=None):
    """lambda = 0: a Hamilton cycle of H, or for G(n,2) a path u_0 -> v_c closed by the spoke u_0 v_c."""
    graph = ctx.component_graph
    if not ctx.exception:
        found = find_hamilton_cycle(graph, budget).unwrap(f"Hamilton cycle of {ctx.component}")
        cycle = assemble_connected(ctx, found.vertices)
        return Certificate(ctx.grw, Route.CONNECTED_H, {'component_cycle': found.tokens()}, cycle, True)
    c = ctx.grw.c % ctx.m0
    path = find_hamilton_path(graph, outer(0), inner(c), budget).unwrap(
        f"Hamilton path u0 -> v{c} in {ctx.component}")
    cycle = assemble_connected_petersen(ctx, path.vertices)
    return Certificate(ctx.grw, Route.CONNECTED_H_PETERSEN, {'path': path.tokens()}, cycle, True)


def hamilton_cycle_grw(grw, budget=None):
    """Certificate with a verified Hamilton cycle of a connected R(m;a,b,c)."""
    if not isinstance(grw, GrwSpec):
        raise NotApplicable(f"{grw} is not a generalized rose window graph")
    ctx = context(grw)
    if ctx.lam == 0:
        certificate = connected_h(ctx, budget)
    elif ctx.exception:
        certificate = petersen_exception_construction(ctx, budget)
    else:
        form = usable_cycle(ctx.component, budget)
        if form.kind is UsableKind.ALTERNATING:
            certificate = alternating_construction(ctx, form.cycle)
        elif form.kind is UsableKind.STANDARD_4:
            certificate = four_hooked_construction(ctx, form.cycle, form.hook, budget)
        elif form.kind is UsableKind.TWO_HOOKED:
            certificate = two_hooked_construction(ctx, form.witness)
        else:
            certificate = path_pair_construction(ctx, form.special)
        certificate.params['form_source'] = form.source
    logger.info(f"{grw}: Hamilton cycle via {certificate.route.value}")
    return certificate


def replay_certificate(certificate):
    """Re-run the recorded route on the recorded parameters, without any search."""
    ctx = context(certificate.grw)
    params = certificate.params

    def seq(value):
        return tuple(parse_vertex(t) for t in value)

    route = certificate.route
    if route is Route.CONNECTED_H:
        return assemble_connected(ctx, seq(params['component_cycle']))
    if route is Route.CONNECTED_H_PETERSEN:
        return assemble_connected_petersen(ctx, seq(params['path']))
    if route is Route.ALTERNATING:
        return assemble_alternating(ctx, seq(params['component_cycle']))
    if route is Route.TWO_HOOKED:
        cycle, _ = assemble_two_hooked(ctx, params['variant'], params['offset'],
                                       seq(params['path']), seq(params['companion']))
        return cycle
    if route is Route.PATH_PAIR:
        return assemble_path_pair(ctx, params['p'], seq(params['outer_path']), seq(params['inner_path']),
                                  tuple(seq(q) for q in params['pair']))
    if route is Route.FOUR_HOOKED:
        return assemble_four_hooked(ctx, seq(params['component_cycle']), params['hook_a'], params['hook_b'])
    paths = {key: seq(value) for key, value in params['paths'].items()}
    return assemble_petersen_exception(ctx, params['x'], params['y'], paths)
