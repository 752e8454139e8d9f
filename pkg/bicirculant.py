#!/usr/bin/env python3
"""
Bicirculant graphs B(m;R,S,T)
Parameter model, graph realization, connectivity, component decomposition and the
two isomorphism transforms (spoke shift and unit multiplier).

Vertices are u_i (outer rim) and v_i (inner rim), i in Z_m.  Edges are
u_i u_{i+j} for j in R, v_i v_{i+j} for j in T and the spokes u_i v_{i+j} for j in S.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum, IntEnum
from functools import cached_property, reduce
from math import gcd

import networkx as nx

from errors import InvalidSpec, IsomorphismCheckFailed, NotAUnit, NotInS

logger = logging.getLogger(__name__)


class Side(IntEnum):
    OUTER = 0
    INNER = 1

    @property
    def prefix(self):
        return 'u' if self is Side.OUTER else 'v'

    @property
    def other(self):
        return Side.INNER if self is Side.OUTER else Side.OUTER


@dataclass(frozen=True, order=True)
class Vertex:
    """Tagged residue: Outer(i) is u_i, Inner(i) is v_i.  Ordered by (side, index)."""

    side: Side
    index: int

    def __str__(self):
        return f"{self.side.prefix}{self.index}"

    def __repr__(self):
        return str(self)

    def shifted(self, t, m):
        return Vertex(self.side, (self.index + t) % m)


def outer(i):
    return Vertex(Side.OUTER, i)


def inner(i):
    return Vertex(Side.INNER, i)


def edge(x, y):
    """Unordered vertex pair."""
    return frozenset((x, y))


class EdgeKind(Enum):
    OUTER = 'outer'
    INNER = 'inner'
    SPOKE = 'spoke'


def gcd_all(m, residues):
    return reduce(gcd, residues, m)


def units(m):
    return [r for r in range(m) if gcd(r, m) == 1]


def compressed(residues, m):
    """One representative per +/- pair, as printed in B(m;R,S,T) notation."""
    return sorted({min(x, m - x) for x in residues})


@dataclass(frozen=True)
class BicirculantSpec:
    m: int
    R: frozenset
    S: frozenset
    T: frozenset

    @classmethod
    def create(cls, m, R=(), S=(0,), T=(), symmetric=False):
        """Reduce residues into [0, m), optionally close R and T under negation, validate."""
        if m < 1:
            raise InvalidSpec(f"m must be at least 1, got {m}", m=m)
        R = {x % m for x in R}
        T = {x % m for x in T}
        if symmetric:
            R |= {(-x) % m for x in R}
            T |= {(-x) % m for x in T}
        spec = cls(m, frozenset(R), frozenset(x % m for x in S), frozenset(T))
        spec.validate()
        return spec

    def validate(self):
        m = self.m
        if m < 1:
            raise InvalidSpec(f"m must be at least 1, got {m}", m=m)
        for name, residues in (('R', self.R), ('S', self.S), ('T', self.T)):
            if any(not 0 <= x < m for x in residues):
                raise InvalidSpec(f"{name} has residues outside [0, {m})", m=m)
        if {(-x) % m for x in self.R} != set(self.R):
            raise InvalidSpec(f"R = {sorted(self.R)} is not symmetric mod {m}")
        if {(-x) % m for x in self.T} != set(self.T):
            raise InvalidSpec(f"T = {sorted(self.T)} is not symmetric mod {m}")
        if 0 in self.R or 0 in self.T:
            raise InvalidSpec("0 must not lie in R or T")
        if 0 not in self.S:
            raise InvalidSpec(f"0 must lie in S, got S = {sorted(self.S)}")

    @property
    def n(self):
        return 2 * self.m

    @property
    def outer_degree(self):
        return len(self.R) + len(self.S)

    @property
    def inner_degree(self):
        return len(self.T) + len(self.S)

    @property
    def delta(self):
        return gcd_all(self.m, self.R | self.S | self.T)

    @property
    def has_half_rim(self):
        """True when m/2 lies in R or T; such rim edges are collapsed to simple edges."""
        return self.m % 2 == 0 and (self.m // 2 in self.R or self.m // 2 in self.T)

    def to_bicirculant(self):
        return self

    def __str__(self):
        m = self.m
        fmt = lambda xs: ','.join(str(x) for x in xs)
        return (f"B({m};{{{fmt(compressed(self.R, m))}}},{{{fmt(sorted(self.S))}}},"
                f"{{{fmt(compressed(self.T, m))}}})")


@dataclass(frozen=True)
class IGraphSpec:
    """I(m;a,b) = B(m;{a,-a},{0},{b,-b})."""

    m: int
    a: int
    b: int

    def __post_init__(self):
        m = self.m
        if m < 3:
            raise InvalidSpec(f"I-graphs need m >= 3, got {m}")
        object.__setattr__(self, 'a', self.a % m)
        object.__setattr__(self, 'b', self.b % m)
        for name, x in (('a', self.a), ('b', self.b)):
            if x == 0 or 2 * x == m:
                raise InvalidSpec(f"{name} = {x} must avoid 0 and m/2 for m = {m}")

    def to_bicirculant(self):
        return BicirculantSpec.create(self.m, {self.a}, {0}, {self.b}, symmetric=True)

    @property
    def symmetric_rims(self):
        """True when a = b or a = -b."""
        return self.a == self.b or (self.a + self.b) % self.m == 0

    def __str__(self):
        return f"I({self.m};{self.a},{self.b})"


@dataclass(frozen=True)
class GrwSpec:
    """Generalized rose window graph R(m;a,b,c) = B(m;{a,-a},{0,c},{b,-b})."""

    m: int
    a: int
    b: int
    c: int

    def __post_init__(self):
        m = self.m
        if m < 3:
            raise InvalidSpec(f"rose window graphs need m >= 3, got {m}")
        for name in ('a', 'b', 'c'):
            object.__setattr__(self, name, getattr(self, name) % m)
        for name in ('a', 'b', 'c'):
            if getattr(self, name) == 0:
                raise InvalidSpec(f"{name} must be non-zero mod {m}")
        for name in ('a', 'b'):
            if 2 * getattr(self, name) == m:
                raise InvalidSpec(f"{name} must differ from m/2 = {m // 2}")

    def to_bicirculant(self):
        return BicirculantSpec.create(self.m, {self.a}, {0, self.c}, {self.b}, symmetric=True)

    def rim_spec(self):
        """The I-graph left after deleting the spokes of type c."""
        return IGraphSpec(self.m, self.a, self.b)

    def normalized(self):
        m = self.m
        return GrwSpec(m, min(self.a, m - self.a), min(self.b, m - self.b), min(self.c, m - self.c))

    @property
    def connected(self):
        return gcd_all(self.m, (self.a, self.b, self.c)) == 1

    def __str__(self):
        return f"R({self.m};{self.a},{self.b},{self.c})"


@dataclass(frozen=True)
class HaarSpec:
    """Cyclic Haar graph H(m;S): spokes only."""

    m: int
    S: frozenset

    def __post_init__(self):
        object.__setattr__(self, 'S', frozenset(x % self.m for x in self.S))
        if 0 not in self.S:
            raise InvalidSpec(f"0 must lie in S, got S = {sorted(self.S)}")

    def to_bicirculant(self):
        return BicirculantSpec.create(self.m, (), self.S, ())

    @property
    def connected(self):
        return gcd_all(self.m, self.S) == 1

    def __str__(self):
        return f"H({self.m};{{{','.join(str(x) for x in sorted(self.S))}}})"


class Graph:
    """Realized bicirculant: vertex set, tagged edge set and adjacency."""

    def __init__(self, m, edge_kinds, spec=None):
        self.m = m
        self.spec = spec
        self.edge_kinds = dict(edge_kinds)
        self.vertices = tuple(sorted(Vertex(side, i) for side in Side for i in range(m)))
        adjacency = {x: set() for x in self.vertices}
        for e in self.edge_kinds:
            x, y = tuple(e)
            adjacency[x].add(y)
            adjacency[y].add(x)
        self.adjacency = {x: tuple(sorted(ys)) for x, ys in adjacency.items()}

    @property
    def n(self):
        return len(self.vertices)

    def has_edge(self, x, y):
        return edge(x, y) in self.edge_kinds

    def neighbors(self, x):
        return self.adjacency[x]

    def degree(self, x):
        return len(self.adjacency[x])

    def kind(self, x, y):
        return self.edge_kinds[edge(x, y)][0]

    def edge_set(self):
        return set(self.edge_kinds)

    @property
    def edges(self):
        return sorted(tuple(sorted(e)) for e in self.edge_kinds)

    def count(self, kind):
        return sum(1 for k, _ in self.edge_kinds.values() if k is kind)

    def vid(self, x):
        return x.side * self.m + x.index

    def vertex_at(self, i):
        return self.vertices[i]

    @cached_property
    def int_adjacency(self):
        return tuple(tuple(self.vid(y) for y in self.adjacency[x]) for x in self.vertices)

    def to_networkx(self):
        g = nx.Graph()
        for x in self.vertices:
            g.add_node(x, side='outer' if x.side is Side.OUTER else 'inner')
        for e, (kind, offset) in self.edge_kinds.items():
            x, y = sorted(e)
            g.add_edge(x, y, kind=kind.value, type=offset)
        return g


def build(spec):
    """Realize B(m;R,S,T) as a Graph; rim edges of type m/2 collapse to simple edges."""
    spec = spec.to_bicirculant()
    spec.validate()
    m = spec.m
    edges = {}
    for i in range(m):
        for j in spec.R:
            edges[edge(outer(i), outer((i + j) % m))] = (EdgeKind.OUTER, min(j, m - j))
        for j in spec.T:
            edges[edge(inner(i), inner((i + j) % m))] = (EdgeKind.INNER, min(j, m - j))
        for j in spec.S:
            edges[edge(outer(i), inner((i + j) % m))] = (EdgeKind.SPOKE, j)
    return Graph(m, edges, spec)


def is_connected(spec):
    spec = spec.to_bicirculant()
    spec.validate()
    return spec.delta == 1


def traversal_component_count(graph):
    return nx.number_connected_components(graph.to_networkx())


def check_isomorphism(source, target, mapping):
    """True iff mapping is a bijection V(source) -> V(target) carrying E(source) onto E(target)."""
    if set(mapping) != set(source.vertices):
        return False
    if len(set(mapping.values())) != len(mapping) or set(mapping.values()) != set(target.vertices):
        return False
    image = {edge(mapping[x], mapping[y]) for x, y in source.edges}
    return image == target.edge_set()


@dataclass
class ComponentDecomposition:
    delta: int
    components: list
    quotient: BicirculantSpec
    labelings: list = field(default_factory=list)

    def lift(self, r, local):
        """Global vertex of component-local vertex `local` in component G_r."""
        return self.labelings[r][local]


def decompose(spec):
    """Split B(m;R,S,T) into delta = gcd(m,R,S,T) copies of B(m/delta;R/delta,S/delta,T/delta)."""
    spec = spec.to_bicirculant()
    spec.validate()
    delta = spec.delta
    mq = spec.m // delta
    quotient = BicirculantSpec.create(
        mq,
        {x // delta for x in spec.R},
        {x // delta for x in spec.S},
        {x // delta for x in spec.T},
    )
    graph = build(spec)
    qgraph = build(quotient)
    components = []
    labelings = []
    for r in range(delta):
        labeling = {x: Vertex(x.side, r + delta * x.index) for x in qgraph.vertices}
        members = frozenset(labeling.values())
        image = {edge(labeling[x], labeling[y]) for x, y in qgraph.edges}
        induced = {e for e in graph.edge_set() if e <= members}
        if image != induced or len(members) != qgraph.n:
            raise IsomorphismCheckFailed(f"component G_{r} of {spec} is not isomorphic to {quotient}")
        components.append(members)
        labelings.append(labeling)
    logger.debug(f"{spec} splits into {delta} component(s) isomorphic to {quotient}")
    return ComponentDecomposition(delta, components, quotient, labelings)


def shift_spec(spec, c):
    """B(m;R,S,T) is isomorphic to B(m;R,S-c,T) via u_i -> u_i, v_j -> v_{j-c}."""
    spec = spec.to_bicirculant()
    m = spec.m
    c %= m
    if c not in spec.S:
        raise NotInS(f"{c} is not a spoke type of {spec}", c=c)
    shifted = BicirculantSpec.create(m, spec.R, {(s - c) % m for s in spec.S}, spec.T)
    mapping = {x: x if x.side is Side.OUTER else x.shifted(-c, m) for x in build(spec).vertices}
    if not check_isomorphism(build(spec), build(shifted), mapping):
        raise IsomorphismCheckFailed(f"shift by {c} failed on {spec}")
    return shifted, mapping


def multiplier_spec(spec, r):
    """B(m;R,S,T) is isomorphic to B(m;rR,rS,rT) for a unit r via (side, i) -> (side, r*i)."""
    spec = spec.to_bicirculant()
    m = spec.m
    if gcd(r, m) != 1:
        raise NotAUnit(f"{r} is not a unit mod {m}", r=r)
    image = BicirculantSpec.create(
        m, {r * x for x in spec.R}, {r * x for x in spec.S}, {r * x for x in spec.T})
    graph = build(spec)
    mapping = {x: Vertex(x.side, (r * x.index) % m) for x in graph.vertices}
    if not check_isomorphism(graph, build(image), mapping):
        raise IsomorphismCheckFailed(f"multiplier {r} failed on {spec}")
    return image, mapping


def swap_sides(spec):
    """Exchange the rims: u_i <-> v_i maps B(m;R,S,T) onto B(m;T,-S,R)."""
    spec = spec.to_bicirculant()
    m = spec.m
    swapped = BicirculantSpec.create(m, spec.T, {(-s) % m for s in spec.S}, spec.R)
    graph = build(spec)
    mapping = {x: Vertex(x.side.other, x.index) for x in graph.vertices}
    if not check_isomorphism(graph, build(swapped), mapping):
        raise IsomorphismCheckFailed(f"rim swap failed on {spec}")
    return swapped, mapping


def canonical_key(spec):
    """Least parameter triple over unit multipliers, spoke shifts and the rim swap.

    Equal keys mean isomorphic graphs; used for deduplicating scans.
    """
    spec = spec.to_bicirculant()
    m = spec.m
    best = None
    for swap in (False, True):
        R, S, T = (spec.T, {(-s) % m for s in spec.S}, spec.R) if swap else (spec.R, spec.S, spec.T)
        for r in units(m):
            rR = tuple(sorted((r * x) % m for x in R))
            rT = tuple(sorted((r * x) % m for x in T))
            rS = [(r * x) % m for x in S]
            for c in rS:
                key = (rR, tuple(sorted((s - c) % m for s in rS)), rT)
                if best is None or key < best:
                    best = key
    return (m,) + best


def canonical_spec(spec):
    m = spec.to_bicirculant().m
    _, R, S, T = canonical_key(spec)
    return BicirculantSpec.create(m, R, S, T)


class Family(Enum):
    GENERAL = 'GeneralBicirculant'
    HAAR = 'Haar'
    IGRAPH = 'IGraph'
    GENERALIZED_PETERSEN = 'GeneralizedPetersen'
    GRW = 'GrwGraph'
    TABACJN = 'Tabacjn'


@dataclass
class FamilyReport:
    family: Family
    petersen_exception: bool = False
    params: dict = field(default_factory=dict)

    @property
    def tags(self):
        tags = [self.family.value]
        if self.family is Family.GENERALIZED_PETERSEN:
            tags.insert(0, Family.IGRAPH.value)
        if self.petersen_exception:
            tags.append('PetersenException')
        return tags


def _rim_pair(residues, m):
    """a when residues == {a, -a} with a != -a, else None."""
    if len(residues) != 2:
        return None
    x, y = sorted(residues)
    if (x + y) % m != 0:
        return None
    return min(x, y)


def _folded(x, m):
    x %= m
    return min(x, m - x)


def petersen_form(m, a, b):
    """Multiplier taking I(m;a,b) to generalized Petersen form I(m;1,k), or None."""
    if gcd(m, a) == 1:
        r = pow(a, -1, m)
        return {'r': r, 'k': _folded(b * r, m), 'swapped': False}
    if gcd(m, b) == 1:
        r = pow(b, -1, m)
        return {'r': r, 'k': _folded(a * r, m), 'swapped': True}
    return None


def petersen_exception_multiplier(m, a, b):
    """Unit r with {ra, rb} = {+-1, +-2} when m = 5 (mod 6), i.e. I(m;a,b) is G(m,2); else None."""
    if m % 6 != 5:
        return None
    for r in units(m):
        if {_folded(r * a, m), _folded(r * b, m)} == {1, 2}:
            return r
    return None


def classify_family(spec):
    spec = spec.to_bicirculant()
    spec.validate()
    m = spec.m
    if not spec.R and not spec.T:
        return FamilyReport(Family.HAAR, params={'S': sorted(spec.S)})
    a = _rim_pair(spec.R, m)
    b = _rim_pair(spec.T, m)
    if a is None or b is None:
        return FamilyReport(Family.GENERAL)
    others = sorted(spec.S - {0})
    if len(others) == 0:
        params = {'a': a, 'b': b}
        form = petersen_form(m, a, b)
        exception = petersen_exception_multiplier(m, a, b)
        if exception is not None:
            params['exception_r'] = exception
        if form is None:
            return FamilyReport(Family.IGRAPH, exception is not None, params)
        params.update(form)
        return FamilyReport(Family.GENERALIZED_PETERSEN, exception is not None, params)
    if len(others) == 1:
        return FamilyReport(Family.GRW, params={'a': a, 'b': b, 'c': others[0]})
    if len(others) == 2:
        return FamilyReport(Family.TABACJN, params={'a': a, 'b': b, 'c': others[0], 'd': others[1]})
    return FamilyReport(Family.GENERAL, params={'a': a, 'b': b})
