#!/usr/bin/env python3
"""
Exact backtracking search for Hamilton cycles and paths.

The oracle is the ground truth for small graphs, the stand-in for known existence
results (Hamilton paths in G(n,2), cubic Haar graphs) and the verifier of every
construction.  Budgets count node expansions so results are reproducible.
"""

import logging
from collections import defaultdict
from dataclasses import dataclass
from enum import Enum
from itertools import chain

import config
from bicirculant import edge
from errors import BicirculantError, NotApplicable, NotFound, SearchBudgetExceeded, TooLarge

logger = logging.getLogger(__name__)


def canonical_order(vertices):
    """Rotate to the least vertex, then orient so its successor is the smaller neighbour."""
    seq = list(vertices)
    if not seq:
        return ()
    i = seq.index(min(seq))
    seq = seq[i:] + seq[:i]
    if len(seq) >= 3 and seq[-1] < seq[1]:
        seq = [seq[0]] + seq[:0:-1]
    return tuple(seq)


@dataclass(frozen=True)
class HamiltonCycle:
    vertices: tuple
    verified: bool = False
    canonical: bool = False

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def edges(self):
        v = self.vertices
        return {edge(v[i], v[(i + 1) % len(v)]) for i in range(len(v))}

    def tokens(self):
        return [str(x) for x in self.vertices]

    def canonicalized(self):
        return HamiltonCycle(canonical_order(self.vertices), self.verified, True)

    def oriented(self, first, second):
        """Same cycle read from `first` towards its neighbour `second`."""
        v = list(self.vertices)
        i = v.index(first)
        v = v[i:] + v[:i]
        if v[1] != second:
            v = [v[0]] + v[:0:-1]
        if v[1] != second:
            raise ValueError(f"{first} and {second} are not consecutive on the cycle")
        return HamiltonCycle(tuple(v), self.verified, False)


@dataclass(frozen=True)
class HamiltonPath:
    vertices: tuple
    verified: bool = False

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    @property
    def start(self):
        return self.vertices[0]

    @property
    def end(self):
        return self.vertices[-1]

    @property
    def endpoints(self):
        return (self.vertices[0], self.vertices[-1])

    def edges(self):
        v = self.vertices
        return {edge(v[i], v[i + 1]) for i in range(len(v) - 1)}

    def reversed(self):
        return HamiltonPath(tuple(reversed(self.vertices)), self.verified)

    def tokens(self):
        return [str(x) for x in self.vertices]


@dataclass(frozen=True)
class Verification:
    ok: bool
    reason: str = None
    position: int = None

    def __bool__(self):
        return self.ok

    def __str__(self):
        if self.ok:
            return 'ok'
        if self.position is None:
            return self.reason
        return f"{self.reason}({self.position})"


def verify_cycle(graph, seq):
    """Total check that seq is a Hamilton cycle of graph."""
    seq = list(seq)
    seen = set()
    for i, x in enumerate(seq):
        if x in seen:
            return Verification(False, 'RepeatedVertex', i)
        seen.add(x)
    if set(graph.vertices) - seen:
        return Verification(False, 'MissingVertex')
    n = len(seq)
    for i, x in enumerate(seq):
        if x not in graph.adjacency:
            return Verification(False, 'NonEdge', i)
    if n < 3:
        return Verification(False, 'NonEdge', n - 1)
    for i in range(n):
        if not graph.has_edge(seq[i], seq[(i + 1) % n]):
            return Verification(False, 'NonEdge', i)
    return Verification(True)


def verify_path(graph, seq, endpoints=None, vertices=None):
    """Check seq is a path of graph covering `vertices` (default: all) with the given endpoints."""
    seq = list(seq)
    cover = set(graph.vertices if vertices is None else vertices)
    seen = set()
    for i, x in enumerate(seq):
        if x in seen:
            return Verification(False, 'RepeatedVertex', i)
        seen.add(x)
    if cover - seen:
        return Verification(False, 'MissingVertex')
    for i, x in enumerate(seq):
        if x not in cover:
            return Verification(False, 'NonEdge', i)
    for i in range(len(seq) - 1):
        if not graph.has_edge(seq[i], seq[i + 1]):
            return Verification(False, 'NonEdge', i)
    if endpoints is not None and seq and {seq[0], seq[-1]} != set(endpoints):
        return Verification(False, 'EndpointMismatch')
    return Verification(True)


class SearchStatus(Enum):
    FOUND = 'found'
    ABSENT = 'proved-absent'
    BUDGET = 'not-found-within-budget'


@dataclass(frozen=True)
class SearchOutcome:
    status: SearchStatus
    result: object = None
    nodes: int = 0

    @property
    def found(self):
        return self.status is SearchStatus.FOUND

    @property
    def absent(self):
        return self.status is SearchStatus.ABSENT

    def unwrap(self, what='Hamilton cycle'):
        """The found structure; otherwise SearchBudgetExceeded or NotFound."""
        if self.found:
            return self.result
        if self.status is SearchStatus.BUDGET:
            raise SearchBudgetExceeded(f"{what}: budget exhausted after {self.nodes} node expansions",
                                       nodes=self.nodes)
        raise NotFound(f"{what}: proved absent after {self.nodes} node expansions", nodes=self.nodes)


@dataclass
class CycleEnumeration:
    cycles: list
    truncated: bool
    nodes: int

    def __len__(self):
        return len(self.cycles)

    def __iter__(self):
        return iter(self.cycles)


class _BudgetExhausted(Exception):
    pass


class _Backtracker:
    """Depth-first path extension from a fixed start vertex.

    Cycle mode (target is None) closes back to the start; path mode must end at target.
    Candidates are tried lowest remaining degree first, ties by vertex order.
    """

    def __init__(self, graph, budget, target=None, required=(), cap=None):
        self.n = graph.n
        self.adj = graph.int_adjacency
        self.adjset = [frozenset(a) for a in self.adj]
        self.budget = budget
        self.target = target
        self.cap = cap
        self.found = []
        self.stopped = False
        self.nodes = 0
        self.visited = [False] * self.n
        self.free = [len(a) for a in self.adj]
        self.path = []
        self.start = None
        self.mate = [-1] * self.n
        for x, y in required:
            if self.mate[x] >= 0 or self.mate[y] >= 0:
                raise NotApplicable("required edges must form a matching")
            self.mate[x], self.mate[y] = y, x
        self.has_required = bool(required)

    def run(self, start):
        self.start = start
        self._visit(start)
        try:
            success = self._extend(start)
            self.stopped = bool(success) and self.cap is not None
        except _BudgetExhausted:
            return SearchStatus.BUDGET
        if self.cap is not None:
            return SearchStatus.FOUND if self.found else SearchStatus.ABSENT
        return SearchStatus.FOUND if success else SearchStatus.ABSENT

    def _visit(self, w):
        self.visited[w] = True
        self.path.append(w)
        for x in self.adj[w]:
            self.free[x] -= 1

    def _unvisit(self, w):
        self.visited[w] = False
        self.path.pop()
        for x in self.adj[w]:
            self.free[x] += 1

    def _extend(self, head):
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise _BudgetExhausted()
        depth = len(self.path)
        if depth == self.n:
            return self._complete(head)

        prev = self.path[-2] if depth >= 2 else -1
        mate = self.mate[head]
        if mate >= 0 and mate != prev and head != self.start:
            if self.visited[mate]:
                return False
            candidates = [mate]
        else:
            candidates = [w for w in self.adj[head] if not self.visited[w]]
            candidates.sort(key=lambda w: (self.free[w], w))
        if self.target is not None and depth < self.n - 1:
            candidates = [w for w in candidates if w != self.target]

        for w in candidates:
            self._visit(w)
            if self._feasible(head, w) and self._extend(w):
                return True
            self._unvisit(w)
        return False

    def _complete(self, head):
        if self.target is not None:
            return head == self.target and self._required_ok(closed=False)
        if self.n < 3 or self.start not in self.adjset[head]:
            return False
        if not self._required_ok(closed=True):
            return False
        if self.cap is None:
            return True
        if self.path[1] < self.path[-1]:
            self.found.append(tuple(self.path))
            return len(self.found) >= self.cap
        return False

    def _required_ok(self, closed):
        if not self.has_required:
            return True
        p = self.path
        n = len(p)
        for i, x in enumerate(p):
            mate = self.mate[x]
            if mate < 0:
                continue
            before = p[i - 1] if (i > 0 or closed) else -1
            after = p[(i + 1) % n] if (i < n - 1 or closed) else -1
            if mate != before and mate != after:
                return False
        return True

    def _feasible(self, head, w):
        remaining = self.n - len(self.path)
        if remaining == 0:
            return True
        mate = self.mate[w]
        if mate >= 0 and mate != head and self.visited[mate]:
            return False
        cycle = self.target is None
        if cycle and self.free[self.start] == 0:
            return False
        adj_w = self.adjset[w]
        adj_start = self.adjset[self.start]
        for x in chain(self.adj[head], self.adj[w]):
            if self.visited[x]:
                continue
            degree = self.free[x] + (1 if x in adj_w else 0)
            if cycle:
                if x in adj_start:
                    degree += 1
                if degree < 2:
                    return False
            elif degree < (1 if x == self.target else 2):
                return False
        return self._reaches_all(w, remaining)

    def _reaches_all(self, root, remaining):
        seen = {root}
        stack = [root]
        count = 0
        while stack:
            x = stack.pop()
            for y in self.adj[x]:
                if not self.visited[y] and y not in seen:
                    seen.add(y)
                    count += 1
                    stack.append(y)
        return count == remaining


def _default_budget(budget):
    return config.DEFAULT_BUDGET if budget is None else budget


def find_hamilton_cycle(graph, budget=None, required_edges=()):
    """Search a Hamilton cycle; required_edges (a matching) must all lie on it."""
    budget = _default_budget(budget)
    required = [(graph.vid(x), graph.vid(y)) for x, y in required_edges]
    search = _Backtracker(graph, budget, required=required)
    status = search.run(0)
    logger.debug(f"cycle search on {graph.n} vertices: {status.value} after {search.nodes} nodes")
    if status is not SearchStatus.FOUND:
        return SearchOutcome(status, None, search.nodes)
    cycle = HamiltonCycle(canonical_order(graph.vertex_at(i) for i in search.path), True, True)
    if not verify_cycle(graph, cycle.vertices):
        raise BicirculantError("search returned an invalid cycle")
    return SearchOutcome(status, cycle, search.nodes)


def find_hamilton_path(graph, x, y, budget=None):
    """Search a Hamilton path from x to y."""
    if x == y:
        raise NotApplicable(f"path endpoints must differ, got {x} twice")
    budget = _default_budget(budget)
    search = _Backtracker(graph, budget, target=graph.vid(y))
    status = search.run(graph.vid(x))
    logger.debug(f"path search {x}->{y} on {graph.n} vertices: {status.value} after {search.nodes} nodes")
    if status is not SearchStatus.FOUND:
        return SearchOutcome(status, None, search.nodes)
    path = HamiltonPath(tuple(graph.vertex_at(i) for i in search.path), True)
    if not verify_path(graph, path.vertices, endpoints=(x, y)):
        raise BicirculantError("search returned an invalid path")
    return SearchOutcome(status, path, search.nodes)


def enumerate_hamilton_cycles(graph, cap=None, force=False, budget=None):
    """All Hamilton cycles up to rotation and reflection, in canonical form."""
    if graph.n > config.ORACLE_VERTEX_GUARD and not force:
        raise TooLarge(f"enumeration guard: {graph.n} vertices > {config.ORACLE_VERTEX_GUARD}",
                       n=graph.n)
    cap = config.ENUMERATION_CAP if cap is None else cap
    # one cycle past the cap tells a full enumeration from a cut one
    search = _Backtracker(graph, budget, cap=cap + 1)
    status = search.run(0)
    if status is SearchStatus.BUDGET:
        raise SearchBudgetExceeded(f"enumeration stopped after {search.nodes} node expansions",
                                   nodes=search.nodes)
    cycles = sorted((HamiltonCycle(tuple(graph.vertex_at(i) for i in p), True, True)
                     for p in search.found[:cap]), key=lambda c: c.vertices)
    truncated = search.stopped
    logger.debug(f"enumerated {len(cycles)} cycle(s) on {graph.n} vertices, truncated={truncated}")
    return CycleEnumeration(cycles, truncated, search.nodes)


def walk_edges(edges):
    """Order a connected cycle- or path-shaped edge set.

    Returns (sequence, closed) or None when the edges do not form a single cycle or path.
    """
    adjacency = defaultdict(list)
    for e in edges:
        x, y = tuple(e)
        adjacency[x].append(y)
        adjacency[y].append(x)
    if not adjacency or any(len(ys) > 2 for ys in adjacency.values()):
        return None
    ends = sorted(x for x, ys in adjacency.items() if len(ys) == 1)
    if len(ends) == 2:
        start, closed = ends[0], False
    elif not ends:
        start, closed = min(adjacency), True
    else:
        return None
    seq = [start]
    prev, cur = None, start
    while True:
        options = [y for y in adjacency[cur] if y != prev]
        if not options:
            break
        nxt = min(options) if prev is None else options[0]
        if closed and nxt == start:
            break
        seq.append(nxt)
        prev, cur = cur, nxt
        if len(seq) > len(adjacency):
            return None
    if len(seq) != len(adjacency):
        return None
    return seq, closed
