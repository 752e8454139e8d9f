#!/usr/bin/env python3
"""
Hamiltonicity certificates for general bicirculants

A connected bicirculant is hamiltonian as soon as it spans a connected rose
window graph or a connected cubic Haar graph, and by a spoke shift such a
subgraph can always be taken with spoke types {0, c'} or {0, c', c''}.  The
scanner walks bicirculants up to isomorphism and reports every spec without a
certified Hamilton cycle.
"""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from math import gcd

import pandas as pd
from sympy import factorint

import config
from bicirculant import (BicirculantSpec, Family, GrwSpec, HaarSpec, IGraphSpec, build,
                         canonical_key, canonical_spec, classify_family, gcd_all, shift_spec)
from errors import (BicirculantError, Disconnected, NotApplicable, NotFound,
                    SearchBudgetExceeded, TooLarge)
from graph_io import spec_text
from grw_hamilton import hamilton_cycle_grw
from hamilton_search import (HamiltonCycle, SearchStatus, canonical_order, find_hamilton_cycle,
                             verify_cycle)

logger = logging.getLogger(__name__)


def prime_factorization(m):
    return dict(factorint(m))


def prime_power_count(m):
    """Number of distinct primes dividing m, i.e. of prime powers in its factorization."""
    return len(factorint(m))


def within_prime_power_hypothesis(m):
    return prime_power_count(m) <= 3


@dataclass(frozen=True)
class SpanningSubgraph:
    """Connected spanning subgraph of B(m;R,S-shift,T), itself isomorphic to the input."""

    kind: str
    shift: int
    spec: object

    def to_record(self):
        return {'subgraph': self.kind, 'shift': self.shift, 'spec': spec_text(self.spec)}


def _spoke_candidates(S, m):
    """(c_k, c_i - c_k, c_j - c_k) in order: c_k ascending, then sorted difference pairs."""
    S = sorted(S)
    for ck in S:
        diffs = sorted((x - ck) % m for x in S if x != ck)
        for d1, d2 in combinations(diffs, 2):
            yield ck, d1, d2


def find_cubic_haar_subgraph(spec):
    """Spoke types {0, c_i - c_k, c_j - c_k} spanning a connected cubic Haar graph."""
    if not isinstance(spec, HaarSpec):
        raise NotApplicable(f"{spec} is not a cyclic Haar graph")
    m = spec.m
    if not spec.connected:
        raise Disconnected(f"{spec} is disconnected")
    if len(spec.S) < 3:
        raise NotApplicable(f"{spec} has fewer than three spoke types")
    for ck, d1, d2 in _spoke_candidates(spec.S, m):
        if gcd_all(m, (d1, d2)) == 1:
            return SpanningSubgraph('cubic-haar', ck, HaarSpec(m, frozenset((0, d1, d2))))
    raise NotFound(f"no connected cubic Haar subgraph in {spec} "
                   f"({prime_power_count(m)} prime power(s) in {m})")


def find_grw_subgraph(spec):
    """Spoke pair {0, c'} with c' a difference of S and gcd(m,a,b,c') = 1."""
    bic = spec.to_bicirculant()
    m = bic.m
    if bic.delta != 1:
        raise Disconnected(f"{bic} is disconnected")
    report = classify_family(bic)
    a, b = report.params.get('a'), report.params.get('b')
    if a is None or b is None:
        raise NotApplicable(f"{bic} does not have rims {{a,-a}} and {{b,-b}}")
    if len(bic.S) < 2:
        raise NotApplicable(f"{bic} has a single spoke type")
    S = sorted(bic.S)
    for cj in S:
        for ci in S:
            if ci == cj:
                continue
            c = (ci - cj) % m
            if gcd_all(m, (a, b, c)) == 1:
                return SpanningSubgraph('grw', cj, GrwSpec(m, a, b, c))
    raise NotFound(f"no connected rose window subgraph in {bic}")


class Status(Enum):
    HAMILTONIAN = 'Hamiltonian'
    NON_HAMILTONIAN = 'NonHamiltonian'
    UNKNOWN = 'Unknown'


@dataclass
class HamiltonicityReport:
    spec: BicirculantSpec
    status: Status
    route: str = None
    methods: list = field(default_factory=list)
    cycle: HamiltonCycle = None
    proof: str = None
    family: list = field(default_factory=list)
    subgraph: SpanningSubgraph = None
    seconds: float = 0.0

    @property
    def key(self):
        return canonical_key(self.spec)

    @property
    def half_rim(self):
        """True when an m/2 rim type was collapsed to simple edges while building."""
        return self.spec.to_bicirculant().has_half_rim

    def to_record(self):
        record = {
            'spec': spec_text(self.spec),
            'family': self.family,
            'status': self.status.value,
            'route': self.route,
            'methods': self.methods,
            'half_rim': self.half_rim,
        }
        if self.cycle is not None:
            record['cycle'] = self.cycle.tokens()
        if self.proof is not None:
            record['proof'] = self.proof
        if self.subgraph is not None:
            record.update(self.subgraph.to_record())
        return record


def _lift(bic, subgraph, cycle):
    """Carry a cycle of the shifted labeling back to B(m;R,S,T) and verify it there."""
    _, mapping = shift_spec(bic, subgraph.shift)
    inverse = {y: x for x, y in mapping.items()}
    lifted = [inverse[x] for x in cycle.vertices]
    check = verify_cycle(build(bic), lifted)
    if not check:
        raise BicirculantError(f"lifted cycle of {bic} fails verification: {check}")
    return HamiltonCycle(canonical_order(lifted), True, True)


def _oracle(graph, budget):
    outcome = find_hamilton_cycle(graph, budget)
    return outcome.status, outcome.result


def _exception_report(bic, family, budget):
    """Known non-hamiltonian family: confirmed by exhaustive search inside the guard."""
    graph = build(bic)
    if graph.n <= config.ORACLE_VERTEX_GUARD:
        status, cycle = _oracle(graph, budget)
        if status is SearchStatus.ABSENT:
            return HamiltonicityReport(bic, Status.NON_HAMILTONIAN, 'petersen-exception',
                                       ['exception-family', 'oracle'], proof='exhaustive-search',
                                       family=family)
        if status is SearchStatus.FOUND:
            logger.error(f"{bic}: oracle found a cycle in the exception family")
            return HamiltonicityReport(bic, Status.HAMILTONIAN, 'oracle', ['exception-family', 'oracle'],
                                       cycle, family=family)
    return HamiltonicityReport(bic, Status.NON_HAMILTONIAN, 'petersen-exception', ['exception-family'],
                               proof='known-exception', family=family)


def certify_hamiltonian(spec, budget=None):
    """Try family constructions, then spanning subgraphs, then the oracle; every cycle is verified."""
    bic = spec.to_bicirculant()
    m = bic.m
    if bic.delta != 1:
        raise Disconnected(f"{bic} is disconnected")
    report = classify_family(bic)
    family = report.tags
    if bic.n < 3:
        return HamiltonicityReport(bic, Status.NON_HAMILTONIAN, 'K2', ['order'],
                                   proof='fewer than three vertices', family=family)

    methods = []
    unknown = False

    def finish(status, route, cycle=None, subgraph=None, proof=None):
        return HamiltonicityReport(bic, status, route, methods, cycle, proof, family, subgraph)

    if report.family is Family.GRW:
        methods.append('grw-construction')
        p = report.params
        try:
            certificate = hamilton_cycle_grw(GrwSpec(m, p['a'], p['b'], p['c']), budget)
            return finish(Status.HAMILTONIAN, certificate.route.value, certificate.cycle)
        except SearchBudgetExceeded:
            unknown = True
        except BicirculantError as e:
            logger.warning(f"{bic}: rose window construction failed: {e.message}")

    if report.family in (Family.IGRAPH, Family.GENERALIZED_PETERSEN):
        if report.petersen_exception:
            return _exception_report(bic, family, budget)
        methods.append('igraph-oracle')
        status, cycle = _oracle(build(bic), budget)
        if status is SearchStatus.FOUND:
            return finish(Status.HAMILTONIAN, 'igraph-oracle', cycle)
        if status is SearchStatus.ABSENT:
            logger.warning(f"{bic}: no Hamilton cycle outside the exception family")
            return finish(Status.NON_HAMILTONIAN, 'igraph-oracle', proof='exhaustive-search')
        unknown = True

    if report.family is Family.HAAR and len(bic.S) == 3:
        methods.append('cubic-haar-oracle')
        status, cycle = _oracle(build(bic), budget)
        if status is SearchStatus.FOUND:
            return finish(Status.HAMILTONIAN, 'cubic-haar-oracle', cycle)
        if status is SearchStatus.ABSENT:
            return finish(Status.NON_HAMILTONIAN, 'cubic-haar-oracle', proof='exhaustive-search')
        return finish(Status.UNKNOWN, None)

    if len(bic.S) >= 3 and report.family is not Family.HAAR:
        try:
            subgraph = find_grw_subgraph(bic)
        except (NotApplicable, NotFound):
            subgraph = None
        if subgraph is not None:
            methods.append('grw-subgraph')
            try:
                certificate = hamilton_cycle_grw(subgraph.spec, budget)
                return finish(Status.HAMILTONIAN, 'grw-subgraph', _lift(bic, subgraph, certificate.cycle),
                              subgraph)
            except SearchBudgetExceeded:
                unknown = True

    haar = HaarSpec(m, bic.S)
    if len(bic.S) >= 3 and haar.connected:
        try:
            subgraph = find_cubic_haar_subgraph(haar)
        except NotFound:
            subgraph = None
        if subgraph is not None:
            methods.append('cubic-haar-subgraph')
            status, cycle = _oracle(build(subgraph.spec), budget)
            if status is SearchStatus.FOUND:
                return finish(Status.HAMILTONIAN, 'cubic-haar-subgraph', _lift(bic, subgraph, cycle),
                              subgraph)
            unknown = True

    methods.append('oracle')
    status, cycle = _oracle(build(bic), budget)
    if status is SearchStatus.FOUND:
        return finish(Status.HAMILTONIAN, 'oracle', cycle)
    if status is SearchStatus.ABSENT and not unknown:
        return finish(Status.NON_HAMILTONIAN, 'oracle', proof='exhaustive-search')
    return finish(Status.UNKNOWN, None)


def _rim_sets(m, size):
    """Symmetric subsets of Z_m minus 0 with the given number of elements."""
    reps = range(1, m // 2 + 1)
    for k in range(size + 1):
        for chosen in combinations(reps, k):
            rim = frozenset(x % m for r in chosen for x in (r, -r))
            if len(rim) == size:
                yield rim


def spec_universe(max_m, min_m=1, degree=None, max_degree=None, s=None, family=None):
    """Connected bicirculants in the bounds, one canonical representative per isomorphism key."""
    if degree is not None:
        degrees = [degree]
    else:
        degrees = range(1, (config.SCAN_MAX_DEGREE if max_degree is None else max_degree) + 1)
    seen = {}
    for m in range(max(min_m, 1), max_m + 1):
        for d in degrees:
            for k in range(1, d + 1):
                if s is not None and k != s:
                    continue
                if k > m:
                    continue
                rims = list(_rim_sets(m, d - k))
                for others in combinations(range(1, m), k - 1):
                    S = frozenset((0,) + others)
                    for R in rims:
                        for T in rims:
                            spec = BicirculantSpec(m, R, S, T)
                            if spec.delta != 1:
                                continue
                            key = canonical_key(spec)
                            if key in seen:
                                continue
                            representative = canonical_spec(spec)
                            if family == 'grw' and classify_family(representative).family is not Family.GRW:
                                continue
                            seen[key] = representative
    return [seen[key] for key in sorted(seen)]


def _certify_timed(spec, budget):
    start = time.perf_counter()
    try:
        report = certify_hamiltonian(spec, budget)
    except SearchBudgetExceeded:
        report = HamiltonicityReport(spec, Status.UNKNOWN, methods=['budget'],
                                     family=classify_family(spec).tags)
    report.seconds = time.perf_counter() - start
    return report


def scan(max_m, min_m=1, degree=None, max_degree=None, s=None, family=None, budget=None,
         jobs=None, force=False):
    """HamiltonicityReports in canonical spec order; identical for any number of jobs."""
    if 2 * max_m > config.ORACLE_VERTEX_GUARD and not force:
        raise TooLarge(f"scan guard: 2m = {2 * max_m} > {config.ORACLE_VERTEX_GUARD}", n=2 * max_m)
    specs = spec_universe(max_m, min_m, degree, max_degree, s, family)
    jobs = config.SCAN_JOBS if jobs is None else jobs
    logger.info(f"scanning {len(specs)} connected spec(s) up to m={max_m} with {jobs} job(s)")
    return _run(specs, budget, jobs)


def _run(specs, budget, jobs):
    if jobs > 1 and len(specs) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            yield from executor.map(_certify_timed, specs, [budget] * len(specs))
        return
    for spec in specs:
        yield _certify_timed(spec, budget)


def scan_summary(reports):
    """Summary table: spec, status, route, cycle length, time."""
    rows = [{
        'spec': spec_text(r.spec),
        'family': ','.join(r.family),
        'status': r.status.value,
        'route': r.route,
        'cycle_length': len(r.cycle) if r.cycle is not None else None,
        'seconds': round(r.seconds, 4),
    } for r in reports]
    return pd.DataFrame(rows, columns=['spec', 'family', 'status', 'route', 'cycle_length', 'seconds'])


def exceptions(reports):
    """Specs reported NonHamiltonian or Unknown."""
    return [r for r in reports if r.status is not Status.HAMILTONIAN]


def grw_specs(max_m, min_m=3):
    """Connected R(m;a,b,c) with 1 <= a, b, c <= m/2 and a, b != m/2."""
    for m in range(min_m, max_m + 1):
        for a in range(1, (m + 1) // 2):
            for b in range(1, (m + 1) // 2):
                for c in range(1, m // 2 + 1):
                    if gcd(gcd(m, a), gcd(b, c)) == 1:
                        yield GrwSpec(m, a, b, c)


def _sweep_one(grw, budget):
    record = {'spec': spec_text(grw)}
    try:
        certificate = hamilton_cycle_grw(grw, budget)
        record.update({'route': certificate.route.value, 'verified': certificate.verified, 'ok': True})
    except BicirculantError as e:
        logger.error(f"{grw}: {e.message}")
        record.update({'route': None, 'verified': False, 'ok': False, 'error': e.message})
    return record


def grw_sweep(max_m, min_m=3, budget=None, jobs=None):
    """Run hamilton_cycle_grw over every connected rose window graph in range."""
    specs = list(grw_specs(max_m, min_m))
    jobs = config.SCAN_JOBS if jobs is None else jobs
    if jobs > 1 and len(specs) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            records = list(executor.map(_sweep_one, specs, [budget] * len(specs)))
    else:
        records = [_sweep_one(grw, budget) for grw in specs]
    logger.info(f"rose window sweep up to m={max_m}: {len(records)} spec(s)")
    return records


def petersen_exception_specs(max_m):
    return [IGraphSpec(n, 1, 2) for n in range(5, max_m + 1) if n % 6 == 5]
