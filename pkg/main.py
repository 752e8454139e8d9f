#!/usr/bin/env python3
"""
Bicirculant Hamilton cycle toolkit - command line
Builds and exports bicirculant graphs, synthesizes and verifies Hamilton cycles,
classifies I-graph cycles and scans small bicirculants for non-hamiltonian ones.

Exit codes: 0 success, 1 non-hamiltonian or verification failure, 2 parse error,
3 invalid spec, 4 unknown (search budget exhausted).
"""

import argparse
import json
import logging
import os
import sys
from dataclasses import dataclass, field
from datetime import datetime

import pandas as pd

import config
from bicirculant import GrwSpec, IGraphSpec, build, classify_family
from conjecture_tools import Status, certify_hamiltonian, exceptions, scan, scan_summary
from errors import (EXIT_NON_HAMILTONIAN, EXIT_OK, EXIT_UNKNOWN, BicirculantError,
                    ClassificationFailed, NotApplicable, SpecParseError)
from graph_io import edge_list_lines, export_graph, format_sequence, parse_sequence, parse_spec, spec_text
from grw_hamilton import hamilton_cycle_grw
from hamilton_search import enumerate_hamilton_cycles, verify_cycle
from igraph_analysis import classify_cycle, resolution_audit, trichotomy_audit

logger = logging.getLogger(__name__)

STATUS_EXIT = {
    Status.HAMILTONIAN: EXIT_OK,
    Status.NON_HAMILTONIAN: EXIT_NON_HAMILTONIAN,
    Status.UNKNOWN: EXIT_UNKNOWN,
}


@dataclass
class RunConfig:
    command: str
    spec: str = None
    budget: int = config.DEFAULT_BUDGET
    fmt: str = None
    out: str = None
    jobs: int = config.SCAN_JOBS
    force: bool = False
    cap: int = config.ENUMERATION_CAP
    bounds: dict = field(default_factory=dict)

    @classmethod
    def from_args(cls, args):
        bounds = {key: getattr(args, key) for key in ('max_m', 'min_m', 'degree', 'max_degree', 's', 'family')
                  if getattr(args, key, None) is not None}
        return cls(args.command, getattr(args, 'spec', None), args.budget, args.format, args.out,
                   args.jobs, args.force, args.cap, bounds)


def setup_logging():
    logging.basicConfig(
        level=getattr(logging, config.LOG_LEVEL.upper(), logging.INFO),
        format=config.LOG_FORMAT,
        handlers=[
            logging.FileHandler(config.LOG_FILE),
            logging.StreamHandler(sys.stderr)
        ]
    )


def meta():
    return {'timestamp': datetime.now().strftime("%Y-%m-%d %H:%M:%S")}


def dump_json(document):
    return json.dumps(document, indent=2, sort_keys=True)


def emit(run, text):
    """Write command output to --out or stdout."""
    if not text.endswith('\n'):
        text += '\n'
    if run.out:
        directory = os.path.dirname(run.out)
        if directory:
            os.makedirs(directory, exist_ok=True)
        with open(run.out, 'w', encoding='ascii') as handle:
            handle.write(text)
        logger.info(f"Wrote {run.out}")
    else:
        sys.stdout.write(text)


def cmd_gen(run):
    spec = parse_spec(run.spec)
    graph = build(spec)
    bic = spec.to_bicirculant()
    if bic.delta != 1:
        logger.warning(f"{bic} is disconnected: gcd(m,R,S,T) = {bic.delta}")
    fmt = run.fmt or 'edgelist'
    if fmt == 'json':
        text = dump_json({
            'spec': spec_text(spec),
            'family': classify_family(bic).tags,
            'vertices': [str(x) for x in graph.vertices],
            'edges': [[str(x), str(y)] for x, y in graph.edges],
        })
    elif fmt == 'dot':
        text = export_graph(graph, 'dot')
    else:
        text = '\n'.join(edge_list_lines(graph))
    emit(run, text)
    return EXIT_OK


def cmd_ham(run):
    spec = parse_spec(run.spec)
    fmt = run.fmt or 'json'
    if isinstance(spec, GrwSpec):
        certificate = hamilton_cycle_grw(spec, run.budget)
        document = certificate.to_record()
        code = EXIT_OK
    else:
        report = certify_hamiltonian(spec, run.budget)
        document = report.to_record()
        code = STATUS_EXIT[report.status]
        if report.status is not Status.HAMILTONIAN:
            logger.warning(f"{spec_text(spec)}: {report.status.value} ({report.proof or 'budget exhausted'})")
    if fmt == 'json':
        document['meta'] = meta()
        emit(run, dump_json(document))
    else:
        lines = [f"spec: {document['spec']}", f"route: {document.get('route')}"]
        if 'status' in document:
            lines.append(f"status: {document['status']}")
        if document.get('cycle'):
            lines.append(f"cycle: {' '.join(document['cycle'])}")
        emit(run, '\n'.join(lines))
    return code


def cmd_classify(run):
    spec = parse_spec(run.spec)
    if not isinstance(spec, IGraphSpec):
        raise NotApplicable(f"classify needs an I-graph spec, got '{run.spec}'")
    enumeration = enumerate_hamilton_cycles(build(spec), cap=run.cap, force=run.force, budget=run.budget)
    rows = []
    for cycle in enumeration:
        row = {'cycle': format_sequence(cycle.vertices)}
        try:
            row.update(classify_cycle(spec, cycle, run.budget).to_record(spec.m))
        except ClassificationFailed as e:
            logger.error(f"{spec}: {e.message}")
            row.update({'class': 'Failed', 'error': e.message})
        rows.append(row)
    logger.info(f"{spec}: {len(rows)} cycle(s), truncated={enumeration.truncated}")
    if (run.fmt or 'text') == 'json':
        emit(run, dump_json({'spec': spec_text(spec), 'truncated': enumeration.truncated,
                             'cycles': rows, 'meta': meta()}))
    else:
        df = pd.DataFrame(rows, columns=['class', 'spokes', 'shift', 'flavor', 'witness', 'cycle'])
        df['witness'] = [w.get('derivation') if isinstance(w, dict) else None for w in df['witness']]
        emit(run, f"{spec}: {len(rows)} Hamilton cycle(s)\n" + (df.to_string(index=False) if rows else ''))
    return EXIT_OK


def cmd_scan(run):
    b = run.bounds
    reports = list(scan(b.get('max_m', 0), b.get('min_m', 1), b.get('degree'), b.get('max_degree'),
                        b.get('s'), b.get('family'), run.budget, run.jobs, run.force))
    flagged = exceptions(reports)
    summary = {
        'count': len(reports),
        'non_hamiltonian': [spec_text(r.spec) for r in flagged if r.status is Status.NON_HAMILTONIAN],
        'unknown': [spec_text(r.spec) for r in flagged if r.status is Status.UNKNOWN],
    }
    if (run.fmt or 'json') == 'json':
        lines = [json.dumps(r.to_record(), sort_keys=True) for r in reports]
        lines.append(json.dumps({'summary': summary, 'meta': meta()}, sort_keys=True))
        emit(run, '\n'.join(lines))
    else:
        table = scan_summary(reports)
        text = table.to_string(index=False) if len(table) else 'no connected specs in range'
        text += f"\n\nNonHamiltonian: {', '.join(summary['non_hamiltonian']) or 'none'}"
        text += f"\nUnknown: {', '.join(summary['unknown']) or 'none'}"
        emit(run, text)
    for r in flagged:
        logger.info(f"scan exception: {spec_text(r.spec)} {r.status.value}")
    return EXIT_OK


def cmd_verify(run, cycle_file):
    spec = parse_spec(run.spec)
    try:
        with open(cycle_file, encoding='ascii') as handle:
            text = handle.read()
    except OSError as e:
        raise SpecParseError(f"cannot read cycle file: {e}")
    seq = parse_sequence(text)
    check = verify_cycle(build(spec), seq)
    emit(run, str(check))
    return EXIT_OK if check else EXIT_NON_HAMILTONIAN


def cmd_audit(run, kind):
    b = run.bounds
    max_m, min_m = b.get('max_m', 10), max(b.get('min_m', 3), 3)
    records = []
    if kind in ('trichotomy', 'both'):
        records += [dict(r, audit='trichotomy') for r in trichotomy_audit(max_m, min_m, run.cap, run.budget)]
    if kind in ('resolution', 'both'):
        records += [dict(r, audit='resolution') for r in resolution_audit(max_m, min_m, run.cap, run.budget)]
    failed = [r for r in records if not r.get('ok')]
    summary = {'records': len(records), 'failed': len(failed),
               'fallbacks': sum(1 for r in records if r.get('fallback')),
               'misfires': sum(len(r.get('misfires', [])) for r in records)}
    if (run.fmt or 'json') == 'json':
        lines = [json.dumps(r, sort_keys=True) for r in records]
        lines.append(json.dumps({'summary': summary, 'meta': meta()}, sort_keys=True))
        emit(run, '\n'.join(lines))
    else:
        df = pd.DataFrame(records)
        counts = df.groupby(['audit', 'spec']).size().to_string() if len(df) else 'no cycles'
        emit(run, f"{counts}\n\n{summary}")
    return EXIT_OK if not failed else EXIT_NON_HAMILTONIAN


def positive_int(text):
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser():
    parser = argparse.ArgumentParser(description='Hamilton cycles in bicirculant graphs')
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', choices=config.OUTPUT_FORMATS, help='Output format')
    common.add_argument('--budget', type=positive_int, default=config.DEFAULT_BUDGET,
                        help='Search budget in node expansions')
    common.add_argument('--cap', type=positive_int, default=config.ENUMERATION_CAP,
                        help='Maximum number of cycles to enumerate')
    common.add_argument('--jobs', type=positive_int, default=config.SCAN_JOBS, help='Worker processes')
    common.add_argument('--force', action='store_true', help='Ignore the desk-scale size guard')
    common.add_argument('--out', help='Write output to this file instead of stdout')

    commands = parser.add_subparsers(dest='command', required=True)
    for name, text in (('gen', 'Export a graph as edge list or DOT'),
                       ('ham', 'Find a verified Hamilton cycle'),
                       ('classify', 'Classify every Hamilton cycle of an I-graph')):
        command = commands.add_parser(name, parents=[common], help=text)
        command.add_argument('spec', help="Spec text, e.g. 'GRW 9 1 3 2'")

    verify = commands.add_parser('verify', parents=[common], help='Verify a cycle file against a spec')
    verify.add_argument('spec', help='Spec text')
    verify.add_argument('cycle_file', help='Vertex tokens, a JSON token array or a certificate')

    ranged = argparse.ArgumentParser(add_help=False)
    ranged.add_argument('--max-m', type=positive_int, required=True, help='Largest m')
    ranged.add_argument('--min-m', type=positive_int, help='Smallest m')

    scan_parser = commands.add_parser('scan', parents=[common, ranged], help='Scan bicirculants for exceptions')
    scan_parser.add_argument('--degree', type=positive_int, help='Exact valency')
    scan_parser.add_argument('--max-degree', type=positive_int, help='Largest valency (default from config)')
    scan_parser.add_argument('--s', type=positive_int, help='Number of spoke types')
    scan_parser.add_argument('--family', choices=['grw'], help='Restrict to one family')

    audit = commands.add_parser('audit', parents=[common, ranged], help='Trichotomy and resolution audits')
    audit.add_argument('--kind', choices=['trichotomy', 'resolution', 'both'], default='both')
    return parser


def main(argv=None):
    """Run one command; returns the exit code."""
    setup_logging()
    parser = build_parser()
    args = parser.parse_args(argv)
    run = RunConfig.from_args(args)
    try:
        if run.command == 'gen':
            return cmd_gen(run)
        if run.command == 'ham':
            return cmd_ham(run)
        if run.command == 'classify':
            return cmd_classify(run)
        if run.command == 'scan':
            return cmd_scan(run)
        if run.command == 'verify':
            return cmd_verify(run, args.cycle_file)
        return cmd_audit(run, args.kind)
    except BicirculantError as e:
        logger.error(f"{type(e).__name__}: {e.message}")
        return e.exit_code
    except Exception as e:
        logger.error(f"Unexpected failure: {e}")
        return EXIT_UNKNOWN


if __name__ == "__main__":
    sys.exit(main())
