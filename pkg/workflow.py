#!/usr/bin/env python3
"""
Acceptance workflow for the bicirculant toolkit
Runs the rose window sweep, the oracle cross-check, the exception-family checks,
the I-graph audits and the conjecture scan, then writes JSON-lines results and an
Excel summary workbook.
"""

import argparse
import json
import logging
import os
import sys
from datetime import datetime
from itertools import combinations

import pandas as pd

import config
from bicirculant import build
from conjecture_tools import grw_specs, grw_sweep, petersen_exception_specs, scan, scan_summary
from errors import BicirculantError
from graph_io import spec_text
from grw_hamilton import hamilton_cycle_grw
from hamilton_search import SearchStatus, find_hamilton_cycle, find_hamilton_path
from igraph_analysis import resolution_audit, trichotomy_audit

logger = logging.getLogger(__name__)

STAGES = ['grw_sweep', 'oracle_check', 'exceptions', 'audit', 'resolution', 'scan']

STAGE_FILES = {
    'grw_sweep': 'GRW_SWEEP',
    'oracle_check': 'ORACLE_CHECK',
    'exceptions': 'EXCEPTIONS',
    'audit': 'AUDIT',
    'resolution': 'RESOLUTION',
    'scan': 'SCAN',
}


def _cell(value):
    # worksheets take scalars only
    if isinstance(value, (list, tuple, dict)):
        return json.dumps(value, sort_keys=True)
    return value


class AcceptanceWorkflow:
    """Collects one DataFrame per stage; a row with ok == False is a failure."""

    def __init__(self, budget=None, jobs=None):
        self.budget = budget
        self.jobs = jobs
        self.results = {}

    def run_grw_sweep(self, max_m=24):
        logger.info(f"Sweeping connected rose window graphs up to m={max_m}...")
        self.results['grw_sweep'] = pd.DataFrame(grw_sweep(max_m, budget=self.budget, jobs=self.jobs))

    def run_oracle_check(self, max_m=12):
        """Construction and independent search must agree on every connected R(m;a,b,c)."""
        logger.info(f"Cross-checking constructions against the oracle up to m={max_m}...")
        rows = []
        for grw in grw_specs(max_m):
            outcome = find_hamilton_cycle(build(grw), self.budget)
            try:
                constructed = hamilton_cycle_grw(grw, self.budget).verified
            except BicirculantError as e:
                logger.error(f"{grw}: {e.message}")
                constructed = False
            rows.append({'spec': spec_text(grw), 'oracle': outcome.status.value,
                         'construction': constructed, 'ok': outcome.found and constructed})
        self.results['oracle_check'] = pd.DataFrame(rows)

    def run_exception_checks(self, max_n=11, sampled_pairs=20):
        """G(n,2), n = 5 (mod 6): no Hamilton cycle, Hamilton paths between non-adjacent vertices."""
        logger.info("Checking the G(n,2) exception family...")
        rows = []
        for spec in petersen_exception_specs(max_n):
            graph = build(spec)
            outcome = find_hamilton_cycle(graph, self.budget)
            rows.append({'spec': spec_text(spec), 'check': 'no-hamilton-cycle', 'pair': None,
                         'status': outcome.status.value, 'ok': outcome.status is SearchStatus.ABSENT})
            pairs = [(x, y) for x, y in combinations(graph.vertices, 2) if not graph.has_edge(x, y)]
            if spec.m > 5:
                pairs = pairs[:sampled_pairs]
            for x, y in pairs:
                path = find_hamilton_path(graph, x, y, self.budget)
                rows.append({'spec': spec_text(spec), 'check': 'hamilton-path', 'pair': f"{x} {y}",
                             'status': path.status.value, 'ok': path.found})
        self.results['exceptions'] = pd.DataFrame(rows)

    def run_audits(self, max_m=10, cap=None):
        logger.info(f"Auditing I-graph cycles up to m={max_m}...")
        self.results['audit'] = pd.DataFrame(trichotomy_audit(max_m, cap=cap, budget=self.budget))
        self.results['resolution'] = pd.DataFrame(resolution_audit(max_m, cap=cap, budget=self.budget))

    def run_scan(self, max_m=12):
        logger.info(f"Scanning connected bicirculants up to m={max_m}...")
        reports = list(scan(max_m, budget=self.budget, jobs=self.jobs))
        table = scan_summary(reports)
        table['ok'] = True
        self.results['scan'] = table
        flagged = table[table['status'] != 'Hamiltonian']
        logger.info(f"Scan exceptions: {', '.join(flagged['spec']) or 'none'}")

    def failures(self):
        return {stage: int((~df['ok'].astype(bool)).sum()) for stage, df in self.results.items() if 'ok' in df}

    def generate_output_files(self, output_dir=config.DEFAULT_OUTPUT_DIR):
        """One JSON-lines file per stage plus the summary workbook."""
        logger.info("Generating output files...")
        os.makedirs(output_dir, exist_ok=True)
        timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")

        for stage, df in self.results.items():
            template = config.OUTPUT_FILE_TEMPLATES[STAGE_FILES[stage]]
            filename = os.path.join(output_dir, template.format(timestamp=timestamp))
            df.to_json(filename, orient='records', lines=True)
            logger.info(f"Generated {stage} file: {filename}")

        self.generate_summary_report(output_dir, timestamp)

    def generate_summary_report(self, output_dir, timestamp):
        failures = self.failures()
        summary_df = pd.DataFrame({
            'Stage': list(self.results),
            'Rows': [len(df) for df in self.results.values()],
            'Failures': [failures.get(stage, 0) for stage in self.results],
            'Run Date': [datetime.now().strftime("%Y-%m-%d %H:%M:%S")] * len(self.results)
        })
        filename = os.path.join(output_dir, config.OUTPUT_FILE_TEMPLATES['SUMMARY'].format(timestamp=timestamp))
        with pd.ExcelWriter(filename, engine='openpyxl') as writer:
            summary_df.to_excel(writer, index=False, sheet_name='Summary')
            for stage, df in self.results.items():
                df.apply(lambda column: column.map(_cell)).to_excel(writer, index=False, sheet_name=stage)
        logger.info(f"Generated summary report: {filename}")
        return filename


def run_workflow(output_dir, stages=None, budget=None, jobs=None, grw_max_m=24, oracle_max_m=12,
                 audit_max_m=10, scan_max_m=12):
    """Run the selected stages in order; True when no stage reports a failure."""
    stages = STAGES if stages is None else stages
    logger.info("Starting acceptance workflow")
    workflow = AcceptanceWorkflow(budget, jobs)
    try:
        if 'grw_sweep' in stages:
            logger.info("Step 1: Rose window sweep...")
            workflow.run_grw_sweep(grw_max_m)
        if 'oracle_check' in stages:
            logger.info("Step 2: Oracle cross-check...")
            workflow.run_oracle_check(oracle_max_m)
        if 'exceptions' in stages:
            logger.info("Step 3: Exception family...")
            workflow.run_exception_checks()
        if 'audit' in stages or 'resolution' in stages:
            logger.info("Step 4: I-graph audits...")
            workflow.run_audits(audit_max_m)
        if 'scan' in stages:
            logger.info("Step 5: Conjecture scan...")
            workflow.run_scan(scan_max_m)
        workflow.generate_output_files(output_dir)
    except BicirculantError as e:
        logger.error(f"Workflow failed: {e.message}")
        return False

    failures = {stage: n for stage, n in workflow.failures().items() if n}
    if failures:
        logger.error(f"Failures by stage: {failures}")
        return False
    logger.info("Workflow completed successfully!")
    return True


def main():
    """Main function for the workflow script."""
    parser = argparse.ArgumentParser(description='Acceptance workflow for the bicirculant toolkit')
    parser.add_argument('--output-dir', default=config.DEFAULT_OUTPUT_DIR, help='Output directory')
    parser.add_argument('--stages', nargs='+', choices=STAGES, help='Stages to run (default: all)')
    parser.add_argument('--budget', type=int, default=config.DEFAULT_BUDGET, help='Search budget')
    parser.add_argument('--jobs', type=int, default=config.SCAN_JOBS, help='Worker processes')
    parser.add_argument('--grw-max-m', type=int, default=24)
    parser.add_argument('--oracle-max-m', type=int, default=12)
    parser.add_argument('--audit-max-m', type=int, default=10)
    parser.add_argument('--scan-max-m', type=int, default=12)
    args = parser.parse_args()

    logging.basicConfig(
        level=logging.INFO,
        format=config.LOG_FORMAT,
        handlers=[
            logging.FileHandler(config.LOG_FILE),
            logging.StreamHandler(sys.stdout)
        ]
    )

    success = run_workflow(args.output_dir, args.stages, args.budget, args.jobs, args.grw_max_m,
                           args.oracle_max_m, args.audit_max_m, args.scan_max_m)
    sys.exit(0 if success else 1)


if __name__ == "__main__":
    main()
