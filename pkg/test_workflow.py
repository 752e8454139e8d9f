#!/usr/bin/env python3
"""
Test the acceptance workflow stages and their output files.
"""

import sys
import os

import pandas as pd
import pytest

# Add current directory to path to import the toolkit modules
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from workflow import AcceptanceWorkflow, run_workflow


def test_exception_checks_on_petersen(tmp_path):
    workflow = AcceptanceWorkflow()
    workflow.run_exception_checks(max_n=5)
    df = workflow.results['exceptions']
    # one cycle check plus all 30 non-adjacent pairs
    assert len(df) == 31
    assert df.iloc[0]['check'] == 'no-hamilton-cycle'
    assert workflow.failures() == {'exceptions': 0}

    workflow.generate_output_files(str(tmp_path))
    names = os.listdir(tmp_path)
    assert any(name.endswith('.jsonl') for name in names)
    workbook = [name for name in names if name.endswith('.xlsx')]
    assert len(workbook) == 1
    summary = pd.read_excel(tmp_path / workbook[0], sheet_name='Summary')
    assert list(summary['Stage']) == ['exceptions']
    assert list(summary['Failures']) == [0]


def test_oracle_check_agrees_on_small_rose_windows():
    workflow = AcceptanceWorkflow()
    workflow.run_oracle_check(max_m=6)
    df = workflow.results['oracle_check']
    assert len(df) > 0
    assert df['ok'].all()


def test_scan_stage_succeeds(tmp_path):
    assert run_workflow(str(tmp_path), stages=['scan'], scan_max_m=4)
    assert any(name.startswith('Conjecture_Scan_') for name in os.listdir(tmp_path))


if __name__ == "__main__":
    pytest.main([__file__])
