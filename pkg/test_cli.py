#!/usr/bin/env python3
"""
Tests for the command line: outputs, certificate files and exit codes.
"""

import sys
import os
import json
import re

import pytest

# Add current directory to path to import the toolkit modules
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

import main


@pytest.fixture(autouse=True)
def in_tmp(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)


def run(capsys, *argv):
    code = main.main(list(argv))
    return code, capsys.readouterr().out


def test_gen_edge_list(capsys):
    code, out = run(capsys, 'gen', 'I 3 1 1')
    assert code == 0
    assert len(out.strip().splitlines()) == 9


def test_gen_dot(capsys):
    code, out = run(capsys, 'gen', 'GRW 9 1 3 2', '--format', 'dot')
    assert code == 0
    assert 'graph' in out.splitlines()[0]
    assert len(set(re.findall(r'\b[uv]\d+\b', out))) == 18


def test_gen_disconnected_spec_still_exports(capsys):
    code, out = run(capsys, 'gen', 'I 6 2 2')
    assert code == 0
    assert out.strip()


def test_ham_rose_window_routes(capsys):
    code, out = run(capsys, 'ham', 'GRW 10 2 4 1')
    assert code == 0
    document = json.loads(out)
    assert document['route'] == 'PetersenExceptionConstruction'
    assert len(document['cycle']) == 20
    assert 'meta' in document

    code, out = run(capsys, 'ham', 'GRW 12 3 4 2', '--format', 'text')
    assert code == 0
    assert 'route: ConnectedH' in out


def test_ham_petersen_is_non_hamiltonian(capsys):
    code, out = run(capsys, 'ham', 'I 5 1 2')
    assert code == 1
    assert json.loads(out)['status'] == 'NonHamiltonian'


def test_bad_specs_exit_codes(capsys):
    assert run(capsys, 'ham', 'FOO 1')[0] == 2
    assert run(capsys, 'ham', 'I 6 3 1')[0] == 3


def test_classify_counts_cycles(capsys):
    code, out = run(capsys, 'classify', 'I 3 1 1', '--format', 'json')
    assert code == 0
    assert len(json.loads(out)['cycles']) == 3

    code, out = run(capsys, 'classify', 'I 5 1 2')
    assert code == 0
    assert out.startswith('I(5;1,2): 0 Hamilton cycle(s)')


def test_classify_needs_igraph(capsys):
    assert run(capsys, 'classify', 'GRW 9 1 3 2')[0] == 3


def test_scan_reports_k2(capsys):
    code, out = run(capsys, 'scan', '--max-m', '1')
    assert code == 0
    lines = [json.loads(line) for line in out.strip().splitlines()]
    assert lines[0]['route'] == 'K2'
    assert lines[-1]['summary'] == {'count': 1, 'non_hamiltonian': ['B 1 R= S=0 T='], 'unknown': []}


def test_scan_guard_exit_code(capsys):
    assert run(capsys, 'scan', '--max-m', '13')[0] == 3


def test_certificate_file_verifies(capsys, tmp_path):
    certificate = tmp_path / 'cert.json'
    assert run(capsys, 'ham', 'GRW 9 1 3 2', '--out', str(certificate))[0] == 0
    assert certificate.exists()
    code, out = run(capsys, 'verify', 'GRW 9 1 3 2', str(certificate))
    assert code == 0
    assert out.strip() == 'ok'


def test_verify_reports_first_bad_edge(capsys, tmp_path):
    cycle_file = tmp_path / 'cycle.txt'
    cycle_file.write_text('u0 u1 u2 v2 v0 v1\n')
    code, out = run(capsys, 'verify', 'I 3 1 1', str(cycle_file))
    assert code == 1
    assert out.strip() == 'NonEdge(5)'


def test_verify_missing_file(capsys, tmp_path):
    assert run(capsys, 'verify', 'I 3 1 1', str(tmp_path / 'absent.txt'))[0] == 2


def test_audit_small_range(capsys):
    code, out = run(capsys, 'audit', '--max-m', '6', '--kind', 'trichotomy')
    assert code == 0
    summary = json.loads(out.strip().splitlines()[-1])['summary']
    assert summary['failed'] == 0


if __name__ == "__main__":
    pytest.main([__file__])
