#!/usr/bin/env python3
"""
Configuration file for the bicirculant Hamilton cycle toolkit
Contains settings and constants for the library, the CLI and the workflow.
"""

import os
from dotenv import load_dotenv

# Load environment variables
load_dotenv()

# Search Configuration
# Budget unit is node expansions of the backtracking search, not wall time.
DEFAULT_BUDGET = int(os.getenv('BICIRC_BUDGET', '2000000'))

# Oracle-heavy commands refuse graphs with more than this many vertices unless forced
ORACLE_VERTEX_GUARD = int(os.getenv('BICIRC_VERTEX_GUARD', '24'))

# Enumeration cap for classify / audit
ENUMERATION_CAP = int(os.getenv('BICIRC_ENUMERATION_CAP', '10000'))

# Worker processes for scans and sweeps
SCAN_JOBS = int(os.getenv('BICIRC_JOBS', '1'))

# Largest valency covered by a scan without --degree
SCAN_MAX_DEGREE = int(os.getenv('BICIRC_SCAN_MAX_DEGREE', '4'))

# Output formats accepted by the CLI
OUTPUT_FORMATS = ['text', 'json', 'dot', 'edgelist']

# Spec text keywords
SPEC_KEYWORDS = {
    'B': 'bicirculant',
    'I': 'I-graph',
    'G': 'generalized Petersen graph',
    'GRW': 'generalized rose window graph',
    'H': 'cyclic Haar graph',
    'TAB': 'Tabacjn graph',
}

# Logging Configuration
LOG_LEVEL = os.getenv('LOG_LEVEL', 'INFO')
LOG_FORMAT = '%(asctime)s - %(levelname)s - %(message)s'
LOG_FILE = os.getenv('BICIRC_LOG_FILE', 'bicirc.log')

# File Output Configuration
DEFAULT_OUTPUT_DIR = 'output'

OUTPUT_FILE_TEMPLATES = {
    'GRW_SWEEP': 'GRW_Sweep_{timestamp}.jsonl',
    'ORACLE_CHECK': 'Oracle_Check_{timestamp}.jsonl',
    'EXCEPTIONS': 'Exception_Family_{timestamp}.jsonl',
    'AUDIT': 'Trichotomy_Audit_{timestamp}.jsonl',
    'RESOLUTION': 'Resolution_Audit_{timestamp}.jsonl',
    'SCAN': 'Conjecture_Scan_{timestamp}.jsonl',
    'SUMMARY': 'Run_Summary_{timestamp}.xlsx'
}
