#!/usr/bin/env python3
"""
Text formats for the toolkit

Spec text:     B m R=a1,a2 S=s1,s2 T=b1,b2 | I m a b | G n k | GRW m a b c | H m S=s1,... | TAB m a b c d
Vertex tokens: u<i> / v<i>, whitespace separated in sequence order, or a JSON array of tokens
Graph export:  undirected edge list ("u0 v3" per line) and DOT (networkx + pydot)
"""

import json
import re

import networkx as nx

from bicirculant import (BicirculantSpec, GrwSpec, HaarSpec, IGraphSpec, Side, Vertex,
                         compressed)
from errors import SpecParseError

TOKEN_PATTERN = re.compile(r'^([uv])(\d+)$')


def _int(token, text):
    try:
        return int(token)
    except ValueError:
        raise SpecParseError(f"expected an integer, got '{token}' in '{text}'")


def _residue_list(value, text):
    value = value.strip()
    if not value:
        return []
    return [_int(part, text) for part in value.split(',')]


def parse_spec(text):
    """Parse a spec line into GrwSpec, IGraphSpec, HaarSpec or BicirculantSpec.

    Syntax errors raise SpecParseError; parameter violations raise InvalidSpec.
    """
    tokens = text.strip().split()
    if not tokens:
        raise SpecParseError("empty spec")
    keyword = tokens[0].upper()
    args = tokens[1:]

    if keyword == 'I':
        if len(args) != 3:
            raise SpecParseError(f"'I m a b' expected, got '{text}'")
        m, a, b = (_int(t, text) for t in args)
        return IGraphSpec(m, a, b)

    if keyword == 'G':
        if len(args) != 2:
            raise SpecParseError(f"'G n k' expected, got '{text}'")
        n, k = (_int(t, text) for t in args)
        return IGraphSpec(n, 1, k)

    if keyword == 'GRW':
        if len(args) != 4:
            raise SpecParseError(f"'GRW m a b c' expected, got '{text}'")
        m, a, b, c = (_int(t, text) for t in args)
        return GrwSpec(m, a, b, c)

    if keyword == 'TAB':
        if len(args) != 5:
            raise SpecParseError(f"'TAB m a b c d' expected, got '{text}'")
        m, a, b, c, d = (_int(t, text) for t in args)
        return BicirculantSpec.create(m, {a}, {0, c, d}, {b}, symmetric=True)

    if keyword in ('B', 'H'):
        if not args:
            raise SpecParseError(f"missing m in '{text}'")
        m = _int(args[0], text)
        sets = {'R': [], 'S': None, 'T': []}
        for token in args[1:]:
            key, sep, value = token.partition('=')
            key = key.upper()
            if not sep or key not in sets:
                raise SpecParseError(f"unexpected token '{token}' in '{text}'")
            sets[key] = _residue_list(value, text)
        if sets['S'] is None:
            raise SpecParseError(f"missing S=... in '{text}'")
        if keyword == 'H':
            if sets['R'] or sets['T']:
                raise SpecParseError(f"Haar graphs take S only, got '{text}'")
            return HaarSpec(m, frozenset(sets['S']))
        return BicirculantSpec.create(m, sets['R'], sets['S'], sets['T'], symmetric=True)

    raise SpecParseError(f"unknown spec keyword '{tokens[0]}'")


def spec_text(spec):
    """Inverse of parse_spec for the forms it produces."""
    if isinstance(spec, GrwSpec):
        return f"GRW {spec.m} {spec.a} {spec.b} {spec.c}"
    if isinstance(spec, IGraphSpec):
        return f"I {spec.m} {spec.a} {spec.b}"
    if isinstance(spec, HaarSpec):
        return f"H {spec.m} S={','.join(str(x) for x in sorted(spec.S))}"
    m = spec.m
    join = lambda xs: ','.join(str(x) for x in xs)
    return (f"B {m} R={join(compressed(spec.R, m))} S={join(sorted(spec.S))} "
            f"T={join(compressed(spec.T, m))}")


def parse_vertex(token):
    match = TOKEN_PATTERN.match(token.strip())
    if not match:
        raise SpecParseError(f"bad vertex token '{token}'")
    side = Side.OUTER if match.group(1) == 'u' else Side.INNER
    return Vertex(side, int(match.group(2)))


def format_sequence(vertices):
    return ' '.join(str(x) for x in vertices)


def parse_sequence(text):
    """Vertex sequence from whitespace tokens, a JSON token array, or a certificate document."""
    stripped = text.strip()
    if stripped.startswith('[') or stripped.startswith('{'):
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as e:
            raise SpecParseError(f"invalid JSON cycle: {e}")
        if isinstance(data, dict):
            if 'cycle' not in data:
                raise SpecParseError("JSON document has no 'cycle' field")
            data = data['cycle']
        if not isinstance(data, list):
            raise SpecParseError("cycle must be a list of vertex tokens")
        return [parse_vertex(str(t)) for t in data]
    return [parse_vertex(t) for t in stripped.split()]


def edge_list_lines(graph):
    return [f"{x} {y}" for x, y in graph.edges]


def to_dot(graph, name='G'):
    g = nx.relabel_nodes(graph.to_networkx(), str)
    g.graph['name'] = name
    return nx.nx_pydot.to_pydot(g).to_string()


def export_graph(graph, fmt):
    if fmt == 'dot':
        return to_dot(graph)
    return '\n'.join(edge_list_lines(graph)) + '\n'
