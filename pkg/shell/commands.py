#!/usr/bin/env python3
"""
Shell commands for ExtWords
Parses one command line, runs it against the session and renders the result
"""

import json
import logging
import re
from typing import Dict, Any, List, Optional

from constructions.cdr import cdr_decompose
from exponents.exponent import Exponent, BOTTOM
from extension.element import ExtElement
from extension.preprocess import preprocess
from extension.reduce import is_trivial, ext_equal, reduced_degree, order_probe
from extension.table import GeneratorTable
from periods.periods import proper_period_lattice
from rewriting.reducedness import is_g_reduced, is_local_geodesic
from rewriting.trace import random_reduction_trace
from shell.demos import run_demo, DEMOS
from shell.parser import Product, parse, parse_sequence
from shell.session import Session
from utils.errors import InvalidInputError
from utils.limits import LIMITS
from words.canonical import canonical
from words.codec import word_to_json
from words.word import Word, eval_at

logger = logging.getLogger(__name__)

_LET = re.compile(r'^([A-Za-z_]\w*)\s*=\s*(.+)$')
_AT = re.compile(r'^(.*)\s+at\s+(\[[^\]]*\])\s*$')
_FLAG = re.compile(r'\s--(max|seed|log)\s+(\S+)')

HELP = {
    'wp': 'wp E                  is E trivial in Ext(A,G)',
    'eq': 'eq E; F               are E and F equal in Ext(A,G)',
    'deg': 'deg E                 degree of the unreduced product',
    'rdeg': 'rdeg E                reduced degree and a witness',
    'eval': 'eval E at [..]        letter at a position',
    'periods': 'periods E             HNF basis of the proper periods',
    'order': 'order E --max N       smallest n <= N with E^n = 1',
    'cdr': 'cdr E                 cyclically reduced decomposition',
    'check': 'check E               G-reducedness and local-geodesic verdicts',
    'normalize': 'normalize E           canonical form',
    'trace': 'trace E [--seed N] [--log FILE]   randomized reduction',
    'demo': 'demo NAME             run a named example',
    'let': 'let x = E             bind a name',
    'table': 'table export|import FILE',
}


def _flags(text: str):
    flags = {name: value for name, value in _FLAG.findall(' ' + text)}
    return _FLAG.sub('', ' ' + text).strip(), flags


def _int_flag(flags: Dict[str, str], name: str, default: Optional[int]) -> Optional[int]:
    if name not in flags:
        return default
    try:
        return int(flags[name])
    except ValueError:
        raise InvalidInputError(f"--{name} needs an integer, got {flags[name]!r}")


class CommandRunner:
    """Dispatches command lines to the engine"""

    def __init__(self, session: Session):
        self.session = session
        self.oracle = session.oracle

    def run(self, line: str) -> Optional[Dict[str, Any]]:
        line = line.strip()
        if not line or line.startswith('#'):
            return None
        head, _, rest = line.partition(' ')
        handler = getattr(self, f"cmd_{head}", None)
        if handler is None:
            raise InvalidInputError(f"unknown command {head!r}; try help")
        logger.debug(f"command {head}: {rest}")
        result = handler(rest.strip())
        result['command'] = head
        return result

    def _element(self, text: str) -> ExtElement:
        if not text:
            raise InvalidInputError("missing expression")
        return self.session.element(parse(text))

    def cmd_help(self, rest: str) -> Dict[str, Any]:
        return {'commands': list(HELP.values()), 'demos': list(DEMOS)}

    def cmd_let(self, rest: str) -> Dict[str, Any]:
        match = _LET.match(rest)
        if not match:
            raise InvalidInputError("usage: let NAME = EXPRESSION")
        name, text = match.groups()
        value = self._element(text)
        self.session.bind(name, value)
        return {'name': name, 'value': value.word}

    def cmd_wp(self, rest: str) -> Dict[str, Any]:
        return {'trivial': is_trivial(self._element(rest), self.oracle, self.session.table)}

    def cmd_eq(self, rest: str) -> Dict[str, Any]:
        nodes = parse_sequence(rest)
        if len(nodes) == 1 and isinstance(nodes[0], Product) and len(nodes[0].items) == 2:
            nodes = list(nodes[0].items)
        if len(nodes) != 2:
            raise InvalidInputError("usage: eq E; F")
        x, y = (self.session.element(n) for n in nodes)
        return {'equal': ext_equal(x, y, self.oracle, self.session.table)}

    def cmd_deg(self, rest: str) -> Dict[str, Any]:
        w = self._element(rest).word
        return {'degree': w.degree, 'length': w.length}

    def cmd_rdeg(self, rest: str) -> Dict[str, Any]:
        degree, witness = reduced_degree(self._element(rest), self.oracle, self.session.table)
        return {'rdeg': degree, 'witness': witness}

    def cmd_eval(self, rest: str) -> Dict[str, Any]:
        match = _AT.match(rest)
        if not match:
            raise InvalidInputError("usage: eval E at [a0,a1,...]")
        w = self._element(match.group(1)).word
        position = Exponent.parse(match.group(2))
        return {'position': position, 'letter': eval_at(w, position)}

    def cmd_periods(self, rest: str) -> Dict[str, Any]:
        w = self._element(rest).word
        return {'word': w, 'basis': proper_period_lattice(w).basis()}

    def cmd_order(self, rest: str) -> Dict[str, Any]:
        text, flags = _flags(rest)
        max_n = _int_flag(flags, 'max', 10)
        return {'order': order_probe(self._element(text), max_n, self.oracle, self.session.table)}

    def cmd_cdr(self, rest: str) -> Dict[str, Any]:
        x = cdr_decompose(self._element(rest).word, self.oracle)
        if x is None:
            return {'in_cdr': False}
        return {'in_cdr': True, 'c': x.c, 'u': x.u}

    def cmd_check(self, rest: str) -> Dict[str, Any]:
        w = self._element(rest).word
        return {
            'g_reduced': str(is_g_reduced(w, self.oracle)),
            'local_geodesic': str(is_local_geodesic(w, self.oracle)),
        }

    def cmd_normalize(self, rest: str) -> Dict[str, Any]:
        return {'word': canonical(self._element(rest).word)}

    def cmd_trace(self, rest: str) -> Dict[str, Any]:
        text, flags = _flags(rest)
        seed = _int_flag(flags, 'seed', LIMITS.seed)
        x = self._element(text)
        if 'log' in flags:
            with open(flags['log'], 'w', encoding='utf-8') as log:
                result = random_reduction_trace(x, self.oracle, seed=seed, table=self.session.table, log=log)
        else:
            result = random_reduction_trace(x, self.oracle, seed=seed, table=self.session.table)
        return {'rdeg': result.degree, 'witness': result.word, 'steps': result.steps}

    def cmd_demo(self, rest: str) -> Dict[str, Any]:
        name = rest.strip()
        return {'demo': name, 'checks': [{'label': k, 'value': v} for k, v in run_demo(name)]}

    def cmd_table(self, rest: str) -> Dict[str, Any]:
        action, _, path = rest.partition(' ')
        path = path.strip()
        if action not in ('export', 'import') or not path:
            raise InvalidInputError("usage: table export|import FILE")
        if action == 'export':
            words = [f for x in self.session.bindings.values() for f in x.factors]
            table = preprocess(words, self.oracle)
            table.save(path)
        else:
            table = GeneratorTable.load(path, self.oracle)
            self.session.table = table
        return {'action': action, 'path': path, 'generators': len(table)}


def _plain(value: Any, as_json: bool) -> Any:
    if isinstance(value, Word):
        return word_to_json(value) if as_json else str(value)
    if isinstance(value, Exponent):
        return list(value.coeffs) if as_json else value.polynomial()
    if isinstance(value, float) and value == BOTTOM:
        return None if as_json else '-inf'
    if isinstance(value, list):
        return [_plain(v, as_json) for v in value]
    if isinstance(value, dict):
        return {k: _plain(v, as_json) for k, v in value.items()}
    return value


def render_result(result: Dict[str, Any], as_json: bool = False) -> str:
    """One JSON object, or human-readable key: value lines"""
    if as_json:
        return json.dumps(_plain(result, True), sort_keys=True)
    data = _plain(result, False)
    lines: List[str] = []
    if data.get('command') == 'demo':
        lines.append(f"demo {data['demo']}")
        for check in data['checks']:
            lines.append(f"  {check['label']}: {check['value']}")
        return '\n'.join(lines)
    for key, value in data.items():
        if key == 'command':
            continue
        if isinstance(value, list) and value and key in ('commands', 'demos'):
            lines.extend(f"  {v}" for v in value)
        else:
            lines.append(f"{key}: {value}")
    return '\n'.join(lines)
