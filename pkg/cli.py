#!/usr/bin/env python3
"""
Command-line front end: argument parsing, CSV/JSON writers and exit statuses

Exit statuses: 0 success, 1 usage or I/O error, 2 verification tolerance failure
"""

import argparse
import csv
import json
import logging
import math
import re
import sys
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, TextIO, Tuple

from commands import CommandRegistry, Table
from config import FORMATS, HartleyConfig

logger = logging.getLogger(__name__)

COMMANDS = ('dht', 'eig', 'verify', 'poisson', 'spectrum', 'gram', 'bench')
FAMILIES = ('hartley', 'fourier')
MAX_ABS_NU = 64

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_FAILED = 2

# Flags whose value may legitimately start with '-'
_VALUE_FLAGS = ('--nu', '--a', '--b', '--x', '--N', '--seed', '--epsilon', '--tol')

_RANGE = re.compile(r"^\s*(-?\d+)\s*(?:\.\.\s*(-?\d+)\s*)?$")


class UsageError(Exception):
    """Bad command line; reported as one line and exit status 1"""


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def parse_nu_range(text: str) -> Tuple[int, int]:
    """'a..b' inclusive on both ends; a single integer means a..a"""
    match = _RANGE.match(text)
    if not match:
        raise UsageError(f"--nu: expected 'a..b', got '{text}'")
    lo = int(match.group(1))
    hi = int(match.group(2)) if match.group(2) is not None else lo
    if lo > hi:
        raise UsageError(f"--nu: empty range {lo}..{hi}")
    return lo, hi


@dataclass(frozen=True)
class RunConfig:
    command: str
    N: Optional[int] = None
    nu_range: Optional[Tuple[int, int]] = None
    epsilon: float = 1e-16
    output_format: str = 'csv'
    output_path: Optional[str] = None
    seed: int = 0
    a: Optional[float] = None
    b: Optional[float] = None
    x: Optional[float] = None
    tol: float = 1e-8
    input_path: Optional[str] = None
    family: str = 'hartley'
    repeats: int = 3
    threshold_factor: float = 10.0

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command '{self.command}'")
        if self.N is not None and self.N < 1:
            raise UsageError(f"--N must be positive, got {self.N}")
        if not 0.0 < self.epsilon < 1.0:
            raise UsageError(f"--epsilon must lie in (0, 1), got {self.epsilon}")
        if self.nu_range is not None and max(abs(v) for v in self.nu_range) > MAX_ABS_NU:
            raise UsageError(f"--nu must stay within |nu| <= {MAX_ABS_NU}")
        if self.output_format not in FORMATS:
            raise UsageError(f"--format must be one of {FORMATS}")
        if self.seed < 0:
            raise UsageError(f"--seed must be non-negative, got {self.seed}")
        if not self.tol > 0.0:
            raise UsageError(f"--tol must be positive, got {self.tol}")
        if self.family not in FAMILIES:
            raise UsageError(f"--family must be one of {FAMILIES}")
        if self.repeats < 1:
            raise UsageError(f"--repeats must be >= 1, got {self.repeats}")
        if not self.threshold_factor > 0.0:
            raise UsageError(f"--threshold-factor must be positive, got {self.threshold_factor}")

    def as_dict(self) -> Dict[str, Any]:
        return {
            'N': self.N,
            'nu': None if self.nu_range is None else f"{self.nu_range[0]}..{self.nu_range[1]}",
            'epsilon': self.epsilon,
            'seed': self.seed,
            'tol': self.tol,
            'family': self.family,
        }


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog='hartley', description='Finite Hartley transform eigenvector toolkit')
    parser.add_argument('command', choices=COMMANDS)
    parser.add_argument('--N', type=int)
    parser.add_argument('--nu', help="signed index range 'a..b'")
    parser.add_argument('--epsilon', type=float)
    parser.add_argument('--format', dest='output_format', choices=FORMATS)
    parser.add_argument('--out', dest='output_path')
    parser.add_argument('--seed', type=int)
    parser.add_argument('--a', type=float)
    parser.add_argument('--b', type=float)
    parser.add_argument('--x', type=float)
    parser.add_argument('--tol', type=float)
    parser.add_argument('--in', dest='input_path')
    parser.add_argument('--family', choices=FAMILIES, default='hartley')
    parser.add_argument('--repeats', type=int)
    parser.add_argument('--threshold-factor', type=float, default=10.0)
    return parser


def _normalize_argv(argv: Sequence[str]) -> List[str]:
    """Glue '--nu -2..2' into '--nu=-2..2' so argparse does not read -2..2 as a flag"""
    out: List[str] = []
    i = 0
    while i < len(argv):
        token = argv[i]
        if token in _VALUE_FLAGS and i + 1 < len(argv) and argv[i + 1].startswith('-') \
                and not argv[i + 1].startswith('--'):
            out.append(f"{token}={argv[i + 1]}")
            i += 2
            continue
        out.append(token)
        i += 1
    return out


def parse_args(argv: Sequence[str], env: Optional[HartleyConfig] = None) -> RunConfig:
    """Command-line flags override the environment defaults"""
    env = env or HartleyConfig()
    args = build_parser().parse_args(_normalize_argv(argv))

    def pick(value, default):
        return default if value is None else value

    return RunConfig(
        command=args.command,
        N=args.N,
        nu_range=parse_nu_range(args.nu) if args.nu is not None else None,
        epsilon=pick(args.epsilon, env.epsilon),
        output_format=pick(args.output_format, env.output_format),
        output_path=args.output_path,
        seed=pick(args.seed, env.seed),
        a=args.a,
        b=args.b,
        x=args.x,
        tol=pick(args.tol, env.tol),
        input_path=args.input_path,
        family=args.family,
        repeats=pick(args.repeats, env.bench_repeats),
        threshold_factor=args.threshold_factor,
    )


def _plain(value: Any) -> Any:
    """numpy scalars to Python numbers"""
    if isinstance(value, bool):
        return value
    if hasattr(value, 'item'):
        value = value.item()
    if isinstance(value, complex):
        return value.real if value.imag == 0 else str(value)
    return value


def format_value(value: Any) -> str:
    value = _plain(value)
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _json_value(value: Any) -> Any:
    value = _plain(value)
    if isinstance(value, float) and not math.isfinite(value):
        return None
    return value


def write_csv(table: Table, stream: TextIO):
    writer = csv.writer(stream, lineterminator='\n')
    writer.writerow(table.columns)
    for row in table.rows:
        writer.writerow([format_value(v) for v in row])


def write_json(table: Table, config: RunConfig, stream: TextIO):
    block = config.as_dict()
    block.update({k: _json_value(v) for k, v in table.meta.items()})
    document = {
        'command': config.command,
        'config': block,
        'rows': [{c: _json_value(v) for c, v in zip(table.columns, row)} for row in table.rows],
    }
    json.dump(document, stream, indent=2, allow_nan=False)
    stream.write('\n')


def write_table(table: Table, config: RunConfig, stream: TextIO):
    if config.output_format == 'json':
        write_json(table, config, stream)
    else:
        write_csv(table, stream)


def run(config: RunConfig, stdin: Optional[TextIO] = None, stdout: Optional[TextIO] = None,
        stderr: Optional[TextIO] = None) -> int:
    """Execute one command and emit its table; returns the exit status"""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    success, result = CommandRegistry(stdin).execute(config)
    if not success:
        print(f"error: {result}", file=stderr)
        return EXIT_ERROR

    try:
        if config.output_path:
            with open(config.output_path, 'w', encoding='utf-8', newline='') as f:
                write_table(result, config, f)
        else:
            write_table(result, config, stdout)
    except OSError as e:
        print(f"error: cannot write output: {e}", file=stderr)
        return EXIT_ERROR

    return EXIT_OK if result.passed else EXIT_FAILED


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        env = HartleyConfig()
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR
    logging.basicConfig(level=getattr(logging, env.log_level), stream=sys.stderr,
                        format='%(levelname)s %(name)s: %(message)s')

    try:
        config = parse_args(sys.argv[1:] if argv is None else list(argv), env)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return EXIT_ERROR
    logger.debug("running %s", config)
    return run(config)
