#!/usr/bin/env python3
"""
Command registry and implementations for the hartley command line
Every command turns a RunConfig into a Table of rows
"""

import logging
import math
import re
import sys
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Any, Callable, Dict, List, Optional, TextIO, Tuple, Union

import numpy as np
import psutil

from mehta_eigen import (fourier_family, gaussian_susy, gaussian_susy_hartley, hartley_family,
                         poisson_check, truncation_bound, verify_fourier_eigen)
from spectral_analysis import dht_spectrum, eigenspace_rank_bound, gram_rank, residual_table
from transform import as_real_sequence, benchmark_transforms, dht

if TYPE_CHECKING:
    from cli import RunConfig

logger = logging.getLogger(__name__)

POISSON_AB = (0.5, 1.0, 2.0)
POISSON_X = (0.0, 0.3, -1.7)
BENCH_EXPONENTS = range(4, 15)


@dataclass
class Table:
    """Rows produced by a command; passed is False when a verification gate failed"""
    columns: List[str]
    rows: List[List[Any]]
    passed: bool = True
    meta: Dict[str, Any] = field(default_factory=dict)


def _parse_real(token: str) -> Optional[float]:
    try:
        return float(token)
    except ValueError:
        return None


def read_vector(text: str) -> np.ndarray:
    """Parse comma- or whitespace-separated reals; a first line with no numeric token is a header"""
    values: List[float] = []
    first = True
    for line in text.splitlines():
        tokens = [t for t in re.split(r"[,\s]+", line.strip()) if t]
        if not tokens:
            continue
        parsed = [_parse_real(t) for t in tokens]
        if any(p is None for p in parsed):
            if first and all(p is None for p in parsed):
                first = False
                continue
            raise ValueError(f"malformed input vector near '{line.strip()}'")
        first = False
        values.extend(parsed)
    if not values:
        raise ValueError("input vector is empty")
    return as_real_sequence(values, "input vector")


class CommandRegistry:
    """Registry for managing and executing the numerical commands"""

    def __init__(self, stdin: Optional[TextIO] = None):
        self.stdin = stdin if stdin is not None else sys.stdin
        self.commands: Dict[str, Callable[["RunConfig"], Table]] = {
            'dht': self._cmd_dht,
            'eig': self._cmd_eig,
            'verify': self._cmd_verify,
            'poisson': self._cmd_poisson,
            'spectrum': self._cmd_spectrum,
            'gram': self._cmd_gram,
            'bench': self._cmd_bench,
        }

    def execute(self, config: "RunConfig") -> Tuple[bool, Union[Table, str]]:
        """Execute a command, returning (True, table) or (False, one-line diagnostic)"""
        command = config.command
        if command not in self.commands:
            return False, f"Command '{command}' not found. Available: {', '.join(self.commands)}"

        try:
            return True, self.commands[command](config)
        except Exception as e:
            logger.debug("command %s failed", command, exc_info=True)
            return False, f"{command}: {e}"

    @staticmethod
    def _require_n(config: "RunConfig") -> int:
        if config.N is None:
            raise ValueError("--N is required")
        return config.N

    @staticmethod
    def _indices(config: "RunConfig", default: Tuple[int, int]) -> List[int]:
        lo, hi = config.nu_range if config.nu_range is not None else default
        return list(range(lo, hi + 1))

    def _read_input(self, config: "RunConfig") -> str:
        if config.input_path:
            with open(config.input_path, 'r', encoding='utf-8') as f:
                return f.read()
        return self.stdin.read()

    def _cmd_dht(self, config: "RunConfig") -> Table:
        """Finite Hartley transform of an input vector"""
        f = read_vector(self._read_input(config))
        if config.N is not None and config.N != f.size:
            raise ValueError(f"--N {config.N} does not match input length {f.size}")
        return Table(['value'], [[v] for v in dht(f)])

    def _cmd_eig(self, config: "RunConfig") -> Table:
        """Mehta eigenvector family, one column per index"""
        N = self._require_n(config)
        indices = self._indices(config, (-2, 2))
        if config.family == 'fourier':
            if min(indices) < 0:
                raise ValueError("Fourier family indices must be non-negative")
            family = fourier_family(N, indices, config.epsilon)
            prefix = 'F'
        else:
            family = hartley_family(N, indices, config.epsilon)
            prefix = 'G'
        columns = ['r'] + [f"{prefix}_{nu}" for nu in family.indices]
        rows = [[r] + list(family.vectors[r]) for r in range(N)]
        return Table(columns, rows, meta={'K': family.policy.K})

    def _cmd_verify(self, config: "RunConfig") -> Table:
        """Eigenrelation residuals; the table fails when any residual reaches tol"""
        N = self._require_n(config)
        indices = self._indices(config, (-2, 2))
        if config.family == 'fourier':
            if min(indices) < 0:
                raise ValueError("Fourier family indices must be non-negative")
            policy = truncation_bound(N, (max(indices) + 1) // 2, config.epsilon)
            reports = [verify_fourier_eigen(N, n, policy) for n in indices]
            columns = ['n', 'lambda_re', 'lambda_im', 'residual', 'norm']
            rows = [[r.index, r.eigenvalue.real, r.eigenvalue.imag, r.residual, r.norm] for r in reports]
        else:
            reports = residual_table(N, indices, config.epsilon)
            columns = ['nu', 'lambda', 'residual', 'norm']
            rows = [[r.index, int(r.eigenvalue.real), r.residual, r.norm] for r in reports]
        passed = all(r.passed(config.tol) for r in reports)
        if not passed:
            logger.warning("verify: residuals above tol=%g for N=%d", config.tol, N)
        return Table(columns, rows, passed=passed)

    def _cmd_poisson(self, config: "RunConfig") -> Table:
        """Both sides of the Hartley-Poisson formula on an (a, b, x) grid"""
        a_values = (config.a,) if config.a is not None else POISSON_AB
        b_values = (config.b,) if config.b is not None else POISSON_AB
        x_values = (config.x,) if config.x is not None else POISSON_X
        rows = []
        for nu in self._indices(config, (0, 0)):
            f, Hf = gaussian_susy(nu), gaussian_susy_hartley(nu)
            for a in a_values:
                for b in b_values:
                    for x in x_values:
                        lhs, rhs = poisson_check(f, Hf, a, b, x)
                        rows.append([nu, a, b, x, lhs, rhs, abs(lhs - rhs)])
        return Table(['nu', 'a', 'b', 'x', 'lhs', 'rhs', 'diff'], rows)

    def _cmd_spectrum(self, config: "RunConfig") -> Table:
        """Multiplicities of the eigenvalues +1 and -1"""
        N = self._require_n(config)
        plus, minus = dht_spectrum(N)
        return Table(['N', 'mult_plus', 'mult_minus'], [[N, plus, minus]])

    def _cmd_gram(self, config: "RunConfig") -> Table:
        """Gram-matrix rank of a Mehta family"""
        N = self._require_n(config)
        indices = self._indices(config, (0, N - 1))
        if config.family == 'fourier':
            if min(indices) < 0:
                raise ValueError("Fourier family indices must be non-negative")
            family = fourier_family(N, indices, config.epsilon)
        else:
            family = hartley_family(N, indices, config.epsilon)
        report = gram_rank(family, config.threshold_factor)
        row = [report.size, report.rank, eigenspace_rank_bound(family), report.rank_threshold,
               report.min_angle_deg, float(report.gram_eigenvalues[0]), float(report.gram_eigenvalues[-1])]
        return Table(['size', 'rank', 'rank_bound', 'rank_threshold', 'min_angle_deg',
                      'lambda_max', 'lambda_min'], [row])

    def _cmd_bench(self, config: "RunConfig") -> Table:
        """Naive vs fast transform timings"""
        exponents = BENCH_EXPONENTS
        if config.N is not None:
            top = int(math.log2(config.N))
            if 1 << top != config.N:
                raise ValueError(f"--N {config.N} is not a power of two")
            exponents = range(min(BENCH_EXPONENTS.start, top), top + 1)
        machine = self._machine_info()
        logger.info("bench on %s logical CPUs at %s MHz", machine['cpu_count'], machine['cpu_mhz'])
        rows = benchmark_transforms(exponents, config.seed, config.repeats)
        return Table(['N', 't_naive_ns', 't_fast_ns'], [list(r) for r in rows], meta=machine)

    @staticmethod
    def _machine_info() -> Dict[str, Any]:
        info: Dict[str, Any] = {'cpu_count': psutil.cpu_count(), 'cpu_mhz': None}
        try:
            freq = psutil.cpu_freq()
            if freq:
                info['cpu_mhz'] = round(freq.current, 2)
        except Exception:
            pass
        return info
