#!/usr/bin/env python3
"""
Configuration for the Hartley eigenvector toolkit
Reads defaults from the environment and optional .env files
"""

import os
from typing import Any, Dict

# Try to import dotenv for .env file support
try:
    from dotenv import load_dotenv
    HAS_DOTENV = True
except ImportError:
    HAS_DOTENV = False

FORMATS = ("csv", "json")
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")

# (variable, default, meaning)
SETTINGS = (
    ('HARTLEY_EPSILON', 1e-16, "Truncation tolerance for the folded sums"),
    ('HARTLEY_TOL', 1e-8, "Residual gate of the verify command"),
    ('HARTLEY_FORMAT', 'csv', "Output format: csv or json"),
    ('HARTLEY_SEED', 0, "Seed for random vectors in bench"),
    ('HARTLEY_BENCH_REPEATS', 3, "Best-of repeats per timing in bench"),
    ('HARTLEY_LOG_LEVEL', 'WARNING', "DEBUG, INFO, WARNING, ERROR or CRITICAL"),
)
DEFAULTS = {name: default for name, default, _ in SETTINGS}


def env_template() -> str:
    """Text of a .env file listing every setting at its default"""
    lines = ["# hartley environment configuration",
             "# Copy this file to .env; command-line flags override these values"]
    for name, default, meaning in SETTINGS:
        lines += ["", f"# {meaning}", f"{name}={default}"]
    return "\n".join(lines) + "\n"


class HartleyConfig:
    """Configuration management for the command-line tools"""

    def __init__(self):
        # Load .env file if available
        self._load_env_file()

        self.epsilon = self._get_float('HARTLEY_EPSILON', DEFAULTS['HARTLEY_EPSILON'])
        self.tol = self._get_float('HARTLEY_TOL', DEFAULTS['HARTLEY_TOL'])
        self.output_format = os.getenv('HARTLEY_FORMAT', DEFAULTS['HARTLEY_FORMAT']).strip().lower()
        self.seed = self._get_int('HARTLEY_SEED', DEFAULTS['HARTLEY_SEED'])
        self.bench_repeats = self._get_int('HARTLEY_BENCH_REPEATS', DEFAULTS['HARTLEY_BENCH_REPEATS'])
        self.log_level = os.getenv('HARTLEY_LOG_LEVEL', DEFAULTS['HARTLEY_LOG_LEVEL']).strip().upper()
        self._validate()

    def _load_env_file(self):
        """Load .env file if available"""
        if HAS_DOTENV:
            # Try to load from current directory
            if os.path.exists('.env'):
                load_dotenv('.env')
            # Also try to load from home directory
            elif os.path.exists(os.path.expanduser('~/.env')):
                load_dotenv(os.path.expanduser('~/.env'))

    @staticmethod
    def _get_float(name: str, default: float) -> float:
        raw = os.getenv(name)
        if raw is None or not raw.strip():
            return default
        try:
            return float(raw)
        except ValueError:
            raise ValueError(f"{name}: expected a number, got '{raw}'")

    @staticmethod
    def _get_int(name: str, default: int) -> int:
        raw = os.getenv(name)
        if raw is None or not raw.strip():
            return default
        try:
            return int(raw)
        except ValueError:
            raise ValueError(f"{name}: expected an integer, got '{raw}'")

    def _validate(self):
        if not 0.0 < self.epsilon < 1.0:
            raise ValueError(f"HARTLEY_EPSILON: must lie in (0, 1), got {self.epsilon}")
        if not self.tol > 0.0:
            raise ValueError(f"HARTLEY_TOL: must be positive, got {self.tol}")
        if self.output_format not in FORMATS:
            raise ValueError(f"HARTLEY_FORMAT: expected one of {FORMATS}, got '{self.output_format}'")
        if self.seed < 0:
            raise ValueError(f"HARTLEY_SEED: must be non-negative, got {self.seed}")
        if self.bench_repeats < 1:
            raise ValueError(f"HARTLEY_BENCH_REPEATS: must be >= 1, got {self.bench_repeats}")
        if self.log_level not in LOG_LEVELS:
            raise ValueError(f"HARTLEY_LOG_LEVEL: expected one of {LOG_LEVELS}, got '{self.log_level}'")

    def as_dict(self) -> Dict[str, Any]:
        return {
            'epsilon': self.epsilon,
            'tol': self.tol,
            'format': self.output_format,
            'seed': self.seed,
            'bench_repeats': self.bench_repeats,
            'log_level': self.log_level,
        }

    def is_valid(self) -> bool:
        """Re-run validation after attributes were changed in place"""
        try:
            self._validate()
            return True
        except ValueError:
            return False
