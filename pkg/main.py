#!/usr/bin/env python3
"""
hartley - finite Hartley transform eigenvector toolkit
Main entry point for the command line
"""

import sys

from cli import main

if __name__ == "__main__":
    sys.exit(main())
