#!/usr/bin/env python3

# SPDX-License-Identifier: CC-BY-NC-4.0

"""
Command-line entry point.

    ./regbound_cli.py cohomology --variety palatini --t 0 --i 1 --range 0..6
    ./regbound_cli.py verify-bound --setting threefold-p5 --format json
"""

from regbound.cli import main

if __name__ == "__main__":
    main()
