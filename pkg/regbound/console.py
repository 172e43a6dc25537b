# SPDX-License-Identifier: CC-BY-NC-4.0

"""
Colored diagnostics on stderr.

Standard output is reserved for reports, so everything printed here goes to
stderr.
"""

import sys

RED = "\033[91m"
GREEN = "\033[92m"
YELLOW = "\033[93m"
BLUE = "\033[94m"
RESET = "\033[0m"


def say(message: str, color: str = BLUE, verbose: bool = True) -> None:
    if verbose:
        print(f"{color}{message}{RESET}", file=sys.stderr)


def warn(message: str) -> None:
    print(f"{YELLOW}Warning: {message}{RESET}", file=sys.stderr)


def fail(message: str) -> None:
    print(f"{RED}Error: {message}{RESET}", file=sys.stderr)


def success(message: str, verbose: bool = True) -> None:
    say(message, GREEN, verbose)
