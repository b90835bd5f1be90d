#!/usr/bin/env python3
"""
arithperm - counting permutations under arithmetic constraints
Exact counts of permutations of [n] whose pairs (j, pi(j)) satisfy lcm,
divisibility or coprimality conditions, plus the constants of their bounds.
"""

import sys

from src.cli.app import main

if __name__ == "__main__":
    sys.exit(main())
