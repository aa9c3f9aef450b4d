#!/usr/bin/env python3
"""Print the leading coefficients of the crank generating function.

Each row is the Laurent polynomial in ``a`` attached to q^n; by the
counting interpretation the a^m coefficient of row n is the number of
partitions of n with crank m (signed conventions at n <= 1).  The default
21 rows make a handy reference table.

Usage:
    python scripts/coefficient_table.py [COUNT]
"""

import sys

from qdissect.identities import crank_coefficients


def main() -> int:
    count = int(sys.argv[1]) if len(sys.argv) > 1 else 21
    polys = crank_coefficients(count - 1)
    width = len(str(count - 1))
    for n, poly in enumerate(polys):
        print(f"q^{n:<{width}}  {poly}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
