"""Combinatorial partition counting, independent of the series engine.

Counts (colored) partitions whose parts are restricted by residue class,
by dynamic programming over the allowed colored parts.  A brute-force
recursive enumerator doubles as a small-n oracle for the DP, and ordered
k-tuples of constrained partitions reduce to the colored count with the
color multiplicities scaled by k.

Used to cross-validate series coefficients (25-regular partitions
against f_25/f_1, the two-color count against f_25 R(q^5)/f_1, and the
five-tuple counts behind the alpha/beta inequality).
"""

import time
from dataclasses import dataclass

from .report import FAIL, PASS, VerificationReport


@dataclass(frozen=True)
class PartConstraint:
    """Parts p with p mod modulus = r come in allowed[r] colors (0 = forbidden)."""

    modulus: int
    allowed: tuple

    def __init__(self, modulus, allowed):
        if modulus < 1:
            raise ValueError("modulus must be >= 1")
        table = [0] * modulus
        for residue, colors in dict(allowed).items():
            if colors < 0:
                raise ValueError("color counts must be >= 0")
            table[residue % modulus] = colors
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "allowed", tuple(table))

    def colors_of(self, part):
        return self.allowed[part % self.modulus]


B25 = PartConstraint(25, {r: 1 for r in range(1, 25)})
F_TWO_COLOR = PartConstraint(
    25,
    {r: (2 if r in (10, 15) else 1) for r in range(1, 25) if r not in (5, 20)},
)
PM1_MOD5 = PartConstraint(5, {1: 1, 4: 1})
PM2_MOD5 = PartConstraint(5, {2: 1, 3: 1})


def counts(constraint, limit, tuple_length=1):
    """Counts for 0..limit of ``tuple_length``-tuples of constrained partitions.

    An ordered k-tuple is a single colored partition with every color
    count multiplied by k, so one DP covers both cases.  Each colored
    part is an independent item with unbounded multiplicity.
    """
    dp = [1] + [0] * limit
    for part in range(1, limit + 1):
        k = constraint.colors_of(part) * tuple_length
        for _ in range(k):
            for total in range(part, limit + 1):
                dp[total] += dp[total - part]
    return dp


def count(n, constraint):
    """Number of constrained colored partitions of n."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return counts(constraint, n)[n]


def count_tuples(n, constraint, k):
    """Number of ordered k-tuples of constrained partitions summing to n."""
    if n < 0 or k < 1:
        raise ValueError("need n >= 0 and k >= 1")
    return counts(constraint, n, tuple_length=k)[n]


def enumerate_partitions(n, constraint):
    """All constrained colored partitions of n, by explicit recursion.

    A partition is a tuple of (part, color) pairs, nonincreasing, with
    color indices below the part's color count.  Exponential; intended
    as the small-n oracle for the DP.
    """
    results = []

    def descend(remaining, max_item, chosen):
        if remaining == 0:
            results.append(tuple(chosen))
            return
        for part in range(min(remaining, max_item[0]), 0, -1):
            ncolors = constraint.colors_of(part)
            if not ncolors:
                continue
            top_color = ncolors - 1 if part < max_item[0] else max_item[1]
            for color in range(top_color, -1, -1):
                chosen.append((part, color))
                descend(remaining - part, (part, color), chosen)
                chosen.pop()

    descend(n, (n, constraint.colors_of(n) - 1 if n else 0), [])
    return results


def count_tuples_naive(n, constraint, k):
    """Ordered k-tuples by explicit enumeration of the component sums."""
    per_n = [len(enumerate_partitions(i, constraint)) for i in range(n + 1)]

    def ways(remaining, slots):
        if slots == 1:
            return per_n[remaining]
        return sum(
            per_n[first] * ways(remaining - first, slots - 1)
            for first in range(remaining + 1)
        )

    return ways(n, k)


def check_alpha_beta(limit):
    """Verify the five-tuple inequalities linking the two residue families.

    alpha(n) counts partition 5-tuples with parts = +-1 (mod 5), beta(n)
    the same with parts = +-2 (mod 5).  Checks alpha(n) >= 5*beta(n-1)
    and the weaker alpha(n) > 3*beta(n-1) for 3 <= n <= limit, plus
    beta(n) != 0 for 2 <= n <= limit.
    """
    if limit < 3:
        raise ValueError("limit must be >= 3")
    start = time.perf_counter()
    alpha = counts(PM1_MOD5, limit, tuple_length=5)
    beta = counts(PM2_MOD5, limit, tuple_length=5)
    violation = None
    for n in range(2, limit + 1):
        if beta[n] == 0:
            violation = (n, 0)
            break
        if n >= 3 and not (alpha[n] >= 5 * beta[n - 1] and alpha[n] > 3 * beta[n - 1]):
            violation = (n, alpha[n] - 5 * beta[n - 1])
            break
    return VerificationReport(
        name=f"alpha(n) >= 5*beta(n-1) for 3 <= n <= {limit}",
        status=PASS if violation is None else FAIL,
        certified_order=limit + 1,
        first_violation=violation,
        elapsed=time.perf_counter() - start,
    )
