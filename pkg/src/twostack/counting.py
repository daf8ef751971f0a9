"""
Exact counting of 2-stack sortable permutations: closed formulas, their
brute-force counterparts, and joint statistic distributions.

All counts are exact Python integers; every formula division is checked to
be remainder-free, so a transcription slip raises instead of silently
truncating.  Brute-force enumerators partition the search space by first
entry and merge per-partition tallies by addition, so results do not
depend on the number of workers.
"""

from __future__ import annotations

import multiprocessing
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from math import comb, factorial

from . import trees
from .permutations import descent_count, rl_maxima, stack_sort

# shared memoized factorial table
_fact = lru_cache(maxsize=None)(factorial)

#: multiset of statistic pairs -> multiplicity
Distribution = Counter


def _exact_div(num: int, den: int) -> int:
    quot, rem = divmod(num, den)
    if rem:
        raise ArithmeticError(f"expected exact division: {num} / {den}")
    return quot


def w_formula(n: int, k: int) -> int:
    """
    The number of 2-stack sortable n-permutations with k runs:

        (n+k-1)! (2n-k)! / (k! (n+1-k)! (2k-1)! (2n-2k+1)!)

    Symmetric under k <-> n+1-k.

    >>> w_formula(3, 2)
    4
    >>> w_formula(4, 2)
    10
    """
    if n < 1 or not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    num = _fact(n + k - 1) * _fact(2 * n - k)
    den = _fact(k) * _fact(n + 1 - k) * _fact(2 * k - 1) * _fact(2 * n - 2 * k + 1)
    return _exact_div(num, den)


def w_total(n: int) -> int:
    """
    The number of 2-stack sortable n-permutations: 2 (3n)! / ((n+1)! (2n+1)!).

    >>> [w_total(n) for n in range(1, 6)]
    [1, 2, 6, 22, 91]
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    return _exact_div(2 * _fact(3 * n), _fact(n + 1) * _fact(2 * n + 1))


def planar_map_count(f: int, pv: int) -> int:
    """
    The number of nonseparable rooted planar maps with f+1 faces and pv+1
    vertices:

        (2f+pv-2)! (2pv+f-2)! / (f! pv! (2f-1)! (2pv-1)!)

    Under f = k, pv = n+1-k this reproduces ``w_formula(n, k)``.  Beware
    the off-by-one lure f = k-1, pv = n-k: it already fails at n=3, k=2
    (it gives 1 where the run count is 4).

    >>> planar_map_count(1, 1)
    1
    >>> planar_map_count(2, 2)
    4
    """
    if f < 1 or pv < 1:
        raise ValueError(f"need f >= 1 and pv >= 1, got f={f}, pv={pv}")
    num = _fact(2 * f + pv - 2) * _fact(2 * pv + f - 2)
    den = _fact(f) * _fact(pv) * _fact(2 * f - 1) * _fact(2 * pv - 1)
    return _exact_div(num, den)


def catalan(n: int) -> int:
    """
    The n-th Catalan number, which counts the 1-stack sortable
    (equivalently 231-avoiding) n-permutations.

    >>> [catalan(n) for n in range(6)]
    [1, 1, 2, 5, 14, 42]
    """
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    return comb(2 * n, n) // (n + 1)


@dataclass(frozen=True)
class CountTable:
    """One row of counts for fixed n, indexed by k."""

    n: int
    row: dict[int, int]

    def total(self) -> int:
        return sum(self.row.values())

    def to_csv(self) -> str:
        lines = ["n,k,count"]
        lines += [f"{self.n},{k},{self.row[k]}" for k in sorted(self.row)]
        return "\n".join(lines) + "\n"

    def to_json_dict(self) -> dict:
        # counts as decimal strings: they outgrow 64-bit consumers quickly
        rows = [{"k": k, "count": str(self.row[k])} for k in sorted(self.row)]
        return {"n": self.n, "rows": rows}


def w_table(n: int) -> CountTable:
    """The full formula row W(n, 1..n) as a :class:`CountTable`."""
    return CountTable(n, {k: w_formula(n, k) for k in range(1, n + 1)})


def _two_sortable_runs(n, first):
    """Tally runs of 2-stack sortable n-permutations starting with ``first``."""
    ident = tuple(range(1, n + 1))
    rest = [v for v in range(1, n + 1) if v != first]
    row: Counter = Counter()
    for tail in permutations(rest):
        p = (first, *tail)
        once = stack_sort(p)
        if once == ident or stack_sort(once) == ident:
            row[1 + sum(p[i] > p[i + 1] for i in range(n - 1))] += 1
    return row


def brute_force_w(n: int, jobs: int = 1) -> CountTable:
    """
    Count 2-stack sortable n-permutations by runs, by exhaustive check of
    all n! permutations.  ``jobs`` > 1 fans the first-entry partitions out
    to worker processes; the merged result is identical for any job count.

    Practical up to n = 11 serially, a little beyond with workers.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    parts = [(n, first) for first in range(1, n + 1)]
    if jobs > 1 and n > 1:
        with multiprocessing.Pool(min(jobs, n)) as pool:
            tallies = pool.starmap(_two_sortable_runs, parts)
    else:
        tallies = [_two_sortable_runs(n, first) for n, first in parts]
    row: Counter = Counter()
    for tally in tallies:
        row.update(tally)
    return CountTable(n, {k: row[k] for k in sorted(row)})


def joint_distribution_perms(n: int) -> Distribution:
    """
    Multiset of (runs, right-to-left maxima) pairs over all 2-stack
    sortable n-permutations.

    >>> sorted(joint_distribution_perms(2).items())
    [((1, 1), 1), ((2, 2), 1)]
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    ident = tuple(range(1, n + 1))
    dist: Counter = Counter()
    for p in permutations(range(1, n + 1)):
        once = stack_sort(p)
        if once == ident or stack_sort(once) == ident:
            dist[(1 + descent_count(p), len(rl_maxima(p)))] += 1
    return dist


def joint_distribution_trees(n: int) -> Distribution:
    """
    Multiset of (leaf count, root label) pairs over all valid trees on
    n+1 nodes.  Matches :func:`joint_distribution_perms` pair for pair.

    >>> sorted(joint_distribution_trees(2).items())
    [((1, 1), 1), ((2, 2), 1)]
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    dist: Counter = Counter()
    for tree in trees.enumerate_trees(n + 1):
        dist[(trees.leaf_count(tree), trees.root_label(tree))] += 1
    return dist
