"""
Named verification suites: each one replays a counting or bijection claim
against an independent brute-force route and reports every comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from math import factorial
from typing import Callable

from . import counting, trees
from .permutations import (
    MarkedPermutation,
    contains_pattern,
    descent_count,
    is_t_stack_sortable,
    perm_type,
    reduce_type1,
    restore_type1,
    rl_maxima,
    stack_sort,
)

SUITE_DEFAULTS = {
    "catalan": 9,
    "formula-vs-brute": 9,
    "tree-vs-perm": 8,
    "joint-rl": 7,
    "symmetry": 200,
    "unimodality": 200,
    "map-substitution": 50,
    "lemma1": 8,
    "total": 9,
}


@dataclass(frozen=True)
class Check:
    label: str
    expected: object
    actual: object

    @property
    def ok(self) -> bool:
        return self.expected == self.actual


@dataclass
class SuiteReport:
    suite: str
    max_n: int
    checks: list[Check]

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]

    @property
    def passed(self) -> bool:
        return not self.failures


def _suite_total(max_n: int, jobs: int) -> list[Check]:
    return [
        Check(
            f"2-stack sortable total, n={n}",
            counting.w_total(n),
            counting.brute_force_w(n, jobs).total(),
        )
        for n in range(1, max_n + 1)
    ]


def _suite_formula_vs_brute(max_n: int, jobs: int) -> list[Check]:
    checks = []
    for n in range(1, max_n + 1):
        table = counting.brute_force_w(n, jobs)
        checks += [
            Check(f"W({n},{k})", counting.w_formula(n, k), table.row.get(k, 0))
            for k in range(1, n + 1)
        ]
    return checks


def _suite_tree_vs_perm(max_n: int, jobs: int) -> list[Check]:
    checks = []
    for n in range(1, max_n + 1):
        for k in range(1, n + 1):
            checks.append(
                Check(
                    f"T({n},{k}) vs W({n},{k})",
                    counting.w_formula(n, k),
                    trees.count_trees(n, k),
                )
            )
    for n in range(1, min(max_n, 6) + 1):
        for k in range(1, n + 1):
            enumerated = sum(1 for _ in trees.enumerate_trees(n + 1, k))
            checks.append(
                Check(
                    f"T({n},{k}) recursion vs enumeration",
                    trees.count_trees(n, k),
                    enumerated,
                )
            )
    return checks


def _suite_joint_rl(max_n: int, jobs: int) -> list[Check]:
    return [
        Check(
            f"(runs, rl) over permutations vs (leaves, root) over trees, n={n}",
            sorted(counting.joint_distribution_perms(n).items()),
            sorted(counting.joint_distribution_trees(n).items()),
        )
        for n in range(1, max_n + 1)
    ]


def _suite_symmetry(max_n: int, jobs: int) -> list[Check]:
    checks = []
    for n in range(1, max_n + 1):
        bad = [
            k
            for k in range(1, n + 1)
            if counting.w_formula(n, k) != counting.w_formula(n, n + 1 - k)
        ]
        checks.append(Check(f"W({n},k) = W({n},{n}+1-k) for all k", [], bad))
    for n in range(1, min(max_n, 8) + 1):
        row = counting.brute_force_w(n, jobs).row
        bad = [k for k in range(1, n + 1) if row.get(k, 0) != row.get(n + 1 - k, 0)]
        checks.append(Check(f"brute descent/ascent symmetry, n={n}", [], bad))
    return checks


def _suite_unimodality(max_n: int, jobs: int) -> list[Check]:
    checks = []
    for n in range(1, max_n + 1):
        # W(n,k) > W(n,k-1) exactly while 2k <= n+1; exact integer compares
        bad = [
            k
            for k in range(2, n + 1)
            if (counting.w_formula(n, k) > counting.w_formula(n, k - 1))
            != (2 * k <= n + 1)
        ]
        checks.append(Check(f"W({n},k)/W({n},k-1) > 1 iff 2k <= {n}+1", [], bad))
        if n % 2 == 0 and n >= 2:
            checks.append(
                Check(
                    f"two-term peak W({n},{n // 2}) = W({n},{n // 2 + 1})",
                    counting.w_formula(n, n // 2),
                    counting.w_formula(n, n // 2 + 1),
                )
            )
    return checks


def _suite_map_substitution(max_n: int, jobs: int) -> list[Check]:
    checks = [
        Check(
            "shifted substitution f=k-1, pv=n-k disagrees at n=3, k=2",
            True,
            counting.planar_map_count(1, 1) != counting.w_formula(3, 2),
        )
    ]
    for n in range(1, max_n + 1):
        checks += [
            Check(
                f"W({n},{k}) = maps(f={k}, pv={n + 1 - k})",
                counting.w_formula(n, k),
                counting.planar_map_count(k, n + 1 - k),
            )
            for k in range(1, n + 1)
        ]
    return checks


def _suite_catalan(max_n: int, jobs: int) -> list[Check]:
    checks = []
    for n in range(1, max_n + 1):
        one_pass = 0
        avoiders = 0
        disagreements = 0
        ident = tuple(range(1, n + 1))
        for p in permutations(range(1, n + 1)):
            sortable = stack_sort(p) == ident
            avoids = not contains_pattern(p, (2, 3, 1))
            one_pass += sortable
            avoiders += avoids
            disagreements += sortable != avoids
        checks.append(Check(f"1-stack sortable count, n={n}", counting.catalan(n), one_pass))
        checks.append(Check(f"231-avoider count, n={n}", counting.catalan(n), avoiders))
        checks.append(
            Check(f"1-stack sortable <=> 231-avoiding, n={n} disagreements", 0, disagreements)
        )
    return checks


def _suite_lemma1(max_n: int, jobs: int) -> list[Check]:
    checks = []
    for n in range(2, max_n + 1):
        type1 = []
        type2 = 0
        for p in permutations(range(1, n + 1)):
            if perm_type(p) == 1:
                type1.append(p)
            else:
                type2 += 1
        checks.append(
            Check(f"type-1/type-2 partition, n={n}", factorial(n), len(type1) + type2)
        )

        bad_round = sum(restore_type1(reduce_type1(p)) != p for p in type1)
        bad_desc = sum(
            descent_count(reduce_type1(p).perm) != descent_count(p) for p in type1
        )
        bad_rl = sum(
            len(rl_maxima(reduce_type1(p).perm)) < len(rl_maxima(p)) for p in type1
        )
        checks.append(Check(f"restore(reduce(p)) = p on type-1, n={n}", 0, bad_round))
        checks.append(Check(f"descents preserved on type-1, n={n}", 0, bad_desc))
        checks.append(Check(f"rl maxima never decrease on type-1, n={n}", 0, bad_rl))

        sortable_type1 = [p for p in type1 if is_t_stack_sortable(p, 2)]
        image = {reduce_type1(p) for p in sortable_type1}
        target = {
            MarkedPermutation(q, r)
            for q in permutations(range(1, n))
            if is_t_stack_sortable(q, 2)
            for r in range(1, len(rl_maxima(q)) + 1)
        }
        checks.append(Check(f"injective on sortable type-1, n={n}", len(sortable_type1), len(image)))
        checks.append(Check(f"image is all marked sortable, n={n}", 0, len(image ^ target)))

        marked = [
            MarkedPermutation(q, r)
            for q in permutations(range(1, n))
            for r in range(1, len(rl_maxima(q)) + 1)
        ]
        bad_reverse = sum(reduce_type1(restore_type1(mp)) != mp for mp in marked)
        checks.append(Check(f"reduce(restore(mp)) = mp, length {n - 1}", 0, bad_reverse))
    return checks


_SUITES: dict[str, Callable[[int, int], list[Check]]] = {
    "catalan": _suite_catalan,
    "formula-vs-brute": _suite_formula_vs_brute,
    "tree-vs-perm": _suite_tree_vs_perm,
    "joint-rl": _suite_joint_rl,
    "symmetry": _suite_symmetry,
    "unimodality": _suite_unimodality,
    "map-substitution": _suite_map_substitution,
    "lemma1": _suite_lemma1,
    "total": _suite_total,
}

SUITE_NAMES = tuple(_SUITES)


def run_suite(name: str, max_n: int | None = None, jobs: int = 1) -> SuiteReport:
    """
    Run one named suite up to ``max_n`` (each suite's customary bound when
    omitted) and return the full comparison report.
    """
    if name not in _SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")
    bound = SUITE_DEFAULTS[name] if max_n is None else max_n
    if bound < 1:
        raise ValueError(f"max_n must be >= 1, got {bound}")
    return SuiteReport(name, bound, _SUITES[name](bound, jobs))
