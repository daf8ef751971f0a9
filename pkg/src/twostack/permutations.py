"""
Permutations of {1, ..., n} in one-line notation, and the stack-sorting
operator acting on them.

A permutation is handled as a tuple of the integers 1..n, each appearing
once; the empty tuple is the (unique) permutation of length 0.  All
functions are pure and all returned values are immutable, so they are safe
to share across workers.

The text format accepted by :func:`parse_permutation` is base-10 entries
separated by single spaces or commas, e.g. ``"3 5 2 4 1"`` or
``"3,5,2,4,1"``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence


def as_permutation(entries: Iterable[int]) -> tuple[int, ...]:
    """
    Freeze ``entries`` into a tuple, checking it is a permutation of 1..n.

    Repeats, gaps and non-positive values are all rejected.

    >>> as_permutation([3, 1, 2])
    (3, 1, 2)
    >>> as_permutation([1, 3])
    Traceback (most recent call last):
        ...
    ValueError: not a permutation of 1..2: (1, 3)
    """
    perm = tuple(entries)
    if sorted(perm) != list(range(1, len(perm) + 1)):
        raise ValueError(f"not a permutation of 1..{len(perm)}: {perm}")
    return perm


def is_permutation(entries: Sequence[int]) -> bool:
    """Check that ``entries`` is a rearrangement of 1..n with no repeats."""
    return sorted(entries) == list(range(1, len(entries) + 1))


def parse_permutation(text: str) -> tuple[int, ...]:
    """
    Parse the space- or comma-separated text form of a permutation.

    >>> parse_permutation("3 5 2 4 1")
    (3, 5, 2, 4, 1)
    >>> parse_permutation("3,5,2,4,1")
    (3, 5, 2, 4, 1)
    """
    tokens = text.replace(",", " ").split()
    try:
        entries = [int(tok) for tok in tokens]
    except ValueError:
        raise ValueError(f"not a sequence of integers: {text!r}") from None
    return as_permutation(entries)


def format_permutation(perm: Sequence[int]) -> str:
    """Render a permutation in the space-separated text form."""
    return " ".join(str(x) for x in perm)


def identity(n: int) -> tuple[int, ...]:
    """The identity permutation 1 2 ... n."""
    return tuple(range(1, n + 1))


def is_identity(perm: Sequence[int]) -> bool:
    return all(x == i for i, x in enumerate(perm, start=1))


def stack_sort(perm: Sequence[int]) -> tuple[int, ...]:
    """
    One pass of stack sorting.

    Entries are pushed onto a stack in input order; before pushing, any
    stacked entries smaller than the incoming one are popped to the output,
    and at the end the stack is flushed.  Equivalently, writing the input
    as L n R around its largest entry n, the output is
    ``stack_sort(L) stack_sort(R) n``.  The last entry of the output is
    always n, and the identity is a fixed point.

    >>> stack_sort((3, 5, 2, 4, 1))
    (3, 2, 1, 4, 5)
    >>> stack_sort((2, 3, 1))
    (2, 1, 3)
    >>> stack_sort(())
    ()
    """
    out: list[int] = []
    stack: list[int] = []
    for x in perm:
        while stack and stack[-1] < x:
            out.append(stack.pop())
        stack.append(x)
    while stack:
        out.append(stack.pop())
    return tuple(out)


def is_t_stack_sortable(perm: Sequence[int], t: int) -> bool:
    """
    True iff ``t`` passes of :func:`stack_sort` take ``perm`` to the
    identity.  Since the identity is a fixed point, sortability in t passes
    implies sortability in any larger number of passes.

    >>> is_t_stack_sortable((3, 5, 2, 4, 1), 2)
    True
    >>> is_t_stack_sortable((3, 2, 4, 1), 2)
    False
    """
    if t < 0:
        raise ValueError("number of passes must be >= 0")
    cur = tuple(perm)
    for _ in range(t):
        if is_identity(cur):
            return True
        cur = stack_sort(cur)
    return is_identity(cur)


def sorting_passes(perm: Sequence[int]) -> int:
    """
    The minimal number of stack-sorting passes needed to reach the
    identity.  At most n - 1 passes are ever required.

    >>> sorting_passes((3, 5, 2, 4, 1))
    2
    >>> sorting_passes((1, 2, 3))
    0
    """
    cur = tuple(perm)
    passes = 0
    while not is_identity(cur):
        cur = stack_sort(cur)
        passes += 1
    return passes


def contains_pattern(perm: Sequence[int], patt: Sequence[int]) -> bool:
    """
    True iff ``perm`` has a subsequence in the same relative order as the
    pattern ``patt``: indices i_1 < ... < i_k with perm[i_a] < perm[i_b]
    exactly when patt[a] < patt[b].

    Naive backtracking over index choices; fine for the desk-scale lengths
    this library targets.

    >>> contains_pattern((3, 5, 2, 4, 1), (2, 3, 1))
    True
    >>> contains_pattern((1, 2, 3), (2, 1))
    False
    """
    k = len(patt)
    if k < 1:
        raise ValueError("pattern must be nonempty")
    n = len(perm)
    if k > n:
        return False

    chosen: list[int] = []

    def extend(start: int) -> bool:
        j = len(chosen)
        if j == k:
            return True
        for i in range(start, n - (k - j) + 1):
            v = perm[i]
            if all((v > w) == (patt[j] > patt[a]) for a, w in enumerate(chosen)):
                chosen.append(v)
                if extend(i + 1):
                    return True
                chosen.pop()
        return False

    return extend(0)


def descent_count(perm: Sequence[int]) -> int:
    """Number of positions i with perm[i] > perm[i+1]."""
    return sum(perm[i] > perm[i + 1] for i in range(len(perm) - 1))


def run_count(perm: Sequence[int]) -> int:
    """Number of maximal increasing blocks; equals descents + 1 for n >= 1."""
    if not perm:
        raise ValueError("runs are undefined for the empty permutation")
    return descent_count(perm) + 1


def rl_maxima(perm: Sequence[int]) -> tuple[int, ...]:
    """
    The right-to-left maxima of ``perm`` (entries larger than everything
    after them), in decreasing order a_1 > a_2 > ... > a_t.  For n >= 1,
    a_1 = n and a_t is the last entry.

    >>> rl_maxima((3, 1, 2))
    (3, 2)
    >>> rl_maxima((4, 1, 2, 3))
    (4, 3)
    """
    out: list[int] = []
    best = 0
    for x in reversed(perm):
        if x > best:
            out.append(x)
            best = x
    out.reverse()
    return tuple(out)


def perm_type(perm: Sequence[int]) -> int:
    """
    Classify a nonempty permutation as type 1 or type 2.

    Writing perm as s_1 a_1 s_2 a_2 ... s_t a_t, with the a_i its
    right-to-left maxima and the s_i the strings between them, the
    permutation is of type 1 when the entry a_t - 1 lies inside the final
    string s_t, and of type 2 otherwise.  When a_t = 1 there is no entry
    a_t - 1, so the permutation is of type 2; in particular the
    1-permutation is of type 2.

    >>> perm_type((3, 1, 2))
    1
    >>> perm_type((1, 3, 2))
    2
    >>> perm_type((1,))
    2
    """
    if not perm:
        raise ValueError("type is undefined for the empty permutation")
    maxima = rl_maxima(perm)
    last = maxima[-1]
    if last == 1:
        return 2
    pos = perm.index(last - 1)
    lower = perm.index(maxima[-2]) if len(maxima) >= 2 else -1
    return 1 if lower < pos < len(perm) - 1 else 2


@dataclass(frozen=True)
class Statistics:
    """Descent/run/right-to-left-maximum statistics of one permutation."""

    descents: int
    ascents: int
    runs: int
    rl_maxima: tuple[int, ...]
    ptype: int  # 1 or 2


def statistics(perm: Sequence[int]) -> Statistics:
    """
    All the statistics of a nonempty permutation in one bundle.

    >>> statistics((3, 1, 2))
    Statistics(descents=1, ascents=1, runs=2, rl_maxima=(3, 2), ptype=1)
    """
    if not perm:
        raise ValueError("statistics are undefined for the empty permutation")
    d = descent_count(perm)
    return Statistics(
        descents=d,
        ascents=len(perm) - 1 - d,
        runs=d + 1,
        rl_maxima=rl_maxima(perm),
        ptype=perm_type(perm),
    )


class MarkedPermutation(NamedTuple):
    """A permutation with one right-to-left maximum singled out.

    ``mark_rank`` counts maxima from the largest, so rank 1 is the entry n.
    """

    perm: tuple[int, ...]
    mark_rank: int


def reduce_type1(perm: Sequence[int]) -> MarkedPermutation:
    """
    Shrink a type-1 permutation of length n to an (n-1)-permutation with a
    marked right-to-left maximum: delete the final entry a_t, decrement
    every larger entry by 1, and mark the entry a_t - 1, which has become a
    right-to-left maximum of the result.  The marked entry turns out to sit
    at rank rl(perm) in the new list of maxima.

    The number of descents is preserved and the number of right-to-left
    maxima never decreases.  Restricted to 2-stack sortable inputs this map
    is a bijection onto marked 2-stack sortable (n-1)-permutations, which
    is what makes it useful for counting; the map itself is total on all
    type-1 permutations.

    >>> reduce_type1((3, 1, 2))
    MarkedPermutation(perm=(2, 1), mark_rank=2)
    >>> reduce_type1((2, 1, 3))
    MarkedPermutation(perm=(2, 1), mark_rank=1)
    """
    perm = tuple(perm)
    if perm_type(perm) != 1:
        raise ValueError(f"not a type-1 permutation: {perm}")
    last = perm[-1]
    shrunk = tuple(x - 1 if x > last else x for x in perm[:-1])
    rank = rl_maxima(shrunk).index(last - 1) + 1
    return MarkedPermutation(shrunk, rank)


def restore_type1(marked: tuple[Sequence[int], int]) -> tuple[int, ...]:
    """
    Inverse of :func:`reduce_type1`: append an entry one larger than the
    marked right-to-left maximum, incrementing all larger entries by one.
    The result is always of type 1.

    >>> restore_type1(MarkedPermutation((2, 1), 2))
    (3, 1, 2)
    >>> restore_type1(((1,), 1))
    (1, 2)
    """
    perm, rank = marked
    perm = tuple(perm)
    maxima = rl_maxima(perm)
    if not 1 <= rank <= len(maxima):
        raise ValueError(
            f"mark rank {rank} out of range: {perm} has {len(maxima)} "
            "right-to-left maxima"
        )
    value = maxima[rank - 1]
    return tuple(x + 1 if x > value else x for x in perm) + (value + 1,)
