"""Exact worst-case and average-case exchange counts.

The worst case is the cell sum of maximal South-East distances, with a
constructive witness tableau that attains it.  The average case comes in two
independent exact routes: brute force over all n! fillings, and the
harmonic-number formula driven by fixed-entry standard tableau counts.
"""

import itertools
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from math import factorial

from .nps import DEFAULT_ENUMERATION_CUTOFF, Tableau, shape_ops
from .partitions import (
    Partition,
    harmonic,
    reverse_lex_cells,
    skew_syt_count,
    subpartitions,
    subpartitions_of_size,
    syt_count,
)

__all__ = [
    "w_distance",
    "worst_case",
    "worst_case_witness",
    "WitnessConstructionError",
    "exchange_stats",
    "average_case_bruteforce",
    "max_case_bruteforce",
    "expected_hook_abs",
    "f_fixed_entry",
    "average_case_chicago",
]


def w_distance(shape, cell):
    """Maximal Manhattan distance from `cell` to a cell weakly South-East of
    it; 0 exactly on corners."""
    if cell not in shape:
        raise ValueError(f"cell {cell} outside shape {shape}")
    i, j = cell
    best = 0
    for ci, cj in shape.corners():
        if ci >= i and cj >= j:
            best = max(best, ci - i + cj - j)
    return best


def worst_case(shape):
    """Exact worst-case exchange count: the sum of w over all cells."""
    corners = shape.corners()
    total = 0
    for i in range(1, len(shape.parts) + 1):
        for j in range(1, shape.parts[i - 1] + 1):
            total += max(ci - i + cj - j for ci, cj in corners if ci >= i and cj >= j)
    return total


class WitnessConstructionError(RuntimeError):
    """The rectangle-filling construction could not produce a valid witness."""


def worst_case_witness(shape):
    """Build a tableau whose sort performs exactly worst_case(shape) exchanges.

    Repeatedly take the undefined cell of maximal hook length (starting at
    (1,1)), pick a farthest South-East corner, and fill the spanned rectangle
    with the next block of consecutive integers in processing order.  The
    result is verified against worst_case; a mismatch raises.
    """
    if not shape.parts:
        raise ValueError("cannot build a witness for the empty shape")
    n = shape.size
    values = {}
    next_value = 1
    corners = shape.corners()
    while next_value <= n:
        undefined = [c for c in shape.cells() if c not in values]
        max_hook = max(shape.hook(i, j) for i, j in undefined)
        candidates = [c for c in undefined if shape.hook(*c) == max_hook]
        anchor = min(candidates, key=lambda c: (c[1], c[0]))
        ai, aj = anchor
        dist = w_distance(shape, anchor)
        choices = sorted(
            (c for c in corners
             if c[0] >= ai and c[1] >= aj and (c[0] - ai) + (c[1] - aj) == dist),
            key=lambda c: c[0],
        )
        rect = None
        for ci, cj in choices:
            cells = [(i, j) for i in range(ai, ci + 1) for j in range(aj, cj + 1)]
            if all(c in shape and c not in values for c in cells):
                rect = cells
                break
        if rect is None:
            raise WitnessConstructionError(
                f"no admissible corner for anchor {anchor} of {shape}")
        rect_order = [c for c in reverse_lex_cells(shape) if c in set(rect)]
        for c in rect_order:
            values[c] = next_value
            next_value += 1
    rows = [tuple(values[(i, j)] for j in range(1, shape.parts[i - 1] + 1))
            for i in range(1, len(shape.parts) + 1)]
    witness = Tableau(shape, rows)
    ops = shape_ops(shape)
    achieved = ops.sort_board(ops.board_of(witness))
    expected = worst_case(shape)
    if achieved != expected:
        raise WitnessConstructionError(
            f"witness for {shape} achieves {achieved} exchanges, expected {expected}")
    return witness


def _stats_fixed_first(parts, first):
    """(sum, max) of exchange counts over fillings whose first processed cell
    holds `first`; the remaining values run in lexicographic order."""
    shape = Partition(parts)
    ops = shape_ops(shape)
    n = shape.size
    board = ops.new_board()
    order = ops.order
    rest = [v for v in range(1, n + 1) if v != first]
    total = 0
    best = 0
    sort = ops.sort_board
    first_cell = order[0]
    tail = order[1:]
    for perm in itertools.permutations(rest):
        board[first_cell] = first
        for t, v in zip(tail, perm):
            board[t] = v
        count = sort(board)
        total += count
        if count > best:
            best = count
    return total, best


def exchange_stats(shape, cutoff=DEFAULT_ENUMERATION_CUTOFF, jobs=1):
    """(sum, max) of exchange counts over all n! fillings of the shape.

    With jobs > 1 the enumeration is partitioned by the value at the first
    processed cell; the exact associative reduction makes the result
    independent of the worker count.
    """
    n = shape.size
    if n > cutoff:
        raise ValueError(f"size {n} exceeds enumeration cutoff {cutoff}")
    if n == 0:
        return 0, 0
    if jobs > 1 and n >= 4:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_stats_fixed_first,
                                    [shape.parts] * n, range(1, n + 1)))
        return sum(t for t, _ in results), max(b for _, b in results)
    ops = shape_ops(shape)
    board = ops.new_board()
    fill = ops.fill
    sort = ops.sort_board
    total = 0
    best = 0
    for perm in itertools.permutations(range(1, n + 1)):
        fill(board, perm)
        count = sort(board)
        total += count
        if count > best:
            best = count
    return total, best


def average_case_bruteforce(shape, cutoff=DEFAULT_ENUMERATION_CUTOFF, jobs=1):
    """Average exchange count over all fillings, as an exact Fraction."""
    total, _ = exchange_stats(shape, cutoff=cutoff, jobs=jobs)
    return Fraction(total, factorial(shape.size)) if shape.size else Fraction(0)


def max_case_bruteforce(shape, cutoff=DEFAULT_ENUMERATION_CUTOFF, jobs=1):
    """Maximal exchange count over all fillings, by exhaustive search."""
    _, best = exchange_stats(shape, cutoff=cutoff, jobs=jobs)
    return best


def expected_hook_abs(shape):
    """Mean of sum |H(i,j)| over uniformly random hook tableaux, via the
    per-cell closed form (arm^2 + arm + leg^2 + leg) / (2 hook)."""
    total = Fraction(0)
    for i, j in shape.cells():
        arm = shape.arm(i, j)
        leg = shape.leg(i, j)
        total += Fraction(arm * arm + arm + leg * leg + leg, 2 * (arm + leg + 1))
    return total


def f_fixed_entry(shape, cell, k):
    """Number of standard tableaux of `shape` whose cell holds the entry k.

    Sums, over subdiagrams mu of size k having `cell` as a corner, the product
    of standard counts of mu minus the corner and of the skew shape above mu.
    """
    if cell not in shape:
        raise ValueError(f"cell {cell} outside shape {shape}")
    if not 1 <= k <= shape.size:
        raise ValueError(f"entry {k} outside 1..{shape.size}")
    i, j = cell
    total = 0
    for mu in subpartitions_of_size(shape, k):
        if mu.row(i) == j and mu.row(i + 1) < j:
            total += syt_count(mu.remove_corner(i, j)) * skew_syt_count(shape, mu)
    return total


def average_case_chicago(shape):
    """Average exchange count by the harmonic-number formula

        sum_x sum_k |x| f(x, k)/f * (H_n - H_{n-k} - 1),

    where |x| = i + j - 2 and f(x, k) counts standard tableaux with entry k at
    cell x.  Evaluated exactly in one sweep over all subdiagrams.
    """
    n = shape.size
    if n == 0:
        return Fraction(0)
    h_n = harmonic(n)
    total = Fraction(0)
    for mu in subpartitions(shape):
        k = mu.size
        if k == 0:
            continue
        weight = h_n - harmonic(n - k) - 1
        skew = skew_syt_count(shape, mu)
        if skew == 0:
            continue
        for (i, j) in mu.corners():
            dist = i + j - 2
            if dist == 0:
                continue
            total += dist * syt_count(mu.remove_corner(i, j)) * skew * weight
    return total / syt_count(shape)
