"""Independent brute-force oracles used to compute expected values.

They work on raw label columns (most preferred first) and never touch the
library's cached majority tables or enumeration helpers.
"""

from itertools import permutations, product


def beats(cols, x, y):
    return sum(1 for col in cols if col.index(x) < col.index(y))


def strict_winner(cols):
    alts = cols[0]
    for x in alts:
        if all(beats(cols, x, y) > beats(cols, y, x) for y in alts if y != x):
            return x
    return None


def strict_loser(cols):
    alts = cols[0]
    for x in alts:
        if all(beats(cols, y, x) > beats(cols, x, y) for y in alts if y != x):
            return x
    return None


def pareto_undominated(cols):
    alts = cols[0]
    n = len(cols)
    return {y for y in alts if not any(beats(cols, x, y) == n for x in alts if x != y)}


def all_columns(labels, n):
    return [list(map(list, states)) for states in product(permutations(labels), repeat=n)]


def borda(cols):
    m = len(cols[0])
    return {x: sum(m - col.index(x) for col in cols) for x in cols[0]}
