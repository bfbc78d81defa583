"""Independent brute-force oracles used by the tests.

Everything here is deliberately naive (enumeration, membership tests, direct
products) and shares no code path with the package implementation.
"""

from __future__ import annotations

import math
from itertools import permutations


def cycle_count(perm: tuple[int, ...]) -> int:
    seen = [False] * len(perm)
    cycles = 0
    for start in range(len(perm)):
        if seen[start]:
            continue
        cycles += 1
        i = start
        while not seen[i]:
            seen[i] = True
            i = perm[i]
    return cycles


def stirling1_by_enumeration(n: int, k: int) -> int:
    """Permutations of an n-set with exactly k cycles."""
    if n == 0:
        return 1 if k == 0 else 0
    return sum(1 for perm in permutations(range(n)) if cycle_count(perm) == k)


def set_partitions(items: list[int]):
    """Yield every partition of ``items`` as a list of blocks."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for partial in set_partitions(rest):
        for i in range(len(partial)):
            yield partial[:i] + [partial[i] + [first]] + partial[i + 1 :]
        yield partial + [[first]]


def stirling2_by_enumeration(n: int, k: int) -> int:
    """Partitions of an n-set into exactly k nonempty blocks."""
    if n == 0:
        return 1 if k == 0 else 0
    return sum(1 for part in set_partitions(list(range(n))) if len(part) == k)


def ascent_count(perm: tuple[int, ...]) -> int:
    return sum(1 for i in range(len(perm) - 1) if perm[i] < perm[i + 1])


def eulerian_by_enumeration(n: int, k: int) -> int:
    """Permutations of {1..n} with exactly k ascents."""
    return sum(1 for perm in permutations(range(1, n + 1)) if ascent_count(perm) == k)


def stirling2_explicit(n: int, m: int) -> int:
    """(1/m!) sum(C(m,i) (-1)**(m-i) i**n), with 0**0 = 1."""
    total = sum(math.comb(m, i) * (-1) ** (m - i) * i**n for i in range(m + 1))
    quotient, remainder = divmod(total, math.factorial(m))
    assert remainder == 0
    return quotient


def rising_poly_coeffs(n: int) -> list[int]:
    """Coefficients of x(x+1)...(x+n-1), lowest power first."""
    coeffs = [1]
    for i in range(n):
        # multiply by (x + i)
        shifted = [0] + coeffs
        coeffs = [s + i * c for s, c in zip(shifted, coeffs + [0])]
    return coeffs


def ord_by_division(x: int, p: int) -> int | None:
    """p-adic order by repeated division; None stands for the order of 0."""
    if x == 0:
        return None
    x = abs(x)
    e = 0
    while x % p == 0:
        x //= p
        e += 1
    return e


def naive_filtered_sum(upper: int, d: int, r: int, term) -> int:
    """sum of term(k) over 0 <= k <= upper with k = r (mod d), by membership
    test over every k (no striding)."""
    total = 0
    for k in range(upper + 1):
        if (k - r) % d == 0:
            total += term(k)
    return total
