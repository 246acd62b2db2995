"""
mzvsum.combinatorics.numbers
~~~~~~~~~~~~~~~~~~~~~~~~~~~~

This module contains exact integer sequences used by the sum formulas:
multinomial coefficients, Delannoy numbers, Stirling numbers of the second
kind, surjection counts and Fubini numbers.  Python integers are arbitrary
precision, so no value ever overflows.
"""

import math
import typing

from mzvsum.models import Composition

Cache = typing.MutableMapping[typing.Tuple[int, int], int]


def _check_nonnegative(**values: int) -> None:
    for name, value in values.items():
        if value < 0:
            raise ValueError(f"Invalid {name}: {value}, expected a nonnegative integer")


def multinomial(k: int, alpha: typing.Union[Composition, typing.Sequence[int]]) -> int:
    """
    Returns k! / (alpha_1! ... alpha_r!).

    :param k: The total, which must equal the sum of alpha.
    :param alpha: The lower entries of the coefficient.
    :return: The multinomial coefficient.
    """
    parts = alpha.parts if isinstance(alpha, Composition) else tuple(alpha)
    _check_nonnegative(k=k)
    if any(p < 0 for p in parts) or sum(parts) != k:
        raise ValueError(f"Invalid multinomial: parts {parts} do not sum to {k}")
    # C(a1, a1) C(a1 + a2, a2) ... C(k, ar) telescopes to k! / (a1! ... ar!)
    result = 1
    total = 0
    for part in parts:
        total += part
        result *= math.comb(total, part)
    return result


def delannoy(m: int, n: int, cache: typing.Optional[Cache] = None) -> int:
    """
    Returns the Delannoy number D(m, n): 1 on the boundary m*n = 0, otherwise
    D(m-1, n) + D(m-1, n-1) + D(m, n-1).  The table is rebuilt per call unless
    a cache mapping is supplied, in which case every computed entry is stored
    there and reused.
    """
    _check_nonnegative(m=m, n=n)
    table: Cache = cache if cache is not None else {}
    for i in range(m + 1):
        for j in range(n + 1):
            if (i, j) in table:
                continue
            if i == 0 or j == 0:
                table[(i, j)] = 1
            else:
                table[(i, j)] = table[(i - 1, j)] + table[(i - 1, j - 1)] + table[(i, j - 1)]
    return table[(m, n)]


def stirling2(k: int, r: int, cache: typing.Optional[Cache] = None) -> int:
    """
    Returns the Stirling number of the second kind S(k, r), the number of
    partitions of a k-set into r nonempty blocks, from the triangle
    S(n, j) = j * S(n-1, j) + S(n-1, j-1).  S(0, 0) = 1 and S(k, r) = 0 when
    r > k.
    """
    _check_nonnegative(k=k, r=r)
    if r > k:
        return 0
    table: Cache = cache if cache is not None else {}
    table.setdefault((0, 0), 1)
    for n in range(1, k + 1):
        table.setdefault((n, 0), 0)
        for j in range(1, min(n, r) + 1):
            if (n, j) in table:
                continue
            above = table[(n - 1, j)] if j <= n - 1 else 0
            table[(n, j)] = j * above + table[(n - 1, j - 1)]
    return table[(k, r)]


def stirling2_inclusion_exclusion(k: int, r: int) -> int:
    """
    Returns S(k, r) as sum_j (-1)^(r-j) C(r, j) j^k / r!, an evaluation
    independent of the triangle recurrence.
    """
    _check_nonnegative(k=k, r=r)
    total = sum((-1) ** (r - j) * math.comb(r, j) * j**k for j in range(r + 1))
    quotient, remainder = divmod(total, math.factorial(r))
    assert remainder == 0, "inclusion-exclusion sum must be divisible by r!"
    return quotient


def surjection_count(k: int, r: int) -> int:
    """
    Returns r! * S(k, r), the number of surjections from a k-set onto an
    r-set, which is also the number of ordered set partitions into r blocks.
    """
    if not 1 <= r <= k:
        raise ValueError(f"Invalid surjection count: expected 1 <= r <= k, got r={r}, k={k}")
    return math.factorial(r) * stirling2(k, r)


def fubini(k: int) -> int:
    """
    Returns the Fubini (ordered Bell) number F(k) = sum_r r! S(k, r), the
    number of weak orderings of a k-set.  F(0) = 1 counts the empty ordering.
    """
    _check_nonnegative(k=k)
    if k == 0:
        return 1
    cache: Cache = {}
    return sum(math.factorial(r) * stirling2(k, r, cache) for r in range(1, k + 1))
