"""
mzvsum.algebra.expansions
~~~~~~~~~~~~~~~~~~~~~~~~~

This module contains the enumeration of compositions and the closed form
expansion of powers of z_n,

    z_n^k = sum over compositions alpha of k of
            multinomial(k; alpha) * sign * z_{n alpha_1} ... z_{n alpha_r}

where sign is 1 for the harmonic product and (-1)^(k - r) for the star
product.  The expansion is built directly, no product is computed.
"""

import typing

from mzvsum.combinatorics import numbers
from mzvsum.models import Composition
from mzvsum.models import ProductKind
from mzvsum.models import WordPoly


def _compositions(k: int) -> typing.Iterator[typing.Tuple[int, ...]]:
    for first in range(1, k + 1):
        if first == k:
            yield (k,)
        else:
            for rest in _compositions(k - first):
                yield (first,) + rest


def compositions(k: int) -> typing.Iterator[Composition]:
    """
    Yields each of the 2^(k-1) compositions of k exactly once, in
    lexicographic order of the parts, e.g. (1,1,1), (1,2), (2,1), (3) for k = 3.
    k = 0 yields the empty composition only.
    """
    if k < 0:
        raise ValueError(f"Invalid composition total: {k}")
    if k == 0:
        yield Composition.trusted(())
        return
    for parts in _compositions(k):
        yield Composition.trusted(parts)


def compositions_of_depth(k: int, r: int) -> typing.Iterator[Composition]:
    """
    Yields the compositions of k with exactly r parts, in lexicographic order.
    """
    if k < 0 or r < 0:
        raise ValueError(f"Invalid composition total or depth: k={k}, r={r}")

    def _walk(total: int, depth: int) -> typing.Iterator[typing.Tuple[int, ...]]:
        if depth == 0:
            if total == 0:
                yield ()
            return
        # every remaining part needs at least 1
        for first in range(1, total - depth + 2):
            for rest in _walk(total - first, depth - 1):
                yield (first,) + rest

    for parts in _walk(k, r):
        yield Composition.trusted(parts)


def expand_power_closed_form(n: int, k: int, kind: ProductKind) -> WordPoly:
    """
    Returns the closed form expansion of the k-th power of z_n.

    :param n: The generator subscript, n >= 1.
    :param k: The exponent, k >= 1.
    :param kind: HARMONIC or STAR.
    :return: The sum over compositions alpha of k of the multinomial
        coefficient, signed (-1)^(k - depth) for STAR, times the word n*alpha.
    """
    if n < 1:
        raise ValueError(f"Invalid generator subscript: {n}")
    if k < 1:
        raise ValueError(f"Invalid exponent: {k}")
    terms = []
    for alpha in compositions(k):
        coeff = numbers.multinomial(k, alpha)
        if kind is ProductKind.STAR and (k - alpha.depth) % 2:
            coeff = -coeff
        terms.append((alpha.scaled(n), coeff))
    return WordPoly(terms)
