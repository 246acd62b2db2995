"""
mzvsum.combinatorics.identities
~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~

This module contains exact checks of the counting identities that follow from
the closed form of z_n^k under the harmonic product:

* the depth r layer of the expansion has r! S(k, r) terms, counted with
  multiplicity;
* splitting z_n^k = z_n^l * z_n^(k-l) and counting the terms of each stuffle
  with Delannoy numbers gives

      F(k) = sum_{p=1}^{l} sum_{q=1}^{k-l} S(l, p) S(k-l, q) p! q! D(p, q)

  for every 1 <= l < k, and the case k = 2l.
"""

import math
import typing

import pydantic

from mzvsum.algebra import expansions
from mzvsum.combinatorics import numbers


class IdentityCheck(pydantic.BaseModel):
    """
    Both sides of an exact identity.
    """

    model_config = pydantic.ConfigDict(frozen=True)

    lhs: int
    rhs: int

    @pydantic.computed_field  # type: ignore[prop-decorator]
    @property
    def equal(self) -> bool:
        """
        Whether the two sides agree.
        """
        return self.lhs == self.rhs


class DecompositionRow(pydantic.BaseModel):
    """
    One (p, q) term of the split double sum.
    """

    model_config = pydantic.ConfigDict(frozen=True)

    p: int
    q: int
    left_count: int = pydantic.Field(description="p! S(l, p)")
    right_count: int = pydantic.Field(description="q! S(k - l, q)")
    delannoy: int = pydantic.Field(description="D(p, q)")

    @pydantic.computed_field  # type: ignore[prop-decorator]
    @property
    def contribution(self) -> int:
        """
        left_count * right_count * delannoy.
        """
        return self.left_count * self.right_count * self.delannoy


def composition_multinomial_sum(k: int, r: int) -> int:
    """
    Returns the sum of multinomial(k; alpha) over the compositions alpha of k
    with exactly r parts, by enumerating them.
    """
    if not 1 <= r <= k:
        raise ValueError(f"Invalid depth: expected 1 <= r <= k, got r={r}, k={k}")
    return sum(numbers.multinomial(k, alpha) for alpha in expansions.compositions_of_depth(k, r))


def verify_surjection_identity(k: int, r: int) -> IdentityCheck:
    """
    Compares the multinomial sum over depth r compositions of k with r! S(k, r).
    """
    return IdentityCheck(
        lhs=composition_multinomial_sum(k, r), rhs=numbers.surjection_count(k, r)
    )


def theorem3_decomposition(k: int, ell: int) -> list[DecompositionRow]:
    """
    Returns the (p, q) terms of the right side of the split identity, for
    p in 1..ell and q in 1..k-ell.
    """
    if not 1 <= ell < k:
        raise ValueError(f"Invalid split: expected 1 <= ell < k, got ell={ell}, k={k}")
    stirling_cache: numbers.Cache = {}
    delannoy_cache: numbers.Cache = {}
    rows = []
    for p in range(1, ell + 1):
        left = math.factorial(p) * numbers.stirling2(ell, p, stirling_cache)
        for q in range(1, k - ell + 1):
            rows.append(
                DecompositionRow(
                    p=p,
                    q=q,
                    left_count=left,
                    right_count=math.factorial(q) * numbers.stirling2(k - ell, q, stirling_cache),
                    delannoy=numbers.delannoy(p, q, delannoy_cache),
                )
            )
    return rows


def verify_theorem3(k: int, ell: int) -> IdentityCheck:
    """
    Compares the Fubini number F(k) with the Delannoy weighted double sum
    over the split (ell, k - ell).

    :param k: The total, k >= 2.
    :param ell: The split point, 1 <= ell < k.
    :return: Both sides; `equal` is always true.
    """
    rows = theorem3_decomposition(k, ell)
    return IdentityCheck(lhs=numbers.fubini(k), rhs=sum(row.contribution for row in rows))


def verify_corollary(k: int) -> IdentityCheck:
    """
    The balanced split F(2k) = sum_{p,q <= k} S(k, p) S(k, q) p! q! D(p, q).
    """
    if k < 1:
        raise ValueError(f"Invalid k: {k}, expected a positive integer")
    return verify_theorem3(2 * k, k)


def layer_counts(k: int) -> typing.Dict[int, int]:
    """
    Returns r -> r! S(k, r) for r in 1..k.
    """
    if k < 1:
        raise ValueError(f"Invalid k: {k}, expected a positive integer")
    return {r: numbers.surjection_count(k, r) for r in range(1, k + 1)}
