"""
mzvsum.numeric.summation
~~~~~~~~~~~~~~~~~~~~~~~~

This module contains compensated floating point accumulation.  The running
sum keeps the rounding error of every addition in a separate carry
(Neumaier's variant of Kahan summation), so long sums of small positive terms
lose accuracy only through truncation.
"""

import typing


class CompensatedSum:
    """
    Incremental compensated summation.

    >>> acc = CompensatedSum()
    >>> for _ in range(10):
    ...     acc += 0.1
    >>> acc.value
    1.0
    """

    __slots__ = ("_sum", "_carry")

    def __init__(self, value: float = 0.0):
        self._sum = float(value)
        self._carry = 0.0

    def add(self, value: float) -> None:
        """
        Add value to the running sum.
        """
        total = self._sum + value
        if abs(self._sum) >= abs(value):
            self._carry += (self._sum - total) + value
        else:
            self._carry += (value - total) + self._sum
        self._sum = total

    def __iadd__(self, value: float) -> "CompensatedSum":
        """
        Add value in place.
        """
        self.add(value)
        return self

    @property
    def value(self) -> float:
        """
        The compensated total.
        """
        return self._sum + self._carry

    def __repr__(self):
        """
        Debug representation.
        """
        return f"CompensatedSum({self.value})"


def running_sums(terms: typing.Iterable[float]) -> list[float]:
    """
    Returns the compensated prefix sums of terms, ie the list whose i-th
    entry is terms[0] + ... + terms[i].  Terms are added in order.
    """
    # CompensatedSum.add inlined, this loop runs once per index of every layer
    out = []
    total = 0.0
    carry = 0.0
    for value in terms:
        step = total + value
        if abs(total) >= abs(value):
            carry += (total - step) + value
        else:
            carry += (value - step) + total
        total = step
        out.append(total + carry)
    return out


def compensated_total(terms: typing.Iterable[float]) -> float:
    """
    Returns the compensated sum of terms, added in order.
    """
    acc = CompensatedSum()
    for value in terms:
        acc.add(value)
    return acc.value
