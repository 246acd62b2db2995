import enum
import typing

import pydantic

from mzvsum.config import settings

from .word import Composition


class InadmissibleError(ValueError):
    """
    Raised when a zeta series is asked for a composition whose series diverges.
    """

    def __init__(self, alpha: Composition):
        self.alpha = alpha
        super().__init__(
            f"Inadmissible composition ({','.join(map(str, alpha.parts))}): "
            "the series converges only when the last part is >= 2"
        )


class ZetaKind(enum.Enum):
    """
    Enum for the nested series that can be evaluated numerically.
    """

    MZV = "mzv"
    MZSV = "mzsv"
    HURWITZ_MZV = "hurwitz_mzv"
    HURWITZ_MZSV = "hurwitz_mzsv"
    T = "t"
    T_STAR = "tstar"

    def __str__(self):
        """
        Return the value of the enum as a string.
        """
        return self.value


class ValueKind(enum.Enum):
    """
    Enum for the plain and star variants of the multiple t-values.
    """

    PLAIN = "plain"
    STAR = "star"

    def __str__(self):
        """
        Return the value of the enum as a string.
        """
        return self.value


class EvalConfig(pydantic.BaseModel):
    """
    The truncation and shift used by a numeric evaluation.
    """

    model_config = pydantic.ConfigDict(frozen=True)

    truncation: int = pydantic.Field(
        description="The upper summation limit N used for every index",
        default_factory=lambda: settings.default_truncation,
        ge=1,
    )
    shift: float = pydantic.Field(
        description="The Hurwitz parameter x, only used by the Hurwitz evaluators",
        default_factory=lambda: settings.default_shift,
        gt=0,
    )


class EvalResult(pydantic.BaseModel):
    """
    A truncated nested sum together with an estimate of the truncation error.
    """

    model_config = pydantic.ConfigDict(frozen=True)

    value: float
    tail_bound: float = pydantic.Field(ge=0)

    def __add__(self, other: "EvalResult") -> "EvalResult":
        """
        Sum of values; the tail estimates add.
        """
        return EvalResult(
            value=self.value + other.value, tail_bound=self.tail_bound + other.tail_bound
        )

    def scaled(self, factor: float) -> "EvalResult":
        """
        Multiply the value by factor; the tail estimate scales by its magnitude.
        """
        return EvalResult(value=self.value * factor, tail_bound=self.tail_bound * abs(factor))

    def power(self, k: int) -> "EvalResult":
        """
        Raise the value to the k-th power.  The tail estimate uses the first
        order bound k * |v|^(k-1) * tail.
        """
        return EvalResult(
            value=self.value**k,
            tail_bound=k * abs(self.value) ** (k - 1) * self.tail_bound if k else 0.0,
        )

    def within(self, other: typing.Union["EvalResult", float], tolerance: float = 0.0) -> bool:
        """
        Whether the two values differ by at most the combined tail bounds plus
        tolerance.
        """
        if isinstance(other, EvalResult):
            return abs(self.value - other.value) <= (
                self.tail_bound + other.tail_bound + tolerance
            )
        return abs(self.value - other) <= self.tail_bound + tolerance
