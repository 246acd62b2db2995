import enum
import typing

import pydantic

from mzvsum import utils


class Status(enum.Enum):
    """
    Enum for the outcome of a verification report.
    """

    PASS = "pass"
    FAIL = "fail"

    def __str__(self):
        """
        Return the value of the enum as a string.
        """
        return self.value


class CheckRecord(pydantic.BaseModel):
    """
    The schema for a single comparison inside a verification report.  Numeric
    fields are rendered with 17 significant digits and big integers as decimal
    strings, so the record carries strings.
    """

    name: str = pydantic.Field(description="A label naming the checked instance")
    lhs: str = pydantic.Field(description="The left hand side of the identity")
    rhs: str = pydantic.Field(description="The right hand side of the identity")
    difference: str = pydantic.Field(description="lhs - rhs, as a number or a polynomial")
    tolerance: str = pydantic.Field(description="The largest accepted |difference|")
    passed: bool = pydantic.Field(description="Whether |difference| <= tolerance")

    @classmethod
    def exact(cls, name: str, lhs: int, rhs: int) -> typing.Self:
        """
        An exact big integer comparison, tolerance 0.
        """
        return cls(
            name=name,
            lhs=str(lhs),
            rhs=str(rhs),
            difference=str(lhs - rhs),
            tolerance="0",
            passed=lhs == rhs,
        )

    @classmethod
    def symbolic(cls, name: str, lhs: typing.Any, rhs: typing.Any) -> typing.Self:
        """
        A term by term comparison of two word polynomials.  The difference is
        rendered as the polynomial lhs - rhs, which must be "0".
        """
        difference = lhs - rhs
        return cls(
            name=name,
            lhs=str(lhs),
            rhs=str(rhs),
            difference=str(difference),
            tolerance="0",
            passed=not difference,
        )

    @classmethod
    def numeric(cls, name: str, lhs: float, rhs: float, tolerance: float) -> typing.Self:
        """
        A floating point comparison within an absolute tolerance.
        """
        difference = lhs - rhs
        return cls(
            name=name,
            lhs=utils.format_float(lhs),
            rhs=utils.format_float(rhs),
            difference=utils.format_float(difference),
            tolerance=utils.format_float(tolerance),
            passed=abs(difference) <= tolerance,
        )


class Report(pydantic.BaseModel):
    """
    The schema for the machine readable result of a CLI command.
    """

    model_config = pydantic.ConfigDict(populate_by_name=True)

    schema_version: int = pydantic.Field(default=1, alias="schema")
    command: str = pydantic.Field(description="The command and target that produced the report")
    inputs: dict[str, typing.Any] = pydantic.Field(
        description="An echo of the parsed parameters", default_factory=dict
    )
    details: list[CheckRecord] = pydantic.Field(
        description="One record per comparison", default_factory=list
    )

    @pydantic.computed_field  # type: ignore[prop-decorator]
    @property
    def status(self) -> Status:
        """
        PASS iff there is at least one check record and every record is within
        its tolerance.
        """
        if self.details and all(c.passed for c in self.details):
            return Status.PASS
        return Status.FAIL

    def worst(self) -> typing.Optional[CheckRecord]:
        """
        The failing record that misses its tolerance by the most, or None when
        the report passes.  Symbolic failures rank first.
        """
        failing = [c for c in self.details if not c.passed]
        if not failing:
            return None

        def excess(check: CheckRecord) -> float:
            try:
                return abs(float(check.difference)) - float(check.tolerance)
            except ValueError:
                return float("inf")

        return max(failing, key=excess)

    def to_json(self) -> str:
        """
        Serialize with the "schema" key, indented.
        """
        return self.model_dump_json(by_alias=True, indent=2)

    def render_text(self) -> str:
        """
        Render a human readable summary, one line per check.
        """
        lines = [f"{self.command}: {self.status}"]
        for key, value in self.inputs.items():
            lines.append(f"  {key} = {value}")
        for check in self.details:
            mark = "ok  " if check.passed else "FAIL"
            lines.append(
                f"  [{mark}] {check.name}: lhs={check.lhs} rhs={check.rhs} "
                f"difference={check.difference} tolerance={check.tolerance}"
            )
        return "\n".join(lines)
