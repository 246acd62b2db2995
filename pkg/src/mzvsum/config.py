import pathlib
import typing

import pydantic
import pydantic_settings


class Settings(pydantic_settings.BaseSettings):
    model_config = pydantic_settings.SettingsConfigDict(
        env_prefix="MZV_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    default_truncation: int = pydantic.Field(
        description="The upper summation limit used for every index of a nested sum",
        default=100_000,
        ge=1,
    )
    default_tolerance: float = pydantic.Field(
        description="The absolute tolerance used by numeric verification checks",
        default=1e-3,
        ge=0,
    )
    default_shift: float = pydantic.Field(
        description="The Hurwitz shift parameter x used when none is given",
        default=1.0,
        gt=0,
    )
    max_workers: typing.Optional[int] = pydantic.Field(
        description="The number of worker processes used by --parallel runs, "
        "None lets the executor decide",
        default=None,
        ge=1,
    )
    log_config: pathlib.Path = pydantic.Field(
        description="The path to the YAML logging configuration used by the CLI",
        default=pathlib.Path(__file__).parent / "log_config.yml",
    )
    log_level: typing.Optional[str] = pydantic.Field(
        description="Optionally, a level that overrides the root logger level "
        "from the logging configuration",
        default=None,
    )
    trace_spans: bool = pydantic.Field(
        description="Export OpenTelemetry spans to stderr when running the CLI",
        default=False,
    )


settings = Settings()
