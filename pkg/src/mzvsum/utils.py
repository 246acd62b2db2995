import json
import logging
import logging.config
import pathlib
import sys
import typing

import yaml
from opentelemetry import trace
from opentelemetry.sdk.trace import TracerProvider
from opentelemetry.sdk.trace.export import ConsoleSpanExporter
from opentelemetry.sdk.trace.export import SimpleSpanProcessor


def project_root() -> pathlib.Path:
    """
    Returns the path to the project root directory.
    """
    cwd = pathlib.Path(__file__).resolve()
    root = cwd

    while not (root / "pyproject.toml").exists():
        if root.parent == root:
            raise FileNotFoundError("Project root with 'pyproject.toml' not found.")
        root = root.parent
    return root


def read_json_from_assets(*filepaths: str) -> typing.Any:
    """
    Loads a JSON file from the 'assets' directory.
    """
    filename = pathlib.Path(project_root(), "assets", *filepaths)
    with open(filename, encoding="utf-8") as fobj:
        return json.load(fobj)


def format_float(value: float) -> str:
    """
    Render a float with 17 significant digits, enough to round trip a double.
    """
    return f"{value:.17g}"


def configure_logging(path: pathlib.Path, level: typing.Optional[str] = None) -> None:
    """
    Configure logging from a YAML dictConfig file.  When level is given it
    overrides the root and package logger levels.
    """
    with open(path, encoding="utf-8") as fobj:
        config = yaml.safe_load(fobj)
    if level:
        level = level.upper()
        config.setdefault("root", {})["level"] = level
        for logger in config.get("loggers", {}).values():
            logger["level"] = level
    logging.config.dictConfig(config)


def configure_tracing() -> None:
    """
    Install an OpenTelemetry tracer provider that prints finished spans to
    stderr.
    """
    provider = TracerProvider()
    provider.add_span_processor(SimpleSpanProcessor(ConsoleSpanExporter(out=sys.stderr)))
    trace.set_tracer_provider(provider)
