"""Factories for configured service objects.

Commands obtain their parser and default budgets here, so that settings are read
in one place and tests can swap them through `reset_settings`.
"""

from eudoxus.config import AppSettings, get_settings
from eudoxus.models.domain import Fuel
from eudoxus.services.expression import ExpressionParser


def get_expression_parser(settings: AppSettings | None = None) -> ExpressionParser:
    """Parser bounded by the configured depth and input size."""
    settings = settings or get_settings()
    return ExpressionParser(
        max_depth=settings.parser.max_depth,
        max_input_bytes=settings.parser.max_input_bytes,
    )


def get_fuel(override: int | None = None, settings: AppSettings | None = None) -> Fuel:
    """Fuel from a per-command override, else from settings."""
    settings = settings or get_settings()
    return Fuel(max_doublings=override or settings.arithmetic.fuel)


def get_digits(override: int | None = None, settings: AppSettings | None = None) -> int:
    settings = settings or get_settings()
    return settings.arithmetic.digits if override is None else override
