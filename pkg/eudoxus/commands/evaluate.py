import click

from eudoxus.commands.common import (
    ARGUMENT_SETTINGS,
    builds,
    digits_option,
    dispatch,
    fuel_option,
)
from eudoxus.models.request import EvalCommand


@builds("eval")
def to_command(expression: str, digits: int | None = None, fuel: int | None = None) -> EvalCommand:
    return EvalCommand(expression=expression, digits=digits, fuel=fuel)


@click.command("eval", context_settings=ARGUMENT_SETTINGS)
@click.argument("expression")
@digits_option
@fuel_option
def eval_command(expression: str, digits: int | None, fuel: int | None) -> None:
    """Print EXPRESSION as a certified decimal, e.g. "cf[1;(2)*] * cf[1;(2)*]"."""
    dispatch("eval", expression=expression, digits=digits, fuel=fuel)
