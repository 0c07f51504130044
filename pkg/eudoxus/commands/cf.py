import click

from eudoxus.commands.common import ARGUMENT_SETTINGS, builds, dispatch, fuel_option
from eudoxus.models.request import CFCommand


@builds("cf")
def to_command(expression: str, terms: int = 10, fuel: int | None = None) -> CFCommand:
    return CFCommand(expression=expression, terms=terms, fuel=fuel)


@click.command("cf", context_settings=ARGUMENT_SETTINGS)
@click.argument("expression")
@click.option("--terms", "-k", type=int, default=10, show_default=True, help="Terms wanted")
@fuel_option
def cf_command(expression: str, terms: int, fuel: int | None) -> None:
    """Continued-fraction terms of EXPRESSION.

    The status says whether the list is a prefix, the complete expansion, or
    stopped at a term that fuel could not certify.
    """
    dispatch("cf", expression=expression, terms=terms, fuel=fuel)
