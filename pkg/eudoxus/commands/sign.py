import click

from eudoxus.commands.common import ARGUMENT_SETTINGS, builds, dispatch, fuel_option
from eudoxus.models.request import SignCommand


@builds("sign")
def to_command(expression: str, fuel: int | None = None) -> SignCommand:
    return SignCommand(expression=expression, fuel=fuel)


@click.command("sign", context_settings=ARGUMENT_SETTINGS)
@click.argument("expression")
@fuel_option
def sign_command(expression: str, fuel: int | None) -> None:
    """Certified sign of EXPRESSION; exits with 2 when fuel runs out."""
    dispatch("sign", expression=expression, fuel=fuel)
