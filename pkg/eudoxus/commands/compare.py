import click

from eudoxus.commands.common import ARGUMENT_SETTINGS, builds, dispatch, fuel_option
from eudoxus.models.request import CompareCommand


@builds("compare")
def to_command(left: str, right: str, fuel: int | None = None) -> CompareCommand:
    return CompareCommand(left=left, right=right, fuel=fuel)


@click.command("compare", context_settings=ARGUMENT_SETTINGS)
@click.argument("left")
@click.argument("right")
@fuel_option
def compare_command(left: str, right: str, fuel: int | None) -> None:
    """Order LEFT against RIGHT."""
    dispatch("compare", left=left, right=right, fuel=fuel)
