import click

from eudoxus.commands.common import ARGUMENT_SETTINGS, builds, dispatch
from eudoxus.models.request import CrtCommand


@builds("crt")
def to_command(value: str, target: str, level: int | None = None) -> CrtCommand:
    if "|" in target:
        return CrtCommand(value=value, partition=target, level=level)
    return CrtCommand(value=value, other=target, level=level)


@click.command("crt", context_settings=ARGUMENT_SETTINGS)
@click.argument("value")
@click.argument("target")
@click.option("--level", type=int, default=None, help="Common denominator to work at")
def crt_command(value: str, target: str, level: int | None) -> None:
    """Split VALUE over the partition TARGET ("2|3"), or join VALUE with the fraction TARGET."""
    dispatch("crt", value=value, target=target, level=level)
