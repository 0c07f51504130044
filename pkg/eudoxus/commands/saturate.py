import click

from eudoxus.commands.common import ARGUMENT_SETTINGS, builds, dispatch
from eudoxus.models.request import SaturateCommand


@builds("saturate")
def to_command(generators: str) -> SaturateCommand:
    return SaturateCommand(generators=generators)


@click.command("saturate", context_settings=ARGUMENT_SETTINGS)
@click.argument("generators")
def saturate_command(generators: str) -> None:
    """Primes of the saturation of the set generated by GENERATORS, e.g. "6,10"."""
    dispatch("saturate", generators=generators)
