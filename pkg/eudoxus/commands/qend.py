import click

from eudoxus.commands.common import ARGUMENT_SETTINGS, builds, dispatch
from eudoxus.models.request import QEndCommand


@builds("qend")
def to_command(rational: str, primes: str, precision: int | None = None) -> QEndCommand:
    return QEndCommand(rational=rational, primes=primes, precision=precision)


@click.command("qend", context_settings=ARGUMENT_SETTINGS)
@click.argument("rational")
@click.argument("primes")
@click.argument("precision", type=int, required=False)
def qend_command(rational: str, primes: str, precision: int | None) -> None:
    """Decompose multiplication by RATIONAL into one p-adic number per prime of PRIMES."""
    dispatch("qend", rational=rational, primes=primes, precision=precision)
