import click

from eudoxus.commands.common import ARGUMENT_SETTINGS, builds, dispatch
from eudoxus.models.request import PadicCommand


@builds("padic")
def to_command(value: str, p: int, precision: int | None = None) -> PadicCommand:
    return PadicCommand(value=value, p=p, precision=precision)


@click.command("padic", context_settings=ARGUMENT_SETTINGS)
@click.argument("value")
@click.argument("p", type=int)
@click.argument("precision", type=int, required=False)
def padic_command(value: str, p: int, precision: int | None) -> None:
    """P-adic digits of VALUE: a rational read back from its multiplication action, or sqrt(N)."""
    dispatch("padic", value=value, p=p, precision=precision)
