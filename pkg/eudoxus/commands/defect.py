import click

from eudoxus.commands.common import ARGUMENT_SETTINGS, builds, dispatch, fuel_option
from eudoxus.models.request import DefectCommand


@builds("defect")
def to_command(
    expression: str, range_bound: int | None = None, fuel: int | None = None
) -> DefectCommand:
    return DefectCommand(expression=expression, range_bound=range_bound, fuel=fuel)


@click.command("defect", context_settings=ARGUMENT_SETTINGS)
@click.argument("expression")
@click.option(
    "--range",
    "range_bound",
    type=int,
    default=None,
    help="Scan |a|, |b| up to this value [default: from settings]",
)
@fuel_option
def defect_command(expression: str, range_bound: int | None, fuel: int | None) -> None:
    """Check the claimed additivity defect of EXPRESSION by exhaustive scan."""
    dispatch("defect", expression=expression, range_bound=range_bound, fuel=fuel)
