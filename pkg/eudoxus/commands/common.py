"""Options and dispatch shared by every calculator command."""

from typing import Any, Callable

import click

from eudoxus.config import get_settings
from eudoxus.core.exceptions import ValidationError
from eudoxus.core.exceptions_handler import handle_exception
from eudoxus.models.request import Command
from eudoxus.models.response import CommandResult
from eudoxus.services.calculator import execute

Builder = Callable[..., Command]

_BUILDERS: dict[str, Builder] = {}

# Leading minus signs belong to expressions and numbers, not to options.
ARGUMENT_SETTINGS = {"ignore_unknown_options": True}

fuel_option = click.option(
    "--fuel",
    type=click.IntRange(min=1),
    default=None,
    help="Maximum doublings for sign searches [default: from settings]",
)

digits_option = click.option(
    "--digits",
    type=click.IntRange(min=0),
    default=None,
    help="Fraction digits of decimal output [default: from settings]",
)


def builds(name: str) -> Callable[[Builder], Builder]:
    """Register the function turning a command's click parameters into its model."""

    def register(builder: Builder) -> Builder:
        _BUILDERS[name] = builder
        return builder

    return register


def build(name: str, params: dict[str, Any]) -> Command:
    return _BUILDERS[name](**params)


def run(name: str, params: dict[str, Any]) -> CommandResult:
    """Validate parameters into a command and execute it."""
    try:
        command = build(name, params)
    except Exception as exc:
        return handle_exception(exc, name)
    return execute(command, get_settings())


def emit(result: CommandResult) -> None:
    if result.output:
        click.echo(result.output)
    if result.error:
        click.echo(result.error, err=True)


class UsageFailure(click.ClickException):
    """A click usage error, reported as a validation error with the user-error exit code."""

    def __init__(self, exc: click.ClickException, command: str | None = None):
        super().__init__(exc.format_message())
        details = {"command": command} if command else None
        self.result = handle_exception(ValidationError(self.message, details=details), command)
        self.exit_code = int(self.result.exit_code)

    def show(self, file: Any = None) -> None:
        emit(self.result)


class CalculatorGroup(click.Group):
    """Group whose usage errors exit with 1, keeping 2 for inconclusive signs."""

    def make_context(
        self,
        info_name: str | None,
        args: list[str],
        parent: click.Context | None = None,
        **extra: Any,
    ) -> click.Context:
        try:
            return super().make_context(info_name, args, parent=parent, **extra)
        except UsageFailure:
            raise
        except click.ClickException as exc:
            raise UsageFailure(exc) from exc

    def invoke(self, ctx: click.Context) -> Any:
        try:
            return super().invoke(ctx)
        except UsageFailure:
            raise
        except click.ClickException as exc:
            raise UsageFailure(exc, ctx.invoked_subcommand) from exc


def dispatch(name: str, **params: Any) -> None:
    """Run a command, print its result and exit with its code."""
    result = run(name, params)
    emit(result)
    click.get_current_context().exit(int(result.exit_code))


def parse_with(group: click.Group, argv: list[str]) -> Command:
    """Parse an argument vector through the group's click definitions without running it.

    Raises:
        click.UsageError: On unknown commands or bad arguments
        pydantic.ValidationError: If the parameters do not form a valid command
    """
    if not argv:
        raise click.UsageError("empty command")
    name, *args = argv
    command = group.get_command(click.Context(group), name)
    if command is None or name not in _BUILDERS:
        raise click.UsageError(f"no such command {name!r}")
    with command.make_context(name, args) as ctx:
        return build(name, ctx.params)
