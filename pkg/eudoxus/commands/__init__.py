"""Command-line calculator: one click command per operation, REPL without a command."""

import click

from eudoxus import __version__
from eudoxus.commands.cf import cf_command
from eudoxus.commands.common import CalculatorGroup, parse_with
from eudoxus.commands.compare import compare_command
from eudoxus.commands.crt import crt_command
from eudoxus.commands.defect import defect_command
from eudoxus.commands.evaluate import eval_command
from eudoxus.commands.padic import padic_command
from eudoxus.commands.qend import qend_command
from eudoxus.commands.repl import run_repl
from eudoxus.commands.saturate import saturate_command
from eudoxus.commands.sign import sign_command
from eudoxus.main import bootstrap
from eudoxus.models.request import Command


@click.group(cls=CalculatorGroup, invoke_without_command=True)
@click.version_option(__version__, prog_name="eudoxus")
@click.pass_context
def main(ctx: click.Context) -> None:
    """Certified real arithmetic with near-endomorphisms of the integers.

    Without a command, reads one command or bare expression per line from
    standard input. Exit codes: 0 success, 1 user error, 2 inconclusive.
    """
    bootstrap()
    if ctx.invoked_subcommand is None:
        run_repl(main)


for _command in (
    eval_command,
    cf_command,
    sign_command,
    compare_command,
    defect_command,
    saturate_command,
    crt_command,
    padic_command,
    qend_command,
):
    main.add_command(_command)


def parse_command(argv: list[str]) -> Command:
    """Parse an argument vector into a validated command model."""
    return parse_with(main, argv)


__all__ = ["main", "parse_command"]
