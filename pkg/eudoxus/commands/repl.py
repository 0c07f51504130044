"""Line-oriented calculator loop over standard input."""

import shlex
from typing import TextIO

import click

from eudoxus.commands.common import emit, parse_with
from eudoxus.config import AppSettings, get_settings
from eudoxus.core.exceptions import ValidationError
from eudoxus.core.exceptions_handler import handle_exception
from eudoxus.core.logging import get_logger
from eudoxus.models.response import CommandResult
from eudoxus.services.calculator import execute

logger = get_logger(__name__)

PROMPT = "eudoxus> "
QUIT_WORDS = frozenset({"quit", "exit"})


def evaluate_line(
    group: click.Group, line: str, settings: AppSettings | None = None
) -> CommandResult:
    """Run one REPL line: a command with arguments, or a bare expression to evaluate."""
    first = line.split(maxsplit=1)[0]
    try:
        argv = shlex.split(line) if first in group.commands else ["eval", line]
    except ValueError as exc:
        return handle_exception(ValidationError(f"cannot split line: {exc}"))
    try:
        command = parse_with(group, argv)
    except click.exceptions.Exit:
        # --help was printed
        return CommandResult()
    except click.ClickException as exc:
        return handle_exception(
            ValidationError(exc.format_message(), details={"command": argv[0]})
        )
    except Exception as exc:
        return handle_exception(exc, argv[0])
    return execute(command, settings or get_settings())


def run_repl(group: click.Group, stream: TextIO | None = None) -> None:
    """Read commands until end of input or `quit`."""
    stream = stream or click.get_text_stream("stdin")
    interactive = stream.isatty()
    logger.info("repl_started", interactive=interactive)
    while True:
        if interactive:
            click.echo(PROMPT, nl=False)
        line = stream.readline()
        if not line:
            break
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if line in QUIT_WORDS:
            break
        emit(evaluate_line(group, line))
    logger.info("repl_finished")
