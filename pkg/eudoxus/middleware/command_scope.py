"""Command scope for tracking one command's log records."""

import time
import uuid
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Iterator

import structlog

from eudoxus.core.errors import ExitCode
from eudoxus.core.logging import get_logger

logger = get_logger(__name__)


@dataclass
class CommandScope:
    command: str
    command_id: str = field(default_factory=lambda: str(uuid.uuid4()))
    start_time: float = field(default_factory=time.time)

    def complete(self, exit_code: ExitCode) -> None:
        duration_ms = (time.time() - self.start_time) * 1000
        logger.info(
            "command_completed",
            exit_code=int(exit_code),
            duration_ms=round(duration_ms, 2),
        )


@contextmanager
def command_scope(command: str) -> Iterator[CommandScope]:
    """
    Bind a fresh command id and the command name into structlog contextvars.
    """
    scope = CommandScope(command=command)
    structlog.contextvars.clear_contextvars()
    structlog.contextvars.bind_contextvars(command_id=scope.command_id, command=command)
    logger.info("command_started")
    try:
        yield scope
    finally:
        structlog.contextvars.clear_contextvars()
