"""Pydantic result models."""

from pydantic import BaseModel, Field

from eudoxus.core.errors import ExitCode


class CommandResult(BaseModel):
    """Rendered outcome of one command."""

    output: str = Field(default="", description="Text for standard output")
    error: str | None = Field(default=None, description="Rendered error for standard error")
    exit_code: ExitCode = Field(default=ExitCode.OK, description="Process exit code")
