"""Error report model shared by the command line and the REPL."""

from typing import Any, Dict, Optional

from pydantic import BaseModel, Field


class Err(BaseModel):
    """Standard error report."""

    error: str = Field(..., description="Error message")
    code: str = Field(..., description="Error code")
    reason: Optional[str] = Field(default=None, description="Extra error reason or context")
    details: Optional[Dict[str, Any]] = Field(default=None, description="Extra error details")

    def render(self) -> str:
        """`error[<code>]: <message>` followed by one indented line per detail."""
        lines = [f"error[{self.code}]: {self.error}"]
        if self.reason:
            lines.append(f"  reason: {self.reason}")
        for key, value in (self.details or {}).items():
            lines.append(f"  {key}: {value}")
        return "\n".join(lines)
