"""Per-command context for structured logging."""

from eudoxus.middleware.command_scope import CommandScope, command_scope

__all__ = ["CommandScope", "command_scope"]
