"""CLI entry point for the Eudoxus calculator."""

from eudoxus.commands import main

main()
