"""Pydantic models for values, commands and results."""

from eudoxus.models.domain import (
    CertifiedApprox,
    CFExpansion,
    CFStatus,
    Convergent,
    DefectBound,
    Fuel,
    Inconclusive,
    Negative,
    Positive,
    SignResult,
)
from eudoxus.models.localization import MultSet, PadicTrunc, PrimeSet, PruferFrac, QEndProduct
from eudoxus.models.request import Command
from eudoxus.models.response import CommandResult

__all__ = [
    "CertifiedApprox",
    "CFExpansion",
    "CFStatus",
    "Convergent",
    "DefectBound",
    "Fuel",
    "Inconclusive",
    "Negative",
    "Positive",
    "SignResult",
    "MultSet",
    "PadicTrunc",
    "PrimeSet",
    "PruferFrac",
    "QEndProduct",
    "Command",
    "CommandResult",
]
