from pydantic import ValidationError as PydanticValidationError

from eudoxus.core.errors import ErrorKeys, ExitCode, errors_mapping
from eudoxus.core.exceptions import EudoxusError
from eudoxus.core.logging import get_logger
from eudoxus.models.api import Err
from eudoxus.models.response import CommandResult

logger = get_logger(__name__)


def eudoxus_error_handler(exc: EudoxusError) -> CommandResult:
    """Handle library errors; an uncertified sign exits with the inconclusive code."""
    exit_code = errors_mapping.get(exc.code, ExitCode.USER_ERROR)
    error_response = Err(
        error=exc.message,
        code=exc.code,
        reason=exc.details.get("reason"),
        details={k: str(v) for k, v in exc.details.items() if k != "reason"} or None,
    )
    logger.info("eudoxus_error_handler", error=error_response.model_dump_json())

    return CommandResult(error=error_response.render(), exit_code=exit_code)


def pydantic_validation_error_handler(exc: PydanticValidationError) -> CommandResult:
    """Handle Pydantic validation errors raised while building commands or values."""
    field_errors = {}
    for err in exc.errors():
        # Pick the last element in 'loc' as the field name
        field_name = err["loc"][-1] if err.get("loc") else "value"
        field_errors[str(field_name)] = err["msg"]

    error_response = Err(
        error="Validation error",
        code=ErrorKeys.validation_error.name,
        reason=f"{len(field_errors)} field(s) failed validation",
        details=field_errors,
    )
    logger.info("pydantic_validation_error_handler", error=error_response.model_dump_json())

    return CommandResult(error=error_response.render(), exit_code=ExitCode.USER_ERROR)


def generic_exception_handler(exc: Exception, command: str | None = None) -> CommandResult:
    """Handle all other unhandled exceptions."""
    error_response = Err(
        error="Internal error",
        code=ErrorKeys.internal_error.name,
        reason=str(exc),
    )
    logger.exception(
        "unhandled_exception",
        error_type=type(exc).__name__,
        command=command,
        error=error_response.model_dump_json(),
    )

    return CommandResult(error=error_response.render(), exit_code=ExitCode.USER_ERROR)


def handle_exception(exc: Exception, command: str | None = None) -> CommandResult:
    """Route an exception to its handler."""
    match exc:
        case EudoxusError():
            return eudoxus_error_handler(exc)
        case PydanticValidationError():
            return pydantic_validation_error_handler(exc)
    return generic_exception_handler(exc, command)
