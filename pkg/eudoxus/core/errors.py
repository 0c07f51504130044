from enum import Enum, IntEnum, auto


class AutoStringEnum(str, Enum):
    def _generate_next_value_(self, start, count, last_values):
        return self.lower()


class ExitCode(IntEnum):
    """Process exit codes of the calculator."""

    OK = 0
    USER_ERROR = 1
    INCONCLUSIVE = 2


class ErrorKeys(AutoStringEnum):
    internal_error = auto()
    validation_error = auto()
    syntax_error = auto()
    depth_exceeded = auto()
    inconclusive_sign = auto()
    finite_exhausted = auto()
    support_violation = auto()
    precision_exhausted = auto()
    prime_mismatch = auto()
    incoherent_action = auto()
    defect_violation = auto()
    trichotomy_violation = auto()


# Only a missing sign certificate is a semi-decision outcome; everything else is a hard failure.
errors_mapping = {
    ErrorKeys.internal_error: ExitCode.USER_ERROR,
    ErrorKeys.validation_error: ExitCode.USER_ERROR,
    ErrorKeys.syntax_error: ExitCode.USER_ERROR,
    ErrorKeys.depth_exceeded: ExitCode.USER_ERROR,
    ErrorKeys.inconclusive_sign: ExitCode.INCONCLUSIVE,
    ErrorKeys.finite_exhausted: ExitCode.USER_ERROR,
    ErrorKeys.support_violation: ExitCode.USER_ERROR,
    ErrorKeys.precision_exhausted: ExitCode.USER_ERROR,
    ErrorKeys.prime_mismatch: ExitCode.USER_ERROR,
    ErrorKeys.incoherent_action: ExitCode.USER_ERROR,
    ErrorKeys.defect_violation: ExitCode.USER_ERROR,
    ErrorKeys.trichotomy_violation: ExitCode.USER_ERROR,
}
