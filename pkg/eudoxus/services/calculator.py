"""Command execution: runs a validated command and formats its certified output."""

import re
from fractions import Fraction

from eudoxus.config import AppSettings, get_settings
from eudoxus.core.errors import ExitCode
from eudoxus.core.exceptions_handler import handle_exception
from eudoxus.core.logging import get_logger
from eudoxus.dependencies import get_digits, get_expression_parser, get_fuel
from eudoxus.middleware import command_scope
from eudoxus.models.domain import Inconclusive, Negative, Positive, SignResult
from eudoxus.models.localization import MultSet, PrimeSet, PruferFrac
from eudoxus.models.request import (
    CFCommand,
    Command,
    CompareCommand,
    CrtCommand,
    DefectCommand,
    EvalCommand,
    PadicCommand,
    QEndCommand,
    SaturateCommand,
    SignCommand,
)
from eudoxus.models.response import CommandResult
from eudoxus.services.cf_bridge import endo_to_cf
from eudoxus.services.endo_core import EndoNode, certify_defect
from eudoxus.services.expression import compile_expr
from eudoxus.services.localization import (
    crt_join,
    crt_split,
    multiplication_action,
    padic_extract,
    padic_sqrt,
    qend_decompose,
    saturate,
)
from eudoxus.services.real_ops import compare, sign, to_decimal

logger = get_logger(__name__)

_SQRT_VALUE = re.compile(r"^\s*sqrt\(\s*(\d+)\s*\)\s*$")


def execute(cmd: Command, settings: AppSettings | None = None) -> CommandResult:
    """Run one command inside its logging scope.

    Errors never escape: they are rendered into the result with their exit code.
    """
    settings = settings or get_settings()
    with command_scope(cmd.command) as scope:
        try:
            result = _HANDLERS[cmd.command](cmd, settings)
        except Exception as exc:
            result = handle_exception(exc, cmd.command)
        scope.complete(result.exit_code)
    return result


def _compile(text: str, cmd: Command, settings: AppSettings) -> EndoNode:
    expr = get_expression_parser(settings).parse(text)
    return compile_expr(expr, get_fuel(cmd.fuel, settings))


def _eval(cmd: EvalCommand, settings: AppSettings) -> CommandResult:
    node = _compile(cmd.expression, cmd, settings)
    digits = get_digits(cmd.digits, settings)
    return CommandResult(output=to_decimal(node, digits, settings.arithmetic.max_digits))


def _cf(cmd: CFCommand, settings: AppSettings) -> CommandResult:
    node = _compile(cmd.expression, cmd, settings)
    expansion = endo_to_cf(node, cmd.terms, get_fuel(cmd.fuel, settings))
    return CommandResult(output=str(expansion))


def _verdict_exit(verdict: SignResult) -> ExitCode:
    return ExitCode.INCONCLUSIVE if isinstance(verdict, Inconclusive) else ExitCode.OK


def _sign(cmd: SignCommand, settings: AppSettings) -> CommandResult:
    verdict = sign(_compile(cmd.expression, cmd, settings), get_fuel(cmd.fuel, settings))
    return CommandResult(output=str(verdict), exit_code=_verdict_exit(verdict))


def _compare(cmd: CompareCommand, settings: AppSettings) -> CommandResult:
    left = _compile(cmd.left, cmd, settings)
    right = _compile(cmd.right, cmd, settings)
    verdict = compare(left, right, get_fuel(cmd.fuel, settings))
    match verdict:
        case Positive(witness=n, slope_floor=floor):
            text = f"greater (witness n={n}, λf − λg ≥ {floor})"
        case Negative(witness=n, slope_ceiling=ceiling):
            text = f"less (witness n={n}, λf − λg ≤ {ceiling})"
        case Inconclusive(bound=bound):
            text = f"inconclusive |λf − λg| ≤ {bound}"
    return CommandResult(output=text, exit_code=_verdict_exit(verdict))


def _defect(cmd: DefectCommand, settings: AppSettings) -> CommandResult:
    node = _compile(cmd.expression, cmd, settings)
    range_bound = cmd.range_bound or settings.arithmetic.defect_range
    observed = certify_defect(node, range_bound)
    return CommandResult(
        output=f"defect bound {node.c}; observed max {observed} over |a|,|b| ≤ {range_bound}"
    )


def _saturate(cmd: SaturateCommand, _: AppSettings) -> CommandResult:
    return CommandResult(output=str(saturate(MultSet(generators=cmd.generators))))


def _crt(cmd: CrtCommand, _: AppSettings) -> CommandResult:
    x = PruferFrac.of(cmd.value)
    if cmd.partition is not None:
        left, right = (PrimeSet.of(side) for side in cmd.partition)
        a, b = crt_split(x, left, right, level=cmd.level)
        return CommandResult(output=f"({a}, {b})")
    return CommandResult(output=str(crt_join(x, PruferFrac.of(cmd.other), level=cmd.level)))


def _padic(cmd: PadicCommand, settings: AppSettings) -> CommandResult:
    precision = cmd.precision or settings.localization.precision
    prime = PrimeSet.of([cmd.p])
    root = _SQRT_VALUE.match(cmd.value)
    if root:
        x = padic_sqrt(int(root.group(1)), cmd.p, precision)
    else:
        action = multiplication_action(Fraction(cmd.value.strip()), prime)
        x = padic_extract(action, cmd.p, precision, slack=settings.localization.slack)
    return CommandResult(output=str(x))


def _qend(cmd: QEndCommand, settings: AppSettings) -> CommandResult:
    precision = cmd.precision or settings.localization.precision
    primes = PrimeSet.of(cmd.primes)
    product = qend_decompose(
        multiplication_action(cmd.rational, primes),
        primes,
        precision,
        slack=settings.localization.slack,
    )
    return CommandResult(output=str(product))


_HANDLERS = {
    "eval": _eval,
    "cf": _cf,
    "sign": _sign,
    "compare": _compare,
    "defect": _defect,
    "saturate": _saturate,
    "crt": _crt,
    "padic": _padic,
    "qend": _qend,
}
