"""Expression language: tokenizer, Pratt parser, printer and compiler to nodes."""

import re
from dataclasses import dataclass
from fractions import Fraction

from eudoxus.core.exceptions import DepthExceededError, ExprSyntaxError, ValidationError
from eudoxus.models.cfseq import CFSeq, format_cf
from eudoxus.models.domain import Fuel
from eudoxus.models.expr import CF, Add, Div, Expr, Int, Inv, Mul, Negate, Rat, Sub
from eudoxus.services.cf_bridge import cf_to_endo
from eudoxus.services.endo_core import EndoNode, IntSlope, RatSlope
from eudoxus.services.real_ops import DEFAULT_FUEL, add, invert, mul, neg, sub

_NUMBER = r"\d+(?:\.\d+)?"
_TOKEN_PATTERN = re.compile(
    rf"(?P<ws>\s+)"
    rf"|(?P<rat>{_NUMBER}/{_NUMBER})"
    rf"|(?P<num>{_NUMBER})"
    rf"|(?P<name>[A-Za-z_]+)"
    rf"|(?P<op>[-+*/()\[\];,−·])"
)

# Operator spellings folded onto their ASCII form.
_ALIASES = {"−": "-", "·": "*"}

_BINDING = {"+": 10, "-": 10, "*": 20, "/": 20}
_PREFIX_BINDING = 30
_BINARY = {"+": Add, "-": Sub, "*": Mul, "/": Div}

_PRIMARY_EXPECTED = frozenset({"number", "(", "-", "cf[", "inv("})
_OPERATOR_EXPECTED = frozenset({"+", "-", "*", "/", "end of input"})


@dataclass(frozen=True, slots=True)
class Token:
    kind: str
    text: str
    offset: int


def tokenize(text: str) -> list[Token]:
    """Split text into tokens carrying UTF-8 byte offsets; ends with an `end` token."""
    tokens: list[Token] = []
    position, offset = 0, 0
    while position < len(text):
        match = _TOKEN_PATTERN.match(text, position)
        if match is None:
            raise ExprSyntaxError(
                f"unexpected character {text[position]!r}", offset, _PRIMARY_EXPECTED
            )
        kind, lexeme = match.lastgroup, match.group()
        if kind != "ws":
            if kind == "op":
                lexeme = _ALIASES.get(lexeme, lexeme)
            tokens.append(Token(kind, lexeme, offset))
        position = match.end()
        offset += len(match.group().encode())
    tokens.append(Token("end", "", offset))
    return tokens


def _decimal(text: str) -> tuple[int, int]:
    value = Fraction(text)
    scale = 10 ** len(text.partition(".")[2])
    return int(value * scale), scale


class ExpressionParser:
    """Pratt parser for the calculator grammar.

    Unary minus binds tighter than `*` and `/`, which bind tighter than `+`
    and `-`; binary operators associate to the left.
    """

    def __init__(self, max_depth: int = 64, max_input_bytes: int = 65536):
        self.max_depth = max_depth
        self.max_input_bytes = max_input_bytes

    def parse(self, text: str) -> Expr:
        """Parse one expression.

        Raises:
            ValidationError: If the input is larger than the configured limit
            ExprSyntaxError: On malformed input, with byte offset and expected tokens
            DepthExceededError: If the tree is deeper than the configured limit
        """
        size = len(text.encode())
        if size > self.max_input_bytes:
            raise ValidationError(
                f"expression is {size} bytes, limit is {self.max_input_bytes}",
                details={"size": size, "limit": self.max_input_bytes},
            )
        self._tokens = tokenize(text)
        self._index = 0
        expr, _ = self._expression(0, 0)
        token = self._peek()
        if token.kind != "end":
            raise ExprSyntaxError(f"unexpected {token.text!r}", token.offset, _OPERATOR_EXPECTED)
        return expr

    def _peek(self) -> Token:
        return self._tokens[self._index]

    def _advance(self) -> Token:
        token = self._tokens[self._index]
        self._index += 1
        return token

    def _expect(self, text: str) -> Token:
        token = self._peek()
        if token.kind != "op" or token.text != text:
            found = "end of input" if token.kind == "end" else repr(token.text)
            raise ExprSyntaxError(f"expected {text!r}, found {found}", token.offset, {text})
        return self._advance()

    def _checked(self, expr: Expr, depth: int, offset: int) -> tuple[Expr, int]:
        if depth > self.max_depth:
            raise DepthExceededError(
                f"expression deeper than {self.max_depth}",
                details={"offset": offset, "limit": self.max_depth},
            )
        return expr, depth

    def _expression(self, rbp: int, nesting: int) -> tuple[Expr, int]:
        if nesting > self.max_depth:
            raise DepthExceededError(
                f"expression nested deeper than {self.max_depth}",
                details={"offset": self._peek().offset, "limit": self.max_depth},
            )
        left, depth = self._prefix(nesting)
        while True:
            token = self._peek()
            bp = _BINDING.get(token.text, 0) if token.kind == "op" else 0
            if bp <= rbp:
                return left, depth
            self._advance()
            right, right_depth = self._expression(bp, nesting + 1)
            left, depth = self._checked(
                _BINARY[token.text](left=left, right=right),
                1 + max(depth, right_depth),
                token.offset,
            )

    def _prefix(self, nesting: int) -> tuple[Expr, int]:
        token = self._advance()
        match token.kind, token.text:
            case "num", text if "." in text:
                num, den = _decimal(text)
                return Rat(num=num, den=den), 1
            case "num", text:
                return Int(value=int(text)), 1
            case "rat", text:
                top, bottom = text.split("/")
                (a, b), (c, d) = _decimal(top), _decimal(bottom)
                return Rat(num=a * d, den=b * c), 1
            case "op", "-":
                operand, depth = self._expression(_PREFIX_BINDING, nesting + 1)
                return self._checked(Negate(operand=operand), depth + 1, token.offset)
            case "op", "(":
                inner = self._expression(0, nesting + 1)
                self._expect(")")
                return inner
            case "name", "inv":
                self._expect("(")
                operand, depth = self._expression(0, nesting + 1)
                self._expect(")")
                return self._checked(Inv(operand=operand), depth + 1, token.offset)
            case "name", "cf":
                return self._cf_literal(), 1
            case "end", _:
                raise ExprSyntaxError("unexpected end of input", token.offset, _PRIMARY_EXPECTED)
        raise ExprSyntaxError(f"unexpected {token.text!r}", token.offset, _PRIMARY_EXPECTED)

    def _integer(self, signed: bool = False) -> int:
        negative = False
        if signed and self._peek().text == "-" and self._peek().kind == "op":
            self._advance()
            negative = True
        token = self._advance()
        if token.kind != "num" or "." in token.text:
            raise ExprSyntaxError("expected an integer term", token.offset, {"integer"})
        return -int(token.text) if negative else int(token.text)

    def _cf_literal(self) -> CF:
        """cf[a0], cf[a0;a1,...] or cf[a0;a1,...,(b1,...)*]."""
        self._expect("[")
        head, period = [self._integer(signed=True)], []
        if self._peek().text == ";":
            self._advance()
            while True:
                if self._peek().text == "(":
                    self._advance()
                    period.append(self._integer())
                    while self._peek().text == ",":
                        self._advance()
                        period.append(self._integer())
                    self._expect(")")
                    self._expect("*")
                    break
                head.append(self._integer())
                if self._peek().text != ",":
                    break
                self._advance()
        self._expect("]")
        return CF(head=tuple(head), period=tuple(period))


def render(expr: Expr) -> str:
    """Print an expression so that parsing the text gives back the same tree."""
    match expr:
        case Int(value=value):
            return str(value)
        case Rat(num=num, den=den):
            return f"{num}/{den}"
        case CF(head=head, period=period):
            return format_cf(head, period)
        case Negate(operand=operand):
            return f"-{render(operand)}"
        case Inv(operand=operand):
            return f"inv({render(operand)})"
        case Div(left=left, right=right):
            text = render(left)
            if isinstance(left, (Int, Rat)):
                text = f"({text})"
            return f"({text} / {render(right)})"
        case Add(left=left, right=right):
            return f"({render(left)} + {render(right)})"
        case Sub(left=left, right=right):
            return f"({render(left)} - {render(right)})"
        case Mul(left=left, right=right):
            return f"({render(left)} * {render(right)})"
    raise ValidationError(f"cannot render {type(expr).__name__}")


def compile_expr(expr: Expr, fuel: Fuel | int = DEFAULT_FUEL) -> EndoNode:
    """Build the node DAG of an expression; division inverts its right operand.

    Raises:
        ValidationError: For a zero rational denominator or a bad CF term
        InconclusiveSignError: When a divisor has no sign certificate within fuel
    """
    match expr:
        case Int(value=value):
            return IntSlope(value)
        case Rat(num=num, den=den):
            return RatSlope(num, den)
        case CF(head=head, period=period):
            return cf_to_endo(CFSeq.periodic(head, period))
        case Negate(operand=operand):
            return neg(compile_expr(operand, fuel))
        case Inv(operand=operand):
            return invert(compile_expr(operand, fuel), fuel)
        case Add(left=left, right=right):
            return add(compile_expr(left, fuel), compile_expr(right, fuel))
        case Sub(left=left, right=right):
            return sub(compile_expr(left, fuel), compile_expr(right, fuel))
        case Mul(left=left, right=right):
            return mul(compile_expr(left, fuel), compile_expr(right, fuel))
        case Div(left=left, right=right):
            return mul(compile_expr(left, fuel), invert(compile_expr(right, fuel), fuel))
    raise ValidationError(f"cannot compile {type(expr).__name__}")
