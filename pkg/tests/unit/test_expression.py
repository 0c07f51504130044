from fractions import Fraction

import pytest

from eudoxus.core.exceptions import (
    DepthExceededError,
    ExprSyntaxError,
    InconclusiveSignError,
    ValidationError,
)
from eudoxus.models.expr import CF, Add, Div, Int, Inv, Mul, Negate, Rat, Sub
from eudoxus.services.endo_core import approx
from eudoxus.services.expression import ExpressionParser, compile_expr, render, tokenize
from eudoxus.services.real_ops import to_decimal

SQRT2 = CF(head=(1,), period=(2,))


@pytest.fixture
def parser() -> ExpressionParser:
    return ExpressionParser()


class TestTokenize:
    def test_rational_literal_has_no_spaces(self):
        assert [t.kind for t in tokenize("3/4")] == ["rat", "end"]
        assert [t.kind for t in tokenize("3 / 4")] == ["num", "op", "num", "end"]

    def test_offsets_are_utf8_bytes(self):
        tokens = tokenize("1 − 2")
        assert [(t.text, t.offset) for t in tokens] == [("1", 0), ("-", 2), ("2", 6), ("", 7)]


class TestParse:
    @pytest.mark.parametrize(
        ("text", "tree"),
        [
            ("3/4 + 1/4", Add(left=Rat(num=3, den=4), right=Rat(num=1, den=4))),
            ("cf[1;(2)*] * cf[1;(2)*]", Mul(left=SQRT2, right=SQRT2)),
            ("1 + 2 * 3", Add(left=Int(value=1), right=Mul(left=Int(value=2), right=Int(value=3)))),
            (
                "1 - 2 - 3",
                Sub(left=Sub(left=Int(value=1), right=Int(value=2)), right=Int(value=3)),
            ),
            ("-2 * 3", Mul(left=Negate(operand=Int(value=2)), right=Int(value=3))),
            ("3 / 4", Div(left=Int(value=3), right=Int(value=4))),
            ("(1 + 2) * 3", Mul(left=Add(left=Int(value=1), right=Int(value=2)), right=Int(value=3))),
            ("inv(2)", Inv(operand=Int(value=2))),
            ("2 · 3 − 1", Sub(left=Mul(left=Int(value=2), right=Int(value=3)), right=Int(value=1))),
        ],
    )
    def test_trees(self, parser, text, tree):
        assert parser.parse(text) == tree

    def test_decimal_literals_are_exact(self, parser):
        assert parser.parse("1.5") == Rat(num=15, den=10)
        assert parser.parse("1.41421/1") == Rat(num=141421, den=100000)
        assert parser.parse("1/0.5") == Rat(num=10, den=5)

    def test_cf_literals(self, parser):
        assert parser.parse("cf[3]") == CF(head=(3,))
        assert parser.parse("cf[-1;2,3]") == CF(head=(-1, 2, 3))
        assert parser.parse("cf[1;1,(1,2)*]") == CF(head=(1, 1), period=(1, 2))

    def test_truncated_input(self, parser):
        with pytest.raises(ExprSyntaxError) as info:
            parser.parse("1 + ")
        assert info.value.offset == 4
        assert "number" in info.value.expected

    @pytest.mark.parametrize(
        ("text", "offset"),
        [("(1", 2), ("1 2", 2), ("1 $", 2), ("cf[1;(2)]", 8), ("1 − )", 6), ("inv 2", 4)],
    )
    def test_error_offsets(self, parser, text, offset):
        with pytest.raises(ExprSyntaxError) as info:
            parser.parse(text)
        assert info.value.offset == offset

    def test_depth_limit(self):
        parser = ExpressionParser(max_depth=4)
        assert parser.parse("1+1+1") is not None
        with pytest.raises(DepthExceededError):
            parser.parse("1+1+1+1+1+1")
        with pytest.raises(DepthExceededError):
            parser.parse("-(-(-(-(-1))))")

    def test_deep_nesting_stops_before_recursion_limit(self, parser):
        with pytest.raises(DepthExceededError):
            parser.parse("(" * 5000 + "1" + ")" * 5000)

    def test_input_size_limit(self):
        with pytest.raises(ValidationError):
            ExpressionParser(max_input_bytes=5).parse("1+2+3+4")


class TestRender:
    @pytest.mark.parametrize(
        "text",
        [
            "3/4 + 1/4",
            "cf[1;(2)*] * cf[1;(2)*]",
            "1 - 2 - 3",
            "1 - (2 - 3)",
            "-2 * -3",
            "3 / 4",
            "3/4 / 5",
            "inv(1 + cf[0;1,(2,3)*])",
            "--1.25",
            "1 / (2 / 3)",
        ],
    )
    def test_round_trip(self, parser, text):
        tree = parser.parse(text)
        assert parser.parse(render(tree)) == tree

    def test_int_and_rat_left_of_division_are_wrapped(self):
        assert render(Div(left=Int(value=3), right=Int(value=4))) == "((3) / 4)"
        assert render(Div(left=Rat(num=1, den=2), right=Int(value=4))) == "((1/2) / 4)"


class TestCompile:
    def test_rational_arithmetic(self, parser):
        assert to_decimal(compile_expr(parser.parse("1/3 + 2/3")), 4) == "1.0000 ±1e-4"

    def test_division_uses_inverse(self, parser):
        node = compile_expr(parser.parse("6 / 3"))
        assert approx(node, 10_000).contains(2)

    def test_sqrt2_squared(self, parser):
        node = compile_expr(parser.parse("cf[1;(2)*] * cf[1;(2)*]"))
        assert node.c == 29
        assert to_decimal(node, 8) == "2.00000000 ±1e-8"

    def test_division_by_zero_class(self, parser):
        with pytest.raises(InconclusiveSignError):
            compile_expr(parser.parse("1 / (1 - 1)"), fuel=8)

    def test_zero_denominator(self, parser):
        with pytest.raises(ValidationError):
            compile_expr(parser.parse("1/0"))

    def test_bad_cf_term(self, parser):
        with pytest.raises(ValidationError):
            compile_expr(parser.parse("cf[1;0]"))

    def test_negative_value(self, parser):
        node = compile_expr(parser.parse("-(1/4) * 2"))
        assert approx(node, 1000).contains(Fraction(-1, 2))
