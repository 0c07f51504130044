"""Expression syntax tree of the calculator."""

from typing import Annotated, Literal, Union

from pydantic import BaseModel, ConfigDict, Field


class _Node(BaseModel):
    model_config = ConfigDict(frozen=True)


class Int(_Node):
    kind: Literal["int"] = "int"
    value: int = Field(..., ge=0)


class Rat(_Node):
    """Rational literal p/q exactly as written."""

    kind: Literal["rat"] = "rat"
    num: int = Field(..., ge=0)
    den: int = Field(..., ge=0)


class CF(_Node):
    """Continued-fraction literal with an optional repeating tail."""

    kind: Literal["cf"] = "cf"
    head: tuple[int, ...] = Field(..., min_length=1)
    period: tuple[int, ...] = ()


class Add(_Node):
    kind: Literal["add"] = "add"
    left: "Expr"
    right: "Expr"


class Sub(_Node):
    kind: Literal["sub"] = "sub"
    left: "Expr"
    right: "Expr"


class Mul(_Node):
    kind: Literal["mul"] = "mul"
    left: "Expr"
    right: "Expr"


class Div(_Node):
    kind: Literal["div"] = "div"
    left: "Expr"
    right: "Expr"


class Negate(_Node):
    kind: Literal["neg"] = "neg"
    operand: "Expr"


class Inv(_Node):
    kind: Literal["inv"] = "inv"
    operand: "Expr"


Expr = Annotated[
    Union[Int, Rat, CF, Add, Sub, Mul, Div, Negate, Inv],
    Field(discriminator="kind"),
]

for _model in (Add, Sub, Mul, Div, Negate, Inv):
    _model.model_rebuild()
