"""Polynomial expression parsing and canonical formatting.

The input grammar is deliberately small: integer and rational literals
(``p`` or ``p/q``), named variables, ``+ - * ^`` with nonnegative integer
exponents, unary minus and parentheses.  Division appears only inside
rational literals.  Errors carry the character offset they were raised at.

Formatting is canonical -- terms in descending graded-lex order, ``*``
between factors, exponent 1 and unit coefficients suppressed -- and
parsing a formatted polynomial reproduces it exactly.
"""

from __future__ import annotations

from fractions import Fraction

from .poly import Polynomial, RationalFunction

__all__ = [
    "ParseError",
    "default_names",
    "format_ore",
    "format_poly",
    "format_ratfunc",
    "parse_poly",
]


class ParseError(ValueError):
    """Syntax or name error in a polynomial expression, with its offset."""

    def __init__(self, message: str, offset: int):
        self.offset = offset
        super().__init__(f"{message} (at offset {offset})")


def _tokenize(text: str):
    tokens = []
    i = 0
    while i < len(text):
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j]), i))
            i = j
            continue
        if c.isalpha() or c == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("name", text[i:j], i))
            i = j
            continue
        if c in "+-*^/()":
            tokens.append((c, c, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {c!r}", i)
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, names: list[str]):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.names = list(names)
        self.nvars = len(names)

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def expect(self, kind: str):
        token = self.peek()
        if token[0] != kind:
            raise ParseError(f"expected {kind!r}, found {token[1]!r}", token[2])
        return self.advance()

    # expr := term (('+'|'-') term)*
    def expr(self) -> Polynomial:
        value = self.term()
        while self.peek()[0] in "+-":
            op = self.advance()[0]
            right = self.term()
            value = value + right if op == "+" else value - right
        return value

    # term := unary ('*' unary)*
    def term(self) -> Polynomial:
        value = self.unary()
        while self.peek()[0] == "*":
            self.advance()
            value = value * self.unary()
        return value

    # unary := '-' unary | power
    def unary(self) -> Polynomial:
        if self.peek()[0] == "-":
            self.advance()
            return -self.unary()
        return self.power()

    # power := atom ('^' INT)*
    def power(self) -> Polynomial:
        value = self.atom()
        while self.peek()[0] == "^":
            self.advance()
            token = self.peek()
            if token[0] == "-":
                raise ParseError("negative exponents are not allowed", token[2])
            exponent = self.expect("int")[1]
            value = value ** exponent
        return value

    # atom := INT ('/' INT)? | NAME | '(' expr ')'
    def atom(self) -> Polynomial:
        token = self.advance()
        kind, value, offset = token
        if kind == "int":
            numerator = value
            if self.peek()[0] == "/":
                self.advance()
                den_token = self.peek()
                if den_token[0] != "int":
                    raise ParseError(
                        "the denominator of a rational literal must be an integer",
                        den_token[2],
                    )
                self.advance()
                if den_token[1] == 0:
                    raise ParseError("zero denominator in rational literal", den_token[2])
                return Polynomial.constant(self.nvars, Fraction(numerator, den_token[1]))
            return Polynomial.constant(self.nvars, numerator)
        if kind == "name":
            try:
                index = self.names.index(value)
            except ValueError:
                known = ", ".join(self.names)
                raise ParseError(
                    f"unknown variable {value!r} (known: {known})", offset
                ) from None
            return Polynomial.variable(self.nvars, index)
        if kind == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        raise ParseError(f"unexpected token {value!r}", offset)


def parse_poly(text: str, names: list[str]) -> Polynomial:
    """Parse ``text`` into a polynomial over the given variable names."""
    if not names:
        raise ValueError("at least one variable name is required")
    parser = _Parser(text, names)
    value = parser.expr()
    trailing = parser.peek()
    if trailing[0] != "end":
        raise ParseError(f"unexpected trailing token {trailing[1]!r}", trailing[2])
    return value


def default_names(nvars: int) -> list[str]:
    return [f"z{i + 1}" for i in range(nvars)]


def _monomial_text(exponents, names) -> str:
    parts = []
    for name, e in zip(names, exponents):
        if e == 0:
            continue
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


def format_poly(f: Polynomial, names=None) -> str:
    """Canonical text form: descending graded-lex, explicit ``*``, no unit
    coefficients.  ``parse_poly(format_poly(f), names) == f`` always."""
    if names is None:
        names = default_names(f.nvars)
    if len(names) != f.nvars:
        raise ValueError("wrong number of variable names")
    if f.is_zero:
        return "0"
    pieces = []
    for position, (exponents, coefficient) in enumerate(f.sorted_terms()):
        negative = coefficient < 0
        magnitude = -coefficient if negative else coefficient
        monomial = _monomial_text(exponents, names)
        if not monomial:
            body = str(magnitude)
        elif magnitude == 1:
            body = monomial
        else:
            body = f"{magnitude}*{monomial}"
        if position == 0:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f" - {body}" if negative else f" + {body}")
    return "".join(pieces)


def format_ratfunc(value: RationalFunction, names=None) -> str:
    """``num / den`` with the canonical monic denominator; parentheses are
    added around multi-term numerators and denominators."""
    if names is None:
        names = default_names(value.nvars)
    if value.is_polynomial:
        return format_poly(value.num, names)
    num_text = format_poly(value.num, names)
    den_text = format_poly(value.den, names)
    if len(value.num.terms) > 1:
        num_text = f"({num_text})"
    if len(value.den.terms) > 1:
        den_text = f"({den_text})"
    return f"{num_text} / {den_text}"


def format_ore(element, names=None, generator: str = "x") -> str:
    """Left-normal form, highest x-power first, coefficients on the left."""
    coefficients = list(element.coeffs)
    if not coefficients:
        return "0"
    nvars = element.ctx.nvars
    if names is None:
        names = default_names(nvars)
    pieces = []
    for i in range(len(coefficients) - 1, -1, -1):
        coefficient = coefficients[i]
        if isinstance(coefficient, RationalFunction) and coefficient.is_polynomial:
            coefficient = coefficient.num
        if isinstance(coefficient, Polynomial) and coefficient.is_zero:
            continue
        if isinstance(coefficient, RationalFunction) and coefficient.is_zero:
            continue
        xpart = "" if i == 0 else (generator if i == 1 else f"{generator}^{i}")
        if isinstance(coefficient, RationalFunction):
            body = format_ratfunc(coefficient, names)
            negative = False
        elif len(coefficient.terms) > 1:
            body = format_poly(coefficient, names)
            negative = False
        else:
            (exponents, scalar), = coefficient.terms.items()
            negative = scalar < 0
            magnitude = -scalar if negative else scalar
            monomial = _monomial_text(exponents, names)
            if not monomial:
                body = str(magnitude)
            elif magnitude == 1:
                body = monomial
            else:
                body = f"{magnitude}*{monomial}"
        if xpart:
            # compound coefficients (sums, quotients) get parentheses in front
            # of the generator; single monomials like 1/2*z1 do not need them
            if " " in body:
                body = f"({body})"
            text = xpart if body == "1" else f"{body}*{xpart}"
        else:
            text = body
            if negative is False and text.startswith("-"):
                negative = True
                text = text[1:]
        if not pieces:
            pieces.append(f"-{text}" if negative else text)
        else:
            pieces.append(f" - {text}" if negative else f" + {text}")
    return "".join(pieces) if pieces else "0"
