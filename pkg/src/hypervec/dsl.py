"""Model-description files: lexer, parser, and canonical printer.

Grammar (whitespace-insensitive, '#' comments to end of line):

    file     := model check*
    model    := "model" STRING "{"
                    "field" ("Q" | "Qi")
                    "dim" INT
                    "product" family
                    ["inner" ip]
                "}"
    family   := "trivial" | "zero_augmented"
              | "geometric" "(" RATIONAL ")" | "sign"
    ip       := "dot" | "weighted_dot" "(" RATIONAL ("," RATIONAL)* ")"
    check    := "check" IDENT (IDENT "=" INT)*
    RATIONAL := INT ["/" INT]

Strings are double-quoted with no escape sequences. Every reported
error, syntactic or semantic, carries a 1-based line and column plus
the offending source line.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .checker import SUITE_NAMES
from .inner import DotProduct, InnerProductSpec, WeightedDot
from .models import (
    Family,
    Geometric,
    ModelSpec,
    Sign,
    Trivial,
    ZeroAugmented,
    family_token,
)
from .scalars import FieldTag

_PARAM_KEYS = ("seed", "samples", "depth", "height")


class ModelFileError(ValueError):
    """Positioned syntax or semantic error in a model file."""

    def __init__(
        self,
        message: str,
        line: int,
        column: int,
        expected: tuple[str, ...] = (),
        source_line: str = "",
    ):
        self.message = message
        self.line = line
        self.column = column
        self.expected = tuple(expected)
        self.source_line = source_line
        rendered = f"line {line}, column {column}: {message}"
        if source_line:
            rendered += f"\n    {source_line}\n    {' ' * (column - 1)}^"
        super().__init__(rendered)


@dataclass(frozen=True)
class CheckDirective:
    """One suite to run, with optional sampling-parameter overrides."""

    suite: str
    params: dict[str, int] = dc_field(default_factory=dict)


@dataclass(frozen=True)
class ModelFile:
    """A parsed model declaration plus its check directives.

    The name must not contain double quotes or newlines, or the
    canonical printer's output stops being reparseable.
    """

    name: str
    model: ModelSpec
    inner: InnerProductSpec | None
    checks: tuple[CheckDirective, ...] = ()


@dataclass(frozen=True)
class _Token:
    kind: str  # ident | int | string | one of {}()=,/ | eof
    text: str
    line: int
    column: int

    def shown(self) -> str:
        return "end of file" if self.kind == "eof" else f"'{self.text}'"


_PUNCT = "{}(),=/"


def _lex(text: str, lines: list[str]) -> list[_Token]:
    tokens: list[_Token] = []
    i, line, col = 0, 1, 1
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            i += 1
            line += 1
            col = 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        start_line, start_col = line, col
        if ch in _PUNCT:
            tokens.append(_Token(ch, ch, start_line, start_col))
            i += 1
            col += 1
            continue
        if ch == '"':
            j = i + 1
            while j < n and text[j] not in '"\n':
                j += 1
            if j >= n or text[j] != '"':
                raise ModelFileError(
                    "unterminated string literal",
                    start_line,
                    start_col,
                    source_line=_source_line(lines, start_line),
                )
            tokens.append(_Token("string", text[i + 1 : j], start_line, start_col))
            col += j + 1 - i
            i = j + 1
            continue
        if ch.isdigit() or (ch == "-" and i + 1 < n and text[i + 1].isdigit()):
            j = i + 1
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(_Token("int", text[i:j], start_line, start_col))
            col += j - i
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i + 1
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(_Token("ident", text[i:j], start_line, start_col))
            col += j - i
            i = j
            continue
        raise ModelFileError(
            f"unexpected character {ch!r}",
            start_line,
            start_col,
            source_line=_source_line(lines, start_line),
        )
    tokens.append(_Token("eof", "", line, col))
    return tokens


def _source_line(lines: list[str], line: int) -> str:
    return lines[line - 1] if 1 <= line <= len(lines) else ""


class _Parser:
    def __init__(self, text: str):
        self.lines = text.splitlines()
        self.tokens = _lex(text, self.lines)
        self.pos = 0

    def peek(self, ahead: int = 0) -> _Token:
        return self.tokens[min(self.pos + ahead, len(self.tokens) - 1)]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        if tok.kind != "eof":
            self.pos += 1
        return tok

    def fail(self, tok: _Token, message: str, expected: tuple[str, ...] = ()):
        raise ModelFileError(
            message,
            tok.line,
            tok.column,
            expected=expected,
            source_line=_source_line(self.lines, tok.line),
        )

    def expect(self, kind: str, what: str) -> _Token:
        tok = self.advance()
        if tok.kind != kind:
            self.fail(tok, f"expected {what}, found {tok.shown()}", expected=(kind,))
        return tok

    def expect_word(self, word: str) -> _Token:
        tok = self.advance()
        if tok.kind != "ident" or tok.text != word:
            self.fail(tok, f"expected '{word}', found {tok.shown()}", expected=(word,))
        return tok

    # --- grammar productions ---

    def model_file(self) -> ModelFile:
        self.expect_word("model")
        name = self.expect("string", "a model name in double quotes")
        self.expect("{", "'{'")
        self.expect_word("field")
        field_tok = self.expect("ident", "'Q' or 'Qi'")
        if field_tok.text == "Q":
            field = FieldTag.Q
        elif field_tok.text == "Qi":
            field = FieldTag.QI
        else:
            self.fail(
                field_tok,
                f"unknown field '{field_tok.text}'",
                expected=("Q", "Qi"),
            )
        self.expect_word("dim")
        dim_tok = self.expect("int", "a dimension")
        dim = int(dim_tok.text)
        if dim < 1:
            self.fail(dim_tok, "dimension must be at least 1")
        self.expect_word("product")
        family = self.family(field)
        inner: InnerProductSpec | None = None
        nxt = self.peek()
        if nxt.kind == "ident" and nxt.text == "inner":
            self.advance()
            inner = self.inner_product(dim)
        self.expect("}", "'}'")
        checks = []
        while self.peek().kind != "eof":
            checks.append(self.check_directive())
        return ModelFile(name.text, ModelSpec(field, dim, family), inner, tuple(checks))

    def family(self, field: FieldTag) -> Family:
        tok = self.expect("ident", "a product family")
        if tok.text == "trivial":
            return Trivial()
        if tok.text == "zero_augmented":
            return ZeroAugmented()
        if tok.text == "sign":
            if field is FieldTag.QI:
                self.fail(tok, "sign requires field Q")
            return Sign()
        if tok.text == "geometric":
            self.expect("(", "'('")
            ratio, rtok = self.rational()
            self.expect(")", "')'")
            if ratio <= 0:
                self.fail(rtok, "geometric ratio must be positive")
            if ratio == 1:
                self.fail(rtok, "geometric ratio must not be 1")
            return Geometric(ratio)
        self.fail(
            tok,
            f"unknown product family '{tok.text}'",
            expected=("trivial", "zero_augmented", "geometric", "sign"),
        )
        raise AssertionError("unreachable")

    def inner_product(self, dim: int) -> InnerProductSpec:
        tok = self.expect("ident", "an inner product kind")
        if tok.text == "dot":
            return DotProduct()
        if tok.text == "weighted_dot":
            open_tok = self.expect("(", "'('")
            weights = [self.rational()]
            while self.peek().kind == ",":
                self.advance()
                weights.append(self.rational())
            self.expect(")", "')'")
            for w, wtok in weights:
                if w <= 0:
                    self.fail(wtok, "weights must be positive")
            if len(weights) != dim:
                self.fail(
                    open_tok,
                    f"weight count {len(weights)} does not match dimension {dim}",
                )
            return WeightedDot(tuple(w for w, _ in weights))
        self.fail(
            tok,
            f"unknown inner product '{tok.text}'",
            expected=("dot", "weighted_dot"),
        )
        raise AssertionError("unreachable")

    def rational(self) -> tuple[Fraction, _Token]:
        num_tok = self.expect("int", "a rational number")
        num = int(num_tok.text)
        if self.peek().kind == "/":
            self.advance()
            den_tok = self.expect("int", "a denominator")
            den = int(den_tok.text)
            if den == 0:
                self.fail(den_tok, "denominator must not be zero")
            if den < 0:
                self.fail(den_tok, "denominator must be positive")
            return Fraction(num, den), num_tok
        return Fraction(num), num_tok

    def check_directive(self) -> CheckDirective:
        self.expect_word("check")
        suite_tok = self.expect("ident", "a suite name")
        if suite_tok.text not in SUITE_NAMES:
            self.fail(
                suite_tok,
                f"unknown suite '{suite_tok.text}'",
                expected=SUITE_NAMES,
            )
        params: dict[str, int] = {}
        while self.peek().kind == "ident" and self.peek(1).kind == "=":
            key_tok = self.advance()
            if key_tok.text not in _PARAM_KEYS:
                self.fail(
                    key_tok,
                    f"unknown parameter '{key_tok.text}'",
                    expected=_PARAM_KEYS,
                )
            if key_tok.text in params:
                self.fail(key_tok, f"duplicate parameter '{key_tok.text}'")
            self.advance()  # '='
            val_tok = self.expect("int", "an integer value")
            val = int(val_tok.text)
            if key_tok.text == "seed":
                if not 0 <= val < 1 << 64:
                    self.fail(val_tok, "seed must fit in 64 unsigned bits")
            elif val < 1:
                self.fail(val_tok, f"{key_tok.text} must be at least 1")
            params[key_tok.text] = val
        return CheckDirective(suite_tok.text, params)


def parse_model_file(text: str) -> ModelFile:
    """Parse a .hvs document; raises ModelFileError with position info."""
    parser = _Parser(text)
    return parser.model_file()


def format_model_file(mf: ModelFile) -> str:
    """Canonical text form; parsing it back yields an equal ModelFile."""
    lines = [
        f'model "{mf.name}" {{',
        f"  field {mf.model.field}",
        f"  dim {mf.model.dim}",
        f"  product {family_token(mf.model.family)}",
    ]
    if mf.inner is not None:
        lines.append(f"  inner {mf.inner.describe()}")
    lines.append("}")
    for directive in mf.checks:
        parts = [f"check {directive.suite}"]
        parts.extend(f"{k}={v}" for k, v in directive.params.items())
        lines.append(" ".join(parts))
    return "\n".join(lines) + "\n"
