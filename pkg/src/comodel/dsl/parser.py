"""Line-oriented command language for scene edits.

Grammar (one statement per line, ``#`` comments, blank lines ignored)::

    statement := verb (key "=" value)+
    verb      := create | modify | material | transform | hide | show | duplicate
    key       := [A-Za-z_][A-Za-z0-9_]*
    value     := number | true | false | "quoted string" | identifier
               | "(" number "," number "," number ")"

Whitespace between tokens is insignificant; everything is
case-sensitive. Angles written in scripts are degrees (conversion to
radians happens at execution).
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Union

VERBS = ("create", "modify", "material", "transform", "hide", "show", "duplicate")

_IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_NUMBER_RE = re.compile(r"[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?")


class ParseError(Exception):
    """First syntax error in a script; no recovery is attempted."""

    def __init__(self, line: int, column: int, expected: str, found: str):
        super().__init__(f"line {line}, column {column}: expected {expected}, found {found}")
        self.line = line
        self.column = column
        self.expected = expected
        self.found = found


@dataclass(frozen=True)
class Number:
    value: float


@dataclass(frozen=True)
class Ident:
    value: str


@dataclass(frozen=True)
class Str:
    value: str


@dataclass(frozen=True)
class VecValue:
    value: tuple[float, float, float]


@dataclass(frozen=True)
class BoolValue:
    value: bool


ArgValue = Union[Number, Ident, Str, VecValue, BoolValue]


@dataclass
class Statement:
    verb: str
    args: dict[str, ArgValue]


@dataclass(frozen=True)
class Span:
    line: int  # 1-based
    column_start: int  # 1-based, inclusive
    column_end: int  # 1-based, exclusive


@dataclass
class Script:
    statements: list[Statement] = field(default_factory=list)
    source_spans: list[Span] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.statements)


class _LineParser:
    def __init__(self, text: str, line_no: int):
        self.text = text
        self.line = line_no
        self.pos = 0

    @property
    def column(self) -> int:
        return self.pos + 1

    def fail(self, expected: str):
        if self.pos >= len(self.text):
            found = "end of line"
        else:
            found = repr(self.text[self.pos])
        raise ParseError(self.line, self.column, expected, found)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos] in " \t":
            self.pos += 1

    def at_end(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)

    def expect_char(self, ch: str) -> None:
        self.skip_ws()
        if self.pos < len(self.text) and self.text[self.pos] == ch:
            self.pos += 1
            return
        self.fail(f"'{ch}'")

    def ident(self, what: str) -> str:
        self.skip_ws()
        m = _IDENT_RE.match(self.text, self.pos)
        if not m:
            self.fail(what)
        self.pos = m.end()
        return m.group()

    def number(self) -> float:
        self.skip_ws()
        m = _NUMBER_RE.match(self.text, self.pos)
        if not m:
            self.fail("a number")
        self.pos = m.end()
        return float(m.group())

    def quoted(self) -> str:
        # caller saw the opening quote
        self.pos += 1
        out = []
        while self.pos < len(self.text):
            ch = self.text[self.pos]
            if ch == '"':
                self.pos += 1
                return "".join(out)
            if ch == "\\":
                if self.pos + 1 >= len(self.text):
                    break
                nxt = self.text[self.pos + 1]
                if nxt not in ('"', "\\"):
                    self.pos += 1
                    self.fail("an escape ('\\\"' or '\\\\')")
                out.append(nxt)
                self.pos += 2
                continue
            out.append(ch)
            self.pos += 1
        self.fail("closing '\"'")

    def value(self) -> ArgValue:
        self.skip_ws()
        if self.pos >= len(self.text):
            self.fail("a value")
        ch = self.text[self.pos]
        if ch == "(":
            self.pos += 1
            x = self.number()
            self.expect_char(",")
            y = self.number()
            self.expect_char(",")
            z = self.number()
            self.expect_char(")")
            return VecValue((x, y, z))
        if ch == '"':
            return Str(self.quoted())
        m = _NUMBER_RE.match(self.text, self.pos)
        if m:
            self.pos = m.end()
            return Number(float(m.group()))
        m = _IDENT_RE.match(self.text, self.pos)
        if m:
            self.pos = m.end()
            word = m.group()
            if word == "true":
                return BoolValue(True)
            if word == "false":
                return BoolValue(False)
            return Ident(word)
        self.fail("a value")


def _strip_comment(line: str) -> str:
    """Drop '#' to end of line, ignoring '#' inside quoted strings."""
    in_string = False
    i = 0
    while i < len(line):
        ch = line[i]
        if in_string:
            if ch == "\\":
                i += 1
            elif ch == '"':
                in_string = False
        elif ch == '"':
            in_string = True
        elif ch == "#":
            return line[:i]
        i += 1
    return line


def parse(text: str) -> Script:
    script = Script()
    for line_no, raw_line in enumerate(text.split("\n"), start=1):
        line = _strip_comment(raw_line.rstrip("\r"))
        lp = _LineParser(line, line_no)
        if lp.at_end():
            continue
        col_start = lp.column
        verb = lp.ident("a verb (" + "|".join(VERBS) + ")")
        if verb not in VERBS:
            raise ParseError(line_no, col_start, "a verb (" + "|".join(VERBS) + ")", repr(verb))
        args: dict[str, ArgValue] = {}
        while not lp.at_end():
            key_col = lp.column
            key = lp.ident("an argument key")
            if key in args:
                raise ParseError(line_no, key_col, "a unique argument key", f"duplicate {key!r}")
            lp.expect_char("=")
            args[key] = lp.value()
        if not args:
            lp.fail("at least one key=value argument")
        script.statements.append(Statement(verb=verb, args=args))
        script.source_spans.append(Span(line=line_no, column_start=col_start, column_end=lp.column))
    return script


def format_number(value: float) -> str:
    if value == int(value) and abs(value) < 1e15:
        return str(int(value))
    return repr(value)


def _format_value(value: ArgValue) -> str:
    if isinstance(value, Number):
        return format_number(value.value)
    if isinstance(value, Ident):
        return value.value
    if isinstance(value, BoolValue):
        return "true" if value.value else "false"
    if isinstance(value, VecValue):
        return "(" + ",".join(format_number(c) for c in value.value) + ")"
    if isinstance(value, Str):
        escaped = value.value.replace("\\", "\\\\").replace('"', '\\"')
        return f'"{escaped}"'
    raise TypeError(f"not an ArgValue: {value!r}")


def format_script(script: Script) -> str:
    """Canonical text: one statement per line, original arg order,
    shortest round-trip decimals. parse(format_script(s)) == s up to spans."""
    lines = []
    for stmt in script.statements:
        parts = [stmt.verb]
        parts.extend(f"{key}={_format_value(value)}" for key, value in stmt.args.items())
        lines.append(" ".join(parts))
    return "\n".join(lines) + ("\n" if lines else "")


def script_equal(a: Script, b: Script) -> bool:
    """Structural equality (spans and comments ignored)."""
    return a.statements == b.statements
