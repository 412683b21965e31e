from .parser import (
    ArgValue,
    BoolValue,
    Ident,
    Number,
    ParseError,
    Script,
    Span,
    Statement,
    Str,
    VecValue,
    VERBS,
    format_number,
    format_script,
    parse,
    script_equal,
)
from .executor import ExecReport, InvalidArgValue, MissingArg, execute

__all__ = [name for name in dir() if not name.startswith("_")]
