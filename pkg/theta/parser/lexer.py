"""
Tokenizer for the `.theta` family of text formats.

One master regex, one TokenKind per alternative. Offsets in tokens are byte
offsets into the UTF-8 encoding of the input so spans in ParseErrors can be
used directly on the raw file.
"""

from __future__ import annotations
import re
from dataclasses import dataclass
from enum import Enum
from typing import List

from theta.errors import ParseError, ParseErrorKind, SourceSpan


class TokenKind(Enum):
    NUMBER = "number"
    IDENT = "identifier"
    PLUS = "+"
    MINUS = "-"
    STAR = "*"
    SLASH = "/"
    CARET = "^"
    LPAREN = "("
    RPAREN = ")"
    LBRACKET = "["
    RBRACKET = "]"
    COMMA = ","
    SEMICOLON = ";"
    COLON = ":"
    EQUALS = "="
    NEWLINE = "newline"
    EOF = "end of input"


_TOKEN_RE = re.compile(
    r"""
    (?P<comment>\#[^\n]*)
  | (?P<newline>\r?\n)
  | (?P<space>[ \t\r\f\v]+)
  | (?P<number>\d+)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<punct>[-+*/^()\[\],;:=])
    """,
    re.VERBOSE,
)

_PUNCT = {kind.value: kind for kind in TokenKind if len(kind.value) == 1}


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    text: str
    span: SourceSpan


class _ByteOffsets:
    """Character index -> byte offset, shifted by a base offset."""

    def __init__(self, text: str, base: int):
        self._table = [base]
        for ch in text:
            self._table.append(self._table[-1] + len(ch.encode("utf-8")))

    def __call__(self, index: int) -> int:
        return self._table[index]


def tokenize(text: str, base_offset: int = 0) -> List[Token]:
    """
    Split text into tokens, dropping spaces and comments.

    Args:
        text: Source text
        base_offset: Byte offset of text inside the original file

    Raises:
        ParseError(UnexpectedToken) on a character outside the alphabet
    """
    offsets = _ByteOffsets(text, base_offset)
    tokens: List[Token] = []
    pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            span = SourceSpan(offsets(pos), offsets(pos + 1))
            raise ParseError(ParseErrorKind.UNEXPECTED_TOKEN, span, f"unexpected character {text[pos]!r}")
        group = match.lastgroup
        start, end = match.span()
        span = SourceSpan(offsets(start), offsets(end))
        if group == "newline":
            tokens.append(Token(TokenKind.NEWLINE, "\n", span))
        elif group == "number":
            tokens.append(Token(TokenKind.NUMBER, match.group(), span))
        elif group == "ident":
            tokens.append(Token(TokenKind.IDENT, match.group(), span))
        elif group == "punct":
            tokens.append(Token(_PUNCT[match.group()], match.group(), span))
        pos = end
    end = offsets(len(text))
    tokens.append(Token(TokenKind.EOF, "", SourceSpan(end, end)))
    return tokens
