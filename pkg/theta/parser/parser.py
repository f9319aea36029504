"""
Identity Parser
===============

Recursive descent parser for the `.theta` identity format and its sibling
formats (shift lists, relation lists, candidate lists).

Grammar (whitespace and newlines insignificant after the header line):

    identity  := header NEWLINE side "=" side
    header    := "vars" IDENT+
    side      := "0" | ["+"|"-"] term (("+"|"-") term)*
    term      := factor (("*"|"/") factor)*
    factor    := primary ["^" exponent]
    primary   := NUMBER | IDENT | poch | bracket | "(" term ")"
    poch      := "(" entry ("," entry)* ";" modulus ")"
    bracket   := "[" entry ("," entry)* ";" modulus "]"
    entry     := ["+"|"-"] term            (no Pochhammer inside)
    exponent  := ["-"] NUMBER | "(" ["-"] NUMBER ["/" NUMBER] ")"

A "(" opens a Pochhammer list when a "," or ";" occurs at its own nesting
depth, otherwise it is a parenthesized group. Brackets expand to the pairs
(x, q^t/x; q^t); all symbols of one term are then re-paired per modulus.

Related Files:
- theta/parser/lexer.py: tokens and byte spans
- theta/model/pairing.py: pairing of flat Pochhammer lists
- theta/parser/formatter.py: the inverse direction
"""

from __future__ import annotations
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from theta.errors import ParseError, ParseErrorKind, SourceSpan, UnpairedVariableFactor
from theta.model.pairing import a_free_entries, pair_pochhammers
from theta.model.types import (
    Identity,
    PochKey,
    PochQuotient,
    QMonomial,
    ThetaFactor,
    ThetaTerm,
)
from theta.parser.lexer import Token, TokenKind, tokenize
from theta.relations.types import ContiguousRelation, RelationSystem, relation_from_ratio

logger = logging.getLogger(__name__)

RatVector = Tuple[Fraction, ...]

_CLOSERS = {TokenKind.LPAREN: TokenKind.RPAREN, TokenKind.LBRACKET: TokenKind.RBRACKET}
_LINE_END = (TokenKind.NEWLINE, TokenKind.EOF)

# repeated theta factors are stored one by one
MAX_FACTOR_POWER = 64


# ============================================================================
# INTERMEDIATE PRODUCTS
# ============================================================================

@dataclass
class _Symbol:
    mono: QMonomial
    modulus: Fraction
    exponent: int
    span: SourceSpan


@dataclass
class _Product:
    """coeff · q^qexp · a^aexp · Π (symbol; q^t)^e, before pairing."""
    coeff: Fraction
    qexp: Fraction
    aexp: List[int]
    symbols: List[_Symbol] = field(default_factory=list)

    @classmethod
    def unit(cls, r: int) -> "_Product":
        return cls(Fraction(1), Fraction(0), [0] * r)

    def times(self, other: "_Product") -> "_Product":
        return _Product(
            self.coeff * other.coeff,
            self.qexp + other.qexp,
            [x + y for x, y in zip(self.aexp, other.aexp)],
            self.symbols + other.symbols,
        )

    @property
    def is_pure_q(self) -> bool:
        return self.coeff == 1 and not any(self.aexp) and not self.symbols


# ============================================================================
# PARSER
# ============================================================================

class _Parser:
    """Parses one token list (a whole identity body or a single line)."""

    def __init__(self, tokens: Sequence[Token], variables: Sequence[str]):
        self.tokens = list(tokens)
        self.pos = 0
        self.variables = tuple(variables)
        self.index = {name: j for j, name in enumerate(self.variables)}

    # ---- token helpers -----------------------------------------------------

    @property
    def r(self) -> int:
        return len(self.variables)

    def peek(self, offset: int = 0) -> Token:
        return self.tokens[min(self.pos + offset, len(self.tokens) - 1)]

    def advance(self) -> Token:
        token = self.peek()
        if token.kind is not TokenKind.EOF:
            self.pos += 1
        return token

    def at(self, *kinds: TokenKind) -> bool:
        return self.peek().kind in kinds

    def fail(self, kind: ParseErrorKind, span: SourceSpan, message: str):
        raise ParseError(kind, span, message)

    def unexpected(self, what: str):
        token = self.peek()
        shown = token.text or token.kind.value
        self.fail(ParseErrorKind.UNEXPECTED_TOKEN, token.span, f"expected {what}, found {shown!r}")

    def expect(self, kind: TokenKind, what: Optional[str] = None) -> Token:
        if self.peek().kind is kind:
            return self.advance()
        self.unexpected(what or repr(kind.value))

    def expect_closer(self, opener: Token) -> Token:
        closer = _CLOSERS[opener.kind]
        token = self.peek()
        if token.kind is closer:
            return self.advance()
        if token.kind in (TokenKind.RPAREN, TokenKind.RBRACKET) or token.kind in _LINE_END:
            self.fail(
                ParseErrorKind.UNBALANCED_DELIMITER,
                opener.span,
                f"{opener.text!r} is not closed by {closer.value!r}",
            )
        self.unexpected(repr(closer.value))

    def span_from(self, start: Token) -> SourceSpan:
        last = self.tokens[max(self.pos - 1, 0)]
        return SourceSpan(start.span.start, max(start.span.start, last.span.end))

    # ---- numbers and exponents ---------------------------------------------

    def integer(self) -> int:
        negative = False
        if self.at(TokenKind.MINUS, TokenKind.PLUS):
            negative = self.advance().kind is TokenKind.MINUS
        value = int(self.expect(TokenKind.NUMBER, "an integer").text)
        return -value if negative else value

    def rational(self) -> Fraction:
        start = self.peek()
        num = self.integer()
        den = 1
        if self.at(TokenKind.SLASH):
            self.advance()
            den = int(self.expect(TokenKind.NUMBER, "a denominator").text)
            if den == 0:
                self.fail(ParseErrorKind.BAD_EXPONENT, self.span_from(start), "zero denominator")
        return Fraction(num, den)

    def exponent(self) -> Fraction:
        if self.at(TokenKind.LPAREN):
            opener = self.advance()
            value = self.rational()
            self.expect_closer(opener)
            return value
        if self.at(TokenKind.MINUS, TokenKind.NUMBER):
            return Fraction(self.integer())
        self.unexpected("an exponent")

    # ---- products ----------------------------------------------------------

    def product(self) -> _Product:
        result = self.factor()
        while self.at(TokenKind.STAR, TokenKind.SLASH):
            op = self.advance()
            start = self.peek()
            rhs = self.factor()
            if op.kind is TokenKind.SLASH:
                rhs = self.power(rhs, Fraction(-1), self.span_from(start))
            result = result.times(rhs)
        return result

    def factor(self) -> _Product:
        start = self.peek()
        base = self.primary()
        if self.at(TokenKind.CARET):
            self.advance()
            e = self.exponent()
            base = self.power(base, e, self.span_from(start))
        return base

    def power(self, base: _Product, e: Fraction, span: SourceSpan) -> _Product:
        if e.denominator != 1:
            if not base.is_pure_q:
                self.fail(ParseErrorKind.BAD_EXPONENT, span, f"fractional exponent {e} on a non-q factor")
            return _Product(Fraction(1), base.qexp * e, [0] * self.r)
        n = int(e)
        if base.coeff == 0 and n < 0:
            self.fail(ParseErrorKind.BAD_EXPONENT, span, "division by zero")
        return _Product(
            base.coeff ** n,
            base.qexp * n,
            [v * n for v in base.aexp],
            [_Symbol(s.mono, s.modulus, s.exponent * n, s.span) for s in base.symbols],
        )

    def primary(self) -> _Product:
        token = self.peek()
        if token.kind is TokenKind.NUMBER:
            self.advance()
            return _Product(Fraction(int(token.text)), Fraction(0), [0] * self.r)
        if token.kind is TokenKind.IDENT:
            self.advance()
            unit = _Product.unit(self.r)
            if token.text == "q":
                unit.qexp = Fraction(1)
                return unit
            if token.text not in self.index:
                self.fail(ParseErrorKind.UNKNOWN_VARIABLE, token.span, f"undeclared variable {token.text!r}")
            unit.aexp[self.index[token.text]] = 1
            return unit
        if token.kind is TokenKind.LBRACKET:
            return self.pochhammer(bracket=True)
        if token.kind is TokenKind.LPAREN:
            if self.opens_pochhammer():
                return self.pochhammer(bracket=False)
            opener = self.advance()
            inner = self.product()
            self.expect_closer(opener)
            return inner
        if token.kind in (TokenKind.RPAREN, TokenKind.RBRACKET):
            self.fail(ParseErrorKind.UNBALANCED_DELIMITER, token.span, f"unmatched {token.text!r}")
        self.unexpected("a number, variable, '(' or '['")

    def opens_pochhammer(self) -> bool:
        """Look ahead from '(' for a ',' or ';' at depth one."""
        opener = self.peek()
        depth = 0
        for token in self.tokens[self.pos:]:
            if token.kind in (TokenKind.LPAREN, TokenKind.LBRACKET):
                depth += 1
            elif token.kind in (TokenKind.RPAREN, TokenKind.RBRACKET):
                depth -= 1
                if depth == 0:
                    return False
            elif depth == 1 and token.kind in (TokenKind.COMMA, TokenKind.SEMICOLON):
                return True
            elif token.kind is TokenKind.EOF:
                break
        self.fail(ParseErrorKind.UNBALANCED_DELIMITER, opener.span, "'(' is never closed")

    def pochhammer(self, bracket: bool) -> _Product:
        opener = self.advance()
        if self.at(TokenKind.SEMICOLON):
            self.fail(ParseErrorKind.EMPTY_PRODUCT, self.peek().span, "empty Pochhammer list")
        entries: List[Tuple[QMonomial, SourceSpan]] = [self.entry()]
        while self.at(TokenKind.COMMA):
            self.advance()
            entries.append(self.entry())
        if self.at(*_LINE_END):
            self.fail(ParseErrorKind.UNBALANCED_DELIMITER, opener.span, f"{opener.text!r} is never closed")
        self.expect(TokenKind.SEMICOLON, "';' before the modulus")
        t = self.modulus()
        self.expect_closer(opener)

        result = _Product.unit(self.r)
        for mono, span in entries:
            result.symbols.append(_Symbol(mono, t, 1, span))
            if bracket:
                partner = QMonomial(mono.sign, t - mono.qexp, tuple(-v for v in mono.aexp))
                if partner.is_a_free and partner.qexp <= 0:
                    self.fail(ParseErrorKind.BAD_EXPONENT, span, f"partner q^{partner.qexp} of an a-free bracket entry")
                result.symbols.append(_Symbol(partner, t, 1, span))
        return result

    def entry(self) -> Tuple[QMonomial, SourceSpan]:
        start = self.peek()
        sign = 1
        if self.at(TokenKind.MINUS, TokenKind.PLUS):
            sign = -1 if self.advance().kind is TokenKind.MINUS else 1
        body = self.product()
        span = self.span_from(start)
        if body.symbols:
            self.fail(ParseErrorKind.UNEXPECTED_TOKEN, span, "Pochhammer symbol inside a Pochhammer argument")
        if abs(body.coeff) != 1:
            self.fail(ParseErrorKind.UNEXPECTED_TOKEN, span, f"constant {body.coeff} inside a Pochhammer argument")
        if body.coeff < 0:
            sign = -sign
        mono = QMonomial(sign, body.qexp, tuple(body.aexp))
        if mono.is_a_free and mono.qexp <= 0:
            self.fail(ParseErrorKind.BAD_EXPONENT, span, f"a-free Pochhammer argument needs a positive q-power, got q^{mono.qexp}")
        return mono, span

    def modulus(self) -> Fraction:
        start = self.peek()
        body = self.product()
        span = self.span_from(start)
        if not body.is_pure_q:
            self.fail(ParseErrorKind.BAD_EXPONENT, span, "modulus must be a power of q")
        if body.qexp <= 0:
            self.fail(ParseErrorKind.BAD_EXPONENT, span, f"modulus q^{body.qexp} must have a positive exponent")
        return body.qexp

    # ---- terms and sides ---------------------------------------------------

    def term(self, sign: int) -> Optional[ThetaTerm]:
        start = self.peek()
        body = self.product()
        span = self.span_from(start)
        if body.coeff == 0:
            return None
        return self.build_term(body, sign, span)

    def build_term(self, body: _Product, sign: int, span: SourceSpan) -> ThetaTerm:
        groups: Dict[Fraction, List[_Symbol]] = {}
        free: Dict[PochKey, int] = {}
        for symbol in body.symbols:
            if symbol.exponent == 0:
                continue
            if symbol.mono.is_a_free:
                for key, e in a_free_entries(symbol.mono, symbol.modulus).items():
                    free[key] = free.get(key, 0) + e * symbol.exponent
                continue
            if symbol.exponent < 0:
                self.fail(
                    ParseErrorKind.UNPAIRED_FACTOR,
                    symbol.span,
                    "a Pochhammer symbol depending on the variables cannot be in a denominator",
                )
            if symbol.exponent > MAX_FACTOR_POWER:
                self.fail(
                    ParseErrorKind.BAD_EXPONENT,
                    symbol.span,
                    f"power {symbol.exponent} of a variable factor exceeds {MAX_FACTOR_POWER}",
                )
            groups.setdefault(symbol.modulus, []).extend([symbol] * symbol.exponent)

        factors: List[ThetaFactor] = []
        for t, symbols in groups.items():
            try:
                paired, _ = pair_pochhammers([s.mono for s in symbols], t)
            except UnpairedVariableFactor as exc:
                self.fail(
                    ParseErrorKind.UNPAIRED_FACTOR,
                    symbols[exc.index].span,
                    f"{exc.symbol} has no partner q^{t}/x",
                )
            factors.extend(paired)
        if not factors:
            self.fail(ParseErrorKind.EMPTY_PRODUCT, span, "term has no theta factor")

        return ThetaTerm(
            coeff=body.coeff * sign,
            mono=QMonomial(1, body.qexp, tuple(body.aexp)),
            poch=PochQuotient.from_mapping(free),
            factors=tuple(factors),
        )

    def side(self) -> List[ThetaTerm]:
        if self.at(TokenKind.NUMBER) and self.peek().text == "0" and self.peek(1).kind in (
            TokenKind.EQUALS,
            TokenKind.EOF,
            TokenKind.NEWLINE,
        ):
            self.advance()
            return []
        terms: List[ThetaTerm] = []
        sign = 1
        if self.at(TokenKind.MINUS, TokenKind.PLUS):
            sign = -1 if self.advance().kind is TokenKind.MINUS else 1
        while True:
            term = self.term(sign)
            if term is not None:
                terms.append(term)
            if not self.at(TokenKind.PLUS, TokenKind.MINUS):
                return terms
            sign = -1 if self.advance().kind is TokenKind.MINUS else 1

    # ---- vectors -----------------------------------------------------------

    def vector(self) -> RatVector:
        if self.at(TokenKind.LPAREN):
            opener = self.advance()
            values = self.vector_body()
            self.expect_closer(opener)
            return values
        return self.vector_body()

    def vector_body(self) -> RatVector:
        values = [self.rational()]
        while self.at(TokenKind.COMMA):
            self.advance()
            values.append(self.rational())
        return tuple(values)


# ============================================================================
# LINE HANDLING
# ============================================================================

def _split_lines(tokens: List[Token]) -> List[List[Token]]:
    """Token lists per nonempty line, each terminated by an EOF token."""
    lines: List[List[Token]] = []
    current: List[Token] = []
    for token in tokens:
        if token.kind in _LINE_END:
            if current:
                lines.append(current + [Token(TokenKind.EOF, "", SourceSpan(token.span.start, token.span.start))])
            current = []
        else:
            current.append(token)
    return lines


def _header(tokens: List[Token]) -> Tuple[Tuple[str, ...], List[Token]]:
    """Read the `vars` line; return the names and the remaining tokens."""
    pos = 0
    while tokens[pos].kind is TokenKind.NEWLINE:
        pos += 1
    head = tokens[pos]
    if head.kind is not TokenKind.IDENT or head.text != "vars":
        shown = head.text or head.kind.value
        raise ParseError(ParseErrorKind.UNEXPECTED_TOKEN, head.span, f"expected 'vars' header, found {shown!r}")
    pos += 1
    names: List[str] = []
    while tokens[pos].kind not in _LINE_END:
        token = tokens[pos]
        if token.kind is not TokenKind.IDENT:
            raise ParseError(ParseErrorKind.UNEXPECTED_TOKEN, token.span, f"expected a variable name, found {token.text!r}")
        if token.text in ("q", "vars") or token.text in names:
            raise ParseError(ParseErrorKind.UNEXPECTED_TOKEN, token.span, f"invalid variable name {token.text!r}")
        names.append(token.text)
        pos += 1
    if not names:
        raise ParseError(ParseErrorKind.EMPTY_PRODUCT, head.span, "'vars' declares no variables")
    return tuple(names), tokens[pos:]


def _single_term(line: List[Token], variables: Sequence[str]) -> ThetaTerm:
    parser = _Parser(line, variables)
    terms = parser.side()
    parser.expect(TokenKind.EOF, "end of line")
    if len(terms) != 1:
        span = SourceSpan(line[0].span.start, line[-1].span.end)
        raise ParseError(ParseErrorKind.UNEXPECTED_TOKEN, span, "expected exactly one term on the line")
    return terms[0]


# ============================================================================
# PUBLIC ENTRY POINTS
# ============================================================================

def parse_identity(text: str) -> Identity:
    """
    Parse a `.theta` identity.

    The right side is moved over with negated coefficients, so the returned
    Identity asserts that its terms sum to zero.

    Raises:
        ParseError: on any malformed input

    Example:
        >>> ident = parse_identity("vars z\\n[z;q] = [z;q]")
        >>> [t.coeff for t in ident.terms]
        [Fraction(1, 1), Fraction(-1, 1)]
    """
    variables, rest = _header(tokenize(text))
    body = [tok for tok in rest if tok.kind is not TokenKind.NEWLINE]
    parser = _Parser(body, variables)
    lhs = parser.side()
    parser.expect(TokenKind.EQUALS, "'='")
    rhs = parser.side()
    parser.expect(TokenKind.EOF, "end of input")
    terms = lhs + [t.negated() for t in rhs]
    if len(terms) < 2:
        end = len(text.encode("utf-8"))
        raise ParseError(ParseErrorKind.EMPTY_PRODUCT, SourceSpan(0, end), "an identity needs at least two terms")
    logger.debug("parsed identity over %s with %d terms", variables, len(terms))
    return Identity(variables, tuple(terms))


def parse_term(text: str, variables: Sequence[str]) -> ThetaTerm:
    """Parse a single term over already declared variables."""
    lines = _split_lines(tokenize(text))
    if len(lines) != 1:
        end = len(text.encode("utf-8"))
        raise ParseError(ParseErrorKind.UNEXPECTED_TOKEN, SourceSpan(0, end), "expected one term")
    return _single_term(lines[0], variables)


def parse_vector(text: str) -> RatVector:
    """Parse "(1,-1/2,0)" or "1,-1/2,0"."""
    tokens = [tok for tok in tokenize(text) if tok.kind is not TokenKind.NEWLINE]
    parser = _Parser(tokens, ())
    values = parser.vector()
    parser.expect(TokenKind.EOF, "end of vector")
    return values


def parse_vector_list(text: str) -> List[RatVector]:
    """Vectors separated by ';' or newlines, e.g. "(1,1);(0,2)"."""
    tokens = tokenize(text)
    parser = _Parser(tokens, ())
    vectors: List[RatVector] = []
    while not parser.at(TokenKind.EOF):
        if parser.at(TokenKind.SEMICOLON, TokenKind.NEWLINE):
            parser.advance()
            continue
        vectors.append(parser.vector())
        if not parser.at(TokenKind.SEMICOLON, TokenKind.NEWLINE, TokenKind.EOF):
            parser.unexpected("';' or end of line")
    _check_lengths(vectors, tokens)
    return vectors


def parse_shifts(text: str) -> List[RatVector]:
    """
    Parse a shifts file: one parenthesized vector per line, '#' comments.

    Example:
        >>> parse_shifts("(1,1)\\n# comment\\n(0, 2)")
        [(Fraction(1, 1), Fraction(1, 1)), (Fraction(0, 1), Fraction(2, 1))]
    """
    tokens = tokenize(text)
    vectors = []
    for line in _split_lines(tokens):
        parser = _Parser(line, ())
        vectors.append(parser.vector())
        parser.expect(TokenKind.EOF, "end of line")
    _check_lengths(vectors, tokens)
    return vectors


def _check_lengths(vectors: List[RatVector], tokens: List[Token]) -> None:
    if vectors and len({len(v) for v in vectors}) != 1:
        span = SourceSpan(tokens[0].span.start, tokens[-1].span.end)
        raise ParseError(ParseErrorKind.UNEXPECTED_TOKEN, span, "vectors have different lengths")


def parse_relations(text: str) -> Tuple[Tuple[str, ...], RelationSystem]:
    """
    Parse a relations file.

    Each line after the `vars` header reads ``(α₁,…,α_r): ratio`` where the
    ratio is the signed monomial θ(a∘q^α)/θ(a), e.g. ``(0,2,0): 1/(b^2*q)``.
    """
    variables, rest = _header(tokenize(text))
    relations: List[ContiguousRelation] = []
    for line in _split_lines(rest):
        parser = _Parser(line, variables)
        alpha = parser.vector()
        if len(alpha) != len(variables):
            parser.fail(ParseErrorKind.UNEXPECTED_TOKEN, line[0].span, f"shift has {len(alpha)} entries for {len(variables)} variables")
        parser.expect(TokenKind.COLON, "':'")
        start = parser.peek()
        sign = 1
        if parser.at(TokenKind.MINUS, TokenKind.PLUS):
            sign = -1 if parser.advance().kind is TokenKind.MINUS else 1
        ratio = parser.product()
        span = parser.span_from(start)
        parser.expect(TokenKind.EOF, "end of line")
        if ratio.symbols or abs(ratio.coeff) != 1:
            parser.fail(ParseErrorKind.UNEXPECTED_TOKEN, span, "ratio must be a signed monomial")
        if not any(ratio.aexp):
            parser.fail(ParseErrorKind.BAD_EXPONENT, span, "ratio must depend on the variables")
        if ratio.coeff < 0:
            sign = -sign
        relations.append(relation_from_ratio(alpha, sign, ratio.aexp, ratio.qexp))
    return variables, RelationSystem(tuple(relations))


def parse_candidates(text: str) -> Tuple[Tuple[str, ...], List[ThetaTerm]]:
    """Parse a candidates file: `vars` header, then one term per line."""
    variables, rest = _header(tokenize(text))
    return variables, [_single_term(line, variables) for line in _split_lines(rest)]
