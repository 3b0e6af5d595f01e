"""Session files: a tiny declaration language for rings, ideals and
matrices.

A session starts with exactly one ring declaration and continues with
ideal declarations, matrix declarations and attest commands:

    ring R = QQ[x, y, z];
    matrix M = [[x, y], [y, z]];
    ideal I = (x*y - z^2, x^3 + 2*y*z^2);
    ideal J = minors(M, 2);
    attest radical;

Products always need an explicit '*', exponents are nonnegative
integers below 2^31, and coefficients may be integer or rational
literals.  Every error carries the line and column it was noticed at.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .errors import ParseError, StructuralError
from .fitting import PolyMatrix
from .rings import (
    GREVLEX,
    MonomialOrder,
    PolyRing,
    Polynomial,
    PrimeField,
    Rationals,
    render_terms,
)

_KEYWORDS = {"ring", "ideal", "matrix", "attest", "minors", "QQ", "ZZ"}
_PUNCT = set("()[],;=+-*^/")
_MAX_EXPONENT = 2**31 - 1


@dataclass(frozen=True)
class Token:
    kind: str  # "ident" | "int" | "punct" | "end"
    text: str
    line: int
    col: int


def tokenize(text: str) -> List[Token]:
    tokens: List[Token] = []
    line, col = 1, 1
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        start_col = col
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(Token("int", text[i:j], line, start_col))
            col += j - i
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(Token("ident", text[i:j], line, start_col))
            col += j - i
            i = j
            continue
        if ch in _PUNCT:
            tokens.append(Token("punct", ch, line, start_col))
            i += 1
            col += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", line, col)
    tokens.append(Token("end", "", line, col))
    return tokens


# -- abstract declarations, kept around for tooling and tests


@dataclass(frozen=True)
class RingDecl:
    name: str
    field_name: str
    characteristic: int
    variables: Tuple[str, ...]
    line: int
    col: int


@dataclass(frozen=True)
class IdealDecl:
    name: str
    generators: Tuple[Polynomial, ...]
    line: int
    col: int


@dataclass(frozen=True)
class MatrixDecl:
    name: str
    matrix: PolyMatrix
    line: int
    col: int


@dataclass(frozen=True)
class Command:
    verb: str
    argument: str
    line: int
    col: int


@dataclass
class Session:
    ring: PolyRing
    ring_name: str
    ideals: Dict[str, Tuple[Polynomial, ...]]
    matrices: Dict[str, PolyMatrix]
    attestations: frozenset
    warnings: List[str]
    ast: List[object]


class _Parser:
    def __init__(self, tokens: List[Token], order: MonomialOrder):
        self.tokens = tokens
        self.pos = 0
        self.order = order
        self.ring: Optional[PolyRing] = None
        self.var_index: Dict[str, int] = {}

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        if tok.kind != "end":
            self.pos += 1
        return tok

    def fail(self, message: str, tok: Optional[Token] = None):
        tok = tok or self.peek()
        raise ParseError(message, tok.line, tok.col)

    def expect_punct(self, ch: str) -> Token:
        tok = self.peek()
        if tok.kind != "punct" or tok.text != ch:
            shown = tok.text if tok.kind != "end" else "end of input"
            self.fail(f"expected {ch!r}, found {shown!r}", tok)
        return self.advance()

    def expect_ident(self, what: str) -> Token:
        tok = self.peek()
        if tok.kind != "ident":
            shown = tok.text if tok.kind != "end" else "end of input"
            self.fail(f"expected {what}, found {shown!r}", tok)
        return self.advance()

    def expect_name(self, what: str) -> Token:
        tok = self.expect_ident(what)
        if tok.text in _KEYWORDS:
            self.fail(f"{tok.text!r} is a reserved word", tok)
        return tok

    def expect_int(self, what: str) -> int:
        tok = self.peek()
        if tok.kind != "int":
            self.fail(f"expected {what}", tok)
        self.advance()
        return int(tok.text)

    # -- polynomial expressions

    def parse_poly(self) -> Polynomial:
        tok = self.peek()
        negate = False
        if tok.kind == "punct" and tok.text == "-":
            self.advance()
            negate = True
        result = self.parse_term()
        if negate:
            result = -result
        while True:
            tok = self.peek()
            if tok.kind == "punct" and tok.text in "+-":
                self.advance()
                term = self.parse_term()
                result = result + term if tok.text == "+" else result - term
            else:
                return result

    def parse_term(self) -> Polynomial:
        result = self.parse_factor()
        while True:
            tok = self.peek()
            if tok.kind == "punct" and tok.text == "*":
                self.advance()
                result = result * self.parse_factor()
            elif tok.kind in ("ident", "int"):
                self.fail("products need an explicit '*'", tok)
            else:
                return result

    def parse_factor(self) -> Polynomial:
        base = self.parse_base()
        tok = self.peek()
        if tok.kind == "punct" and tok.text == "^":
            self.advance()
            exp_tok = self.peek()
            exponent = self.expect_int("an integer exponent")
            if exponent > _MAX_EXPONENT:
                self.fail("exponent exceeds 31 bits", exp_tok)
            return base**exponent
        return base

    def parse_base(self) -> Polynomial:
        tok = self.peek()
        if tok.kind == "punct" and tok.text == "(":
            self.advance()
            inner = self.parse_poly()
            self.expect_punct(")")
            return inner
        if tok.kind == "int":
            self.advance()
            value = Fraction(int(tok.text))
            nxt = self.peek()
            if nxt.kind == "punct" and nxt.text == "/":
                self.advance()
                den_tok = self.peek()
                den = self.expect_int("a denominator")
                if den == 0:
                    self.fail("zero denominator", den_tok)
                value = value / den
            return self.ring.from_const(value)
        if tok.kind == "ident":
            if tok.text in self.var_index:
                self.advance()
                return self.ring.gen(self.var_index[tok.text])
            if tok.text in _KEYWORDS:
                self.fail(f"{tok.text!r} cannot appear inside a polynomial", tok)
            self.fail(f"unknown variable {tok.text!r}", tok)
        shown = tok.text if tok.kind != "end" else "end of input"
        self.fail(f"expected a polynomial, found {shown!r}", tok)


def _parse_ring_decl(p: _Parser) -> RingDecl:
    head = p.peek()
    if not (head.kind == "ident" and head.text == "ring"):
        p.fail("a session must start with a ring declaration", head)
    p.advance()
    name = p.expect_name("a ring name").text
    p.expect_punct("=")
    field_tok = p.expect_ident("a coefficient field")
    if field_tok.text == "QQ":
        field_obj, char, fname = Rationals(), 0, "QQ"
    elif field_tok.text == "ZZ":
        p.expect_punct("/")
        char_tok = p.peek()
        char = p.expect_int("a prime characteristic")
        try:
            field_obj = PrimeField(char)
        except StructuralError:
            raise ParseError("characteristic must be prime", char_tok.line, char_tok.col)
        fname = f"ZZ/{char}"
    else:
        p.fail(f"unknown field {field_tok.text!r}", field_tok)
    p.expect_punct("[")
    variables = [p.expect_name("a variable name").text]
    while p.peek().kind == "punct" and p.peek().text == ",":
        p.advance()
        variables.append(p.expect_name("a variable name").text)
    p.expect_punct("]")
    p.expect_punct(";")
    if len(set(variables)) != len(variables):
        raise ParseError("duplicate variable name", head.line, head.col)
    decl = RingDecl(name, fname, char, tuple(variables), head.line, head.col)
    p.ring = PolyRing(field_obj, tuple(variables), p.order)
    p.var_index = {v: i for i, v in enumerate(variables)}
    return decl


def parse_session(text: str, order: MonomialOrder = GREVLEX) -> Session:
    """Parse a full session file into resolved ring, ideals and matrices."""
    p = _Parser(tokenize(text), order)
    ast: List[object] = []
    warnings: List[str] = []
    ring_decl = _parse_ring_decl(p)
    ast.append(ring_decl)
    ideals: Dict[str, Tuple[Polynomial, ...]] = {}
    matrices: Dict[str, PolyMatrix] = {}
    attestations = set()
    declared = {ring_decl.name}

    while p.peek().kind != "end":
        tok = p.peek()
        if tok.kind != "ident":
            p.fail(f"expected a declaration, found {tok.text!r}", tok)
        if tok.text == "ring":
            p.fail("only one ring declaration is allowed", tok)
        elif tok.text == "ideal":
            p.advance()
            name_tok = p.expect_name("an ideal name")
            if name_tok.text in declared:
                p.fail(f"{name_tok.text!r} is already declared", name_tok)
            p.expect_punct("=")
            gens: List[Polynomial] = []
            head = p.peek()
            if head.kind == "ident" and head.text == "minors":
                p.advance()
                p.expect_punct("(")
                mat_tok = p.expect_name("a matrix name")
                if mat_tok.text not in matrices:
                    p.fail(f"unknown matrix {mat_tok.text!r}", mat_tok)
                p.expect_punct(",")
                size = p.expect_int("a minor size")
                p.expect_punct(")")
                gens = list(matrices[mat_tok.text].minor_ideal(size).gens)
            else:
                p.expect_punct("(")
                if not (p.peek().kind == "punct" and p.peek().text == ")"):
                    gens.append(p.parse_poly())
                    while p.peek().kind == "punct" and p.peek().text == ",":
                        p.advance()
                        gens.append(p.parse_poly())
                p.expect_punct(")")
            p.expect_punct(";")
            for k, g in enumerate(gens):
                if g.is_zero:
                    warnings.append(
                        f"line {name_tok.line}: generator {k + 1} of "
                        f"{name_tok.text!r} is zero"
                    )
            decl = IdealDecl(name_tok.text, tuple(gens), name_tok.line, name_tok.col)
            ast.append(decl)
            ideals[name_tok.text] = decl.generators
            declared.add(name_tok.text)
        elif tok.text == "matrix":
            p.advance()
            name_tok = p.expect_name("a matrix name")
            if name_tok.text in declared:
                p.fail(f"{name_tok.text!r} is already declared", name_tok)
            p.expect_punct("=")
            p.expect_punct("[")
            rows = [_parse_matrix_row(p)]
            while p.peek().kind == "punct" and p.peek().text == ",":
                p.advance()
                rows.append(_parse_matrix_row(p))
            p.expect_punct("]")
            p.expect_punct(";")
            if len({len(r) for r in rows}) > 1:
                p.fail("matrix rows must share a length", name_tok)
            matrix = PolyMatrix(p.ring, tuple(tuple(r) for r in rows))
            decl = MatrixDecl(name_tok.text, matrix, name_tok.line, name_tok.col)
            ast.append(decl)
            matrices[name_tok.text] = matrix
            declared.add(name_tok.text)
        elif tok.text == "attest":
            p.advance()
            arg_tok = p.expect_ident("an attestation")
            if arg_tok.text not in ("radical", "unmixed"):
                p.fail(
                    f"unknown attestation {arg_tok.text!r} "
                    "(expected 'radical' or 'unmixed')",
                    arg_tok,
                )
            p.expect_punct(";")
            ast.append(Command("attest", arg_tok.text, tok.line, tok.col))
            attestations.add(arg_tok.text)
        else:
            p.fail(f"unknown declaration {tok.text!r}", tok)

    return Session(
        ring=p.ring,
        ring_name=ring_decl.name,
        ideals=ideals,
        matrices=matrices,
        attestations=frozenset(attestations),
        warnings=warnings,
        ast=ast,
    )


def _parse_matrix_row(p: _Parser) -> List[Polynomial]:
    p.expect_punct("[")
    row = [p.parse_poly()]
    while p.peek().kind == "punct" and p.peek().text == ",":
        p.advance()
        row.append(p.parse_poly())
    p.expect_punct("]")
    return row


def parse_polynomial(text: str, ring: PolyRing) -> Polynomial:
    """Parse a single polynomial expression in the given ring."""
    p = _Parser(tokenize(text), ring.order)
    p.ring = ring
    p.var_index = {v: i for i, v in enumerate(ring.vars)}
    poly = p.parse_poly()
    if p.peek().kind == "punct" and p.peek().text == ";":
        p.advance()
    tok = p.peek()
    if tok.kind != "end":
        raise ParseError(f"trailing input {tok.text!r}", tok.line, tok.col)
    return poly


def render_poly(poly: Polynomial) -> str:
    """Canonical textual form; parse_polynomial inverts it."""
    return render_terms(poly.ring, poly.terms)
