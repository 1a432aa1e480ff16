"""Text formats: group presentations, simplicial complexes, integer matrices.

Presentation grammar::

    presentation := '<' [ident (',' ident)*] '|' [relation (',' relation)*] '>'
    relation     := word ['=' word]
    word         := factor+
    factor       := primary ('^' int)*
    primary      := ident | '1' | '(' word ')' | '[' word ',' word ']'
    int          := ['-' | '+'] digits

Juxtaposition is the product, ``[x,y] = x y x^-1 y^-1`` and ``1`` is the
empty word.  A relation ``u = v`` is stored as the reduced relator
``u v^-1``.

Complex files hold one maximal simplex per line (whitespace separated
labels, ``#`` starts a comment), or a JSON array of arrays.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field

from .grouppres import Presentation, Word, commutator
from .intlinalg import IntMatrix
from .simplicial import SimplicialComplex, from_maximal_simplices

__all__ = [
    "ParseError",
    "PresentationSource",
    "parse_presentation",
    "parse_presentation_source",
    "format_presentation",
    "parse_complex",
    "parse_matrix",
]


class ParseError(ValueError):
    """Syntax error with a 1-based line/column and the set of expected tokens."""

    def __init__(self, message: str, line: int, column: int, expected: tuple[str, ...] = ()):
        self.message = message
        self.line = line
        self.column = column
        self.expected = tuple(expected)
        text = f"line {line}, column {column}: {message}"
        if expected:
            text += f" (expected {', '.join(expected)})"
        super().__init__(text)


_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<int>[0-9]+)
  | (?P<sym>[<>|,=()\[\]^+-])
    """,
    re.VERBOSE,
)


@dataclass
class _Tok:
    kind: str
    text: str
    pos: int


def _line_col(text: str, pos: int) -> tuple[int, int]:
    line = text.count("\n", 0, pos) + 1
    col = pos - (text.rfind("\n", 0, pos) + 1) + 1
    return line, col


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            line, col = _line_col(text, pos)
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        if kind != "ws":
            toks.append(_Tok(kind if kind != "sym" else m.group(), m.group(), pos))
        pos = m.end()
    toks.append(_Tok("end", "", len(text)))
    return toks


@dataclass
class PresentationSource:
    raw: str
    presentation: Presentation
    spans: list[tuple[int, int]] = field(default_factory=list)
    """Character span of each relation in ``raw``, in relator order."""


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0
        self.index: dict[str, int] = {}

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def error(self, message: str, expected=(), tok: _Tok | None = None):
        tok = tok or self.tok
        line, col = _line_col(self.text, tok.pos)
        raise ParseError(message, line, col, tuple(expected))

    def expect(self, kind: str) -> _Tok:
        if self.tok.kind != kind:
            found = self.tok.text or "end of input"
            self.error(f"found {found!r}", expected=(repr(kind) if len(kind) == 1 else kind,))
        tok = self.tok
        self.i += 1
        return tok

    def presentation(self) -> PresentationSource:
        self.expect("<")
        names = []
        if self.tok.kind == "ident":
            names.append(self.expect("ident"))
            while self.tok.kind == ",":
                self.i += 1
                names.append(self.expect("ident"))
        elif self.tok.kind != "|":
            self.error(f"found {self.tok.text or 'end of input'!r}", expected=("generator name", "'|'"))
        for tok in names:
            if tok.text in self.index:
                self.error(f"generator {tok.text!r} declared twice", tok=tok)
            self.index[tok.text] = len(self.index)
        self.expect("|")
        relators, spans = [], []
        if self.tok.kind != ">":
            start = self.tok.pos
            relators.append(self.relation())
            spans.append((start, self.toks[self.i - 1].pos + len(self.toks[self.i - 1].text)))
            while self.tok.kind == ",":
                self.i += 1
                start = self.tok.pos
                relators.append(self.relation())
                spans.append((start, self.toks[self.i - 1].pos + len(self.toks[self.i - 1].text)))
        if self.tok.kind != ">":
            self.error(f"found {self.tok.text or 'end of input'!r}", expected=("','", "'>'", "'='", "word"))
        self.i += 1
        if self.tok.kind != "end":
            self.error(f"trailing input {self.tok.text!r}", expected=("end of input",))
        P = Presentation(tuple(t.text for t in names), tuple(relators))
        return PresentationSource(self.text, P, spans)

    def relation(self) -> Word:
        lhs = self.word()
        if self.tok.kind == "=":
            self.i += 1
            rhs = self.word()
            return lhs * rhs.inverse()
        return lhs

    _WORD_START = ("ident", "int", "(", "[")

    def word(self) -> Word:
        if self.tok.kind not in self._WORD_START:
            self.error(
                f"found {self.tok.text or 'end of input'!r}",
                expected=("generator", "'1'", "'('", "'['"),
            )
        letters = []
        while self.tok.kind in self._WORD_START:
            letters.extend(self.factor().letters)
        return Word(letters).reduce()

    def factor(self) -> Word:
        w = self.primary()
        while self.tok.kind == "^":
            self.i += 1
            sign = 1
            if self.tok.kind in ("-", "+"):
                sign = -1 if self.tok.kind == "-" else 1
                self.i += 1
            k = int(self.expect("int").text)
            w = w ** (sign * k)
        return w

    def primary(self) -> Word:
        tok = self.tok
        if tok.kind == "ident":
            self.i += 1
            if tok.text not in self.index:
                self.error(f"unknown generator {tok.text!r}", tok=tok)
            return Word.gen(self.index[tok.text])
        if tok.kind == "int":
            if tok.text != "1":
                self.error(f"integer {tok.text} is not a word (only 1, the identity)", tok=tok)
            self.i += 1
            return Word()
        if tok.kind == "(":
            self.i += 1
            w = self.word()
            self.expect(")")
            return w
        if tok.kind == "[":
            self.i += 1
            x = self.word()
            self.expect(",")
            y = self.word()
            self.expect("]")
            return commutator(x, y)
        self.error(f"found {tok.text or 'end of input'!r}", expected=("generator", "'1'", "'('", "'['"))


def parse_presentation_source(text: str) -> PresentationSource:
    return _Parser(text).presentation()


def parse_presentation(text: str) -> Presentation:
    """Parse ``< a, b | a^5 = b^3, b^3 = (a b)^2 >`` into a :class:`Presentation`."""
    return parse_presentation_source(text).presentation


def format_presentation(P: Presentation) -> str:
    """Inverse of :func:`parse_presentation` up to equality of presentations."""
    return str(P)


def _label_key(label):
    if isinstance(label, int):
        return (0, label, "")
    s = str(label)
    return (0, int(s), "") if re.fullmatch(r"-?[0-9]+", s) else (1, 0, s)


def parse_complex(text: str) -> SimplicialComplex:
    """Parse a complex from maximal simplices, text or JSON form.

    Vertices are ordered numerically where labels are integers, otherwise
    by name.
    """
    stripped = text.strip()
    if stripped.startswith("["):
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as e:
            raise ParseError(e.msg, e.lineno, e.colno) from None
        if not isinstance(data, list) or not all(isinstance(s, list) for s in data):
            raise ParseError("JSON complex must be an array of arrays", 1, 1)
        maximal = []
        for s in data:
            for v in s:
                if not isinstance(v, (int, str)) or isinstance(v, bool):
                    raise ParseError(f"vertex label {v!r} must be an integer or string", 1, 1)
            if not s:
                raise ParseError("empty simplex", 1, 1)
            maximal.append(s)
    else:
        maximal = []
        for lineno, line in enumerate(text.splitlines(), 1):
            body = line.split("#", 1)[0]
            labels = body.split()
            if labels:
                if len(set(labels)) != len(labels):
                    raise ParseError("repeated vertex in simplex", lineno, 1)
                maximal.append(labels)
    labels = sorted({v for s in maximal for v in s}, key=_label_key)
    return from_maximal_simplices(labels, maximal)


def parse_matrix(text: str) -> IntMatrix:
    """Integer matrix as a JSON array of rows or whitespace separated rows."""
    stripped = text.strip()
    if stripped.startswith("["):
        try:
            rows = json.loads(stripped)
        except json.JSONDecodeError as e:
            raise ParseError(e.msg, e.lineno, e.colno) from None
        if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
            raise ParseError("matrix must be an array of arrays", 1, 1)
        if any(not isinstance(x, int) or isinstance(x, bool) for r in rows for x in r):
            raise ParseError("matrix entries must be integers", 1, 1)
    else:
        rows = []
        for lineno, line in enumerate(text.splitlines(), 1):
            body = line.split("#", 1)[0].replace(",", " ").split()
            if not body:
                continue
            try:
                rows.append([int(x) for x in body])
            except ValueError as e:
                raise ParseError(str(e), lineno, 1) from None
    try:
        return IntMatrix.from_rows(rows)
    except (TypeError, ValueError) as e:
        raise ParseError(str(e), 1, 1) from None
