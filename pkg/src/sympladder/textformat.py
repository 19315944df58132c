"""Plain-text documents: line declarations and queries.

::

    # comments run to end of line; statements end at ';' or newline
    line rho r=2 sc=no
    line sigma r=1 sc=no dim>1
    classify-q: [1,1]+[0,0] @ rho
    [-1/2,1/2]+[1/2,3/2] @ sigma
    0 @ rho
    unitary: Sp([0,1],2) @ rho x Cp([0,0],2,3/10) @ sigma x Sc @ rho x PS3("chi") @ sigma

A segment ``[a]`` abbreviates ``[a,a]``; half-integers are written ``p/2``.
``nu=2`` on a declaration is rejected.  Canonical output sorts every
multisegment by ``(a, b)`` and lists declarations before queries.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .classify import Complementary, PS3, Speh, Supercuspidal, UnitaryFactor, Verdict
from .core import Line, Multisegment, OrderedMultisegment, Segment, SegmentError, _fmt, exponent
from .symplectic import GoodDecomposition


class DocumentError(ValueError):
    def __init__(self, msg: str, line: int = 0, col: int = 0):
        self.msg, self.line, self.col = msg, line, col
        super().__init__(f"{line}:{col}: {msg}" if line else msg)


class ParseError(DocumentError):
    pass


class UnknownLine(DocumentError):
    pass


class S2LineRejected(DocumentError):
    """Declared ``nu_rho = nu^2``; only ``nu_rho = nu`` is modelled."""


class DuplicateLine(DocumentError):
    pass


Target = Union[Multisegment, tuple]


@dataclass(frozen=True)
class Query:
    command: Optional[str]
    target: Target  # a Multisegment or a tuple of unitary factors

    @property
    def is_factors(self) -> bool:
        return isinstance(self.target, tuple)


@dataclass(frozen=True)
class Document:
    lines: tuple[Line, ...] = ()
    queries: tuple[Query, ...] = ()

    def __eq__(self, other):
        if not isinstance(other, Document):
            return NotImplemented
        return (len(self.lines) == len(other.lines)
                and all(x.same_as(y) for x, y in zip(self.lines, other.lines))
                and self.queries == other.queries)

    def __hash__(self):
        return hash((self.lines, self.queries))

    def line(self, label: str) -> Line:
        for ln in self.lines:
            if ln.label == label:
                return ln
        raise UnknownLine(f"undeclared line {label!r}")


# -- tokenizer -------------------------------------------------------------

_TOKEN = re.compile(r"""
    (?P<ws>[ \t\r]+)
  | (?P<comment>\#[^\n]*)
  | (?P<nl>\n)
  | (?P<str>"[^"\n]*")
  | (?P<num>\d+)
  | (?P<name>[A-Za-z_][A-Za-z0-9_']*(?:-[A-Za-z0-9_]+)*)
  | (?P<op>[\[\],+@();:=>/\-])
""", re.VERBOSE)


@dataclass
class _Tok:
    kind: str
    text: str
    line: int
    col: int


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    line, line_start, pos = 1, 0, 0
    while pos < len(text):
        mo = _TOKEN.match(text, pos)
        if mo is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = mo.lastgroup
        col = pos - line_start + 1
        if kind == "nl":
            toks.append(_Tok("sep", "\n", line, col))
            line += 1
            line_start = mo.end()
        elif kind == "op" and mo.group() == ";":
            toks.append(_Tok("sep", ";", line, col))
        elif kind not in ("ws", "comment"):
            toks.append(_Tok(kind, mo.group(), line, col))
        pos = mo.end()
    toks.append(_Tok("eof", "", line, pos - line_start + 1))
    return toks


class _Parser:
    def __init__(self, text: str, implicit=None):
        self.toks = _tokenize(text)
        self.i = 0
        self.lines: dict[str, Line] = {}
        self.pending: list = []  # (command, raw target, token) resolved after declarations
        self.implicit = implicit

    # token helpers
    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def peek(self, k: int = 1) -> _Tok:
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def error(self, msg: str, tok: Optional[_Tok] = None, cls=ParseError):
        tok = tok or self.tok
        return cls(msg, tok.line, tok.col)

    def take(self, kind: str, text: Optional[str] = None) -> _Tok:
        t = self.tok
        if t.kind != kind or (text is not None and t.text != text):
            want = repr(text) if text is not None else kind
            got = repr(t.text) if t.text else t.kind
            raise self.error(f"expected {want}, found {got}")
        self.i += 1
        return t

    def at(self, kind: str, text: Optional[str] = None) -> bool:
        t = self.tok
        return t.kind == kind and (text is None or t.text == text)

    # grammar
    def document(self) -> Document:
        while not self.at("eof"):
            if self.at("sep"):
                self.i += 1
                continue
            self.statement()
            if not (self.at("sep") or self.at("eof")):
                raise self.error(f"unexpected {self.tok.text!r} after statement")
        queries = tuple(self.resolve(p) for p in self.pending)
        return Document(tuple(self.lines.values()), queries)

    def statement(self):
        if self.at("name", "line") and self.peek().kind == "name":
            self.line_decl()
            return
        command = None
        if self.at("name") and self.peek().kind == "op" and self.peek().text == ":":
            command = self.take("name").text
            self.take("op", ":")
        start = self.tok
        if self.at("op", "[") or self.at("num", "0"):
            raw = ("mseg", self.mseg_body())
        elif self.at("name"):
            raw = ("factors", self.factors())
        else:
            raise self.error("expected a multisegment or a factor list")
        self.pending.append((command, raw, start))

    def line_decl(self):
        kw = self.take("name", "line")
        name_tok = self.take("name")
        attrs: dict[str, object] = {}
        while self.at("name"):
            key_tok = self.take("name")
            key = key_tok.text
            if key in attrs:
                raise self.error(f"repeated attribute {key!r}", key_tok)
            if key == "dim":
                self.take("op", ">")
                self.take("num", "1")
                attrs["dim"] = True
            elif key in ("r", "nu"):
                self.take("op", "=")
                attrs[key] = int(self.take("num").text)
            elif key == "sc":
                self.take("op", "=")
                v = self.take("name")
                if v.text not in ("yes", "no"):
                    raise self.error("sc must be yes or no", v)
                attrs["sc"] = v.text == "yes"
            else:
                raise self.error(f"unknown line attribute {key!r}", key_tok)
        for req in ("r", "sc"):
            if req not in attrs:
                raise self.error(f"line declaration needs {req}=", kw)
        if attrs.get("nu", 1) == 2:
            raise self.error(f"line {name_tok.text}: nu_rho = nu^2 is not supported", kw, S2LineRejected)
        if attrs.get("nu", 1) != 1:
            raise self.error("nu must be 1 or 2", kw)
        try:
            ln = Line(name_tok.text, attrs["r"], attrs["sc"], attrs.get("dim", False))
        except ValueError as exc:
            raise self.error(str(exc), kw) from None
        if name_tok.text in self.lines:
            if self.lines[name_tok.text].same_as(ln):
                return
            raise self.error(f"line {name_tok.text!r} redeclared differently", name_tok, DuplicateLine)
        self.lines[name_tok.text] = ln

    def exponent(self) -> Fraction:
        sign = -1 if self.at("op", "-") else 1
        if sign < 0:
            self.i += 1
        t = self.take("num")
        v = Fraction(int(t.text))
        if self.at("op", "/"):
            self.i += 1
            self.take("num", "2")
            v /= 2
        return sign * v

    def rational(self) -> Fraction:
        sign = -1 if self.at("op", "-") else 1
        if sign < 0:
            self.i += 1
        v = Fraction(int(self.take("num").text))
        if self.at("op", "/"):
            self.i += 1
            den = self.take("num")
            if int(den.text) == 0:
                raise self.error("zero denominator", den)
            v /= int(den.text)
        return sign * v

    def segment_raw(self):
        start = self.take("op", "[")
        a = self.exponent()
        b = a
        if self.at("op", ","):
            self.i += 1
            b = self.exponent()
        self.take("op", "]")
        return (a, b, start)

    def at_name(self) -> _Tok:
        self.take("op", "@")
        return self.take("name")

    def mseg_body(self):
        segs = []
        if self.at("num", "0"):
            self.i += 1
        else:
            segs.append(self.segment_raw())
            while self.at("op", "+"):
                self.i += 1
                segs.append(self.segment_raw())
        return (segs, self.at_name())

    def factors(self):
        out = [self.factor()]
        while self.at("name", "x"):
            self.i += 1
            out.append(self.factor())
        return out

    def factor(self):
        head = self.take("name")
        kind = head.text
        if kind == "Sp":
            self.take("op", "(")
            sg = self.segment_raw()
            self.take("op", ",")
            s = int(self.take("num").text)
            self.take("op", ")")
            return ("Sp", (sg, s), self.at_name(), head)
        if kind == "Cp":
            self.take("op", "(")
            sg = self.segment_raw()
            self.take("op", ",")
            s = int(self.take("num").text)
            self.take("op", ",")
            alpha = self.rational()
            self.take("op", ")")
            return ("Cp", (sg, s, alpha), self.at_name(), head)
        if kind == "Sc":
            return ("Sc", (), self.at_name(), head)
        if kind == "PS3":
            notes = ""
            if self.at("op", "("):
                self.i += 1
                notes = self.take("str").text[1:-1]
                self.take("op", ")")
            return ("PS3", (notes,), self.at_name(), head)
        raise self.error(f"unknown factor {kind!r}", head)

    # resolution against declared lines
    def get_line(self, tok: _Tok) -> Line:
        name = tok.text
        if name in self.lines:
            return self.lines[name]
        if self.implicit is not None:
            ln = self.implicit(name)
            if ln is not None:
                self.lines[name] = ln
                return ln
        raise self.error(f"undeclared line {name!r}", tok, UnknownLine)

    def make_segment(self, line: Line, raw) -> Segment:
        a, b, tok = raw
        try:
            return Segment(line, exponent(a), exponent(b))
        except SegmentError as exc:
            raise self.error(str(exc), tok) from None

    def resolve(self, pending) -> Query:
        command, (kind, body), start = pending
        if kind == "mseg":
            segs, name_tok = body
            line = self.get_line(name_tok)
            return Query(command, Multisegment(line, [self.make_segment(line, r) for r in segs]))
        factors = []
        for fkind, args, name_tok, head in body:
            line = self.get_line(name_tok)
            try:
                if fkind == "Sp":
                    sg, s = args
                    factors.append(Speh(line, self.make_segment(line, sg), s))
                elif fkind == "Cp":
                    sg, s, alpha = args
                    factors.append(Complementary(Speh(line, self.make_segment(line, sg), s), alpha))
                elif fkind == "Sc":
                    factors.append(Supercuspidal(line))
                else:
                    factors.append(PS3(line, args[0]))
            except ValueError as exc:
                if isinstance(exc, DocumentError):
                    raise
                raise self.error(str(exc), head) from None
        return Query(command, tuple(factors))


def parse(text: str, implicit=None) -> Document:
    """Parse a document.

    ``implicit`` may map an undeclared line name to a ``Line`` (or ``None``);
    without it undeclared names raise ``UnknownLine``.
    """
    return _Parser(text, implicit).document()


# -- formatting ------------------------------------------------------------


def format_line(ln: Line) -> str:
    s = f"line {ln.label} r={ln.r} sc={'yes' if ln.sc_distinguished else 'no'}"
    return s + " dim>1" if ln.dim_gt_one else s


def format_segment(d: Segment) -> str:
    return f"[{_fmt(d.a)},{_fmt(d.b)}]"


def format_multisegment(m: Multisegment) -> str:
    body = "+".join(format_segment(d) for d in m.segments) or "0"
    return f"{body} @ {m.line.label}"


def format_order(o: OrderedMultisegment) -> str:
    return "(" + ", ".join(format_segment(d) for d in o) + ")"


def _rat(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_factor(f: UnitaryFactor) -> str:
    if isinstance(f, Speh):
        return f"Sp({format_segment(f.base)},{f.s}) @ {f.line.label}"
    if isinstance(f, Complementary):
        return f"Cp({format_segment(f.inner.base)},{f.inner.s},{_rat(f.alpha)}) @ {f.line.label}"
    if isinstance(f, Supercuspidal):
        return f"Sc @ {f.line.label}"
    if isinstance(f, PS3):
        notes = f'("{f.notes}")' if f.notes else ""
        return f"PS3{notes} @ {f.line.label}"
    raise TypeError(f"not a unitary factor: {f!r}")


def format_query(q: Query) -> str:
    body = " x ".join(format_factor(f) for f in q.target) if q.is_factors else format_multisegment(q.target)
    return f"{q.command}: {body}" if q.command else body


def format_document(doc: Document) -> str:
    return "".join(s + "\n" for s in [format_line(ln) for ln in doc.lines] + [format_query(q) for q in doc.queries])


def format_good_decomposition(gd: GoodDecomposition) -> str:
    rows = " ".join("(" + " ".join(format_segment(p) for p in row) + ")" for row in gd.decomposition.pieces)
    pairs = " ".join(f"({x[0]},{x[1]})<->({y[0]},{y[1]})" for x, y in gd.pairs)
    return f"{rows} tau {pairs}".rstrip()


def format_witness(w) -> str:
    if isinstance(w, Multisegment):
        return format_multisegment(w)
    if isinstance(w, GoodDecomposition):
        return format_good_decomposition(w)
    return str(w)


def format_verdict(v: Verdict) -> str:
    out = f"{v.status} ({v.reason})"
    if v.witness is not None:
        out += f"\nwitness: {v.witness_label} = {format_witness(v.witness)}"
    return out


def to_text(x) -> str:
    """Canonical text for any supported object."""
    if isinstance(x, Document):
        return format_document(x)
    if isinstance(x, Multisegment):
        return format_multisegment(x)
    if isinstance(x, Verdict):
        return format_verdict(x)
    if isinstance(x, GoodDecomposition):
        return format_good_decomposition(x)
    if isinstance(x, OrderedMultisegment):
        return format_order(x)
    if isinstance(x, Segment):
        return format_segment(x)
    if isinstance(x, Line):
        return format_line(x)
    if isinstance(x, Query):
        return format_query(x)
    if isinstance(x, (Speh, Complementary, Supercuspidal, PS3)):
        return format_factor(x)
    raise TypeError(f"cannot format {type(x).__name__}")
