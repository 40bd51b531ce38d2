"""Text and JSON forms of bundles and polygons.

Text grammar (whitespace is ignored)::

    bundle := "0" | term ("+" term)*
    term   := "O(" integer ["/" integer] ")" ["^" integer]

JSON forms are ``[[num, den, mult], ...]`` for bundles and
``[[x0, y0], [x1, y1], ...]`` for polygons.
"""

from __future__ import annotations

import json
from fractions import Fraction

from hnpoly.bundles import Bundle, StableSummand, make_bundle
from hnpoly.errors import DomainError, ParseError


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, char: str):
        if self.peek() != char:
            found = repr(self.peek()) if self.peek() else "end of input"
            raise ParseError(f"expected {char!r}, found {found}", self.text, self.pos)
        self.pos += 1

    def integer(self, signed: bool = True) -> int:
        self.skip()
        start = self.pos
        if signed and self.peek() in "+-" and self.peek():
            self.pos += 1
            self.skip()
        digits_at = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits_at:
            raise ParseError("expected an integer", self.text, digits_at)
        return int(self.text[start:self.pos].replace(" ", "").replace("\t", ""))


def parse_bundle(text: str) -> Bundle:
    """Parse ``O(d/h)^m + ...`` into a canonical :class:`Bundle`."""
    sc = _Scanner(text)
    if sc.peek() == "0":
        sc.pos += 1
        if sc.peek():
            raise ParseError("unexpected trailing input", text, sc.pos)
        return Bundle.zero()
    if not sc.peek():
        raise ParseError("empty bundle expression", text, sc.pos)
    blocks = []
    while True:
        sc.expect("O")
        sc.expect("(")
        num = sc.integer()
        den = 1
        if sc.peek() == "/":
            sc.pos += 1
            at = sc.pos
            den = sc.integer(signed=False)
            if den == 0:
                raise ParseError("zero denominator", text, at)
        sc.expect(")")
        mult = 1
        if sc.peek() == "^":
            sc.pos += 1
            at = sc.pos
            mult = sc.integer(signed=False)
            if mult == 0:
                raise ParseError("zero multiplicity", text, at)
        blocks.append(StableSummand(Fraction(num, den), mult))
        nxt = sc.peek()
        if not nxt:
            break
        if nxt != "+":
            raise ParseError(f"expected '+' or end of input, found {nxt!r}", text, sc.pos)
        sc.pos += 1
    return Bundle(tuple(blocks))


def format_slope(s: Fraction) -> str:
    return str(s.numerator) if s.denominator == 1 else f"{s.numerator}/{s.denominator}"


def format_bundle(b: Bundle) -> str:
    if b.is_zero:
        return "0"
    terms = []
    for s in b.summands:
        term = f"O({format_slope(s.slope)})"
        if s.multiplicity != 1:
            term += f"^{s.multiplicity}"
        terms.append(term)
    return " + ".join(terms)


def bundle_to_json(b: Bundle) -> list[list[int]]:
    return [[s.slope.numerator, s.slope.denominator, s.multiplicity] for s in b.summands]


def bundle_from_json(data) -> Bundle:
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", exc.doc, exc.pos) from None
    if not isinstance(data, list) or not all(isinstance(e, list) for e in data):
        raise DomainError("bundle JSON must be a list of [num, den, mult] triples")
    for entry in data:
        if not all(isinstance(v, int) and not isinstance(v, bool) for v in entry):
            raise DomainError(f"bundle JSON entries must be integers, got {entry!r}")
    return make_bundle(data)


def polygon_from_json(data):
    from hnpoly.polygons import Polygon

    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", exc.doc, exc.pos) from None
    if not isinstance(data, list) or not all(
        isinstance(p, list) and len(p) == 2 for p in data
    ):
        raise DomainError("polygon JSON must be a list of [x, y] pairs")
    for p in data:
        if not all(isinstance(v, int) and not isinstance(v, bool) for v in p):
            raise DomainError(f"polygon breakpoints must be lattice points, got {p!r}")
    return Polygon(tuple((x, y) for x, y in data))


def polygon_to_json(p) -> list[list[int]]:
    return [[x, y] for x, y in p.points]
