"""Signature text format: parser and printer.

Grammar (whitespace ignored around tokens)::

    signature := term ( '+' term )*
    term      := [ integer ] cycle
    cycle     := compact | extended
    compact   := letter+                       each letter is one node
    extended  := '(' ident ( ',' ident )* ')'  each ident is one node
    integer   := nonzero digit followed by digits (omitted integer means 1)

The compact form reproduces the usual single-letter notation ("3abc"); the
extended form admits arbitrary labels ("2(n1,n2)").  ``parse_signature``
always returns a normalized signature, and rendering a normalized signature
parses back to the same value.
"""
from __future__ import annotations

from .core import Signature, normalize_signature, validate_label
from .errors import EmptySignature, SignatureSyntaxError


def parse_signature(text: str) -> Signature:
    """Parse signature text into a normalized :class:`Signature`."""
    parser = _Parser(text)
    raw_terms = parser.signature()
    return normalize_signature(raw_terms)


def render_signature(sig: Signature) -> str:
    """Print a normalized signature; the empty signature renders as ''.

    Unit coefficients are omitted.  The compact form is used when every label
    in the signature is a single letter, the extended form otherwise.
    """
    if sig.is_empty:
        return ""
    compact = all(
        len(label) == 1 and label.isalpha()
        for term in sig
        for label in term.cycle.nodes
    )
    parts = []
    for term in sig:
        prefix = "" if term.coefficient == 1 else str(term.coefficient)
        parts.append(prefix + render_path(term.cycle.nodes, compact))
    return " + ".join(parts)


def render_path(labels: tuple[str, ...], compact: bool) -> str:
    """Render a node sequence in compact ("abc") or extended ("(a,b,c)") form."""
    if compact:
        return "".join(labels)
    return "(" + ",".join(labels) + ")"


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str) -> SignatureSyntaxError:
        return SignatureSyntaxError(message, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def signature(self) -> list[tuple[int, list[str]]]:
        self.skip_ws()
        if not self.peek():
            raise EmptySignature("signature text is blank")
        terms = [self.term()]
        self.skip_ws()
        while self.peek():
            if self.peek() != "+":
                raise self.error(f"expected '+' between terms, found {self.peek()!r}")
            self.pos += 1
            self.skip_ws()
            terms.append(self.term())
            self.skip_ws()
        return terms

    def term(self) -> tuple[int, list[str]]:
        coefficient = self.integer()
        self.skip_ws()
        ch = self.peek()
        if ch == "(":
            return coefficient, self.extended()
        if ch.isalpha():
            return coefficient, self.compact()
        if not ch:
            raise self.error("expected a cycle, found end of input")
        raise self.error(f"expected a cycle, found {ch!r}")

    def integer(self) -> int:
        if not self.peek().isdigit():
            return 1
        start = self.pos
        if self.text[self.pos] == "0":
            raise self.error("coefficient must start with a nonzero digit")
        while self.peek().isdigit():
            self.pos += 1
        return int(self.text[start:self.pos])

    def compact(self) -> list[str]:
        nodes = []
        while self.peek().isalpha():
            nodes.append(self.peek())
            self.pos += 1
        return nodes

    def extended(self) -> list[str]:
        self.pos += 1  # consume '('
        nodes = [self.ident()]
        while True:
            self.skip_ws()
            ch = self.peek()
            if ch == ")":
                self.pos += 1
                return nodes
            if ch == ",":
                self.pos += 1
                nodes.append(self.ident())
                continue
            if not ch:
                raise self.error("unclosed '(' in extended cycle")
            raise self.error(f"expected ',' or ')' in extended cycle, found {ch!r}")

    def ident(self) -> str:
        self.skip_ws()
        start = self.pos
        while True:
            ch = self.peek()
            if not ch or ch.isspace() or ch in "+(),":
                break
            self.pos += 1
        label = self.text[start:self.pos]
        if not label:
            raise self.error("expected a node label")
        try:
            validate_label(label)
        except ValueError as exc:
            self.pos = start
            raise self.error(str(exc)) from exc
        return label
