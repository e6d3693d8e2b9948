"""Parser and printer for the infix syllogism notation.

Grammar (EBNF):

    syllogism  = prop , sep , prop , sep? , therefore , sep? , prop ;
    prop       = term , form , term ;
    term       = UPPER | ( UPPER [A-Z0-9]* , "." )    (* dotted multi-letter *)
    form       = "A" | "E" | "I" | "O" ;
    therefore  = "∴" | "=>" ;
    sep        = { " " } , [ "," ] , { " " } ;

Single-letter terms pack tightly ("MAP"); multi-letter terms separate the
form letter with dots ("DOG.A.MAMMAL"). Whitespace between tokens is
insignificant, so "MAP SAM ∴ SAP" and "MAP,SAM=>SAP" and "MAPSAM∴SAP" all
parse to the same syllogism. Complemented terms are deliberately not
parseable: they belong to the internals of equivalence reductions, never to
user input.
"""

from __future__ import annotations

from .errors import ParseError
from .model import Form, Proposition, Syllogism, Term, standard_form_roles

_FORM_LETTERS = frozenset("AEIO")
_UPPER = frozenset("ABCDEFGHIJKLMNOPQRSTUVWXYZ")
_NAME_CHARS = _UPPER | frozenset("0123456789")


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def fail(self, *expected: str) -> ParseError:
        return ParseError(self.text, self.pos, expected)

    def skip_spaces(self) -> None:
        while self.peek() == " ":
            self.pos += 1

    def skip_sep(self) -> None:
        # sep = spaces, at most one comma, spaces; all optional
        self.skip_spaces()
        if self.peek() == ",":
            self.pos += 1
        self.skip_spaces()

    def _scan_run(self) -> str:
        start = self.pos
        while self.peek() in _NAME_CHARS:
            self.pos += 1
        return self.text[start : self.pos]

    def parse_form(self) -> Form:
        c = self.peek()
        if c not in _FORM_LETTERS:
            raise self.fail("a form letter (A, E, I or O)")
        self.pos += 1
        return Form(c)

    def parse_proposition(self) -> Proposition:
        if self.peek() not in _UPPER:
            raise self.fail("a term (uppercase letter)")
        start = self.pos
        run = self._scan_run()
        if self.peek() == ".":
            # dotted: TERM "." FORM "." TERM
            subject = Term(run)
            self.pos += 1
            form = self.parse_form()
            if self.peek() != ".":
                raise self.fail("'.' before the predicate term")
            self.pos += 1
            if self.peek() not in _UPPER:
                raise self.fail("a term (uppercase letter)")
            predicate = Term(self._scan_run())
            return Proposition(form, subject, predicate)
        # compact: exactly three characters, single-letter terms
        self.pos = start
        subject = Term(self.peek())
        self.pos += 1
        form = self.parse_form()
        if self.peek() not in _UPPER:
            raise self.fail("a term (uppercase letter)")
        predicate = Term(self.peek())
        self.pos += 1
        return Proposition(form, subject, predicate)

    def parse_therefore(self) -> None:
        if self.peek() == "∴":
            self.pos += 1
            return
        if self.text.startswith("=>", self.pos):
            self.pos += 2
            return
        raise self.fail("'∴' or '=>'")

    def expect_end(self) -> None:
        self.skip_spaces()
        if self.pos != len(self.text):
            raise self.fail("end of input")


def parse_proposition(text: str) -> Proposition:
    """Parse a single categorical statement."""
    sc = _Scanner(text)
    sc.skip_spaces()
    p = sc.parse_proposition()
    sc.expect_end()
    return p


def parse_syllogism(text: str) -> Syllogism:
    """Parse ``prop sep prop therefore prop`` and check standard form.

    Raises ParseError on bad text and MalformedSyllogism when the text
    parses but the statements do not form a standard-form syllogism.
    """
    sc = _Scanner(text)
    sc.skip_spaces()
    major = sc.parse_proposition()
    sc.skip_sep()
    minor = sc.parse_proposition()
    sc.skip_sep()
    sc.parse_therefore()
    sc.skip_sep()
    conclusion = sc.parse_proposition()
    sc.expect_end()
    syll = Syllogism(major, minor, conclusion)
    standard_form_roles(syll)  # raises MalformedSyllogism with a diagnostic
    return syll


def print_proposition(p: Proposition) -> str:
    """Canonical text for a statement; inverse of :func:`parse_proposition`."""
    return str(p)


def print_syllogism(s: Syllogism) -> str:
    """Canonical ``XfY,XfY=>XfY`` text; ``parse_syllogism`` round-trips it."""
    return str(s)
