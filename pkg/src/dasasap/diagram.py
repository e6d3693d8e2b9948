"""Interlocking-piece encoding of statements and the validity decision.

Each statement becomes a puzzle piece with one edge per term. An edge is cut
as a knob exactly when the statement commits itself about that term's whole
extension - i.e. its truth survives shrinking that extension in any model -
and as a socket otherwise. That is the classical notion of a distributed
occurrence: A distributes its subject, E both terms, I neither, O its
predicate. Each edge also carries the statement's quality as a sign, and the
piece as a whole is marked with the statement's quantity.

Two premise pieces interlock when their middle-term edges mate knob-into-
socket (the junction realizes the self-evident "every M is M") and the pieces
are not both negative. A conclusion piece then fits the interlocked pair when
its sign agrees with the premises, any knob it cuts on S or P is backed by a
knob on the matching premise edge, and it does not claim less than the
premises give (no particular conclusion from two universal pieces). A
syllogism is pronounced valid exactly when all pieces fit; the whole check is
constant work per syllogism.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import MissingMiddleTerm
from .model import (
    Form,
    Proposition,
    Quality,
    Quantity,
    Syllogism,
    Term,
    standard_form_roles,
)


class Polarity(Enum):
    KNOB = "knob"
    SOCKET = "socket"


class Verdict(Enum):
    VALID = "valid"
    INVALID = "invalid"


class FailureReason(Enum):
    NO_KNOB = "no-knob"
    TWO_KNOBS = "two-knobs"
    TWO_NEGATIVES = "two-negatives"
    SIGN_MISMATCH = "sign-mismatch"
    ILLICIT_MAJOR = "illicit-major"
    ILLICIT_MINOR = "illicit-minor"
    UNIVERSAL_PREMISES_PARTICULAR_CONCLUSION = (
        "universal-premises-particular-conclusion"
    )


# (subject, predicate) distribution per form; knob = distributed occurrence.
_DISTRIBUTION: dict[Form, tuple[Polarity, Polarity]] = {
    Form.A: (Polarity.KNOB, Polarity.SOCKET),
    Form.E: (Polarity.KNOB, Polarity.KNOB),
    Form.I: (Polarity.SOCKET, Polarity.SOCKET),
    Form.O: (Polarity.SOCKET, Polarity.KNOB),
}


@dataclass(frozen=True)
class Edge:
    term: Term
    polarity: Polarity
    sign: Quality

    def to_json(self) -> dict:
        return {
            "term": str(self.term),
            "polarity": self.polarity.value,
            "sign": self.sign.value,
        }


@dataclass(frozen=True)
class Diagram:
    subject: Edge
    predicate: Edge
    quantity: Quantity

    def to_json(self) -> dict:
        return {
            "subject": self.subject.to_json(),
            "predicate": self.predicate.to_json(),
            "quantity": self.quantity.value,
        }


@dataclass(frozen=True)
class InterlockTrace:
    """Why a decision came out the way it did.

    ``middle_edges`` are the two premise edges on the middle term;
    ``ip_formed`` records whether they mated into the identity junction;
    ``failure_reason`` is present exactly when the verdict is invalid.
    """

    middle_edges: tuple[Edge, Edge]
    ip_formed: bool
    conclusion_fit: bool
    failure_reason: FailureReason | None

    def to_json(self) -> dict:
        out: dict = {
            "middleEdges": [e.to_json() for e in self.middle_edges],
            "ipFormed": self.ip_formed,
            "conclusionFit": self.conclusion_fit,
        }
        if self.failure_reason is not None:
            out["failureReason"] = self.failure_reason.value
        return out


@dataclass(frozen=True)
class Decision:
    verdict: Verdict
    trace: InterlockTrace

    @property
    def valid(self) -> bool:
        return self.verdict is Verdict.VALID


def encode(p: Proposition) -> Diagram:
    """The piece for a statement: distribution cuts, quality sign, quantity."""
    sub_pol, pred_pol = _DISTRIBUTION[p.form]
    sign = p.form.quality
    return Diagram(
        subject=Edge(p.subject, sub_pol, sign),
        predicate=Edge(p.predicate, pred_pol, sign),
        quantity=p.form.quantity,
    )


def diagram_form(d: Diagram) -> Form | None:
    """Which statement form a piece encodes, or None if not well formed."""
    if d.subject.sign != d.predicate.sign:
        return None
    for form, (sub_pol, pred_pol) in _DISTRIBUTION.items():
        if (
            d.subject.polarity is sub_pol
            and d.predicate.polarity is pred_pol
            and d.subject.sign is form.quality
            and d.quantity is form.quantity
        ):
            return form
    return None


def _edge_of(d: Diagram, term: Term) -> Edge:
    on_subject = d.subject.term.name == term.name
    on_predicate = d.predicate.term.name == term.name
    if on_subject == on_predicate:  # absent, or on both edges
        raise MissingMiddleTerm(
            f"term {term.name} must occur exactly once in {d.subject.term.name}"
            f"/{d.predicate.term.name}"
        )
    return d.subject if on_subject else d.predicate


def middle_edges(major: Diagram, minor: Diagram, m: Term) -> tuple[Edge, Edge]:
    return (_edge_of(major, m), _edge_of(minor, m))


def middle_interlocks(
    major: Diagram, minor: Diagram, m: Term
) -> tuple[bool, FailureReason | None]:
    """Do the premise pieces mate on the middle term?

    True iff exactly one of the two M-edges is a knob and the pieces are not
    both negative; the knob-into-socket junction is what stands in for the
    always-true "every M is M".
    """
    a, b = middle_edges(major, minor, m)
    if a.sign is Quality.NEGATIVE and b.sign is Quality.NEGATIVE:
        return False, FailureReason.TWO_NEGATIVES
    knobs = (a.polarity is Polarity.KNOB) + (b.polarity is Polarity.KNOB)
    if knobs == 0:
        return False, FailureReason.NO_KNOB
    if knobs == 2:
        return False, FailureReason.TWO_KNOBS
    return True, None


def conclusion_fits(
    major: Diagram, minor: Diagram, conclusion: Diagram
) -> tuple[bool, FailureReason | None]:
    """Does the conclusion piece fit premises whose middles interlock?

    Checks, in order: sign (negative conclusion iff exactly one negative
    premise), the minor edge backing the conclusion's S-knob, the major edge
    backing its P-knob, and quantity (two universal premises cannot yield a
    particular conclusion).
    """
    negatives = (major.subject.sign is Quality.NEGATIVE) + (
        minor.subject.sign is Quality.NEGATIVE
    )
    if (conclusion.subject.sign is Quality.NEGATIVE) != (negatives == 1):
        return False, FailureReason.SIGN_MISMATCH
    if conclusion.subject.polarity is Polarity.KNOB:
        if _edge_of(minor, conclusion.subject.term).polarity is not Polarity.KNOB:
            return False, FailureReason.ILLICIT_MINOR
    if conclusion.predicate.polarity is Polarity.KNOB:
        if _edge_of(major, conclusion.predicate.term).polarity is not Polarity.KNOB:
            return False, FailureReason.ILLICIT_MAJOR
    if (
        major.quantity is Quantity.UNIVERSAL
        and minor.quantity is Quantity.UNIVERSAL
        and conclusion.quantity is Quantity.PARTICULAR
    ):
        return False, FailureReason.UNIVERSAL_PREMISES_PARTICULAR_CONCLUSION
    return True, None


def decide(s: Syllogism) -> Decision:
    """Decide a standard-form syllogism; constant work per call.

    Raises MalformedSyllogism when ``s`` is not standard form.
    """
    _, m, _ = standard_form_roles(s)
    major, minor = encode(s.major), encode(s.minor)
    conclusion = encode(s.conclusion)
    edges = middle_edges(major, minor, m)
    ok, reason = middle_interlocks(major, minor, m)
    if not ok:
        return Decision(Verdict.INVALID, InterlockTrace(edges, False, False, reason))
    fits, reason = conclusion_fits(major, minor, conclusion)
    verdict = Verdict.VALID if fits else Verdict.INVALID
    return Decision(verdict, InterlockTrace(edges, True, fits, reason))
