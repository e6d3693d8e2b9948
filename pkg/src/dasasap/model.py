"""Terms, statement forms, propositions, syllogisms, figures and moods.

Everything here is an immutable value object. A standard-form syllogism
relates exactly three terms: the conclusion's subject S, the conclusion's
predicate P, and a middle term M shared by the two premises. The figure
(1-4) records where M sits in each premise; the mood is the triple of
statement forms plus the figure. Fifteen of the 256 moods are valid and
carry their traditional mnemonic names (Barbara, Celarent, ...).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum

from .errors import MalformedSyllogism, UnknownName

_NAME_RE = re.compile(r"[A-Z][A-Z0-9]*\Z")


class Quantity(Enum):
    UNIVERSAL = "universal"
    PARTICULAR = "particular"


class Quality(Enum):
    AFFIRMATIVE = "affirmative"
    NEGATIVE = "negative"


class Form(Enum):
    """The four categorical statement forms.

    A: every subject is a predicate (universal affirmative)
    E: no subject is a predicate (universal negative)
    I: some subject is a predicate (particular affirmative)
    O: some subject is not a predicate (particular negative)
    """

    A = "A"
    E = "E"
    I = "I"  # noqa: E741 - the traditional letter
    O = "O"  # noqa: E741

    @property
    def quantity(self) -> Quantity:
        return Quantity.UNIVERSAL if self in (Form.A, Form.E) else Quantity.PARTICULAR

    @property
    def quality(self) -> Quality:
        return Quality.AFFIRMATIVE if self in (Form.A, Form.I) else Quality.NEGATIVE


@dataclass(frozen=True)
class Term:
    """A term such as S, M, P or DOG.

    ``complemented`` marks the term's set-complement (non-DOG). Complemented
    terms never appear in user input or standard-form syllogisms; they exist
    so equivalence transformations (obversion, contraposition) can be
    expressed.
    """

    name: str
    complemented: bool = False

    def __post_init__(self) -> None:
        if not _NAME_RE.match(self.name):
            raise ValueError(f"term name must match [A-Z][A-Z0-9]*, got {self.name!r}")

    def complement(self) -> Term:
        return Term(self.name, not self.complemented)

    def __str__(self) -> str:
        return f"~{self.name}" if self.complemented else self.name


@dataclass(frozen=True)
class Proposition:
    """One categorical statement: a form plus subject and predicate terms."""

    form: Form
    subject: Term
    predicate: Term

    def __str__(self) -> str:
        sub, pred = str(self.subject), str(self.predicate)
        if len(sub) == 1 and len(pred) == 1:
            return f"{sub}{self.form.value}{pred}"
        return f"{sub}.{self.form.value}.{pred}"


@dataclass(frozen=True)
class Syllogism:
    """Major premise, minor premise and conclusion.

    Construction does not enforce standard form; :func:`standard_form_roles`
    does, so that equivalence reductions can hold intermediate triples with
    complemented terms.
    """

    major: Proposition
    minor: Proposition
    conclusion: Proposition

    def propositions(self) -> tuple[Proposition, Proposition, Proposition]:
        return (self.major, self.minor, self.conclusion)

    def __str__(self) -> str:
        return f"{self.major},{self.minor}=>{self.conclusion}"


def standard_form_roles(s: Syllogism) -> tuple[Term, Term, Term]:
    """Check standard form and return the (S, M, P) terms.

    Raises MalformedSyllogism naming the violated rule otherwise.
    """
    for label, p in (
        ("major premise", s.major),
        ("minor premise", s.minor),
        ("conclusion", s.conclusion),
    ):
        for t in (p.subject, p.predicate):
            if t.complemented:
                raise MalformedSyllogism(
                    f"{label} uses the complemented term {t}; "
                    "standard form allows plain terms only"
                )
        if p.subject.name == p.predicate.name:
            raise MalformedSyllogism(f"{label} relates {p.subject.name} to itself")

    major_names = {s.major.subject.name, s.major.predicate.name}
    minor_names = {s.minor.subject.name, s.minor.predicate.name}
    shared = major_names & minor_names
    if len(shared) != 1:
        raise MalformedSyllogism(
            f"premises must share exactly one middle term, these share {len(shared)}"
        )
    m_name = shared.pop()
    s_name = s.conclusion.subject.name
    p_name = s.conclusion.predicate.name
    if m_name in (s_name, p_name):
        raise MalformedSyllogism(
            f"middle term {m_name} must not occur in the conclusion"
        )
    if p_name not in major_names:
        raise MalformedSyllogism(
            f"major premise must contain the conclusion's predicate {p_name}"
        )
    if s_name not in minor_names:
        raise MalformedSyllogism(
            f"minor premise must contain the conclusion's subject {s_name}"
        )
    return Term(s_name), Term(m_name), Term(p_name)


_FIGURE_BY_POSITION = {
    (True, False): 1,  # M subject of major, predicate of minor
    (False, False): 2,
    (True, True): 3,
    (False, True): 4,
}


def figure_of(s: Syllogism) -> int:
    """Figure 1-4, from the middle term's position in each premise."""
    _, m, _ = standard_form_roles(s)
    return _FIGURE_BY_POSITION[
        (s.major.subject.name == m.name, s.minor.subject.name == m.name)
    ]


@dataclass(frozen=True)
class Mood:
    """Forms of the three statements plus the figure, e.g. AAA-1."""

    major_form: Form
    minor_form: Form
    conclusion_form: Form
    figure: int

    def __post_init__(self) -> None:
        if self.figure not in (1, 2, 3, 4):
            raise ValueError(f"figure must be 1-4, got {self.figure}")

    @property
    def code(self) -> str:
        return (
            f"{self.major_form.value}{self.minor_form.value}"
            f"{self.conclusion_form.value}-{self.figure}"
        )


def mood_of_syllogism(s: Syllogism) -> Mood:
    return Mood(
        s.major.form, s.minor.form, s.conclusion.form, figure_of(s)
    )


_MNEMONICS: dict[tuple[str, int], str] = {
    ("AAA", 1): "Barbara",
    ("EAE", 1): "Celarent",
    ("AII", 1): "Darii",
    ("EIO", 1): "Ferio",
    ("EAE", 2): "Cesare",
    ("AEE", 2): "Camestres",
    ("EIO", 2): "Festino",
    ("AOO", 2): "Baroco",
    ("IAI", 3): "Disamis",
    ("AII", 3): "Datisi",
    ("OAO", 3): "Bocardo",
    ("EIO", 3): "Ferison",
    ("AEE", 4): "Camenes",
    ("IAI", 4): "Dimaris",
    ("EIO", 4): "Fresison",
}

_MOOD_BY_NAME: dict[str, Mood] = {
    name.lower(): Mood(Form(forms[0]), Form(forms[1]), Form(forms[2]), fig)
    for (forms, fig), name in _MNEMONICS.items()
}

MNEMONIC_NAMES: tuple[str, ...] = tuple(_MNEMONICS.values())


def mnemonic_of(m: Mood) -> str | None:
    """The traditional name of a valid mood, or None."""
    forms = f"{m.major_form.value}{m.minor_form.value}{m.conclusion_form.value}"
    return _MNEMONICS.get((forms, m.figure))


def mnemonic_of_syllogism(s: Syllogism) -> str | None:
    return mnemonic_of(mood_of_syllogism(s))


def mood_of(name: str) -> Mood:
    """Inverse of :func:`mnemonic_of`; case-insensitive."""
    try:
        return _MOOD_BY_NAME[name.lower()]
    except KeyError:
        raise UnknownName(f"{name!r} is not one of the fifteen mnemonic names") from None


def syllogism_of_mood(
    mood: Mood, s: str = "S", m: str = "M", p: str = "P"
) -> Syllogism:
    """Instantiate a mood over concrete term names (defaults S, M, P)."""
    ts, tm, tp = Term(s), Term(m), Term(p)
    if mood.figure == 1:
        major = Proposition(mood.major_form, tm, tp)
        minor = Proposition(mood.minor_form, ts, tm)
    elif mood.figure == 2:
        major = Proposition(mood.major_form, tp, tm)
        minor = Proposition(mood.minor_form, ts, tm)
    elif mood.figure == 3:
        major = Proposition(mood.major_form, tm, tp)
        minor = Proposition(mood.minor_form, tm, ts)
    else:
        major = Proposition(mood.major_form, tp, tm)
        minor = Proposition(mood.minor_form, tm, ts)
    conclusion = Proposition(mood.conclusion_form, ts, tp)
    return Syllogism(major, minor, conclusion)


def enumerate_all() -> list[Syllogism]:
    """All 256 standard-form syllogisms over S, M, P.

    Order is fixed: figure-major, then the (major, minor, conclusion) form
    triple lexicographically with A < E < I < O. Golden files rely on it.
    """
    out: list[Syllogism] = []
    for figure in (1, 2, 3, 4):
        for major_form in Form:
            for minor_form in Form:
                for conclusion_form in Form:
                    out.append(
                        syllogism_of_mood(
                            Mood(major_form, minor_form, conclusion_form, figure)
                        )
                    )
    return out
