"""Finite-model semantics and the independent validity oracle.

Truth conditions are the plain set-theoretic ones, with no existential
import: A means inclusion, E disjointness, I overlap, O a leftover. Under
this reading any invalid three-term argument already has a countermodel with
at most three individuals (one witness per region the refutation needs), so
exhaustively sweeping every extension assignment over domains of size 0-3
decides validity outright. That sweep is the oracle the piece calculus is
checked against; it also powers the opposition-square classification, the
equivalence transformations, and the search that rewrites any valid mood
into a first-figure one.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from itertools import product
from typing import Iterator, Mapping

from .diagram import Verdict, decide
from .errors import (
    InvalidTransformation,
    NotValid,
    ReductionNotFound,
    UnboundTerm,
)
from .model import Form, Proposition, Quantity, Syllogism, Term, standard_form_roles

MAX_DOMAIN_SIZE = 3


@dataclass(frozen=True)
class Model:
    """A finite interpretation: domain {0..n-1} plus one extension per term."""

    domain_size: int
    extensions: Mapping[str, frozenset[int]]

    def extension_of(self, t: Term) -> frozenset[int]:
        try:
            base = self.extensions[t.name]
        except KeyError:
            raise UnboundTerm(f"model gives no extension for term {t.name}") from None
        if t.complemented:
            return frozenset(range(self.domain_size)) - base
        return base

    def to_json(self) -> dict:
        out: dict = {"domain": self.domain_size}
        for name, ext in self.extensions.items():
            out[name] = sorted(ext)
        return out


def evaluate(p: Proposition, m: Model) -> bool:
    """Truth of a statement in a model."""
    sub = m.extension_of(p.subject)
    pred = m.extension_of(p.predicate)
    if p.form is Form.A:
        return sub <= pred
    if p.form is Form.E:
        return not (sub & pred)
    if p.form is Form.I:
        return bool(sub & pred)
    return bool(sub - pred)


@dataclass(frozen=True)
class OracleVerdict:
    valid: bool
    countermodel: Model | None

    def __post_init__(self) -> None:
        assert self.valid == (self.countermodel is None)


def _base_names(s: Syllogism) -> list[str]:
    """Sweep order for extensions: (S, M, P) in standard form, else sorted."""
    try:
        roles = standard_form_roles(s)
        return [t.name for t in roles]
    except Exception:
        names = {
            t.name for p in s.propositions() for t in (p.subject, p.predicate)
        }
        return sorted(names)


def _compile(p: Proposition, names: list[str]) -> tuple[Form, int, bool, int, bool]:
    return (
        p.form,
        names.index(p.subject.name),
        p.subject.complemented,
        names.index(p.predicate.name),
        p.predicate.complemented,
    )


def _truth(form: Form, sub: int, pred: int, full: int) -> bool:
    if form is Form.A:
        return sub & ~pred & full == 0
    if form is Form.E:
        return sub & pred == 0
    if form is Form.I:
        return sub & pred != 0
    return sub & ~pred & full != 0


def _models(n_terms: int) -> Iterator[tuple[int, int, tuple[int, ...]]]:
    """(domain size, full mask, extension masks) in lexicographic order."""
    for n in range(MAX_DOMAIN_SIZE + 1):
        full = (1 << n) - 1
        for masks in product(range(1 << n), repeat=n_terms):
            yield n, full, masks


def _mask_model(n: int, names: list[str], masks: tuple[int, ...]) -> Model:
    return Model(
        n,
        {
            name: frozenset(i for i in range(n) if masks[k] >> i & 1)
            for k, name in enumerate(names)
        },
    )


def oracle_decide(s: Syllogism) -> OracleVerdict:
    """Exhaustive check over every model with at most three individuals.

    Valid iff no model makes both premises true and the conclusion false;
    otherwise the lexicographically first countermodel is returned (domain
    size ascending, then extension bitmasks in sweep order, least bit =
    individual 0).
    """
    names = _base_names(s)
    maj = _compile(s.major, names)
    mino = _compile(s.minor, names)
    concl = _compile(s.conclusion, names)
    for n, full, masks in _models(len(names)):
        values = []
        for form, si, sc, pi, pc in (maj, mino, concl):
            sub = masks[si] ^ full if sc else masks[si]
            pred = masks[pi] ^ full if pc else masks[pi]
            values.append(_truth(form, sub, pred, full))
        if values[0] and values[1] and not values[2]:
            return OracleVerdict(False, _mask_model(n, names, masks))
    return OracleVerdict(True, None)


class IdentityStatus(Enum):
    LOGICAL_TRUTH = "logical-truth"
    CONTINGENT = "contingent"
    CONTRADICTION = "contradiction"


def classify_identity(f: Form) -> IdentityStatus:
    """The status of the self-predication f(M, M) across all finite models.

    Only A is true in every structure (it holds even on the empty domain,
    being the weak claim that anything that is an M is something); O is never
    true; E and I each depend on whether M is empty.
    """
    m = Term("M")
    p = Proposition(f, m, m)
    saw_true = saw_false = False
    for n, full, masks in _models(1):
        model = _mask_model(n, ["M"], masks)
        if evaluate(p, model):
            saw_true = True
        else:
            saw_false = True
    if saw_true and not saw_false:
        return IdentityStatus.LOGICAL_TRUTH
    if saw_false and not saw_true:
        return IdentityStatus.CONTRADICTION
    return IdentityStatus.CONTINGENT


class SquareRelation(Enum):
    CONTRADICTORY = "contradictory"
    CONTRARY = "contrary"
    SUBCONTRARY = "subcontrary"
    SUBALTERN = "subaltern"


_SQUARE: dict[frozenset[Form], SquareRelation] = {
    frozenset({Form.A, Form.O}): SquareRelation.CONTRADICTORY,
    frozenset({Form.E, Form.I}): SquareRelation.CONTRADICTORY,
    frozenset({Form.A, Form.E}): SquareRelation.CONTRARY,
    frozenset({Form.I, Form.O}): SquareRelation.SUBCONTRARY,
    frozenset({Form.A, Form.I}): SquareRelation.SUBALTERN,
    frozenset({Form.E, Form.O}): SquareRelation.SUBALTERN,
}


@dataclass(frozen=True)
class SquareVerdict:
    relation: SquareRelation
    holds: bool
    countermodel: Model | None


def square_relation(f1: Form, f2: Form) -> SquareVerdict:
    """Classical square-of-opposition label plus whether it actually holds.

    Without existential import only the two contradictory pairs survive;
    contrary, subcontrary and subaltern all break on an empty subject, and
    the first model violating the relation is returned as evidence.
    """
    if f1 is f2:
        raise ValueError("square relations compare two distinct forms")
    relation = _SQUARE[frozenset({f1, f2})]
    s, p = Term("S"), Term("P")
    prop1, prop2 = Proposition(f1, s, p), Proposition(f2, s, p)
    for n, full, masks in _models(2):
        model = _mask_model(n, ["S", "P"], masks)
        v1, v2 = evaluate(prop1, model), evaluate(prop2, model)
        if relation is SquareRelation.CONTRADICTORY:
            ok = v1 != v2
        elif relation is SquareRelation.CONTRARY:
            ok = not (v1 and v2)
        elif relation is SquareRelation.SUBCONTRARY:
            ok = v1 or v2
        else:  # subaltern: the universal form implies the particular one
            universal_true = v1 if f1.quantity is Quantity.UNIVERSAL else v2
            particular_true = v2 if f1.quantity is Quantity.UNIVERSAL else v1
            ok = particular_true or not universal_true
        if not ok:
            return SquareVerdict(relation, False, model)
    return SquareVerdict(relation, True, None)


class TransformKind(Enum):
    CONVERSE = "converse"
    OBVERSE = "obverse"
    CONTRAPOSITIVE = "contrapositive"
    TRANSPOSE_PREMISES = "transpose-premises"


class TransformTarget(Enum):
    MAJOR = "major"
    MINOR = "minor"
    CONCLUSION = "conclusion"
    PREMISES = "premises"


@dataclass(frozen=True)
class Transformation:
    kind: TransformKind
    applied_to: TransformTarget

    def __str__(self) -> str:
        return f"{self.kind.value}({self.applied_to.value})"


_OBVERSE_FORM = {Form.A: Form.E, Form.E: Form.A, Form.I: Form.O, Form.O: Form.I}


def transform(p: Proposition, kind: TransformKind) -> Proposition:
    """Apply a truth-preserving transformation to one statement.

    Conversion is defined only for E and I, contraposition only for A and O;
    obversion applies to all four forms. Anything else raises
    InvalidTransformation.
    """
    if kind is TransformKind.CONVERSE:
        if p.form not in (Form.E, Form.I):
            raise InvalidTransformation(f"converse is not truth-preserving for {p.form.value}")
        return Proposition(p.form, p.predicate, p.subject)
    if kind is TransformKind.OBVERSE:
        return Proposition(_OBVERSE_FORM[p.form], p.subject, p.predicate.complement())
    if kind is TransformKind.CONTRAPOSITIVE:
        if p.form not in (Form.A, Form.O):
            raise InvalidTransformation(
                f"contrapositive is not truth-preserving for {p.form.value}"
            )
        return Proposition(p.form, p.predicate.complement(), p.subject.complement())
    raise InvalidTransformation("transpose-premises applies to a syllogism, not a statement")


def apply_transformation(s: Syllogism, t: Transformation) -> Syllogism:
    """Apply a transformation to the named part of a syllogism."""
    if t.kind is TransformKind.TRANSPOSE_PREMISES:
        if t.applied_to is not TransformTarget.PREMISES:
            raise InvalidTransformation("transpose-premises targets the premises")
        return Syllogism(s.minor, s.major, s.conclusion)
    if t.applied_to is TransformTarget.MAJOR:
        return Syllogism(transform(s.major, t.kind), s.minor, s.conclusion)
    if t.applied_to is TransformTarget.MINOR:
        return Syllogism(s.major, transform(s.minor, t.kind), s.conclusion)
    if t.applied_to is TransformTarget.CONCLUSION:
        return Syllogism(s.major, s.minor, transform(s.conclusion, t.kind))
    raise InvalidTransformation(f"cannot apply {t.kind.value} to {t.applied_to.value}")


_FIGURE1_VALID: dict[tuple[Form, Form, Form], str] = {
    (Form.A, Form.A, Form.A): "Barbara",
    (Form.E, Form.A, Form.E): "Celarent",
    (Form.A, Form.I, Form.I): "Darii",
    (Form.E, Form.I, Form.O): "Ferio",
}


def figure1_mnemonic(s: Syllogism) -> str | None:
    """The first-figure valid mood this triple instantiates, if any.

    Matching is up to renaming: subject, middle and predicate may be any
    three pairwise-distinct terms, complemented ones included.
    """
    c = s.conclusion
    sub, pred = c.subject, c.predicate
    if sub == pred or s.minor.subject != sub:
        return None
    mid = s.minor.predicate
    if mid in (sub, pred):
        return None
    if s.major.subject != mid or s.major.predicate != pred:
        return None
    return _FIGURE1_VALID.get((s.major.form, s.minor.form, c.form))


@dataclass(frozen=True)
class ReductionStep:
    transformation: Transformation
    result: Syllogism


def _neighbors(s: Syllogism) -> Iterator[tuple[Transformation, Syllogism]]:
    for target, prop in (
        (TransformTarget.MAJOR, s.major),
        (TransformTarget.MINOR, s.minor),
        (TransformTarget.CONCLUSION, s.conclusion),
    ):
        kinds = [TransformKind.OBVERSE]
        if prop.form in (Form.E, Form.I):
            kinds.append(TransformKind.CONVERSE)
        else:
            kinds.append(TransformKind.CONTRAPOSITIVE)
        for kind in kinds:
            t = Transformation(kind, target)
            yield t, apply_transformation(s, t)
    t = Transformation(TransformKind.TRANSPOSE_PREMISES, TransformTarget.PREMISES)
    yield t, apply_transformation(s, t)


def reduce_to_figure1(s: Syllogism, max_depth: int = 8) -> list[ReductionStep]:
    """Shortest equivalence derivation turning a valid syllogism into a
    first-figure valid mood.

    Breadth-first search over conversion, obversion, contraposition (each on
    any of the three statements) and premise transposition; every step
    preserves validity, so each intermediate has the same oracle verdict as
    the input. Already-first-figure inputs get the empty derivation.

    Raises NotValid for invalid input and ReductionNotFound if the depth cap
    is exhausted (which never happens for the fifteen valid moods).
    """
    if decide(s).verdict is not Verdict.VALID:
        raise NotValid(f"{s} is not valid; only valid syllogisms reduce")
    if figure1_mnemonic(s) is not None:
        return []
    seen = {str(s)}
    queue: deque[tuple[Syllogism, list[ReductionStep]]] = deque([(s, [])])
    while queue:
        current, path = queue.popleft()
        if len(path) >= max_depth:
            continue
        for t, nxt in _neighbors(current):
            key = str(nxt)
            if key in seen:
                continue
            seen.add(key)
            step_path = path + [ReductionStep(t, nxt)]
            if figure1_mnemonic(nxt) is not None:
                return step_path
            queue.append((nxt, step_path))
    raise ReductionNotFound(f"no first-figure derivation within {max_depth} steps for {s}")
