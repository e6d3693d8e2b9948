"""Game sessions: seeded challenge generation, grading, scoring, learning.

Two modes. Arcade deals assemble challenges: the two premise pieces of a
valid syllogism, shuffled, and the player supplies a conclusion that makes
the pieces lock into a valid whole. The learning quiz deals judge
challenges: a full syllogism the player calls valid or invalid, drawn half
and half from the valid and invalid pools so guessing pays nothing.

Everything a session does is a pure function of (mode, seed, count) plus the
submitted answers, so a score can always be recomputed from the replay log.
"""

from __future__ import annotations

import random
import time
import uuid
from dataclasses import dataclass, field
from enum import Enum

from .diagram import decide
from .errors import (
    BadCount,
    DasasapError,
    DuplicateAnswer,
    SessionFinished,
    SessionNotComplete,
    UnknownChallenge,
    UnknownTopic,
)
from .model import Proposition, Syllogism, enumerate_all, mnemonic_of_syllogism
from .notation import parse_proposition

ALL_SYLLOGISMS: tuple[Syllogism, ...] = tuple(enumerate_all())
VALID_SYLLOGISMS: tuple[Syllogism, ...] = tuple(
    s for s in ALL_SYLLOGISMS if decide(s).valid
)
INVALID_SYLLOGISMS: tuple[Syllogism, ...] = tuple(
    s for s in ALL_SYLLOGISMS if not decide(s).valid
)

MAX_SESSION_COUNT = 100
STREAK_CAP = 5
BASE_POINTS = 100
SPEED_BONUS_MAX = 50
SPEED_BONUS_STEP = 5


class SessionMode(Enum):
    ARCADE = "arcade"
    LEARNING_QUIZ = "learning-quiz"


class ChallengeKind(Enum):
    JUDGE = "judge"
    ASSEMBLE = "assemble"


class SessionState(Enum):
    ACTIVE = "active"
    FINISHED = "finished"


@dataclass(frozen=True)
class Challenge:
    """One puzzle dealt to the player.

    ``pieces`` is the presentation order: for judge challenges the premises
    as written, for assemble challenges the premises shuffled by the session
    generator. ``issued_at`` is the challenge's position in the deal, which
    is the only timestamp that survives replays intact.
    """

    id: str
    syllogism: Syllogism
    kind: ChallengeKind
    issued_at: int
    pieces: tuple[Proposition, Proposition]


@dataclass(frozen=True)
class Answer:
    challenge_id: str
    answer: str
    elapsed_ms: int
    correct: bool
    delta: int


@dataclass(frozen=True)
class ScoreEntry:
    player: str
    score: int
    mode: SessionMode
    timestamp: int
    session_id: str

    def to_json(self) -> dict:
        # key order is the file format; rewrites must be byte-identical
        return {
            "player": self.player,
            "score": self.score,
            "mode": self.mode.value,
            "timestamp": self.timestamp,
            "sessionId": self.session_id,
        }

    @classmethod
    def from_json(cls, obj: dict) -> ScoreEntry:
        return cls(
            player=obj["player"],
            score=int(obj["score"]),
            mode=SessionMode(obj["mode"]),
            timestamp=int(obj["timestamp"]),
            session_id=obj["sessionId"],
        )


@dataclass
class GameSession:
    id: str
    mode: SessionMode
    seed: int
    challenges: tuple[Challenge, ...]
    answers: list[Answer] = field(default_factory=list)
    score: int = 0
    state: SessionState = SessionState.ACTIVE

    @property
    def streak(self) -> int:
        n = 0
        for a in reversed(self.answers):
            if not a.correct:
                break
            n += 1
        return n

    @property
    def answered_ids(self) -> set[str]:
        return {a.challenge_id for a in self.answers}

    @property
    def complete(self) -> bool:
        return len(self.answers) == len(self.challenges)


def _deal(mode: SessionMode, rng: random.Random, index: int) -> Challenge:
    if mode is SessionMode.LEARNING_QUIZ:
        pool = VALID_SYLLOGISMS if rng.random() < 0.5 else INVALID_SYLLOGISMS
        s = rng.choice(pool)
        return Challenge(f"q{index + 1}", s, ChallengeKind.JUDGE, index, (s.major, s.minor))
    s = rng.choice(VALID_SYLLOGISMS)
    pieces = [s.major, s.minor]
    rng.shuffle(pieces)
    return Challenge(f"q{index + 1}", s, ChallengeKind.ASSEMBLE, index, tuple(pieces))


def new_session(
    mode: SessionMode, seed: int, count: int, session_id: str | None = None
) -> GameSession:
    """Deal a fresh session of ``count`` challenges from ``seed``.

    The deal is a pure function of (mode, seed, count): judge draws are an
    even coin between the 15 valid and 241 invalid shapes, assemble draws
    are uniform over the valid 15 with their premises shuffled.
    """
    if not isinstance(count, int) or not 1 <= count <= MAX_SESSION_COUNT:
        raise BadCount(f"count must be an integer in 1..{MAX_SESSION_COUNT}, got {count}")
    rng = random.Random(seed)
    challenges = tuple(_deal(mode, rng, i) for i in range(count))
    return GameSession(session_id or uuid.uuid4().hex, mode, seed, challenges)


def grade(challenge: Challenge, answer: str) -> bool:
    """Is ``answer`` right for ``challenge``?

    Judge answers are the literal strings "valid" / "invalid". Assemble
    answers are a conclusion in canonical notation; the premise containing
    its predicate plays major, the one containing its subject plays minor,
    and the answer is right when the assembled triple is valid. Anything
    unparseable or unassemblable is simply wrong, never an error.
    """
    if challenge.kind is ChallengeKind.JUDGE:
        want = "valid" if decide(challenge.syllogism).valid else "invalid"
        return answer == want
    try:
        conclusion = parse_proposition(answer)
    except DasasapError:
        return False
    if conclusion.subject.complemented or conclusion.predicate.complemented:
        return False
    names = {challenge.pieces[0], challenge.pieces[1]}
    major = minor = None
    for piece in names:
        terms = {piece.subject.name, piece.predicate.name}
        if conclusion.predicate.name in terms:
            major = piece
        elif conclusion.subject.name in terms:
            minor = piece
    if major is None or minor is None:
        return False
    try:
        return decide(Syllogism(major, minor, conclusion)).valid
    except DasasapError:
        return False


def _normalize_judge_answer(answer: str) -> str:
    token = answer.strip().lower()
    if token not in ("valid", "invalid"):
        raise ValueError(f"judge answers are 'valid' or 'invalid', got {answer!r}")
    return token


def score_delta(correct: bool, elapsed_ms: int, streak: int) -> int:
    """Points for one answer.

    Correct pays 100 plus a speed bonus of 50 minus 5 per full elapsed
    second (floored at 0), all multiplied by the running correct streak
    capped at 5. Wrong pays nothing and resets the streak.
    """
    if not correct:
        return 0
    bonus = max(0, SPEED_BONUS_MAX - (elapsed_ms // 1000) * SPEED_BONUS_STEP)
    return (BASE_POINTS + bonus) * min(streak, STREAK_CAP)


def submit_answer(
    session: GameSession, challenge_id: str, answer: str, elapsed_ms: int
) -> Answer:
    """Grade and record one answer, returning the per-answer verdict."""
    if session.state is SessionState.FINISHED:
        raise SessionFinished(f"session {session.id} is finished")
    by_id = {c.id: c for c in session.challenges}
    if challenge_id not in by_id:
        raise UnknownChallenge(f"no challenge {challenge_id!r} in session {session.id}")
    if challenge_id in session.answered_ids:
        raise DuplicateAnswer(f"challenge {challenge_id!r} already answered")
    if not isinstance(elapsed_ms, int) or elapsed_ms < 0:
        raise ValueError(f"elapsedMs must be a non-negative integer, got {elapsed_ms}")
    challenge = by_id[challenge_id]
    if challenge.kind is ChallengeKind.JUDGE:
        answer = _normalize_judge_answer(answer)
    correct = grade(challenge, answer)
    streak = session.streak + 1 if correct else 0
    delta = score_delta(correct, elapsed_ms, streak)
    record = Answer(challenge_id, answer, elapsed_ms, correct, delta)
    session.answers.append(record)
    session.score += delta
    return record


def recompute_score(
    mode: SessionMode,
    seed: int,
    count: int,
    answers: list[tuple[str, str, int]],
) -> int:
    """Replay (challengeId, answer, elapsedMs) triples against a fresh deal.

    Returns the score an honest session would have; used to audit any stored
    score against its replay log.
    """
    session = new_session(mode, seed, count, session_id="replay")
    for challenge_id, answer, elapsed_ms in answers:
        submit_answer(session, challenge_id, answer, elapsed_ms)
    return session.score


def finish_session(
    session: GameSession,
    player: str,
    store=None,
    abandon: bool = False,
) -> ScoreEntry:
    """Seal the session and produce its ranking entry.

    All challenges must be answered unless ``abandon`` is set, in which case
    the answered prefix scores as-is. The entry is appended to ``store``
    when one is given; finishing twice raises SessionFinished.
    """
    if session.state is SessionState.FINISHED:
        raise SessionFinished(f"session {session.id} is already finished")
    if not session.complete and not abandon:
        missing = len(session.challenges) - len(session.answers)
        raise SessionNotComplete(f"{missing} challenges unanswered in session {session.id}")
    session.state = SessionState.FINISHED
    entry = ScoreEntry(
        player=player,
        score=session.score,
        mode=session.mode,
        timestamp=int(time.time() * 1000),
        session_id=session.id,
    )
    if store is not None:
        store.append(entry)
    return entry


def random_syllogism(
    seed: int | None = None, valid: bool | None = None
) -> tuple[Syllogism, bool]:
    """One seeded draw: from the valid 15, the invalid 241, or all 256."""
    rng = random.Random(seed)
    if valid is True:
        pool = VALID_SYLLOGISMS
    elif valid is False:
        pool = INVALID_SYLLOGISMS
    else:
        pool = ALL_SYLLOGISMS
    s = rng.choice(pool)
    return s, decide(s).valid


@dataclass(frozen=True)
class Section:
    heading: str
    body: str


@dataclass(frozen=True)
class QuizDescriptor:
    mode: SessionMode
    default_count: int


@dataclass(frozen=True)
class Page:
    topic: str
    title: str
    sections: tuple[Section, ...]
    quiz: QuizDescriptor | None = None


TOPICS = (
    "what-is-logic",
    "what-is-a-syllogism",
    "what-is-dasasap",
    "so-you-think-you-are-logical",
)

_VALID_NAMES = ", ".join(
    sorted(name for s in VALID_SYLLOGISMS if (name := mnemonic_of_syllogism(s)))
)

_PAGES: dict[str, Page] = {
    "what-is-logic": Page(
        "what-is-logic",
        "What is logic about?",
        (
            Section(
                "Propositions",
                "A proposition is a statement that is either true or false: "
                "'every dog is a mammal', 'some swans are not white'. Questions, "
                "commands and exclamations are not propositions because they "
                "have no truth value.",
            ),
            Section(
                "Arguments",
                "An argument offers premises in support of a conclusion. Logic "
                "studies when that support is airtight: when accepting the "
                "premises forces you to accept the conclusion.",
            ),
            Section(
                "Form versus content",
                "Whether an argument is airtight depends on its shape, not its "
                "subject matter. 'Every M is P, every S is M, so every S is P' "
                "works the same for dogs and mammals as for reactors and "
                "hazards. Swap the content, keep the form, and the guarantee "
                "survives.",
            ),
            Section(
                "Truth versus validity",
                "Validity is about the link, truth about the parts. An argument "
                "with false premises can be perfectly valid, and true premises "
                "with a true conclusion can still make an invalid argument. "
                "Valid means only: if the premises were true, the conclusion "
                "could not fail.",
            ),
        ),
    ),
    "what-is-a-syllogism": Page(
        "what-is-a-syllogism",
        "What is a syllogism?",
        (
            Section(
                "Standard form",
                "A categorical syllogism is a two-premise argument over exactly "
                "three terms. The conclusion relates a subject S to a predicate "
                "P; a middle term M appears once in each premise and never in "
                "the conclusion. The premise containing P is the major premise "
                "and comes first.",
            ),
            Section(
                "The four statement forms",
                "Each statement picks one of four forms: A (every S is P), "
                "E (no S is P), I (some S is P), O (some S is not P). A and E "
                "are universal, I and O particular; A and I affirm, E and O "
                "deny.",
            ),
            Section(
                "Figures and moods",
                "The figure (1 to 4) records where M sits in the two premises; "
                "the mood is the triple of forms plus the figure, written like "
                "AAA-1. Three forms each in three slots across four figures "
                "gives 256 moods.",
            ),
            Section(
                "The valid fifteen",
                "Only 15 of the 256 moods are valid, and each carries a "
                "medieval mnemonic whose vowels spell its forms: "
                f"{_VALID_NAMES}. Everything else admits a countermodel.",
            ),
        ),
    ),
    "what-is-dasasap": Page(
        "what-is-dasasap",
        "What is dasasap?",
        (
            Section(
                "Statements as puzzle pieces",
                "dasasap draws every categorical statement as a jigsaw piece "
                "with two side edges, one per term. An edge is a knob when the "
                "statement speaks about that term's whole extension and a "
                "socket when it does not; the piece's outline shows quantity "
                "and its fill shows whether it affirms or denies.",
            ),
            Section(
                "Snapping is inference",
                "Two premise pieces lock exactly when the middle-term edges "
                "mate: one knob into one socket, and not both pieces negative. "
                "That junction is the one self-evident statement 'every M is "
                "M' made physical.",
            ),
            Section(
                "Valid means it assembles",
                "A conclusion piece fits locked premises only if its sign, its "
                "knobs and its outline are all backed by the premises. A "
                "syllogism is valid exactly when all three pieces assemble, so "
                "checking validity is a constant-time fitting test rather than "
                "a search.",
            ),
            Section(
                "Two ways to play",
                "Arcade mode deals shuffled premise pieces against the clock "
                "and you complete the interlock. Learning mode teaches the "
                "ideas and then quizzes you: call each syllogism valid or "
                "invalid, fast and accurately, and climb the ranking.",
            ),
        ),
    ),
    "so-you-think-you-are-logical": Page(
        "so-you-think-you-are-logical",
        "So you think you are logical?",
        (
            Section(
                "The quiz",
                "You get a run of syllogisms, half valid and half not, drawn "
                "by a seeded shuffle. Call each one valid or invalid. Correct "
                "answers score 100 plus a speed bonus; consecutive hits "
                "multiply your points up to five-fold; misses reset the "
                "streak.",
            ),
            Section(
                "The ranking",
                "Finished runs post your score to the leaderboard under the "
                "name you choose. Identical seeds deal identical runs, so a "
                "score is always an honest replay away.",
            ),
        ),
        quiz=QuizDescriptor(SessionMode.LEARNING_QUIZ, default_count=10),
    ),
}


def learning_content(topic: str) -> Page:
    """The learning page for ``topic``; the quiz topic carries a descriptor."""
    try:
        return _PAGES[topic]
    except KeyError:
        raise UnknownTopic(f"unknown learning topic {topic!r}") from None
