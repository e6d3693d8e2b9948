"""dasasap: syllogistic validity as jigsaw-piece interlocking.

Statements become puzzle pieces whose knobs and sockets encode term
distribution; a syllogism is valid exactly when the pieces assemble. The
package bundles the piece calculus, a finite-model oracle that certifies it,
equivalence reductions to the first figure, a quiz engine with rankings, an
HTTP service and a CLI.
"""

from .diagram import (
    Decision,
    Diagram,
    Edge,
    FailureReason,
    InterlockTrace,
    Polarity,
    Verdict,
    conclusion_fits,
    decide,
    diagram_form,
    encode,
    middle_interlocks,
)
from .errors import (
    BadCount,
    DasasapError,
    DuplicateAnswer,
    InvalidTransformation,
    MalformedSyllogism,
    MissingMiddleTerm,
    NotValid,
    ParseError,
    ReductionNotFound,
    SessionFinished,
    SessionNotComplete,
    UnboundTerm,
    UnknownChallenge,
    UnknownName,
    UnknownTopic,
)
from .engine import (
    ALL_SYLLOGISMS,
    INVALID_SYLLOGISMS,
    TOPICS,
    VALID_SYLLOGISMS,
    Answer,
    Challenge,
    ChallengeKind,
    GameSession,
    Page,
    QuizDescriptor,
    ScoreEntry,
    Section,
    SessionMode,
    SessionState,
    finish_session,
    grade,
    learning_content,
    new_session,
    random_syllogism,
    recompute_score,
    score_delta,
    submit_answer,
)
from .model import (
    Form,
    Mood,
    Proposition,
    Quality,
    Quantity,
    Syllogism,
    Term,
    enumerate_all,
    figure_of,
    mnemonic_of,
    mnemonic_of_syllogism,
    mood_of,
    mood_of_syllogism,
    standard_form_roles,
    syllogism_of_mood,
)
from .notation import (
    parse_proposition,
    parse_syllogism,
    print_proposition,
    print_syllogism,
)
from .rankings import RankingStore
from .semantics import (
    IdentityStatus,
    Model,
    OracleVerdict,
    ReductionStep,
    SquareRelation,
    SquareVerdict,
    Transformation,
    TransformKind,
    TransformTarget,
    apply_transformation,
    classify_identity,
    evaluate,
    figure1_mnemonic,
    oracle_decide,
    reduce_to_figure1,
    square_relation,
    transform,
)

__version__ = "0.1.0"

__all__ = [
    "ALL_SYLLOGISMS",
    "Answer",
    "BadCount",
    "Challenge",
    "ChallengeKind",
    "DasasapError",
    "Decision",
    "Diagram",
    "DuplicateAnswer",
    "Edge",
    "FailureReason",
    "Form",
    "GameSession",
    "INVALID_SYLLOGISMS",
    "IdentityStatus",
    "InterlockTrace",
    "InvalidTransformation",
    "MalformedSyllogism",
    "MissingMiddleTerm",
    "Model",
    "Mood",
    "NotValid",
    "OracleVerdict",
    "Page",
    "ParseError",
    "Polarity",
    "Proposition",
    "Quality",
    "Quantity",
    "QuizDescriptor",
    "RankingStore",
    "ReductionNotFound",
    "ReductionStep",
    "ScoreEntry",
    "Section",
    "SessionFinished",
    "SessionMode",
    "SessionNotComplete",
    "SessionState",
    "SquareRelation",
    "SquareVerdict",
    "Syllogism",
    "TOPICS",
    "Term",
    "TransformKind",
    "TransformTarget",
    "Transformation",
    "UnboundTerm",
    "UnknownChallenge",
    "UnknownName",
    "UnknownTopic",
    "VALID_SYLLOGISMS",
    "Verdict",
    "apply_transformation",
    "classify_identity",
    "conclusion_fits",
    "decide",
    "diagram_form",
    "encode",
    "enumerate_all",
    "evaluate",
    "figure1_mnemonic",
    "figure_of",
    "finish_session",
    "grade",
    "learning_content",
    "middle_interlocks",
    "mnemonic_of",
    "mnemonic_of_syllogism",
    "mood_of",
    "mood_of_syllogism",
    "new_session",
    "oracle_decide",
    "parse_proposition",
    "parse_syllogism",
    "print_proposition",
    "print_syllogism",
    "random_syllogism",
    "recompute_score",
    "reduce_to_figure1",
    "score_delta",
    "square_relation",
    "standard_form_roles",
    "submit_answer",
    "syllogism_of_mood",
    "transform",
]
