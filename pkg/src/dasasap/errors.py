"""Exception types shared across the package."""


class DasasapError(Exception):
    """Base class for every error raised by this package."""


class ParseError(DasasapError):
    """Input text does not match the syllogism grammar.

    ``position`` is the index of the first offending character and
    ``expected`` the set of token descriptions that would have been legal.
    """

    def __init__(self, text: str, position: int, expected: tuple[str, ...]):
        self.text = text
        self.position = position
        self.expected = expected
        super().__init__(
            f"parse error at index {position}: expected {' or '.join(expected)}"
        )


class MalformedSyllogism(DasasapError):
    """Text parses, but the three statements violate standard form."""


class UnknownName(DasasapError):
    """No mood carries this mnemonic name."""


class UnboundTerm(DasasapError):
    """A statement mentions a term the model gives no extension for."""


class MissingMiddleTerm(DasasapError):
    """The requested linking term does not occur exactly once per premise."""


class InvalidTransformation(DasasapError):
    """The transformation is not truth-preserving for this statement form."""


class NotValid(DasasapError):
    """Operation requires a valid syllogism but the input is invalid."""


class ReductionNotFound(DasasapError):
    """No equivalence derivation to a first-figure mood within the depth cap."""


class BadCount(DasasapError):
    """Requested challenge count is outside the allowed range."""


class UnknownChallenge(DasasapError):
    """The session has no pending challenge with that id."""


class DuplicateAnswer(DasasapError):
    """This challenge has already been answered."""


class SessionFinished(DasasapError):
    """The session is finished and can no longer change."""


class SessionNotComplete(DasasapError):
    """Cannot finish: unanswered challenges remain and the session was not abandoned."""


class UnknownTopic(DasasapError):
    """No learning page exists for that topic."""
