class QuiverError(Exception):
    """Base class for every error raised by quiverfan."""


class ParseError(QuiverError):
    pass


class CycleError(QuiverError):
    pass


class UnknownVertexError(QuiverError):
    pass


class InvalidInputError(QuiverError):
    """Arguments violate an operation's precondition (shape, sign, root class)."""


class ResourceError(QuiverError):
    """A configured search or memo budget was exceeded."""


class ConsistencyError(QuiverError):
    """An internal post-condition failed; the input is kept for inspection."""

    def __init__(self, message, **context):
        super().__init__(message)
        self.context = context
