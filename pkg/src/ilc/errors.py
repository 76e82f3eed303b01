class InvalidInput(ValueError):
    """An operation was called outside its precondition."""


class ResourceLimit(RuntimeError):
    """A size guard was exceeded; the computation was not attempted."""
