"""Exception types raised across the package."""


class ExtCliffordError(Exception):
    """Base class for all package errors."""


class InvalidLabel(ExtCliffordError, ValueError):
    """A ClassLabel violates the invariants of its type."""


class InconsistentProfile(ExtCliffordError, ValueError):
    """An invariant profile does not correspond to any extended Clifford algebra."""


class EmptyInput(ExtCliffordError, ValueError):
    pass


class UnsupportedSystem(ExtCliffordError, ValueError):
    """The operation needs a generator system with the commuting/anticommuting block layout."""


class TooLarge(ExtCliffordError, ValueError):
    """A size cap was exceeded."""

    def __init__(self, what: str, size: int, cap: int):
        super().__init__(f"{what}: size {size} exceeds cap {cap}")
        self.size = size
        self.cap = cap


class ParseError(ExtCliffordError, ValueError):
    """Syntax error in an algebra expression; ``offset`` is a byte offset into the UTF-8 input."""

    def __init__(self, offset: int, expected: str, found: str = ""):
        msg = f"syntax error at byte {offset}: expected {expected}"
        if found:
            msg += f", found {found!r}"
        super().__init__(msg)
        self.offset = offset
        self.expected = expected
        self.found = found
