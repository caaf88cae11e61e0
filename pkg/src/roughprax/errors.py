class RoughError(Exception):
    """Base class for all workbench errors."""


class UniverseMismatch(RoughError, ValueError):
    pass


class FormatError(RoughError, ValueError):
    """Malformed relation file, subset literal or operator expression."""


class CapExceeded(RoughError):
    """A universe is larger than the configured enumeration cap."""

    def __init__(self, what: str, size: int, cap: int):
        super().__init__(f"{what}: universe size {size} exceeds cap {cap}")
        self.what = what
        self.size = size
        self.cap = cap


class NotPRAXError(RoughError, ValueError):
    """Operation needs a reflexive proto-transitive relation."""
