# filepath: pinpoint/core/exceptions.py
"""
Error types raised by the pinpointing library.
The CLI maps them to exit codes (see manage.py).
"""
from typing import Optional


class PinpointError(Exception):
    """Base class for all library errors"""
    pass


class ParseError(PinpointError):
    """Malformed ontology or goal text"""

    def __init__(self, line: int, column: int, message: str):
        self.line = line
        self.column = column
        self.message = message
        super().__init__(f"line {line}, column {column}: {message}")


class DuplicateId(PinpointError):
    """Two axioms share the same identifier"""

    def __init__(self, axiom_id: str, detail: Optional[str] = None):
        self.axiom_id = axiom_id
        message = f"duplicate axiom id: {axiom_id}"
        super().__init__(f"{message} ({detail})" if detail else message)


class UnsupportedConstruct(PinpointError):
    """Input uses a construct outside the supported fragment (e.g. ABox assertions)"""
    pass


class ResourceLimit(PinpointError):
    """A configured reasoning budget was exceeded"""
    pass


class NotEntailed(PinpointError):
    """The goal does not follow from the ontology"""
    pass


class NoRepair(PinpointError):
    """The goal holds in the empty ontology, so no sub-ontology removes it"""
    pass


class EmptyMember(PinpointError):
    """A set family handed to the hitting-set routine contains the empty set"""
    pass


class PreconditionViolated(PinpointError):
    """An operation was called outside its precondition"""
    pass


class CapExceeded(PinpointError):
    """The brute-force oracle refused a module larger than its cap"""

    def __init__(self, size: int, cap: int):
        self.size = size
        self.cap = cap
        super().__init__(f"module of size {size} exceeds brute-force cap {cap}")


class DisagreementDetected(PinpointError):
    """Two pinpointing methods returned different unions for the same goal"""
    pass
