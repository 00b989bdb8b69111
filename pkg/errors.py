from typing import Any


class HdaLangError(Exception):
    """Base class for every error raised by the library."""


class AxiomViolation(HdaLangError):
    def __init__(self, reason: str, witness: Any = None):
        self.reason = reason
        self.witness = witness
        message = reason if witness is None else f"{reason}: {witness}"
        super().__init__(message)


class InterfaceMismatch(HdaLangError):
    def __init__(self, left: tuple[str, ...], right: tuple[str, ...]):
        self.left = left
        self.right = right
        super().__init__(
            f"target interface {''.join(left) or 'ε'} does not match "
            f"source interface {''.join(right) or 'ε'}"
        )


class NotRemovable(HdaLangError):
    def __init__(self, events: frozenset[int]):
        self.events = events
        super().__init__(f"events {sorted(events)} are not in rfin")


class MalformedInterval(HdaLangError):
    def __init__(self, event: str, begin: Any, end: Any):
        self.event = event
        self.begin = begin
        self.end = end
        super().__init__(f"event {event}: begin {begin} is after end {end}")


class FaceTypingError(HdaLangError):
    def __init__(self, cell: str, position: int, face: str, reason: str):
        self.cell = cell
        self.position = position
        self.face = face
        super().__init__(f"cell {cell}, position {position + 1}, face {face}: {reason}")


class IdentityViolation(HdaLangError):
    def __init__(self, cell: str, i: int, j: int, kinds: tuple[int, int], left: str, right: str):
        self.cell = cell
        self.i = i
        self.j = j
        self.kinds = kinds
        self.left = left
        self.right = right
        super().__init__(
            f"cell {cell}: d{kinds[0]}({i + 1}) d{kinds[1]}({j + 1}) gives {left} "
            f"but the other order gives {right}"
        )


class NotDownClosed(HdaLangError):
    def __init__(self, missing: list[Any]):
        self.missing = missing
        shown = ", ".join(str(m) for m in missing[:5])
        super().__init__(f"language is not closed under subsumption, missing {shown}")


class ParseError(HdaLangError):
    def __init__(self, source: str, line: int, message: str):
        self.source = source
        self.line = line
        super().__init__(f"{source}:{line}: {message}")


class ConfigError(HdaLangError):
    pass


class UnknownCell(HdaLangError):
    def __init__(self, cell: str, context: str = ""):
        self.cell = cell
        super().__init__(f"unknown cell {cell}" + (f" ({context})" if context else ""))
