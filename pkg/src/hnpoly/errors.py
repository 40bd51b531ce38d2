class DomainError(ValueError):
    """Raised when an operation is called outside its mathematical domain."""


class ParseError(DomainError):
    """Malformed bundle or polygon text; carries the offending position."""

    def __init__(self, message: str, text: str, position: int):
        self.text = text
        self.position = position
        pointer = " " * position + "^"
        super().__init__(f"{message} at position {position}\n  {text}\n  {pointer}")
