class DomainError(ValueError):
    """Raised when an argument lies outside an operation's domain."""


class ParseError(DomainError):
    def __init__(self, line, message):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.reason = message
