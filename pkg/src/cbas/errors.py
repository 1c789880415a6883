"""Shared exception types."""


class FormatError(ValueError):
    """A resource / data file does not match its documented format.

    Carries the offending path and 1-based line number when known, so CLI
    error messages can point at the exact line.
    """

    def __init__(self, message: str, path: str | None = None, line: int | None = None):
        self.path = path
        self.line = line
        prefix = ""
        if path is not None:
            prefix = f"{path}:"
            if line is not None:
                prefix += f"{line}:"
            prefix += " "
        super().__init__(prefix + message)
