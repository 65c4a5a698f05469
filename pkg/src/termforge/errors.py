"""Exception types shared by every termforge module."""


class TermforgeError(Exception):
    """A failed operation, tagged with a stable short ``code``.

    Callers branch on ``code`` (e.g. ``"DUPLICATE_ENTRY_ID"``); the message is
    for humans only.
    """

    def __init__(self, code, message=""):
        super().__init__(f"{code}: {message}" if message else code)
        self.code = code
        self.message = message


class ParseError(TermforgeError):
    """Raised by the format readers; carries the offending position."""

    def __init__(self, code, message="", line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "")
        super().__init__(code, f"{where}: {message}" if where else message)
        self.message = message
