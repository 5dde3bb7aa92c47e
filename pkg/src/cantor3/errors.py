class ParseError(ValueError):
    """A multiplier or graph spec string does not match the input grammar."""


class RefusalError(RuntimeError):
    """A computation would exceed a configured size cap and is refused."""
