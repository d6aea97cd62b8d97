"""Exception hierarchy shared by every module."""


class OrdplexError(Exception):
    """Base class for all library errors."""


class UnknownVertex(OrdplexError, KeyError):
    def __init__(self, token):
        super().__init__(token)
        self.token = token

    def __str__(self):
        return f"unknown vertex {self.token!r}"


class ReservedCharacter(OrdplexError, ValueError):
    pass


class DuplicateVertex(OrdplexError, ValueError):
    pass


class MalformedToken(OrdplexError, ValueError):
    pass


class NotASimplex(OrdplexError, ValueError):
    pass


class InvalidWindow(OrdplexError, ValueError):
    pass


class WindowTooSmall(OrdplexError, ValueError):
    pass


class SupportNotAChain(OrdplexError, ValueError):
    pass


class InvalidPoint(OrdplexError, ValueError):
    pass


class DocumentError(OrdplexError, ValueError):
    """Malformed document text (bad JSON, missing or mistyped fields)."""


class ValidationFailed(OrdplexError):
    """An order relation violates at least one of the axioms P1, P2, P3.

    The full list of violations is kept on ``report``.
    """

    def __init__(self, report):
        self.report = tuple(report)
        lines = [str(v) for v in self.report[:10]]
        if len(self.report) > 10:
            lines.append(f"... and {len(self.report) - 10} more")
        super().__init__("ordering axioms violated:\n  " + "\n  ".join(lines))
