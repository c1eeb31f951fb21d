"""Exception hierarchy shared by the library and the command line."""


class GkmError(Exception):
    """Base class for all errors raised by gkmcalc."""


class ParseError(GkmError):
    """A document could not be turned into a space or a class.

    ``path`` is the JSON path of the offending value (a tuple of keys and
    indices) and ``line`` its 1-based line in the source text, when known.
    """

    def __init__(self, message: str, path: tuple = (), line: int | None = None):
        self.message = message
        self.path = tuple(path)
        self.line = line
        where = "/".join(str(p) for p in self.path) or "<root>"
        loc = f" (line {line})" if line is not None else ""
        super().__init__(f"{where}{loc}: {message}")


class ValidationError(GkmError):
    def __init__(self, report):
        self.report = report
        errors = [i for i in report.issues if i.severity == "error"]
        super().__init__("; ".join(i.message for i in errors) or "validation failed")


class ClassError(GkmError):
    """A cohomology class is malformed for the space it is checked against."""


class CongruenceError(GkmError):
    """A localization residue was requested for a class violating congruences."""


class InconsistencyError(GkmError):
    """An algebraic guarantee failed, e.g. a product left the subalgebra."""
