"""Exception types shared across the toolkit."""


class SutkitError(Exception):
    """Base class for every error raised by the toolkit."""


class InvalidSlope(SutkitError, ValueError):
    pass


class InvalidMulticurve(SutkitError, ValueError):
    pass


class InconsistentIntersectionData(SutkitError, ValueError):
    pass


class InvalidSurface(SutkitError, ValueError):
    pass


class DanglingReference(SutkitError, LookupError):
    """An id in one record does not resolve in another."""


class PreconditionError(SutkitError, ValueError):
    pass


class StructureError(SutkitError, ValueError):
    """Malformed fat-graph rotation data."""


class NotAGabaiGraph(PreconditionError):
    pass


class NoScharlemannCycle(SutkitError, RuntimeError):
    """The constructive search ran out of candidates.

    This is never expected for an admissible Gabai graph; if it is ever raised
    the offending graph is attached so it can be serialized for inspection.
    """

    def __init__(self, message, graph=None, trail=None):
        super().__init__(message)
        self.graph = graph
        self.trail = trail or []


class DegenerateCrossing(SutkitError, ValueError):
    pass


class ScenarioError(SutkitError, ValueError):
    pass


class RecordError(SutkitError, ValueError):
    """A file could not be parsed; carries file, line and field."""

    def __init__(self, message, path=None, line=None, field=None):
        self.path = path
        self.line = line
        self.field = field
        self.message = message
        super().__init__(self.diagnostic())

    def diagnostic(self):
        where = self.path or "<input>"
        if self.line is not None:
            where = f"{where}:{self.line}"
        if self.field:
            return f"{where}: field '{self.field}': {self.message}"
        return f"{where}: {self.message}"
