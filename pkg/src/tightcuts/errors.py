"""Exception types shared across the package."""


class TightcutsError(Exception):
    """Base class for every error raised by this package."""


class LoopRejected(TightcutsError):
    """An edge joining a vertex to itself was supplied."""


class BadVertex(TightcutsError):
    """A vertex id outside the host graph was referenced."""


class BadShore(TightcutsError):
    """A shore that is empty, full, or not a subset of the vertex set."""


class GraphMismatch(TightcutsError):
    """Two values that must live on the same graph do not."""


class GraphTooLarge(TightcutsError):
    """The operation has a hard vertex cap and the input exceeds it."""


class ParseError(TightcutsError):
    """Malformed graph6 or JSON graph input."""


class EvenShore(TightcutsError):
    """Tightness is only defined here for odd shores."""


class NotMatchingCovered(TightcutsError):
    """The operation requires a matching covered input graph."""


class TooSmall(TightcutsError):
    """The predicate needs more vertices than the graph has."""


class EmptySet(TightcutsError):
    """A nonempty vertex set was required."""


class TrivialCut(TightcutsError):
    """A non-trivial cut was required (both shores of size >= 2... >= 3 odd)."""


class NotTight(TightcutsError):
    """A tight cut was required; carries a witness matching when known."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class BadCertificate(TightcutsError):
    """A certificate failed re-validation against its graph."""


class SearchBudgetExceeded(TightcutsError):
    """A bounded certificate search ran out of budget; carries its transcript."""

    def __init__(self, message, transcript=()):
        super().__init__(message)
        self.transcript = tuple(transcript)


class BadSplice(TightcutsError):
    """Edge-splice preconditions (shared edge, overlap, parity) were violated."""


class BadParameter(TightcutsError):
    """A generator parameter is out of its documented range."""


class UnknownGraph(TightcutsError):
    """gen_named was asked for a name it does not know."""


class NeedExternalCorpus(TightcutsError):
    """Built-in enumeration stops at 8 vertices; larger corpora must be files."""
