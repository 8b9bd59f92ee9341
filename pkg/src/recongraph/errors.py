"""Exception hierarchy shared by every module."""


class ReconError(Exception):
    """Base class for all errors raised by recongraph."""


class ResourceCap(ReconError):
    """A configured search-node or enumeration-count budget was exceeded."""


class ParseError(ReconError, ValueError):
    def __init__(self, message: str, offset: int = 0):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class ImproperInput(ReconError, ValueError):
    """A colouring is not a proper colouring of the given graph."""


class NoColourings(ReconError):
    """k is below the chromatic number, so there is nothing to quantify over."""


class NotCliquePartition(ReconError):
    """A neighbourhood does not split into cliques; not a recolouring graph."""


class EmptyInput(ReconError, ValueError):
    pass


class NotConnected(ReconError, ValueError):
    pass


class NotLineGraph(ReconError):
    pass


class RootAmbiguityDefect(ReconError):
    """Two non-isomorphic line-graph roots outside the triangle/claw case."""


class NoLayering(ReconError):
    pass


class AmbiguousLayering(ReconError):
    pass


class InvalidComponent(ReconError):
    pass


class UnsupportedCase(ReconError):
    pass


class NoFrozenVertex(ReconError):
    pass


class PreconditionViolated(ReconError, ValueError):
    pass
