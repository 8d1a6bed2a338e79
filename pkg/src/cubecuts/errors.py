"""Exception types shared across the package."""


class CubecutsError(Exception):
    """Base class for all domain errors."""


class InvalidComplex(CubecutsError):
    """A complex description failed validation; carries all diagnostics."""

    def __init__(self, diagnostics):
        self.diagnostics = list(diagnostics)
        super().__init__("; ".join(self.diagnostics))


class NotNPC(CubecutsError):
    def __init__(self, vertex, reason):
        self.vertex = vertex
        self.reason = reason
        super().__init__(f"link condition fails at vertex {vertex!r}: {reason}")


class NotFull(CubecutsError):
    """Subcomplex is not full in its ambient complex."""


class AdjacencyViolation(CubecutsError):
    """Cut-set candidates must be pairwise non-adjacent."""


class DisconnectedInput(CubecutsError):
    """Operation requires a connected complex."""


class BadLinkMap(CubecutsError):
    """Gluing map is not an isomorphism of links."""


class BoundaryTouched(CubecutsError):
    """A hull or subcomplex reached the boundary shell of a developed ball."""


class InsufficientMargin(CubecutsError):
    """Subcomplex sits too close to the boundary shell for the requested query."""


class NotStabilized(CubecutsError):
    """Whitehead data has not stabilized at this search radius."""


class TrivialPullback(CubecutsError):
    """A cohomology class pulled back to zero; contradicts the no-1-cut hypothesis."""


class CutAlongError(CubecutsError):
    """Cutting requires an embedded two-sided hyperplane."""


class PreflightCutFound(CubecutsError):
    """The periodic-cut search found a 0- or 1-cut during preflight."""

    def __init__(self, kind, report):
        self.kind = kind  # 0 or 1
        self.report = report
        super().__init__(f"preflight found a {kind}-cut")


class UnfoldingCapExceeded(CubecutsError):
    def __init__(self, trace):
        self.trace = trace
        super().__init__(f"unfolding did not terminate within the iteration cap "
                         f"({len(trace)} moves recorded)")
