"""Exception hierarchy shared by all modules."""


class CycPolyError(Exception):
    """Base class for every error raised by this package."""


class FreeMatroid(CycPolyError):
    """A matroid without circuits (or with an empty ground set) was requested."""


class FreeResult(FreeMatroid):
    """An operation would produce a free matroid."""


class EmptyCircuitList(FreeMatroid):
    """A circuit presentation with no circuits."""


class AxiomViolation(CycPolyError):
    """A circuit family fails the circuit axioms."""


class CapExceeded(CycPolyError):
    """An enumeration or search budget was exceeded."""


class NotACircuit(CycPolyError):
    """The contracted set of a binary matroidal retract is not a circuit."""


class PairingFails(CycPolyError):
    """The intersection-pattern condition of a binary matroidal retract fails."""


class NotApplicable(CycPolyError):
    """The requested operation does not apply to the given element."""


class Disconnected(CycPolyError):
    """A connected graph was required."""


class NotTwoConnected(CycPolyError):
    """A 2-connected graph was required."""


class NotANeighborhoodMinor(CycPolyError):
    """The vertex partition does not define a neighborhood-minor."""


class PropertyViolation(CycPolyError):
    """A guaranteed mathematical relation failed; this indicates a bug."""


class ParseError(CycPolyError):
    """An input file could not be parsed."""
