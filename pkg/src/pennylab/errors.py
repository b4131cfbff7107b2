"""Exception hierarchy shared across the package.

``InputError`` subclasses map to CLI exit code 2, check failures to exit
code 1 (computed from reports, never raised), and
``InternalInvariantViolation`` to exit code 3.
"""


class PennyLabError(Exception):
    """Base class for all package errors."""


class InputError(PennyLabError):
    """Bad user input: malformed files, invalid parameters, bad geometry."""


class EmptyInput(InputError):
    pass


class DuplicatePoints(InputError):
    def __init__(self, i, j, distance):
        super().__init__(f"points {i} and {j} coincide (distance {distance!r})")
        self.pair = (i, j)
        self.distance = distance


class OverlapDetected(InputError):
    def __init__(self, i, j, distance):
        super().__init__(
            f"disks {i} and {j} overlap: center distance {distance!r} < 2"
        )
        self.pair = (i, j)
        self.distance = distance


class FormatError(InputError):
    pass


class Degenerate(InputError):
    """A generated instance came out empty."""


class NotBiconnected(PennyLabError):
    pass


class TriangleFound(PennyLabError):
    def __init__(self, triple):
        super().__init__(f"triangle on vertices {triple}")
        self.triple = triple


class Disconnected(PennyLabError):
    pass


class MissingRotation(PennyLabError):
    pass


class InsufficientLists(PennyLabError):
    def __init__(self, vertex, degree, list_size):
        super().__init__(
            f"stuck at vertex {vertex}: reduced degree {degree} "
            f"with only {list_size} admissible colors"
        )
        self.vertex = vertex
        self.degree = degree
        self.list_size = list_size


class TooLarge(PennyLabError):
    """Exhaustive oracle invoked beyond its documented size bounds."""


class NotSquaregraph(PennyLabError):
    def __init__(self, violations):
        super().__init__("not a valid squaregraph: " + "; ".join(violations))
        self.violations = violations


class InternalInvariantViolation(PennyLabError):
    """A structural invariant the library itself guarantees was broken."""
