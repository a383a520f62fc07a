"""Exception types shared across the package."""


class InvalidInput(ValueError):
    """Arguments violate an operation's precondition."""


class StructuralError(RuntimeError):
    """A combinatorial object is malformed (non-planar data, bad labels, ...)."""


class NoFlowError(StructuralError):
    """No J-flow exists for the requested subset."""


class ResourceError(RuntimeError):
    """A configured size bound was exceeded."""


class NotApplicable(Exception):
    """A local move cannot be applied at the requested place."""


class NotInTropicalVariety(ValueError):
    """A weight vector violates the four-point condition."""


class UnsupportedShape(ValueError):
    """A basis has a shape the requested decision procedure cannot handle."""
