"""Exception types raised by the package."""


class PathIdealsError(Exception):
    pass


class InvalidSize(PathIdealsError, ValueError):
    pass


class InvalidPoset(PathIdealsError, ValueError):
    pass


class InvalidParameter(PathIdealsError, ValueError):
    pass


class UnsupportedInput(PathIdealsError, ValueError):
    pass


class EmptyFamily(PathIdealsError, ValueError):
    """Raised where a construction needs at least one generator."""


class InconsistentIdeal(PathIdealsError, ValueError):
    pass


class NotAFace(PathIdealsError, ValueError):
    pass


class InvalidFamily(PathIdealsError, ValueError):
    pass


class InvalidArgument(PathIdealsError, ValueError):
    pass
