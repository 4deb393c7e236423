"""Exception hierarchy shared by every sproutlab module."""


class SproutError(Exception):
    """Base class for all sproutlab errors."""


class ParameterError(SproutError, ValueError):
    """A family or operation parameter is outside its legal range."""

    def __init__(self, name, value, message):
        self.name = name
        self.value = value
        super().__init__(f"parameter {name}={value!r}: {message}")


class GraphFormatError(SproutError, ValueError):
    """Malformed graph data: loops, duplicate edges, bad endpoints or syntax."""


class PatternError(SproutError, ValueError):
    """An index pattern is not a permutation or does not fit the graph."""


class ConnectivityError(SproutError, ValueError):
    """The operation needs a connected (or tree) input."""


class SizeLimitError(SproutError):
    """The instance is larger than the configured exhaustive-search cap."""

    def __init__(self, order, cap, what="exhaustive search"):
        self.order = order
        self.cap = cap
        super().__init__(
            f"{what} refused: order {order} exceeds cap {cap} "
            "(raise the cap or pass force_large/--force-large)"
        )
