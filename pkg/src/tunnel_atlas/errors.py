"""Exception types raised by tunnel_atlas."""


class TunnelAtlasError(ValueError):
    """Base class for invalid-input errors."""


class ParseError(TunnelAtlasError):
    """Text is not a valid binary word or step sequence.

    ``position`` is 1-based and points at the offending character.
    """

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (position {position})"
        super().__init__(message)


class NotRegularError(TunnelAtlasError):
    """The word has no 1, so the tunnel is simple or semisimple."""


class InvalidSeedError(TunnelAtlasError):
    pass


class NotCoprimeError(TunnelAtlasError):
    pass


class OutOfRangeError(TunnelAtlasError):
    pass


class TrivialKnotError(TunnelAtlasError):
    """Torus parameters with min(|p|, |q|) <= 1 describe the unknot."""


class CapExceededError(TunnelAtlasError):
    """An enumeration was asked to go past its configured length cap."""


class InfeasibleError(TunnelAtlasError):
    """A search constraint admits no word."""
