"""Exception hierarchy.

Every domain failure is a ``ValueError`` so callers that only care about
"bad input" can catch that.
"""


class DomainError(ValueError):
    """A function was evaluated outside the region where it is defined."""


class SuperluminalSpeedError(DomainError):
    pass


class SpacelikeInputError(DomainError):
    pass


class ZeroModulusError(DomainError):
    pass


class ZeroMomentumError(DomainError):
    pass


class GammaBelowOneError(DomainError):
    pass


class NonpositiveTimeError(DomainError):
    pass


class NonpositiveEnergyError(DomainError):
    pass


class DegenerateVelocitiesError(DomainError):
    pass


class ComponentHupViolatedError(DomainError):
    """An input violates dq_i * dp_i >= hbar/2 for some component."""


class InsufficientSamplesError(ValueError):
    pass
