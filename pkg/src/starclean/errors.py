"""Exception types shared across the package."""


class StarCleanError(Exception):
    """Base class for all starclean errors."""


class ShapeError(StarCleanError):
    """Malformed input tables or labels."""


class AxiomViolation(StarCleanError):
    """A ring axiom fails; carries the axiom name and a witness tuple."""

    def __init__(self, axiom, witness=None):
        self.axiom = axiom
        self.witness = witness
        msg = axiom if witness is None else f"{axiom} fails at {witness}"
        super().__init__(msg)


class NotInvolution(StarCleanError):
    """A candidate permutation is not an involution of the ring."""

    def __init__(self, axiom, witness=None):
        self.axiom = axiom
        self.witness = witness
        msg = axiom if witness is None else f"{axiom} fails at {witness}"
        super().__init__(msg)


class NotAutomorphism(StarCleanError):
    """A candidate permutation is not a ring automorphism."""

    def __init__(self, axiom, witness=None):
        self.axiom = axiom
        self.witness = witness
        msg = axiom if witness is None else f"{axiom} fails at {witness}"
        super().__init__(msg)


class OrderBoundExceeded(StarCleanError):
    """A construction or search would exceed the configured order guard."""


class NotIdeal(StarCleanError):
    """A subset is not a two-sided ideal; carries a witness."""

    def __init__(self, reason, witness=None):
        self.reason = reason
        self.witness = witness
        msg = reason if witness is None else f"{reason} (witness {witness})"
        super().__init__(msg)


class NotStarIdeal(StarCleanError):
    """An ideal is not closed under the involution; carries a witness element."""

    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"ideal is not star-closed (witness element {witness})")


class SpecError(StarCleanError):
    """Malformed ring specification."""


class StarUndefined(StarCleanError):
    """The requested involution does not descend to the construction."""


class SigmaNotInvolutiveAutomorphism(StarCleanError):
    """The twisting map of a trivial extension must be an automorphism of order <= 2."""


class NotIdempotent(StarCleanError):
    """An element required to be idempotent is not."""


class RadicalPreconditionFailed(StarCleanError):
    """e - e* must lie in the Jacobson radical."""


class AuxMissing(StarCleanError):
    """A statement needs auxiliary data that was not supplied."""
