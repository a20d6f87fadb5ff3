"""Exception types shared across the package."""


class BraidSeedError(Exception):
    pass


class ConfigurationError(BraidSeedError, ValueError):
    """Unknown Dynkin type, bad word syntax, letter out of range."""


class BadDemazure(BraidSeedError):
    """The Demazure product of the word is not the longest element."""


class InternalInconsistency(BraidSeedError):
    """A structural invariant failed; indicates a bug, never user error."""


class NonIntegral(InternalInconsistency):
    pass


class NotMutable(BraidSeedError):
    pass


class AssumptionViolated(BraidSeedError):
    pass


class IncomparableLattices(BraidSeedError):
    pass


class NotApplicable(BraidSeedError):
    pass


class NotAdmissible(BraidSeedError):
    pass


class NotQuasiAdmissible(BraidSeedError):
    pass


class DivisionFailure(InternalInconsistency):
    pass


class FactorizationFailure(InternalInconsistency):
    pass
