"""Exception types shared across the package."""


class MedkitError(Exception):
    """Base class for all library errors."""


class DisconnectedGraph(MedkitError):
    pass


class NotMedian(MedkitError):
    """The input graph violates the unique-median axiom."""


class NotConvex(MedkitError):
    pass


class NotDisjoint(MedkitError):
    pass


class EmptySet(MedkitError):
    pass


class EmptyFamily(MedkitError):
    pass


class NotAutomorphism(MedkitError):
    pass


class ThetaNotTransitive(NotMedian):
    """Edge equivalence classes fail transitivity (non-median certificate)."""


class InconsistentPocset(MedkitError):
    pass


class InvalidChain(MedkitError):
    pass


class InvalidTriple(MedkitError):
    pass


class NotConstant(MedkitError):
    """Deep-triple median varied across representatives (correctness bug)."""


class InvalidSpec(MedkitError):
    """Bad corpus generator name or parameters."""


class ParseError(MedkitError):
    pass
