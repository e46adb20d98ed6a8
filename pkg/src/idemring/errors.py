"""Exception hierarchy.

``InputError`` subclasses describe bad user input (CLI exit code 2).
``RelationError`` subclasses describe a requested relation that does not
hold, e.g. asking to connect two idempotents from different classes
(exit code 1).  ``TheoremViolation`` means a proved statement failed on a
concrete ring, which can only be an implementation bug.
"""


class RingError(Exception):
    pass


class InputError(RingError):
    pass


class NonPrime(InputError):
    def __init__(self, p):
        super().__init__(f"{p} is not prime")
        self.p = p


class Reducible(InputError):
    def __init__(self, modulus, factor=None):
        msg = f"modulus {list(modulus)} is reducible"
        if factor is not None:
            msg += f" (divisible by {list(factor)})"
        super().__init__(msg)
        self.modulus = modulus
        self.factor = factor


class SizeExceeded(InputError):
    def __init__(self, size, bound):
        super().__init__(f"size {size} exceeds enumeration bound {bound}")
        self.size = size
        self.bound = bound


class NotAGroup(InputError):
    pass


class NotARing(InputError):
    """Raised when constructed arithmetic fails a ring axiom."""


class SpecError(InputError):
    pass


class BadVertex(InputError):
    pass


class RelationError(RingError):
    pass


class NotIdempotent(RelationError):
    def __init__(self, x):
        super().__init__(f"element {x} is not idempotent")
        self.x = x


class NotAWitness(RelationError):
    def __init__(self, e, b):
        super().__init__(f"b={b} does not separate be-ebe from eb-ebe for e={e}")
        self.e = e
        self.b = b


class NotSquareZero(RelationError):
    def __init__(self, u):
        super().__init__(f"element {u} does not square to zero")
        self.u = u


class NotEquivalent(RelationError):
    def __init__(self, e1, e2, kind, reason=""):
        msg = f"{e2} is not {kind}-equivalent to {e1}"
        if reason:
            msg += f": {reason}"
        super().__init__(msg)
        self.e1, self.e2, self.kind = e1, e2, kind


class NotAlgebra(RelationError):
    pass


class TheoremViolation(RingError):
    """A proved statement failed on a concrete ring: implementation bug."""


class NotGraphAutomorphism(TheoremViolation):
    pass
