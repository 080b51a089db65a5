"""Exception hierarchy. Every error carries a stable machine-readable ``code``."""


class SchurKitError(Exception):
    code = "schurkit_error"

    def to_dict(self):
        return {"code": self.code, "message": str(self)}


class UsageError(SchurKitError):
    code = "usage_error"


class ParseError(UsageError):
    code = "parse_error"


class OrderBoundExceeded(SchurKitError):
    code = "order_bound_exceeded"


class NotCyclic(SchurKitError):
    code = "not_cyclic"


class NotADivisor(SchurKitError):
    code = "not_a_divisor"


class AmbientMismatch(SchurKitError):
    code = "ambient_mismatch"


class GroupMismatch(SchurKitError):
    code = "group_mismatch"


class NotAHomomorphism(SchurKitError):
    code = "not_a_homomorphism"


class EmptySet(SchurKitError):
    code = "empty_set"


class NotAPartition(SchurKitError):
    code = "not_a_partition"


class IdentityNotSingleton(SchurKitError):
    code = "identity_not_singleton"


class NotInverseClosed(SchurKitError):
    code = "not_inverse_closed"

    def __init__(self, i):
        super().__init__(f"class {i} has no inverse class")
        self.i = i


class NotMultiplicativelyClosed(SchurKitError):
    code = "not_multiplicatively_closed"

    def __init__(self, i, j):
        super().__init__(f"product of classes {i} and {j} leaves the span")
        self.i = i
        self.j = j


class NotALattice(SchurKitError):
    code = "not_a_lattice"


class NotASemiLattice(SchurKitError):
    code = "not_a_semilattice"


class NotAnAutomorphism(SchurKitError):
    code = "not_an_automorphism"


class NotDirectProduct(SchurKitError):
    code = "not_direct_product"


class WedgePreconditionFailed(SchurKitError):
    code = "wedge_precondition_failed"

    def __init__(self, which):
        super().__init__(f"wedge precondition failed: {which}")
        self.which = which


class NotAMember(SchurKitError):
    code = "not_a_member"


class NotInN(SchurKitError):
    code = "not_in_n"


class NotIdempotent(SchurKitError):
    code = "not_idempotent"


class NotMember(SchurKitError):
    code = "not_member"


class NonPositive(SchurKitError):
    code = "non_positive"


class NotUnits(SchurKitError):
    code = "not_units"


class AtomCapExceeded(SchurKitError):
    code = "atom_cap_exceeded"
