"""Exception hierarchy shared by all factorinv modules."""


class FactorInvError(Exception):
    """Base class for every error raised by this package."""


class InvalidSpecificationError(FactorInvError):
    """A group, subset, monoid, tower, or lattice definition is malformed."""


class InvalidElementError(FactorInvError):
    """A residue tuple does not belong to the group at hand (wrong arity or type)."""


class NotAMemberError(FactorInvError):
    """An exponent vector or sequence is not an element of the monoid."""


class IncomparableError(FactorInvError):
    """Two factorizations (or chains) do not belong to a common element (or lattice)."""


class TruncatedEnumerationError(FactorInvError):
    """A factorization enumeration exceeded its configured cap."""


class NotACoveringError(FactorInvError):
    """The given arithmetic progressions do not cover the cyclic group."""


class InvalidStepError(FactorInvError):
    """A genus update would drive a rank below zero; no such maximal submodule exists."""


class FaithfulTowerError(FactorInvError):
    """A tower specification contains a non-trivial faithful tower."""


class InternalConsistencyError(FactorInvError):
    """An internal guard failed; inputs violated a documented precondition."""


class UnknownBuiltinError(FactorInvError):
    """No built-in lattice with the requested name exists."""


class LatticeValidationError(FactorInvError):
    """Base class for ideal-lattice document validation failures."""


class CoverCycleError(LatticeValidationError):
    """The cover relation contains a directed cycle."""


class ExtremaError(LatticeValidationError):
    """Top or bottom node is missing, duplicated, or unreachable."""


class LabelMultisetError(LatticeValidationError):
    """Two cover paths between the same pair of nodes carry different label multisets."""


class NonPrincipalBoundError(LatticeValidationError):
    """Top or bottom of the lattice is not flagged principal."""
