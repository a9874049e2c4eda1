"""Exception hierarchy shared by every module of the package."""


class DynnikovError(ValueError):
    """Base class for domain errors (bad coordinates, words, parameters)."""


class DegenerateCoordinatesError(DynnikovError):
    """The all-zero vector does not coordinatize any foliation."""


class ParityError(DynnikovError):
    """Integer triangle coordinates whose half-differences are not integral."""


class BraidWordError(DynnikovError):
    """Malformed braid word or generator index out of range."""


class StrandMismatchError(DynnikovError):
    """A braid and a coordinate vector live on different punctured disks."""


class NotPseudoAnosovError(DynnikovError):
    pass


class BranchHypothesisError(DynnikovError):
    """Input lies outside the region where a resolved linear formula is valid."""


class NoRootError(DynnikovError):
    pass
