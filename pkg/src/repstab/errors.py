"""Exception hierarchy shared across the package.

Everything raised on purpose derives from RepstabError so the CLI can map
failures onto its exit codes: usage errors are argparse's business, validity
bounds exit 3, resource caps exit 4.
"""


class RepstabError(Exception):
    """Base class for all errors raised by this package."""


class PaddingRangeError(RepstabError):
    """A padded label V(lambda)_n was requested outside its validity range."""


class ValidityBoundError(RepstabError):
    """A theorem's stated validity bound was violated (distinct from a zero answer)."""


class ResourceCapError(RepstabError):
    """A configured size cap refused the computation before it started."""


class RankMismatchError(RepstabError):
    """Two ring elements living over different groups were combined."""


class FamilyMismatchError(RepstabError):
    """Two decompositions from different families were combined."""


class NotARepresentationError(RepstabError):
    """Class-function data failed to decompose with nonnegative integers."""


class NotDivisibleError(RepstabError):
    """Representation-ring division had no exact quotient."""
