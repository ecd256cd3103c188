"""Exception types shared across the library."""


class NconcError(Exception):
    """Base class for all library-specific errors."""


class NonHermitianInput(NconcError):
    """Input expected to be Hermitian deviates beyond tolerance."""


class NotPositiveSemidefinite(NconcError):
    """Hermitian input has an eigenvalue below the PSD tolerance."""


class NotSymmetric(NconcError):
    """Input expected to be complex symmetric (m == m.T) is not."""


class DegeneratePairing(NconcError):
    """The +/- eigenvalue pairing of a real lift could not be completed."""


class TooLarge(NconcError):
    """Requested dense computation exceeds the qubit cap."""


class TooLargeForFullEnumeration(NconcError):
    """Requested full level enumeration exceeds the enumeration cap."""


class NonRealState(NconcError):
    """State vector expected to be real has an imaginary part."""


class NonUnitary(NconcError):
    """Matrix expected to be unitary is not, beyond tolerance."""


class FermionicUnsupported(NconcError):
    """Operation requires a bosonic time-reversal operator (omega == omega.T)."""


class BracketingFailure(NconcError):
    """Root bracketing failed even after widening the search interval."""


class NoJumpFound(NconcError):
    """No discontinuity detected in a sweep."""


class InputError(NconcError):
    """Malformed input file or configuration."""
