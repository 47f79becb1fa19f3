"""Exception hierarchy shared by all modules."""


class TmabelError(Exception):
    pass


class OddLength(TmabelError, ValueError):
    """Preimage requested for a word of odd length."""


class NotInImage(TmabelError, ValueError):
    """A 2-block of the word is 00 or 11, so it has no preimage."""


class NotAFactor(TmabelError, ValueError):
    """The word does not occur in the Thue-Morse word."""


class TooShort(TmabelError, ValueError):
    pass


class EmptyWord(TmabelError, ValueError):
    pass


class FrameAmbiguous(TmabelError, ValueError):
    """The odd frame of a short pair-free word is not determined."""


class MalformedCoding(TmabelError, ValueError):
    pass


class InconsistentTuple(TmabelError, ValueError):
    """No factor realizes the given compressed class tuple."""


class OddArgument(TmabelError, ValueError):
    pass


class BudgetExceeded(TmabelError, RuntimeError):
    """The sliding-window enumeration failed to saturate within its budget."""


class NonClosure(TmabelError):
    """A kernel subsequence does not reduce to the proposed basis."""

    def __init__(self, term, message=None):
        self.term = term
        super().__init__(message or f"{term} does not reduce to the basis")


class InsufficientSamples(TmabelError, ValueError):
    pass
