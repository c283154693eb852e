"""Exception hierarchy shared by all solver modules."""


class LexoptError(ValueError):
    """Base class for every error raised by this package."""


class InvalidWeight(LexoptError):
    pass


class InvalidBase(LexoptError):
    pass


class UnknownElement(LexoptError, KeyError):
    def __str__(self):
        return ValueError.__str__(self)


class InvalidSolution(LexoptError):
    pass


class AlreadyLexMaximal(LexoptError):
    pass


class NotDeficientAtIndex(LexoptError):
    pass


class OracleTooLarge(LexoptError):
    """Instance exceeds the brute-force enumeration bound."""


# The matroid axiom checker and the intersection oracle raise the same
# condition; keep one class with two names.
TooLarge = OracleTooLarge


class NotExtremeInput(LexoptError):
    """A negative-cost cycle was reachable, so the input set was not extreme."""


class NoAugmentation(LexoptError):
    pass


class GenerationError(LexoptError):
    pass


class InvalidParameter(LexoptError):
    pass
