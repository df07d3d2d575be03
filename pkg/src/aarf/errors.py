"""Exception hierarchy.

``InputError`` subclasses signal bad user input (CLI exit code 2);
``InternalError`` subclasses signal a broken invariant inside the library
(CLI exit code 3).
"""


class AarfError(Exception):
    code = "AarfError"


class InputError(AarfError, ValueError):
    pass


class InternalError(AarfError, AssertionError):
    pass


class GcdNotOne(InputError):
    code = "GcdNotOne"


class NotAMember(InputError):
    code = "NotAMember"


class NoGaps(InputError):
    code = "NoGaps"


class NotMinimal(InputError):
    code = "NotMinimal"


class InvalidPresentation(InputError):
    code = "InvalidPresentation"


class WrongRegime(InputError):
    code = "WrongRegime"


class IndexOutOfRange(InputError):
    code = "IndexOutOfRange"


class NotPseudoFrobenius(InputError):
    code = "NotPseudoFrobenius"


class NoApplicableCase(InputError):
    code = "NoApplicableCase"


class ConstructionInvalid(InternalError):
    code = "ConstructionInvalid"


class ClassificationMismatch(InternalError):
    code = "ClassificationMismatch"


class ConstantsNotUnique(InternalError):
    code = "ConstantsNotUnique"
