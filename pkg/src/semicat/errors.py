"""Exception hierarchy.  Every error carries an optional ``witness``."""


class SemigroupError(Exception):
    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class NotClosed(SemigroupError):
    pass


class NotAssociative(SemigroupError):
    pass


class NotInverse(SemigroupError):
    pass


class NotRegular(SemigroupError):
    pass


class NoZero(SemigroupError):
    pass


class NotAGroup(SemigroupError):
    pass


class NotAMonoid(SemigroupError):
    pass


class NotACongruence(SemigroupError):
    pass


class NotAnIdeal(SemigroupError):
    pass


class TrivialSummand(SemigroupError):
    pass


class NotAnAction(SemigroupError):
    pass


class InvalidTriple(SemigroupError):
    pass


class SummandNotCompletely0Simple(SemigroupError):
    pass


class SearchBudgetExceeded(SemigroupError):
    pass


class TupleSpaceTooLarge(SemigroupError):
    pass
