"""Exception hierarchy.

Every domain error derives from :class:`QParikhError` (itself a
``ValueError``) so callers can catch the whole family at once; the CLI
reports these verbatim with exit status 1.
"""


class QParikhError(ValueError):
    pass


class UnknownCharacter(QParikhError):
    def __init__(self, position, char):
        self.position = position
        self.char = char
        super().__init__(f"unknown character {char!r} at position {position}")


class EmptyPeriod(QParikhError):
    def __init__(self):
        super().__init__("periodic stream needs a nonempty period")


class ErasingMorphism(QParikhError):
    def __init__(self, letter):
        self.letter = letter
        super().__init__(f"morphism erases letter {letter}")


class DegreeExceeded(QParikhError):
    def __init__(self, degree, window):
        self.degree = degree
        self.window = window
        super().__init__(f"degree {degree} exceeds reflection window {window}")


class NotUnitriangular(QParikhError):
    pass


class DimensionMismatch(QParikhError):
    pass


class NonExactDivision(QParikhError):
    pass


class TooManyOccurrences(QParikhError):
    def __init__(self, count, limit):
        self.count = count
        self.limit = limit
        super().__init__(f"{count} occurrences exceed the enumeration guard {limit}")


class EmptyInducingWord(QParikhError):
    def __init__(self):
        super().__init__("the inducing word z must be nonempty")


class AdjacentRepeatedLetter(QParikhError):
    def __init__(self, position):
        # 1-based: z_position == z_{position+1}
        self.position = position
        super().__init__(f"z has equal adjacent letters at positions {position} and {position + 1}")


class LetterAbsent(QParikhError):
    def __init__(self, letter):
        self.letter = letter
        super().__init__(f"letter {letter} of z does not occur in u")


class AllZeroClass(QParikhError):
    def __init__(self, residue, modulus):
        self.residue = residue
        self.modulus = modulus
        super().__init__(f"coefficients vanish on the class {residue} mod {modulus}")


class NonMonomialEntry(QParikhError):
    pass


class HypothesisViolated(QParikhError):
    def __init__(self, detail):
        self.detail = detail
        super().__init__(f"hypothesis violated: {detail}")
