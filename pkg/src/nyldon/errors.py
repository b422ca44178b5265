"""Exception types raised across the package."""


class WordError(Exception):
    """Base class for every error this package raises on purpose."""


class ByteNotInAlphabet(WordError, ValueError):
    def __init__(self, position, byte=None):
        self.position = position
        self.byte = byte
        super().__init__(f"byte {byte!r} at position {position} is not in the alphabet")


class InvalidAlphabet(WordError, ValueError):
    pass


class AlphabetMismatch(WordError, ValueError):
    pass


class NonBinaryAlphabet(WordError, ValueError):
    pass


class LengthCapExceeded(WordError):
    def __init__(self, cap, requested=None):
        self.cap = cap
        self.requested = requested
        msg = f"result length exceeds cap {cap}"
        if requested is not None:
            shown = requested if requested.bit_length() < 64 else f"~2^{requested.bit_length() - 1}"
            msg += f" (requested {shown})"
        super().__init__(msg)


class InvalidFamilyIndex(WordError, ValueError):
    pass


class NotAPrefix(WordError, ValueError):
    pass


class PrefixStripFailed(WordError):
    pass


class EmptyWord(WordError, ValueError):
    pass


class WordTooShort(WordError, ValueError):
    pass


class TableCapExceeded(WordError):
    pass


class OracleCapExceeded(WordError):
    pass


class EnumerationCapExceeded(WordError):
    pass


class BudgetExceeded(WordError):
    pass
