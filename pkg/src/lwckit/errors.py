"""Exception hierarchy for lwckit."""


class LwcError(Exception):
    """Base class for all lwckit errors."""


class UnknownSpec(LwcError):
    """Cipher identifier is not registered."""


class KeyLengthMismatch(LwcError):
    """Key byte string does not match the parameter set's key size."""


class BlockWidthMismatch(LwcError):
    """Block value does not fit the cipher's block width."""


class WidthMismatch(LwcError):
    """Word operands have different widths."""


class NonBijectivePermutation(LwcError):
    """Bit permutation table is not a bijection on its index range."""


class InvalidDefinition(LwcError):
    """Feistel definition is structurally unusable."""


class UnsupportedBlockWidth(LwcError):
    """CMAC requires a 64- or 128-bit block cipher."""


class InvalidTagLength(LwcError):
    """MAC tag length does not equal the cipher block size."""


class MalformedRow(LwcError):
    """Power-log CSV row could not be parsed."""

    def __init__(self, line_no: int, detail: str):
        super().__init__(f"line {line_no}: {detail}")
        self.line_no = line_no


class NonMonotonicTimestamps(LwcError):
    """Power-log timestamps are not strictly increasing."""

    def __init__(self, line_no: int):
        super().__init__(f"timestamp at line {line_no} does not increase")
        self.line_no = line_no


class WindowOutOfRange(LwcError):
    """Integration window lies outside the power-log span."""


class ClockResolutionTooCoarse(LwcError):
    """Timed loop finished too fast for the timer; increase n_blocks."""


class MalformedKatRecord(LwcError):
    """Known-answer-test file record is malformed."""

    def __init__(self, line_no: int, detail: str):
        super().__init__(f"line {line_no}: {detail}")
        self.line_no = line_no
