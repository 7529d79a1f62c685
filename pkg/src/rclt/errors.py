"""Exception types shared across the rclt package."""


class RcltError(Exception):
    """Base class for all rclt errors."""


class EmptyResultError(RcltError):
    """Resizing dropped every row or column."""


class ZeroFrameError(RcltError):
    """Frame is identically zero; normalization is undefined."""


class LengthMismatchError(RcltError):
    """Two bit vectors that must share a length do not."""


class NonMonotonicTimeError(RcltError):
    """A time step did not strictly increase."""


class EmptySegmentsError(RcltError):
    """No segments available to form a synaptic potential."""


class InvalidScoreError(RcltError):
    """Match score outside [0, 100]."""


class EmptyStoreError(RcltError):
    """Prediction requested against an empty memory store."""


class UnsupportedFormatError(RcltError):
    """Audio file is not 16-bit PCM mono WAV."""


class CorruptFileError(RcltError):
    """Audio file could not be parsed as WAV."""


class IoFailureError(RcltError):
    """Filesystem write or read failed."""


class BadMagicError(RcltError):
    """State archive does not start with the expected magic string."""


class ParseError(RcltError):
    """State archive is malformed; carries the offending line number."""

    def __init__(self, line_number: int, message: str):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class DimensionMismatchError(RcltError):
    """Bitmap dimensions do not match the vector length."""
