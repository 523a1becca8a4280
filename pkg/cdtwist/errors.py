"""
Exception types for the cdtwist engine.
"""


class CDTwistError(Exception):
    """Base class for every error raised by cdtwist"""


class FieldContextError(CDTwistError):
    """Operands live in different scalar fields (radicand or kind mismatch)"""


class InvalidParameterError(CDTwistError, ValueError):
    """A structural parameter is outside its admissible range"""


class LevelMismatchError(CDTwistError, ValueError):
    """Basis indices belong to different levels or exceed 2^t"""


class AlgebraError(CDTwistError):
    """An algebra-level operation cannot be carried out"""


class TableCapExceededError(CDTwistError):
    """A materialised table would exceed the configured dimension cap"""

    def __init__(self, dimension: int, cap: int):
        self.dimension = dimension
        self.cap = cap
        super().__init__(
            f"Table of dimension {dimension} exceeds the cap of {cap}; "
            f"use streaming mode (--stream) or raise CDTWIST_TABLE_CAP"
        )
