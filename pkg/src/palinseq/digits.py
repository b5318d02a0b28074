"""Base-10 digit representation of non-negative integers and the palindrome test."""

from __future__ import annotations

from typing import Sequence

from .errors import PreconditionFailed

# int -> str conversion is capped at ~4300 digits on current CPython;
# above this bit length we split by powers of ten ourselves.
_STR_SAFE_BITS = 12_000


def _decimal(n: int) -> str:
    if n.bit_length() <= _STR_SAFE_BITS:
        return str(n)
    half = int(n.bit_length() * 0.30103) // 2
    high, low = divmod(n, 10**half)
    return _decimal(high) + _decimal(low).zfill(half)


def _check_natural(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"expected int, got {type(n).__name__}")
    if n < 0:
        raise PreconditionFailed(f"expected a non-negative integer, got {n}")


def decimal_string(n: int) -> str:
    """Decimal text of ``n`` with no size limit."""
    _check_natural(n)
    return _decimal(n)


def from_natural(n: int) -> list[int]:
    """Digits of ``n``, most significant first; ``0`` gives ``[0]``."""
    _check_natural(n)
    return [ord(c) - 48 for c in _decimal(n)]


def to_natural(digits: Sequence[int]) -> int:
    """Inverse of :func:`from_natural`.

    Raises PreconditionFailed on an empty sequence, a non-digit entry, or a
    leading zero in a multi-digit sequence.
    """
    if len(digits) == 0:
        raise PreconditionFailed("digit sequence is empty")
    if len(digits) > 1 and digits[0] == 0:
        raise PreconditionFailed("leading zero in multi-digit sequence")
    for d in digits:
        if not isinstance(d, int) or not 0 <= d <= 9:
            raise PreconditionFailed(f"not a decimal digit: {d!r}")
    return _join_big(digits)


def _join_big(digits: Sequence[int]) -> int:
    return parse_decimal("".join(chr(48 + d) for d in digits))


def parse_decimal(s: str) -> int:
    """``int(s)`` for a string of decimal digits, without the digit-count limit."""
    if len(s) < 4000:
        return int(s)
    mid = len(s) // 2
    return parse_decimal(s[:mid]) * 10 ** (len(s) - mid) + parse_decimal(s[mid:])


def is_palindrome(n: int) -> bool:
    s = decimal_string(n)
    return s == s[::-1]


def digit_count(n: int) -> int:
    """Number of decimal digits of ``n`` (``1 + floor(log10 n)`` for ``n >= 1``)."""
    return len(decimal_string(n))
