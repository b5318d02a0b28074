"""The increasing sequence of positive palindromes.

Successor and predecessor, 1-based rank/unrank, per-length counts and the
gaps between consecutive palindromes. Palindromes are plain ``int`` values.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .digits import decimal_string, parse_decimal, digit_count, from_natural, is_palindrome, to_natural
from .errors import PreconditionFailed


@dataclass(frozen=True)
class GapRecord:
    lower: int
    upper: int
    gap: int
    digit_length_lower: int


def _mirror(digits: list[int]) -> list[int]:
    k = len(digits)
    return digits[: (k + 1) // 2] + digits[: k // 2][::-1]


def next_palindrome(n: int) -> int:
    """Smallest palindrome strictly greater than ``n``.

    Mirror the leading half onto the trailing half. If that does not exceed
    ``n``, add one at the pivot (the middle digit, or the left-middle digit for
    even lengths), let a 9 roll over to 0 and carry outward, then mirror again.
    An all-9 input is the only case that gains a digit: 99..9 -> 100..01.

    >>> next_palindrome(17371), next_palindrome(3459543)
    (17471, 3460643)
    """
    digits = from_natural(n)
    k = len(digits)
    if all(d == 9 for d in digits):
        return 10**k + 1
    mirrored = _mirror(digits)
    if mirrored > digits:
        return to_natural(mirrored)
    i = (k - 1) // 2
    while mirrored[i] == 9:
        mirrored[i] = 0
        i -= 1
    mirrored[i] += 1
    return to_natural(_mirror(mirrored))


def prev_palindrome(n: int) -> int:
    """Largest palindrome strictly less than ``n`` (requires ``n >= 2``)."""
    if n <= 1:
        raise PreconditionFailed(f"no positive palindrome below {n}")
    k = digit_count(n)
    if k == 1:
        return n - 1
    if n <= 10 ** (k - 1) + 1:
        # below the smallest k-digit palindrome 10..01
        return 10 ** (k - 1) - 1
    h = (k + 1) // 2
    half = n // 10 ** (k - h)
    candidate = _from_half(half, k)
    if candidate < n:
        return candidate
    return _from_half(half - 1, k)


def _from_half(half: int, length: int) -> int:
    s = decimal_string(half)
    if length % 2:
        return parse_decimal(s + s[-2::-1])
    return parse_decimal(s + s[::-1])


def count_with_digits(length: int) -> int:
    """Number of ``length``-digit palindromes, ``9 * 10**(ceil(length/2) - 1)``."""
    if length < 1:
        raise PreconditionFailed(f"digit length must be >= 1, got {length}")
    return 9 * 10 ** ((length + 1) // 2 - 1)


def _count_shorter(length: int) -> int:
    # palindromes with fewer than `length` digits
    m, odd = divmod(length - 1, 2)
    if odd:
        return 11 * 10**m - 2
    return 2 * (10**m - 1)


def palindromes_with_digits(length: int) -> Iterator[int]:
    """All ``length``-digit palindromes in increasing order, built from their leading halves."""
    if length < 1:
        raise PreconditionFailed(f"digit length must be >= 1, got {length}")
    h = (length + 1) // 2
    for half in range(10 ** (h - 1), 10**h):
        yield _from_half(half, length)


def rank(p: int) -> int:
    """1-based position of palindrome ``p`` among the positive palindromes."""
    if p < 1 or not is_palindrome(p):
        raise PreconditionFailed(f"{p} is not a positive palindrome")
    k = digit_count(p)
    h = (k + 1) // 2
    half = p // 10 ** (k - h)
    return _count_shorter(k) + half - 10 ** (h - 1) + 1


def unrank(i: int) -> int:
    """The ``i``-th positive palindrome; inverse of :func:`rank`."""
    if i < 1:
        raise PreconditionFailed(f"index must be >= 1, got {i}")
    k = 1
    while _count_shorter(k + 1) < i:
        k += 1
    offset = i - _count_shorter(k) - 1
    h = (k + 1) // 2
    return _from_half(10 ** (h - 1) + offset, k)


def gaps_in_range(lo: int, hi: int) -> list[GapRecord]:
    """Gaps to the successor for every palindrome ``p`` with ``lo <= p < hi``."""
    if lo >= hi:
        raise PreconditionFailed(f"empty range [{lo}, {hi})")
    p = next_palindrome(lo - 1) if lo >= 1 else 1
    records = []
    while p < hi:
        q = next_palindrome(p)
        records.append(GapRecord(p, q, q - p, digit_count(p)))
        p = q
    return records
