"""Deliberately naive reference implementations.

Nothing here imports the fast modules: digits are peeled off with ``divmod``
and every search is a plain linear scan or filter, so agreement between the
two sides is a real cross-check. Each routine refuses inputs above its bound
rather than running for hours.
"""

from __future__ import annotations

from fractions import Fraction

import mpmath

ORACLE_BOUND = 10**8
ENUMERATE_BOUND = 10**7


class OracleBoundError(ValueError):
    pass


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise OracleBoundError(message)


def oracle_digit_count(n: int) -> int:
    count = 1
    while n >= 10:
        n //= 10
        count += 1
    return count


def oracle_is_palindrome(n: int) -> bool:
    reversed_value = 0
    m = n
    while m > 0:
        m, d = divmod(m, 10)
        reversed_value = reversed_value * 10 + d
    return reversed_value == n


def oracle_next_palindrome(n: int, bound: int = ORACLE_BOUND) -> int:
    _require(n <= bound, f"{n} exceeds oracle bound {bound}")
    m = n + 1
    while not oracle_is_palindrome(m):
        m += 1
    return m


def oracle_prev_palindrome(n: int, bound: int = ORACLE_BOUND) -> int:
    _require(n <= bound, f"{n} exceeds oracle bound {bound}")
    _require(n >= 2, "no positive palindrome below 2")
    m = n - 1
    while not oracle_is_palindrome(m):
        m -= 1
    return m


def oracle_next_table(hi: int) -> list[int]:
    """``table[n]`` is the smallest palindrome above ``n`` for ``0 <= n < hi``.

    One downward sweep with the naive predicate, so that checking every ``n``
    below ``hi`` costs ``O(hi)`` instead of one linear scan per ``n``.
    """
    _require(hi <= ENUMERATE_BOUND, f"table size {hi} exceeds {ENUMERATE_BOUND}")
    m = hi
    while not oracle_is_palindrome(m):
        m += 1
    table = [0] * hi
    for n in range(hi - 1, -1, -1):
        table[n] = m
        if oracle_is_palindrome(n) and n > 0:
            m = n
    return table


def oracle_enumerate(lo: int, hi: int, bound: int = ENUMERATE_BOUND) -> list[int]:
    """Positive palindromes in the closed range ``[lo, hi]``, by filtering every integer."""
    _require(hi - lo <= bound, f"range width {hi - lo} exceeds oracle bound {bound}")
    return [n for n in range(max(lo, 1), hi + 1) if oracle_is_palindrome(n)]


def oracle_count_with_digits(length: int) -> int:
    return len(oracle_enumerate(10 ** (length - 1), 10**length - 1))


def oracle_rank(p: int, bound: int = ENUMERATE_BOUND) -> int:
    _require(oracle_is_palindrome(p) and p >= 1, f"{p} is not a positive palindrome")
    return len(oracle_enumerate(1, p, bound))


def oracle_unrank(i: int, bound: int = ENUMERATE_BOUND) -> int:
    _require(i >= 1, "index must be >= 1")
    n = 0
    seen = 0
    while seen < i:
        n += 1
        _require(n <= bound, f"unrank({i}) exceeds oracle bound {bound}")
        if oracle_is_palindrome(n):
            seen += 1
    return n


def oracle_gaps(lo: int, hi: int) -> list[tuple[int, int, int, int]]:
    """``(lower, upper, gap, digits)`` for palindromes ``lo <= lower < hi``."""
    found = oracle_enumerate(lo, hi - 1)
    out = []
    for p in found:
        q = oracle_next_palindrome(p)
        out.append((p, q, q - p, oracle_digit_count(p)))
    return out


def oracle_ap_first_failure(first: int, difference: int, limit: int = ORACLE_BOUND) -> tuple[int, int]:
    """``(index, term)`` of the first non-palindromic term of the AP."""
    for i in range(limit):
        term = first + i * difference
        if not oracle_is_palindrome(term):
            return i, term
    raise OracleBoundError(f"no failure within {limit} terms")


def oracle_longest_ap(first: int, last: int, bound: int = ENUMERATE_BOUND) -> tuple[int, int]:
    """``(difference, length)`` of the longest all-palindrome AP from ``first`` to ``last``.

    Tries every difference ``1..last-first``, not only divisors; ties go to the
    smaller difference.
    """
    _require(last - first <= bound, f"span {last - first} exceeds oracle bound {bound}")
    best = None
    for d in range(1, last - first + 1):
        term = first
        length = 1
        ok = True
        while term < last:
            term += d
            if term > last or not oracle_is_palindrome(term):
                ok = False
                break
            length += 1
        if ok and (best is None or length > best[1]):
            best = (d, length)
    return best


def oracle_ap_search(max_value: int, min_length: int, bound: int = 10**4) -> list[tuple[int, int, int]]:
    """Maximal all-palindrome APs ``(first, difference, length)`` with terms <= max_value.

    Double loop over every first term and every difference.
    """
    _require(max_value <= bound, f"{max_value} exceeds oracle bound {bound}")
    out = []
    for a in range(1, max_value + 1):
        if not oracle_is_palindrome(a):
            continue
        for d in range(1, max_value - a + 1):
            if a - d >= 1 and oracle_is_palindrome(a - d):
                continue
            length = 1
            while a + length * d <= max_value and oracle_is_palindrome(a + length * d):
                length += 1
            if length >= min_length:
                out.append((a, d, length))
    return out


def oracle_gp_first_failure(first: int, ratio: int, limit: int = 10**4) -> tuple[int, int]:
    term = first
    for i in range(limit):
        if not oracle_is_palindrome(term):
            return i, term
        term *= ratio
    raise OracleBoundError(f"no failure within {limit} terms")


def oracle_integrality_failure(a: int, ratio: Fraction, limit: int = 10**4) -> int:
    term = Fraction(a)
    for s in range(1, limit):
        term *= ratio
        if term.denominator != 1:
            return s
    raise OracleBoundError(f"no failure within {limit} steps")


def oracle_min_index_for_digits(first: int, ratio: int, lam: int) -> int:
    target = lam * oracle_digit_count(first)
    k = 0
    term = first
    while oracle_digit_count(term) < target:
        term *= ratio
        k += 1
    return k


def oracle_alpha_below_one(first: int, ratio: int, dps: int = 200) -> bool:
    """Numeric evaluation of ``10**(L/2) / ratio**(L/(L+R-2)) < 1``."""
    L = oracle_digit_count(first)
    R = oracle_digit_count(ratio)
    with mpmath.workdps(dps):
        alpha = mpmath.power(10, mpmath.mpf(L) / 2) / mpmath.power(ratio, mpmath.mpf(L) / (L + R - 2))
        if abs(alpha - 1) < mpmath.power(10, -(dps - 20)):
            return False
        return alpha < 1


def oracle_subsequence_exponent(first: int, ratio: int) -> int:
    L = oracle_digit_count(first)
    b = 1
    while oracle_digit_count(ratio**b) <= L:
        b += 1
    return b


def oracle_count_divisible(length: int, q: int, bound: int = ENUMERATE_BOUND) -> int:
    """L-digit palindromes divisible by ``q``, by filtering every L-digit integer."""
    lo, hi = 10 ** (length - 1), 10**length - 1
    _require(hi - lo <= bound, f"{length}-digit range exceeds oracle bound {bound}")
    return sum(1 for n in range(lo, hi + 1) if n % q == 0 and oracle_is_palindrome(n))
