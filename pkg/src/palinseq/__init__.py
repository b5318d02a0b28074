"""Palindromic numbers: successor algorithm, termination scans for arithmetic
and geometric progressions of palindromes, and divisibility counts."""

from .ap_analysis import APSpec, APWitness, ScanReport, ap_scan, exhaustive_ap_search, longest_palindromic_ap, termination_cap
from .digits import digit_count, from_natural, is_palindrome, to_natural
from .errors import CapExceeded, PalinseqError, PreconditionFailed, TheoryViolation
from .gp_analysis import (
    GPSpec,
    alpha_ratio,
    count_palindromes_divisible,
    gp_scan,
    integrality_failure_index,
    min_index_for_digits,
    subsequence_exponent,
)
from .palindrome_seq import GapRecord, count_with_digits, gaps_in_range, next_palindrome, prev_palindrome, rank, unrank

__version__ = "0.1.0"
