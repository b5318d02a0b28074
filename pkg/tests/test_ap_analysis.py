import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from palinseq import ap_analysis
from palinseq.ap_analysis import (
    APSpec,
    APWitness,
    ap_scan,
    exhaustive_ap_search,
    longest_palindromic_ap,
    termination_cap,
)
from palinseq.digits import is_palindrome
from palinseq.errors import CapExceeded, PreconditionFailed, TheoryViolation
from palinseq.oracle import oracle_ap_first_failure, oracle_ap_search, oracle_is_palindrome, oracle_longest_ap


def _cap_by_formula(first, d):
    # independent restatement: smallest m with 10**m > d and 10**(2m) >= first
    m = next(m for m in range(100) if 10**m > d and 10 ** (2 * m) >= first)
    span = 10 ** (2 * m + 1) - first
    return (span + d - 1) // d + 1


@pytest.mark.parametrize(
    "first, d, expected",
    [(1, 1, 1000), (1, 9, 112), (10**6, 5, (10**7 - 10**6 + 4) // 5 + 1)],
)
def test_termination_cap_examples(first, d, expected):
    assert termination_cap(APSpec(first, d)) == expected


@given(st.integers(1, 10**30), st.integers(1, 10**20))
def test_termination_cap_formula(first, d):
    assert termination_cap(APSpec(first, d)) == _cap_by_formula(first, d)


@pytest.mark.parametrize(
    "first, d, index, term",
    [(1, 1, 9, 10), (2, 2, 4, 10), (101, 10, 10, 201)],
)
def test_ap_scan_examples(first, d, index, term):
    report = ap_scan(APSpec(first, d))
    assert (report.failing_index, report.failing_term) == (index, term)
    assert report.terms_checked == index + 1
    assert report.cap_used == termination_cap(APSpec(first, d))


@pytest.mark.parametrize("first, d", [(0, 1), (1, 0)])
def test_apspec_rejects(first, d):
    with pytest.raises(PreconditionFailed):
        APSpec(first, d)


def test_ap_scan_smaller_cap():
    with pytest.raises(CapExceeded) as info:
        ap_scan(APSpec(1, 1), cap=5)
    assert info.value.terms_checked == 5


def test_ap_scan_reports_theory_violation(monkeypatch):
    monkeypatch.setattr(ap_analysis, "is_palindrome", lambda n: True)
    with pytest.raises(TheoryViolation):
        ap_scan(APSpec(1, 3))


@settings(max_examples=300)
@given(st.integers(1, 10**12), st.integers(1, 10**6))
def test_ap_scan_self_consistent(first, d):
    report = ap_scan(APSpec(first, d))
    assert report.failing_index < report.cap_used
    assert report.failing_term == first + report.failing_index * d
    assert not oracle_is_palindrome(report.failing_term)
    assert all(oracle_is_palindrome(first + i * d) for i in range(report.failing_index))


def test_ap_scan_matches_oracle_grid():
    for first in range(1, 400):
        for d in range(1, 60):
            report = ap_scan(APSpec(first, d))
            assert (report.failing_index, report.failing_term) == oracle_ap_first_failure(first, d)


@pytest.mark.parametrize(
    "first, last, d, length",
    [(1, 9, 1, 9), (101, 191, 10, 10), (1, 2, 1, 2)],
)
def test_longest_examples(first, last, d, length):
    w = longest_palindromic_ap(first, last)
    assert (w.difference, w.length) == (d, length)
    assert w.last == last
    assert w.verify()


@pytest.mark.parametrize("first, last", [(9, 1), (5, 5), (10, 11), (11, 12)])
def test_longest_rejects(first, last):
    with pytest.raises(PreconditionFailed):
        longest_palindromic_ap(first, last)


def test_longest_matches_brute_force():
    rng = random.Random(3)
    pals = [p for p in range(1, 5000) if oracle_is_palindrome(p)]
    for _ in range(60):
        a, b = sorted(rng.sample(pals, 2))
        w = longest_palindromic_ap(a, b)
        assert (w.difference, w.length) == oracle_longest_ap(a, b)


def test_longest_large_endpoints():
    a, b = 10**20 + 1, 9 * 10**20 + 9
    w = longest_palindromic_ap(a, b)
    assert w.verify()
    assert w.first == a and w.last == b


@pytest.mark.parametrize(
    "max_value, witness",
    [(9, APWitness(1, 1, 9)), (999, APWitness(111, 111, 9)), (99, APWitness(11, 11, 9))],
)
def test_search_examples(max_value, witness):
    assert witness in exhaustive_ap_search(max_value, 3)


@pytest.mark.parametrize("max_value, min_length", [(99, 3), (500, 3), (2000, 4), (1500, 5)])
def test_search_matches_oracle(max_value, min_length):
    found = exhaustive_ap_search(max_value, min_length)
    assert [(w.first, w.difference, w.length) for w in found] == oracle_ap_search(max_value, min_length)


def test_search_witnesses_verify_and_are_maximal():
    found = exhaustive_ap_search(3000, 3)
    for w in found:
        assert w.verify()
        assert w.last <= 3000
        assert not (w.first - w.difference >= 1 and is_palindrome(w.first - w.difference))
        assert not (w.last + w.difference <= 3000 and is_palindrome(w.last + w.difference))


def test_search_seed_does_not_change_result():
    assert exhaustive_ap_search(800, 3, seed=1) == exhaustive_ap_search(800, 3, seed=99) == exhaustive_ap_search(800, 3)


@pytest.mark.parametrize("max_value, min_length", [(0, 3), (10, 2)])
def test_search_rejects(max_value, min_length):
    with pytest.raises(PreconditionFailed):
        exhaustive_ap_search(max_value, min_length)
