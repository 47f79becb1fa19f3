import json
import random

import pytest
from hypothesis import given, strategies as st

from tmabel.abelian import _odd_offset, _diffs
from tmabel.errors import OddArgument, TooShort
from tmabel.pairs import (
    IntInterval,
    PAIRS_brute,
    PAIRS_interval,
    PairsState,
    RangeEvaluator,
    complexity_fast,
    complexity_range,
    even_count,
    export_csv,
    export_jsonl,
    hull,
    pairs_brute,
    pairs_interval,
    pairs_window,
    recursion_row,
    two_level_closed_form,
)
from tmabel.words import factor_strings


def word_level_pairs(n, pure=False):
    out = set()
    for s in factor_strings(n):
        d = _diffs(s)
        if pure and _odd_offset(s, d) != 0:
            continue
        out.add(d.count("0"))
    return out


def test_interval_arithmetic():
    assert even_count(IntInterval(2, 3)) == 1
    assert even_count(IntInterval(1, 3)) == 1
    assert even_count(IntInterval(2, 4)) == 2
    assert IntInterval(1, 3).reflect(5) == IntInterval(2, 4)
    assert IntInterval(1, 2).union(IntInterval(3, 5)) == IntInterval(1, 5)
    assert IntInterval(1, 2).intersection(IntInterval(4, 5)) is None
    with pytest.raises(AssertionError):
        IntInterval(1, 2).union(IntInterval(4, 5))
    with pytest.raises(ValueError):
        IntInterval(3, 2)


@given(st.integers(-50, 50), st.integers(0, 40))
def test_even_count_matches_enumeration(lo, width):
    iv = IntInterval(lo, lo + width)
    assert iv.even_count == sum(1 for x in iv if x % 2 == 0)
    assert iv.cardinality == len(list(iv))


def test_examples():
    assert pairs_brute(6) == {1, 2, 3}
    assert PAIRS_brute(8) == {2, 3}
    assert pairs_brute(8) == {1, 2, 3}
    assert pairs_interval(11) == IntInterval(2, 4) == hull(pairs_brute(11))
    assert pairs_interval(9) == IntInterval(2, 3)
    assert PAIRS_interval(4) == IntInterval(1, 2)
    assert [complexity_fast(n) for n in (9, 8, 11)] == [6, 8, 8]


def test_argument_errors():
    with pytest.raises(OddArgument):
        PAIRS_brute(7)
    with pytest.raises(OddArgument):
        PAIRS_interval(7)
    with pytest.raises(TooShort):
        PAIRS_brute(2)
    with pytest.raises(OverflowError):
        pairs_interval(1 << 62)
    assert complexity_fast((1 << 62) - 1) > 0


def test_window_brute_matches_word_level():
    for n in range(2, 80):
        assert pairs_brute(n) == word_level_pairs(n), n
        if n % 2 == 0 and n >= 4:
            assert PAIRS_brute(n) == word_level_pairs(n, pure=True), n


def test_intervals_match_brute_force():
    for n in range(4, 2049):
        brute = pairs_brute(n)
        assert brute == pairs_interval(n).to_set(), n
        if n % 2 == 0:
            assert PAIRS_brute(n) == PAIRS_interval(n).to_set(), n


def test_pairs_window():
    assert [iv.to_set() for iv in pairs_window(3, 9)] == [
        {0, 1}, {0, 1, 2}, {1, 2}, {1, 2, 3}, {1, 2, 3}, {1, 2, 3}, {2, 3},
    ]
    assert pairs_window(5, 5) == [IntInterval(1, 2)]
    assert [iv.to_set() for iv in pairs_window(17, 33)] == [pairs_brute(n) for n in range(17, 34)]
    for lo in (2, 9, 100, 12345, 10**9):
        assert pairs_window(lo, lo + 500) == [pairs_interval(n) for n in range(lo, lo + 501)]


def test_complexity_range_matches_pointwise():
    values = complexity_range(0, 200_000)
    rng = random.Random(7)
    for n in rng.sample(range(200_001), 3000):
        assert values[n] == complexity_fast(n)
    far = 10**15
    assert complexity_range(far, far + 300).tolist() == [complexity_fast(n) for n in range(far, far + 301)]
    ev = RangeEvaluator(0, 100)
    assert ev(50) == complexity_fast(50) and ev(10**6) == complexity_fast(10**6)


def test_monotone_endpoints_and_no_case_four():
    lo, hi = 4, 50_000
    ivs = pairs_window(lo, hi + 1)
    for a, b in zip(ivs, ivs[1:]):
        assert b.lo - a.lo in (0, 1) and b.hi - a.hi in (0, 1)
        assert (b.lo - a.lo, b.hi - a.hi) != (1, 1)
    for n in range(3, 5000):
        assert PAIRS_interval(2 * n - 2) != PAIRS_interval(2 * n)
        e0, e1 = PAIRS_interval(2 * n - 2), PAIRS_interval(2 * n)
        assert e1.lo - e0.lo in (0, 1) and e1.hi - e0.hi in (0, 1)


def test_two_level_closed_forms_match_recursion():
    rng = random.Random(3)
    seen = set()
    for n in rng.sample(range(5, 10**6), 3000) + list(range(5, 200)):
        state = PairsState.at(n)
        seen.add(state.case)
        row = two_level_closed_form(state.case, n, state.pairs_n.lo, state.pairs_n.hi)
        assert row == recursion_row(n), n
        nxt = state.next_state()
        assert nxt == PairsState.at(2 * n)
    assert seen == {"I", "II", "III"}


def test_state_rejects_case_four():
    with pytest.raises(ValueError):
        PairsState(10, IntInterval(1, 2), IntInterval(2, 3))


def test_exports():
    lines = export_csv(0, 4).splitlines()
    assert lines == ["index,value", "0,1", "1,2", "2,4", "3,6", "4,8"]
    recs = [json.loads(line) for line in export_jsonl(5, 6).splitlines()]
    assert recs[0] == {"n": 5, "P": 6, "pairs_lo": 1, "pairs_hi": 2}
