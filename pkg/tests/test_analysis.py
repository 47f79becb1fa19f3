import pytest

from tmabel.abelian import complexity_brute
from tmabel.analysis import (
    palindrome_block,
    special_index,
    special_points,
    step_check,
    unbounded_hypotheses,
    unbounded_witness,
)
from tmabel.pairs import complexity_fast


def test_palindrome_examples():
    assert palindrome_block(1).block == (6, 8, 6)
    assert palindrome_block(2).block == (6, 8, 10, 8, 6)
    assert palindrome_block(3).block == (6, 8, 8, 10, 10, 10, 8, 8, 6)
    assert all(palindrome_block(q).is_palindrome for q in range(1, 21))
    with pytest.raises(ValueError):
        palindrome_block(0)


def test_palindrome_with_brute_evaluator():
    for q in range(1, 10):
        rep = palindrome_block(q, lambda n: complexity_brute(n, 2))
        assert rep.block == palindrome_block(q).block and rep.is_palindrome


def test_steps():
    assert complexity_fast(5) - complexity_fast(4) == -2
    assert complexity_fast(7) - complexity_fast(6) == 2
    rep = step_check(4, 10**5)
    assert rep.ok and rep.steps == {-2, 0, 2}
    with pytest.raises(ValueError):
        step_check(3, 10)


def test_step_violation_is_reported():
    fake = {n: complexity_fast(n) for n in range(4, 40)}
    fake[20] += 4
    rep = step_check(4, 38, fake.__getitem__)
    assert not rep.ok
    assert [n for n, _ in rep.violations] == [19, 20]


def test_unbounded_chain():
    assert unbounded_witness(1) == [(3, 6)]
    assert unbounded_witness(3) == [(3, 6), (43, 12), (683, 18)]
    chain = unbounded_witness(14)
    assert chain[3] == (10923, 24)
    assert all(b[1] - a[1] == 6 for a, b in zip(chain, chain[1:]))
    assert all(unbounded_hypotheses(n) for n, _ in chain)
    with pytest.raises(OverflowError):
        unbounded_witness(20)
    with pytest.raises(AssertionError):
        unbounded_witness(1, seed=5)


def test_special_points():
    sp = special_points(40)
    assert sp.ok
    assert [special_index(m) for m in (1, 2, 3)] == [4, 12, 44]
    assert [p for _, _, p in sp.growth[:3]] == [8, 10, 14]
    assert complexity_fast(9) == 6
    assert sp.growth_gain > 0
