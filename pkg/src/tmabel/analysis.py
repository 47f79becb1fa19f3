"""Structural checks on the complexity sequence: mirror blocks, step sizes, growth."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from tmabel.pairs import MAX_INDEX, complexity_fast, complexity_range, pairs_interval

Evaluator = Callable[[int], int]


@dataclass(frozen=True)
class PalindromeReport:
    q: int
    start: int
    block: tuple
    is_palindrome: bool

    def to_dict(self) -> dict:
        return {"q": self.q, "start": self.start, "block": list(self.block),
                "is_palindrome": self.is_palindrome}


def _values(lo: int, hi: int, evaluator: Optional[Evaluator]) -> list[int]:
    if evaluator is None or evaluator is complexity_fast:
        return complexity_range(lo, hi).tolist()
    return [evaluator(n) for n in range(lo, hi + 1)]


def palindrome_block(q: int, evaluator: Optional[Evaluator] = None) -> PalindromeReport:
    """P_{2^q+1}, ..., P_{2^(q+1)+1} and whether it reads the same backwards."""
    if q < 1:
        raise ValueError("q must be at least 1")
    lo, hi = (1 << q) + 1, (2 << q) + 1
    block = tuple(_values(lo, hi, evaluator))
    return PalindromeReport(q, lo, block, block == block[::-1])


@dataclass(frozen=True)
class StepReport:
    n_lo: int
    n_hi: int
    steps: frozenset
    violations: tuple  # (n, P_{n+1} - P_n) outside {-2, 0, 2}

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {"range": [self.n_lo, self.n_hi], "steps": sorted(self.steps),
                "violations": [list(v) for v in self.violations], "ok": self.ok}


ALLOWED_STEPS = frozenset({-2, 0, 2})


def step_check(n_lo: int, n_hi: int, evaluator: Optional[Evaluator] = None) -> StepReport:
    """Differences P_{n+1} - P_n for n in [n_lo, n_hi]."""
    if n_lo < 4:
        raise ValueError("step sizes are only constrained from n = 4 on")
    values = np.asarray(_values(n_lo, n_hi + 1, evaluator), dtype=np.int64)
    diffs = np.diff(values)
    bad = np.flatnonzero(~np.isin(diffs, list(ALLOWED_STEPS)))
    violations = tuple((int(n_lo + i), int(diffs[i])) for i in bad)
    return StepReport(n_lo, n_hi, frozenset(np.unique(diffs).tolist()), violations)


def unbounded_hypotheses(n: int) -> bool:
    """pairs(n) = [a,b], pairs(n+1) = [a,b+1] with n, b odd and a even."""
    cur, nxt = pairs_interval(n), pairs_interval(n + 1)
    a, b = cur.lo, cur.hi
    return (nxt.lo, nxt.hi) == (a, b + 1) and n % 2 == 1 and b % 2 == 1 and a % 2 == 0


def unbounded_witness(k: int, seed: int = 3) -> list[tuple[int, int]]:
    """First k points of the chain a -> 16a - 5, each gaining 6 over the last.

    The hypotheses that make the gain exact are re-checked at every link,
    so an upstream error in the interval recursion shows up here.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    chain = []
    a = seed
    for _ in range(k):
        if a >= MAX_INDEX:
            raise OverflowError(f"chain index {a} exceeds 2^62")
        if not unbounded_hypotheses(a):
            raise AssertionError(f"interval hypotheses fail at n = {a}")
        value = complexity_fast(a)
        if chain and value != chain[-1][1] + 6:
            raise AssertionError(f"P_{a} = {value}, expected {chain[-1][1] + 6}")
        chain.append((a, value))
        a = 16 * a - 5
    return chain


def special_index(m: int) -> int:
    """c_m = (2 * 4^m + 4) / 3."""
    return (2 * 4**m + 4) // 3


@dataclass
class SpecialPoints:
    m_max: int
    power_plus_one: list = field(default_factory=list)  # (m, 2^m + 1, P)
    growth: list = field(default_factory=list)  # (m, c_m, P)

    @property
    def powers_ok(self) -> bool:
        return all(p == 6 for _, _, p in self.power_plus_one)

    @property
    def growth_nondecreasing(self) -> bool:
        vals = [p for _, _, p in self.growth]
        return all(x <= y for x, y in zip(vals, vals[1:]))

    @property
    def growth_gain(self) -> int:
        """Total rise of P along c_m; the asymptotic rate itself is only reported."""
        return self.growth[-1][2] - self.growth[0][2] if self.growth else 0

    @property
    def ok(self) -> bool:
        return self.powers_ok and self.growth_nondecreasing

    def to_dict(self) -> dict:
        return {
            "m_max": self.m_max,
            "power_plus_one": [list(r) for r in self.power_plus_one],
            "growth": [list(r) for r in self.growth],
            "powers_ok": self.powers_ok,
            "growth_nondecreasing": self.growth_nondecreasing,
        }


def special_points(m_max: int, evaluator: Evaluator = complexity_fast) -> SpecialPoints:
    if m_max < 1:
        raise ValueError("m_max must be at least 1")
    out = SpecialPoints(m_max)
    for m in range(1, m_max + 1):
        n = (1 << m) + 1
        if n >= MAX_INDEX:
            raise OverflowError(f"2^{m} + 1 exceeds 2^62")
        out.power_plus_one.append((m, n, evaluator(n)))
        c = special_index(m)
        if c < MAX_INDEX:
            out.growth.append((m, c, evaluator(c)))
    return out
