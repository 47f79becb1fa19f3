"""Achievable pair counts as integer intervals and the fast evaluator of P_n.

pairs(n) is the set of pair counts p(w) over T_n; PAIRS(2n) restricts to
words of length 2n read entirely in the odd frame. Both are integer
intervals satisfying

    PAIRS(2n)   = n - pairs(n+1)
    pairs(2n+1) = PAIRS(2n)
    pairs(2n)   = PAIRS(2n) | PAIRS(2n-2)

for n >= 4, with indices below 10 taken from a base table.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional

import numpy as np

from tmabel.errors import OddArgument, TooShort
from tmabel.words import prefix_index, saturating_span

MAX_INDEX = 1 << 62


@dataclass(frozen=True)
class IntInterval:
    lo: int
    hi: int

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo},{self.hi}]")

    @property
    def cardinality(self) -> int:
        return self.hi - self.lo + 1

    @property
    def even_count(self) -> int:
        return self.hi // 2 - (-(-self.lo // 2)) + 1

    def __contains__(self, x: int) -> bool:
        return self.lo <= x <= self.hi

    def __iter__(self):
        return iter(range(self.lo, self.hi + 1))

    def __str__(self) -> str:
        return f"[{self.lo},{self.hi}]"

    def shift(self, k: int) -> "IntInterval":
        return IntInterval(self.lo + k, self.hi + k)

    def reflect(self, m: int) -> "IntInterval":
        """The interval m - self."""
        return IntInterval(m - self.hi, m - self.lo)

    def union(self, other: "IntInterval") -> "IntInterval":
        assert self.lo <= other.hi + 1 and other.lo <= self.hi + 1, "union has a gap"
        return IntInterval(min(self.lo, other.lo), max(self.hi, other.hi))

    def intersection(self, other: "IntInterval") -> Optional["IntInterval"]:
        lo, hi = max(self.lo, other.lo), min(self.hi, other.hi)
        return IntInterval(lo, hi) if lo <= hi else None

    def to_set(self) -> frozenset:
        return frozenset(range(self.lo, self.hi + 1))


def even_count(i: IntInterval) -> int:
    return i.even_count


def hull(values: Iterable[int]) -> IntInterval:
    values = list(values)
    return IntInterval(min(values), max(values))


# Small values: pairs(n) and P_n for n < 10, PAIRS(n) for even n < 10.
BASE_PAIRS = {
    0: (0, 0), 1: (0, 0), 2: (0, 1), 3: (0, 1), 4: (0, 2),
    5: (1, 2), 6: (1, 3), 7: (1, 3), 8: (1, 3), 9: (2, 3),
}
BASE_PAIRS_EVEN = {0: (0, 0), 2: (0, 1), 4: (1, 2), 6: (1, 3), 8: (2, 3)}
BASE_COMPLEXITY = (1, 2, 4, 6, 8, 6, 8, 10, 8, 6)
BASE_LIMIT = 10


def _check_index(n: int) -> None:
    if n < 0:
        raise ValueError("index must be nonnegative")
    if n >= MAX_INDEX:
        raise OverflowError(f"index {n} not below 2^62")


def pairs_interval(n: int) -> IntInterval:
    _check_index(n)
    return IntInterval(*_pairs(n))


def PAIRS_interval(m: int) -> IntInterval:
    if m % 2:
        raise OddArgument(f"PAIRS is only defined on even lengths, got {m}")
    _check_index(m)
    return IntInterval(*_PAIRS(m // 2))


@lru_cache(maxsize=4096)
def _pairs(n: int) -> tuple[int, int]:
    if n < BASE_LIMIT:
        return BASE_PAIRS[n]
    k = n // 2
    if n % 2:
        return _PAIRS(k)
    lo1, hi1 = _PAIRS(k)
    lo0, hi0 = _PAIRS(k - 1)
    assert lo1 <= hi0 + 1 and lo0 <= hi1 + 1
    return min(lo0, lo1), max(hi0, hi1)


@lru_cache(maxsize=4096)
def _PAIRS(k: int) -> tuple[int, int]:
    """PAIRS(2k)."""
    if 2 * k < BASE_LIMIT:
        return BASE_PAIRS_EVEN[2 * k]
    lo, hi = _pairs(k + 1)
    return k - hi, k - lo


def _recursive_pairs(n: int) -> tuple[int, int]:
    k = n // 2
    if n % 2:
        return _recursive_PAIRS(k)
    a, b = _recursive_PAIRS(k), _recursive_PAIRS(k - 1)
    return min(a[0], b[0]), max(a[1], b[1])


def _recursive_PAIRS(k: int) -> tuple[int, int]:
    lo, hi = BASE_PAIRS[k + 1]
    return k - hi, k - lo


# The base table must agree with the recursion wherever the recursion applies.
for _n in range(4, BASE_LIMIT):
    assert _recursive_pairs(_n) == BASE_PAIRS[_n], _n
    if _n % 2 == 0:
        assert _recursive_PAIRS(_n // 2) == BASE_PAIRS_EVEN[_n], _n


def _cardinality(lo: int, hi: int) -> int:
    return hi - lo + 1


def _evens(lo: int, hi: int) -> int:
    return hi // 2 - (-(-lo // 2)) + 1 if lo <= hi else 0


def complexity_fast(n: int) -> int:
    """P_n from the pair intervals in O(log n) interval steps."""
    _check_index(n)
    if n < 4:
        return BASE_COMPLEXITY[n]
    k = n // 2
    lo, hi = _PAIRS(k)
    if n % 2:
        return 2 * (2 * _cardinality(lo, hi) - _evens(lo, hi))
    lo0, hi0 = _PAIRS(k - 1)
    common_lo, common_hi = max(lo, lo0), min(hi, hi0)
    assert common_lo <= common_hi, "consecutive PAIRS intervals are disjoint"
    return 2 * (_cardinality(lo, hi) + _cardinality(lo0, hi0) - _evens(common_lo, common_hi))


# ---- windowed evaluation -------------------------------------------------

_DIRECT_WINDOW = 64


def _PAIRS_arrays(k_lo: int, k_hi: int) -> tuple[np.ndarray, np.ndarray]:
    """Endpoints of PAIRS(2k) for k in [k_lo, k_hi]."""
    if k_hi < _DIRECT_WINDOW or k_hi - k_lo < 8:
        lo, hi = zip(*(_PAIRS(k) for k in range(k_lo, k_hi + 1)))
        return np.array(lo, dtype=np.int64), np.array(hi, dtype=np.int64)
    a, b = _pairs_arrays(k_lo + 1, k_hi + 1)
    k = np.arange(k_lo, k_hi + 1, dtype=np.int64)
    lo, hi = k - b, k - a
    for j in range(k_lo, min(k_hi, 4) + 1):
        lo[j - k_lo], hi[j - k_lo] = BASE_PAIRS_EVEN[2 * j]
    return lo, hi


def _pairs_arrays(n_lo: int, n_hi: int) -> tuple[np.ndarray, np.ndarray]:
    """Endpoints of pairs(n) for n in [n_lo, n_hi]."""
    if n_hi < _DIRECT_WINDOW or n_hi - n_lo < 8:
        lo, hi = zip(*(_pairs(n) for n in range(n_lo, n_hi + 1)))
        return np.array(lo, dtype=np.int64), np.array(hi, dtype=np.int64)
    k_lo = max(n_lo // 2 - 1, 0)
    plo, phi = _PAIRS_arrays(k_lo, n_hi // 2)
    n = np.arange(n_lo, n_hi + 1, dtype=np.int64)
    cur = n // 2 - k_lo
    prev = np.maximum(cur - 1, 0)
    odd = n % 2 == 1
    lo = np.where(odd, plo[cur], np.minimum(plo[cur], plo[prev]))
    hi = np.where(odd, phi[cur], np.maximum(phi[cur], phi[prev]))
    for j in range(n_lo, min(n_hi, BASE_LIMIT - 1) + 1):
        lo[j - n_lo], hi[j - n_lo] = BASE_PAIRS[j]
    return lo, hi


def pairs_window(n_lo: int, n_hi: int) -> list[IntInterval]:
    """pairs(n) for every n in [n_lo, n_hi], amortized O(1) per index.

    The window is halved recursively down to a short directly evaluated
    seed, then doubled back up level by level.
    """
    if n_lo < 2 or n_hi < n_lo:
        raise ValueError("need 2 <= n_lo <= n_hi")
    _check_index(n_hi)
    lo, hi = _pairs_arrays(n_lo, n_hi)
    return [IntInterval(a, b) for a, b in zip(lo.tolist(), hi.tolist())]


def _evens_array(lo: np.ndarray, hi: np.ndarray) -> np.ndarray:
    return np.where(lo <= hi, hi // 2 - (-(-lo // 2)) + 1, 0)


def complexity_range(n_lo: int, n_hi: int) -> np.ndarray:
    """P_n for every n in [n_lo, n_hi] as an int64 array."""
    if n_lo < 0 or n_hi < n_lo:
        raise ValueError("need 0 <= n_lo <= n_hi")
    _check_index(n_hi)
    k_lo = max(n_lo // 2 - 1, 0)
    plo, phi = _PAIRS_arrays(k_lo, max(n_hi // 2, k_lo))
    n = np.arange(n_lo, n_hi + 1, dtype=np.int64)
    cur = n // 2 - k_lo
    prev = np.maximum(cur - 1, 0)
    lo, hi = plo[cur], phi[cur]
    lo0, hi0 = plo[prev], phi[prev]
    size = hi - lo + 1
    odd_value = 2 * (2 * size - _evens_array(lo, hi))
    clo, chi = np.maximum(lo, lo0), np.minimum(hi, hi0)
    even_value = 2 * (size + (hi0 - lo0 + 1) - _evens_array(clo, chi))
    out = np.where(n % 2 == 1, odd_value, even_value)
    for j in range(n_lo, min(n_hi, 3) + 1):
        out[j - n_lo] = BASE_COMPLEXITY[j]
    assert bool(np.all(clo[(n >= 4) & (n % 2 == 0)] <= chi[(n >= 4) & (n % 2 == 0)]))
    return out


class RangeEvaluator:
    """P-function backed by one precomputed window; falls back to complexity_fast."""

    def __init__(self, n_lo: int, n_hi: int):
        self.n_lo = n_lo
        self.values = complexity_range(n_lo, n_hi)

    def __call__(self, n: int) -> int:
        i = n - self.n_lo
        if 0 <= i < len(self.values):
            return int(self.values[i])
        return complexity_fast(n)


# ---- brute force ---------------------------------------------------------


def _window_pair_counts(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Pair counts of every window of length n in a saturating prefix, with start parities."""
    span = saturating_span(n)
    arr = prefix_index(span).array[:span].astype(np.int64)
    same = np.concatenate(([0], np.cumsum(arr[:-1] == arr[1:])))
    count = span - n + 1
    starts = np.arange(count)
    return same[starts + n - 1] - same[starts], starts % 2


def pairs_brute(n: int) -> frozenset:
    """{p(w) : w in T_n} by exhaustive enumeration."""
    if n < 0:
        raise ValueError("length must be nonnegative")
    if n < 2:
        return frozenset({0})
    counts, _ = _window_pair_counts(n)
    return frozenset(np.unique(counts).tolist())


def PAIRS_brute(m: int) -> frozenset:
    """{p(w) : w in T_m read in the odd frame with no dangling letter}.

    From length 4 on every factor fixes its 2-frame, so these are exactly
    the occurrences starting at an odd position of the Thue-Morse word.
    """
    if m % 2:
        raise OddArgument(f"PAIRS is only defined on even lengths, got {m}")
    if m < 4:
        raise TooShort("pure odd words need length at least 4")
    counts, parity = _window_pair_counts(m)
    return frozenset(np.unique(counts[parity == 1]).tolist())


# ---- interval bookkeeping ------------------------------------------------


@dataclass(frozen=True)
class PairsState:
    """Consecutive intervals pairs(n), pairs(n+1)."""

    n: int
    pairs_n: IntInterval
    pairs_n_plus_1: IntInterval

    def __post_init__(self):
        dlo = self.pairs_n_plus_1.lo - self.pairs_n.lo
        dhi = self.pairs_n_plus_1.hi - self.pairs_n.hi
        if dlo not in (0, 1) or dhi not in (0, 1):
            raise ValueError(f"endpoints of {self} do not move by 0 or 1")
        if dlo == 1 and dhi == 1:
            raise ValueError(f"{self} is a shifted copy (case IV)")

    @classmethod
    def at(cls, n: int) -> "PairsState":
        return cls(n, pairs_interval(n), pairs_interval(n + 1))

    @property
    def case(self) -> str:
        dlo = self.pairs_n_plus_1.lo - self.pairs_n.lo
        dhi = self.pairs_n_plus_1.hi - self.pairs_n.hi
        return {(0, 0): "I", (1, 0): "II", (0, 1): "III"}[(dlo, dhi)]

    def children(self) -> dict:
        """Intervals one doubling level up, straight from the recursion."""
        n = self.n
        even_prev = self.pairs_n.reflect(n - 1)  # PAIRS(2n-2)
        even_cur = self.pairs_n_plus_1.reflect(n)  # PAIRS(2n)
        return {
            "PAIRS(2n-2)": even_prev,
            "PAIRS(2n)": even_cur,
            "pairs(2n-1)": even_prev,
            "pairs(2n)": even_prev.union(even_cur),
            "pairs(2n+1)": even_cur,
        }

    def next_state(self) -> "PairsState":
        """(pairs(2n), pairs(2n+1))."""
        c = self.children()
        return PairsState(2 * self.n, c["pairs(2n)"], c["pairs(2n+1)"])


def two_level_closed_form(case: str, n: int, a: int, b: int) -> dict:
    """Two doubling levels for pairs(n) = [a,b], listed per case in closed form."""
    I = IntInterval
    common = {
        "PAIRS(2n-2)": I(n - b - 1, n - a - 1),
        "pairs(2n-1)": I(n - b - 1, n - a - 1),
    }
    if case == "I":
        rows = {
            "PAIRS(2n)": I(n - b, n - a), "pairs(2n)": I(n - b - 1, n - a),
            "pairs(2n+1)": I(n - b, n - a), "PAIRS(4n-2)": I(n + a - 1, n + b),
            "PAIRS(4n)": I(n + a, n + b), "pairs(4n-1)": I(n + a - 1, n + b),
            "pairs(4n)": I(n + a - 1, n + b), "pairs(4n+1)": I(n + a, n + b),
        }
    elif case == "II":
        rows = {
            "PAIRS(2n)": I(n - b, n - a - 1), "pairs(2n)": I(n - b - 1, n - a - 1),
            "pairs(2n+1)": I(n - b, n - a - 1), "PAIRS(4n-2)": I(n + a, n + b),
            "PAIRS(4n)": I(n + a + 1, n + b), "pairs(4n-1)": I(n + a, n + b),
            "pairs(4n)": I(n + a, n + b), "pairs(4n+1)": I(n + a + 1, n + b),
        }
    elif case == "III":
        rows = {
            "PAIRS(2n)": I(n - b - 1, n - a), "pairs(2n)": I(n - b - 1, n - a),
            "pairs(2n+1)": I(n - b - 1, n - a), "PAIRS(4n-2)": I(n + a - 1, n + b),
            "PAIRS(4n)": I(n + a, n + b + 1), "pairs(4n-1)": I(n + a - 1, n + b),
            "pairs(4n)": I(n + a - 1, n + b + 1), "pairs(4n+1)": I(n + a, n + b + 1),
        }
    else:
        raise ValueError(f"unknown case {case!r}")
    return {**common, **rows}


def recursion_row(n: int) -> dict:
    """The same quantities as two_level_closed_form, evaluated by the interval recursion."""
    out = {}
    for name, index in (("PAIRS(2n-2)", 2 * n - 2), ("PAIRS(2n)", 2 * n),
                        ("PAIRS(4n-2)", 4 * n - 2), ("PAIRS(4n)", 4 * n)):
        out[name] = PAIRS_interval(index)
    for name, index in (("pairs(2n-1)", 2 * n - 1), ("pairs(2n)", 2 * n),
                        ("pairs(2n+1)", 2 * n + 1), ("pairs(4n-1)", 4 * n - 1),
                        ("pairs(4n)", 4 * n), ("pairs(4n+1)", 4 * n + 1)):
        out[name] = pairs_interval(index)
    return out


# ---- export --------------------------------------------------------------


def sequence_records(n_lo: int, n_hi: int) -> list[dict]:
    values = complexity_range(n_lo, n_hi).tolist()
    lo, hi = _pairs_arrays(n_lo, n_hi)
    return [
        {"n": n, "P": p, "pairs_lo": a, "pairs_hi": b}
        for n, p, a, b in zip(range(n_lo, n_hi + 1), values, lo.tolist(), hi.tolist())
    ]


def export_csv(n_lo: int, n_hi: int) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["index", "value"])
    for rec in sequence_records(n_lo, n_hi):
        writer.writerow([rec["n"], rec["P"]])
    return buf.getvalue()


def export_jsonl(n_lo: int, n_hi: int) -> str:
    return "".join(json.dumps(rec) + "\n" for rec in sequence_records(n_lo, n_hi))
