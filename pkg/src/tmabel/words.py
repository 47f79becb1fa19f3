"""Finite binary words, the Thue-Morse word and its factor sets."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Union

import numpy as np

from tmabel.errors import BudgetExceeded, NotInImage, OddLength

_FLIP = str.maketrans("01", "10")
_MAX_INDEX = 1 << 64

# window span starts at START_SPAN * n and doubles up to MAX_SPAN * n
START_SPAN = 16
MAX_SPAN = 1024


class Word:
    """Immutable finite word over {0, 1}.

    Stored as an ASCII string of '0'/'1', which is also the serialized
    form. Indexing with an int returns the letter as an int; slicing
    returns a Word.
    """

    __slots__ = ("_s",)

    def __init__(self, bits: Union[str, "Word", Iterable[int]] = ""):
        if isinstance(bits, Word):
            s = bits._s
        elif isinstance(bits, str):
            s = bits
        else:
            s = "".join("1" if b else "0" for b in _checked_letters(bits))
        if s.strip("01"):
            raise ValueError(f"not a binary word: {s!r}")
        self._s = s

    @classmethod
    def _raw(cls, s: str) -> "Word":
        w = object.__new__(cls)
        w._s = s
        return w

    @property
    def bits(self) -> str:
        return self._s

    def __len__(self) -> int:
        return len(self._s)

    def __iter__(self) -> Iterator[int]:
        return (1 if c == "1" else 0 for c in self._s)

    def __getitem__(self, key):
        if isinstance(key, slice):
            return Word._raw(self._s[key])
        return 1 if self._s[key] == "1" else 0

    def __add__(self, other) -> "Word":
        return Word._raw(self._s + as_word(other)._s)

    def __eq__(self, other) -> bool:
        if isinstance(other, Word):
            return self._s == other._s
        if isinstance(other, str):
            return self._s == other
        return NotImplemented

    def __lt__(self, other: "Word") -> bool:
        return (len(self._s), self._s) < (len(other._s), other._s)

    def __hash__(self) -> int:
        return hash(self._s)

    def __str__(self) -> str:
        return self._s

    def __repr__(self) -> str:
        return f"Word({self._s!r})"

    def __contains__(self, other) -> bool:
        return as_word(other)._s in self._s


def _checked_letters(bits: Iterable[int]) -> Iterator[int]:
    for b in bits:
        if b not in (0, 1):
            raise ValueError(f"letter {b!r} is not 0 or 1")
        yield b


def as_word(w) -> Word:
    return w if isinstance(w, Word) else Word(w)


@dataclass(frozen=True)
class Pattern:
    """Word over {alpha, alpha-bar}; 0 stands for alpha, 1 for its complement."""

    symbols: tuple

    def __len__(self) -> int:
        return len(self.symbols)

    def __str__(self) -> str:
        return "".join("α" if s == 0 else "ᾱ" for s in self.symbols)

    def assignments(self) -> tuple[Word, Word]:
        w = Word(self.symbols)
        return w, complement(w)

    def matches(self, w) -> bool:
        return as_word(w) in self.assignments()


def tm_letter(i: int) -> int:
    """Letter t_i: parity of the binary digit sum of i."""
    if i < 0 or i >= _MAX_INDEX:
        raise ValueError(f"index {i} outside [0, 2^64)")
    return i.bit_count() & 1


def _prefix_str(n: int) -> str:
    s = "0"
    while len(s) < n:
        s += s.translate(_FLIP)
    return s[:n]


def tm_prefix(n: int) -> Word:
    if n < 0:
        raise ValueError("length must be nonnegative")
    return Word._raw(_prefix_str(n))


def complement(w) -> Word:
    return Word._raw(as_word(w)._s.translate(_FLIP))


def pattern_of(w) -> Pattern:
    return Pattern(tuple(as_word(w)))


def morphism_image(w) -> Word:
    s = as_word(w)._s
    return Word._raw("".join("01" if c == "0" else "10" for c in s))


def morphism_preimage(w) -> Word:
    s = as_word(w)._s
    if len(s) % 2:
        raise OddLength(f"word of odd length {len(s)} has no preimage")
    out = []
    for i in range(0, len(s), 2):
        block = s[i : i + 2]
        if block == "01":
            out.append("0")
        elif block == "10":
            out.append("1")
        else:
            raise NotInImage(f"block {block} at position {i} has no preimage")
    return Word._raw("".join(out))


def factor_complexity(n: int) -> int:
    """Number of distinct factors of length n (closed form)."""
    if n < 0:
        raise ValueError("length must be nonnegative")
    if n <= 2:
        return (1, 2, 4)[n]
    # 2 * 2^m < n <= 4 * 2^m
    m = (n - 1).bit_length() - 2
    if n <= 3 << m:
        return 4 * n - (2 << m) - 4
    return 2 * n + (4 << m) - 2


class PrefixIndex:
    """Exact identifiers for every window of a Thue-Morse prefix.

    Windows of length 2^k get dense ranks by prefix doubling; a window of
    arbitrary length n is identified by the ranks of its two overlapping
    power-of-two halves, so equal ids mean equal words.
    """

    def __init__(self, length: int):
        self.length = length
        self.text = _prefix_str(length)
        self.array = np.frombuffer(self.text.encode("ascii"), dtype=np.uint8) - 48
        ranks = [self.array.astype(np.int64)]
        h = 1
        while 2 * h <= length:
            prev = ranks[-1]
            keys = prev[:-h] * (int(prev.max()) + 1) + prev[h:]
            _, inv = np.unique(keys, return_inverse=True)
            ranks.append(inv.astype(np.int64).reshape(-1))
            h *= 2
        self._ranks = tuple(ranks)

    def window_ids(self, n: int, count: int) -> np.ndarray:
        """Ids of the windows of length n starting at 0 .. count-1."""
        if n == 0:
            return np.zeros(count, dtype=np.int64)
        if count + n - 1 > self.length:
            raise ValueError("windows run past the end of the prefix")
        k = n.bit_length() - 1
        r = self._ranks[k]
        shift = n - (1 << k)
        return r[:count] * (int(r.max()) + 1) + r[shift : shift + count]

    def distinct_count(self, n: int, span: int) -> int:
        """Distinct factors of length n inside the first span letters."""
        return len(np.unique(self.window_ids(n, span - n + 1)))


def prefix_index(length: int) -> PrefixIndex:
    """Shared index covering at least `length` letters (rounded up to a power of two)."""
    return _prefix_index(1 << max(length - 1, 1).bit_length())


@lru_cache(maxsize=8)
def _prefix_index(size: int) -> PrefixIndex:
    return PrefixIndex(size)


def saturating_span(n: int) -> int:
    """Smallest span C*n (C = 16, 32, ...) whose windows realize all of T_n.

    Saturation is certified by matching the closed-form factor count.
    """
    expected = factor_complexity(n)
    if n == 0:
        return 0
    span_factor = START_SPAN
    while span_factor <= MAX_SPAN:
        span = span_factor * n
        found = prefix_index(span).distinct_count(n, span)
        if found == expected:
            return span
        if found > expected:
            raise AssertionError(
                f"{found} distinct factors of length {n} exceed the closed form {expected}"
            )
        span_factor *= 2
    raise BudgetExceeded(f"windows of length {n} did not saturate within {MAX_SPAN}*n letters")


@lru_cache(maxsize=64)
def _factor_strings(n: int) -> frozenset:
    if n == 0:
        return frozenset({""})
    span = saturating_span(n)
    index = prefix_index(span)
    ids = index.window_ids(n, span - n + 1)
    _, first = np.unique(ids, return_index=True)
    text = index.text
    return frozenset(text[i : i + n] for i in first.tolist())


@dataclass(frozen=True)
class FactorSet:
    length: int
    members: frozenset

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, w) -> bool:
        return as_word(w) in self.members

    def __iter__(self) -> Iterator[Word]:
        return iter(sorted(self.members))

    def to_text(self) -> str:
        return "\n".join(w.bits for w in self)


def enumerate_factors(n: int) -> FactorSet:
    """The set T_n of factors of length n."""
    if n < 0:
        raise ValueError("length must be nonnegative")
    return FactorSet(n, frozenset(Word._raw(s) for s in _factor_strings(n)))


def count_factors(n: int) -> int:
    """#T_n without materializing the words."""
    if n == 0:
        return 1
    span = saturating_span(n)
    return prefix_index(span).distinct_count(n, span)


def is_factor(w) -> bool:
    return as_word(w)._s in _factor_strings(len(w))


def factor_strings(n: int) -> frozenset:
    """T_n as plain strings (cached); the fast path for internal membership tests."""
    return _factor_strings(n)
