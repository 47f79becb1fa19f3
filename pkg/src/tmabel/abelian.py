"""l-abelian equivalence, 2-abelian class tuples, the odd frame and short coding."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from tmabel.errors import (
    EmptyWord,
    FrameAmbiguous,
    InconsistentTuple,
    MalformedCoding,
    NotAFactor,
    TooShort,
)
from tmabel.frames import extensible_2frame
from tmabel.words import Word, as_word, count_factors, factor_strings, prefix_index, saturating_span

_TO_CODING = str.maketrans("01", "ED")
_FROM_CODING = {"D": "1", "E": "0", "S": ""}


@dataclass(frozen=True)
class ClassTuple:
    c00: int
    c01: int
    c10: int
    c11: int
    first: int
    last: int

    def __str__(self) -> str:
        return "({},{},{},{},{},{})".format(*self.astuple())

    def astuple(self) -> tuple:
        return (self.c00, self.c01, self.c10, self.c11, self.first, self.last)


@dataclass(frozen=True)
class VectTuple:
    first: int
    p: int
    r: int
    length: int


@dataclass(frozen=True)
class ShortCoding:
    """Odd-frame coding over D (01/10), E (00/11) and S (dangling letter)."""

    symbols: str

    def __post_init__(self):
        if self.symbols.strip("DES"):
            raise MalformedCoding(f"unexpected symbol in {self.symbols!r}")
        if "S" in self.symbols[1:-1]:
            raise MalformedCoding(f"interior S in {self.symbols!r}")

    def __str__(self) -> str:
        return self.symbols

    def __len__(self) -> int:
        return len(self.symbols)

    def __contains__(self, factor: str) -> bool:
        return factor in self.symbols

    def word_length(self) -> int:
        return sum(1 if c == "S" else 2 for c in self.symbols)


def l_abelian_equivalent(u, v, ell: int) -> bool:
    if ell < 1:
        raise ValueError("order must be at least 1")
    a, b = as_word(u).bits, as_word(v).bits
    if len(a) != len(b):
        return False
    k = ell - 1
    if a[:k] != b[:k] or a[len(a) - k :] != b[len(b) - k :]:
        return False
    return _grams(a, ell) == _grams(b, ell)


def _grams(s: str, ell: int) -> Counter:
    return Counter(s[i : i + ell] for i in range(len(s) - ell + 1))


def class_of(w) -> ClassTuple:
    s = as_word(w).bits
    if not s:
        raise EmptyWord("the empty word has no class tuple")
    n = len(s)
    x = int(s, 2)
    mask = (1 << (n - 1)) - 1
    left = x >> 1  # first letters of the n-1 windows
    right = x & mask  # second letters
    return ClassTuple(
        c00=(~left & ~right & mask).bit_count(),
        c01=(~left & right & mask).bit_count(),
        c10=(left & ~right & mask).bit_count(),
        c11=(left & right).bit_count(),
        first=int(s[0]),
        last=int(s[-1]),
    )


def _diffs(s: str) -> str:
    """d[i] = '1' iff s[i] != s[i+1]."""
    if len(s) < 2:
        return ""
    x = int(s, 2)
    return format(x ^ (x >> 1), f"0{len(s)}b")[1:]


def _odd_offset(s: str, d: str) -> int:
    """Position of s[0] inside its odd-frame word: 1 means a leading S."""
    pair = d.find("0")
    if pair >= 0:
        return pair % 2
    if len(s) < 4:
        raise FrameAmbiguous(f"{s} has no pair and is too short to fix its frame")
    return 1 - extensible_2frame(s)


def _require_factor(s: str) -> None:
    if s not in factor_strings(len(s)):
        raise NotAFactor(f"{s} is not a factor of the Thue-Morse word")


def short_coding(w) -> ShortCoding:
    s = as_word(w).bits
    if len(s) < 2:
        raise TooShort("short coding needs at least two letters")
    _require_factor(s)
    d = _diffs(s)
    o = _odd_offset(s, d)
    body = d[o::2].translate(_TO_CODING)
    tail = "S" if (len(s) - o) % 2 else ""
    return ShortCoding(("S" if o else "") + body + tail)


def decode_short_coding(c, first: int) -> Word:
    """Rebuild the word from its coding and first letter.

    Adjacent odd-frame words always meet at different letters, so the coding
    fixes every letter-to-letter change; the word is the running XOR of those
    changes started at `first`.
    """
    coding = c if isinstance(c, ShortCoding) else ShortCoding(str(c))
    if first not in (0, 1):
        raise MalformedCoding(f"first letter must be 0 or 1, got {first!r}")
    if not coding.symbols:
        return Word("")
    changes = "1".join(_FROM_CODING[ch] for ch in coding.symbols)
    n = len(changes) + 1
    gray = int(str(first) + changes, 2)
    x = gray
    shift = 1
    while shift < n:
        x ^= x >> shift
        shift *= 2
    return Word._raw(format(x, f"0{n}b"))


def vect_of(w) -> VectTuple:
    s = as_word(w).bits
    if len(s) < 4:
        raise TooShort("the frame bit is only defined from length 4")
    _require_factor(s)
    d = _diffs(s)
    return VectTuple(first=int(s[0]), p=d.count("0"), r=_odd_offset(s, d), length=len(s))


def _frame_pairs(length: int, r: int):
    """Interval of pair counts available to words of this length and frame bit."""
    from tmabel.pairs import PAIRS_interval

    if length % 2:
        return PAIRS_interval(length - 1)
    return PAIRS_interval(length - 2 if r else length)


def class_from_vect(v: VectTuple) -> ClassTuple:
    """Recover the full class tuple from (first letter, pairs, frame bit, length).

    Deleting one letter from every pair leaves an alternating word of length
    |w| - p starting with w_0, which fixes the 01/10 counts and the last
    letter. The pairs themselves alternate, starting with w_0 w_0 in the odd
    frame and with its complement otherwise.
    """
    first, p, r, n = v.first, v.p, v.r, v.length
    if first not in (0, 1) or r not in (0, 1):
        raise InconsistentTuple(f"{v}: first letter and frame bit must be bits")
    if n < 4:
        raise InconsistentTuple(f"{v}: frame bit undefined below length 4")
    if not 0 <= p <= n - 1:
        raise InconsistentTuple(f"{v}: pair count out of range")
    if p not in _frame_pairs(n, r):
        raise InconsistentTuple(f"{v}: no factor of length {n} has {p} pairs in this frame")
    alt = n - p
    rises = alt // 2 if first == 0 else (alt - 1) // 2  # 01 factors
    falls = alt - 1 - rises
    last = first ^ (alt % 2 == 0)
    lead = p - p // 2  # pairs of the first kind
    first_pair = first if r == 0 else 1 - first
    c00, c11 = (lead, p // 2) if first_pair == 0 else (p // 2, lead)
    return ClassTuple(c00, rises, falls, c11, first, int(last))


def _window_class_count(n: int, ell: int, span: int) -> int:
    index = prefix_index(span)
    arr = index.array[:span].astype(np.int64)
    count = span - n + 1
    grams = np.zeros(span - ell + 1, dtype=np.int64)
    for j in range(ell):
        grams = (grams << 1) | arr[j : j + span - ell + 1]
    columns = []
    if ell > 1:
        heads = np.zeros(span - ell + 2, dtype=np.int64)
        for j in range(ell - 1):
            heads = (heads << 1) | arr[j : j + span - ell + 2]
        columns.append(heads[:count])
        columns.append(heads[n - ell + 1 : n - ell + 1 + count])
    for value in range(1 << ell):
        cum = np.concatenate(([0], np.cumsum(grams == value)))
        columns.append(cum[n - ell + 1 : n - ell + 1 + count] - cum[:count])
    widths = [ell - 1] * (2 if ell > 1 else 0) + [n.bit_length()] * (1 << ell)
    if sum(widths) <= 62:
        key = np.zeros(count, dtype=np.int64)
        for col, width in zip(columns, widths):
            key = (key << width) | col
        return len(np.unique(key))
    return len(np.unique(np.stack(columns, axis=1), axis=0))


def complexity_brute(n: int, ell: int = 2) -> int:
    """Number of l-abelian classes in T_n by exhaustive bucketing.

    Every window of a Thue-Morse prefix long enough to contain all of T_n is
    keyed by (prefix, suffix, l-gram counts); the prefix length is certified
    by the factor-count closed form.
    """
    if n < 0 or ell < 1:
        raise ValueError("need n >= 0 and l >= 1")
    if n < ell:
        # prefix and suffix of length l-1 already cover the whole word
        return count_factors(n)
    return _window_class_count(n, ell, saturating_span(n))


def complexity_brute_words(n: int, ell: int = 2) -> int:
    """Slow reference: bucket the materialized factor set word by word."""
    k = ell - 1
    keys = set()
    for s in factor_strings(n):
        if n < ell:
            keys.add(s)
        else:
            keys.add((s[:k], s[n - k :], tuple(sorted(_grams(s, ell).items()))))
    return len(keys)
