"""Reading frames, maximal extensible reading frames and unique extensions."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from tmabel.errors import FrameAmbiguous, NotAFactor, TooShort
from tmabel.words import (
    Word,
    _prefix_str,
    as_word,
    enumerate_factors,
    factor_strings,
    morphism_image,
    morphism_preimage,
)

_FLIP = str.maketrans("01", "10")

# MERFs of all nonempty factors up to length 4, keyed by the representative
# starting with 0: (frame size, position of the first letter inside its frame word).
MERF_TABLE = {
    "0": (1, 0),
    "00": (2, 1),
    "01": (1, 0),
    "001": (2, 1),
    "010": (1, 0),
    "011": (2, 0),
    "0010": (4, 1),
    "0011": (2, 1),
    "0100": (4, 3),
    "0101": (4, 2),
    "0110": (2, 0),
}


@dataclass(frozen=True)
class FrameFactorization:
    q: int
    offset: int
    prefix: Word
    blocks: tuple
    suffix: Word

    @property
    def size(self) -> int:
        return 1 << self.q

    def word(self) -> Word:
        return Word("".join([self.prefix.bits, *(b.bits for b in self.blocks), self.suffix.bits]))


@dataclass(frozen=True)
class MerfStep:
    q: int
    word: Word
    filled: Word
    preimage: Word


@dataclass(frozen=True)
class MerfResult:
    extended: Word
    frame_size: int
    original_offset: int
    steps: tuple = ()

    @property
    def q(self) -> int:
        return self.frame_size.bit_length() - 1


@dataclass(frozen=True)
class RatioExtrema:
    min_ratio: Fraction
    min_witness: Word
    max_ratio: Fraction
    max_witness: Word


def _require_factor(s: str) -> None:
    if s not in factor_strings(len(s)):
        raise NotAFactor(f"{s} is not a factor of the Thue-Morse word")


def _canonical(s: str) -> str:
    return s if s[0] == "0" else s.translate(_FLIP)


def factorize(w, q: int, offset: int) -> Optional[FrameFactorization]:
    """Split w into a 2^q-frame with w_0 at `offset` inside its frame word.

    Returns None when the split is not a valid reading frame: some piece
    fails to match the frame pattern, or no frame boundary falls inside w.
    """
    s = as_word(w).bits
    size = 1 << q
    if not 0 <= offset < size:
        raise ValueError(f"offset {offset} outside [0, {size})")
    f = _prefix_str(size)
    g = f.translate(_FLIP)
    head = (size - offset) % size
    if head > len(s):
        return None
    prefix = s[:head]
    if prefix and not (f.endswith(prefix) or g.endswith(prefix)):
        return None
    blocks = []
    i = head
    while i + size <= len(s):
        block = s[i : i + size]
        if block != f and block != g:
            return None
        blocks.append(Word._raw(block))
        i += size
    suffix = s[i:]
    if suffix and not (f.startswith(suffix) or g.startswith(suffix)):
        return None
    return FrameFactorization(q, offset, Word._raw(prefix), tuple(blocks), Word._raw(suffix))


def reading_frames(w, q: int) -> frozenset:
    """Offsets in [0, 2^q) at which w admits a 2^q-reading frame."""
    s = as_word(w).bits
    _require_factor(s)
    return frozenset(o for o in range(1 << q) if factorize(s, q, o) is not None)


def _even_offset(s: str) -> Optional[int]:
    """Offset of the extensible 2-frame from the lookup table, None if trivial."""
    size, offset = MERF_TABLE[_canonical(s[:4])]
    if size == 1:
        return None
    return offset % 2


def extensible_2frame(w) -> int:
    s = as_word(w).bits
    if len(s) < 4:
        raise TooShort("the extensible 2-frame is only guaranteed from length 4")
    _require_factor(s)
    return _even_offset(s)


def _fill(s: str) -> tuple[str, int]:
    offset = _even_offset(s)
    if offset is None:
        raise FrameAmbiguous(f"{s} has only the trivial reading frame")
    left = s[0].translate(_FLIP) if offset else ""
    right = s[-1].translate(_FLIP) if (offset + len(s)) % 2 else ""
    return left + s + right, len(left)


def fill_frame(w) -> Word:
    """Complete the dangling letters of the extensible 2-frame."""
    s = as_word(w).bits
    if len(s) < 2:
        raise TooShort("a single letter has only the trivial frame")
    _require_factor(s)
    return Word._raw(_fill(s)[0])


def _is_trivial(s: str) -> bool:
    return len(s) <= 3 and MERF_TABLE[_canonical(s)][0] == 1


def merf(w) -> MerfResult:
    """Maximal extensible reading frame of w, with the forced extension."""
    s = as_word(w).bits
    if not s:
        raise TooShort("the empty word has no reading frame")
    _require_factor(s)
    q = 0
    left = 0
    cur = s
    steps = []
    while not _is_trivial(cur):
        q += 1
        filled, pad = _fill(cur)
        left += pad << (q - 1)
        pre = morphism_preimage(filled).bits
        steps.append(MerfStep(q, Word._raw(cur), Word._raw(filled), Word._raw(pre)))
        cur = pre
    extended = Word._raw(cur)
    for _ in range(q):
        extended = morphism_image(extended)
    assert extended.bits[left : left + len(s)] == s
    return MerfResult(extended, 1 << q, left, tuple(steps))


def determined_letters(w) -> int:
    return len(merf(w).extended) - len(w)


def unique_extension_bounds(n: int) -> tuple[int, int]:
    """Least and greatest number of letters a factor of length n forces."""
    if n < 1:
        raise ValueError("length must be positive")
    if n <= 3:
        return (0, (0, 2, 1)[n - 1])
    q = n.bit_length() - 1
    u_min = (-n) % (1 << (q - 1))
    u_max = (1 << ((n - 2).bit_length() + 1)) - n
    return u_min, u_max


def u_min_witness(n: int) -> Word:
    """Factor of length n > 3 forcing the fewest letters (explicit construction)."""
    q = n.bit_length() - 1
    r = n - (1 << q)
    half = _prefix_str(1 << (q - 1))
    if r <= 1 << (q - 1):
        source = half + half.translate(_FLIP) + half
    else:
        full = _prefix_str(1 << q)
        source = full + full.translate(_FLIP)
    return Word._raw(source[:n])


def u_max_witness(n: int) -> Word:
    """Factor of length n > 3 forcing the most letters (explicit construction).

    A prefix of x f f' with f = f_{2^q}, f' its complement and n = 2^q + r;
    the leading letter x is the last letter of f_{2^(q-1)} when r <= 1 and
    the last letter of f itself otherwise.
    """
    q = n.bit_length() - 1
    r = n - (1 << q)
    f = _prefix_str(1 << q)
    lead = f[(1 << (q - 1)) - 1] if r <= 1 else f[-1]
    return Word._raw((lead + f + f.translate(_FLIP))[:n])


def ratio_witness(q: int) -> Word:
    """Length 2^q + 2 word whose forced extension has length 4 * 2^q."""
    return u_max_witness((1 << q) + 2)


def extension_ratio_extrema(n_max: int) -> RatioExtrema:
    """Extremes of |merf(w).extended| / |w| over all factors with 1 <= |w| <= n_max.

    Ties go to the longest word, then the lexicographically smallest.
    """
    if n_max < 4:
        raise ValueError("n_max must be at least 4")
    lo = hi = None
    for n in range(1, n_max + 1):
        for w in enumerate_factors(n):
            ratio = Fraction(len(merf(w).extended), n)
            key_lo = (ratio, -n, w.bits)
            key_hi = (-ratio, -n, w.bits)
            if lo is None or key_lo < lo:
                lo = key_lo
            if hi is None or key_hi < hi:
                hi = key_hi
    return RatioExtrema(lo[0], Word._raw(lo[2]), -hi[0], Word._raw(hi[2]))

