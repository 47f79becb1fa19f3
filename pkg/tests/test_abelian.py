from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from tmabel.abelian import (
    ClassTuple,
    ShortCoding,
    VectTuple,
    class_from_vect,
    class_of,
    complexity_brute,
    complexity_brute_words,
    decode_short_coding,
    l_abelian_equivalent,
    short_coding,
    vect_of,
)
from tmabel.errors import (
    EmptyWord,
    FrameAmbiguous,
    InconsistentTuple,
    MalformedCoding,
    NotAFactor,
    TooShort,
)
from tmabel.words import factor_strings, tm_prefix

TEXT = tm_prefix(1 << 14).bits


def coding_from_occurrence(s):
    """Split s along the odd 2-blocks of one of its occurrences in the prefix."""
    i = TEXT.find(s)
    out = []
    j = 0
    if i % 2 == 0:  # s[0] is the second letter of an odd block
        out.append("S")
        j = 1
    while j + 1 < len(s):
        out.append("E" if s[j] == s[j + 1] else "D")
        j += 2
    if j < len(s):
        out.append("S")
    return "".join(out)


def test_class_examples():
    assert class_of("10011010") == ClassTuple(1, 2, 3, 1, 1, 0)
    assert str(class_of("10011010")) == "(1,2,3,1,1,0)"
    assert class_of("0") == ClassTuple(0, 0, 0, 0, 0, 0)
    assert class_of("011001") == class_of("001011")
    with pytest.raises(EmptyWord):
        class_of("")


def test_class_matches_direct_count():
    for n in range(1, 40):
        for s in factor_strings(n):
            c = Counter(s[i : i + 2] for i in range(n - 1))
            assert class_of(s) == ClassTuple(c["00"], c["01"], c["10"], c["11"], int(s[0]), int(s[-1]))


def test_coding_examples():
    assert str(short_coding("1100")) == "EE"
    assert str(short_coding("01001")) == "DES"
    assert str(short_coding("1001011")) == "SEDE"
    assert decode_short_coding("SEDE", 1) == "1001011"
    assert decode_short_coding("EE", 1) == "1100"
    assert decode_short_coding("D", 0) == "01"


def test_coding_errors():
    with pytest.raises(FrameAmbiguous):
        short_coding("010")
    with pytest.raises(TooShort):
        short_coding("0")
    with pytest.raises(NotAFactor):
        short_coding("0000")
    with pytest.raises(MalformedCoding):
        ShortCoding("DSD")
    with pytest.raises(MalformedCoding):
        decode_short_coding("DX", 0)
    with pytest.raises(MalformedCoding):
        decode_short_coding("D", 2)


def test_coding_matches_occurrence_frame():
    for n in range(2, 64):
        for s in factor_strings(n):
            if n < 4 and "00" not in s and "11" not in s:
                continue
            assert short_coding(s).symbols == coding_from_occurrence(s), s


def test_decode_inverts_encode():
    for n in range(4, 300):
        for s in factor_strings(n):
            c = short_coding(s)
            assert c.word_length() == n
            assert decode_short_coding(c, int(s[0])) == s


def test_vect_examples():
    assert vect_of("10011010") == VectTuple(1, 2, 1, 8)
    assert vect_of("1100") == VectTuple(1, 2, 0, 4)
    assert vect_of("0110") == VectTuple(0, 1, 1, 4)
    with pytest.raises(TooShort):
        vect_of("011")


def test_class_from_vect_examples():
    assert class_from_vect(VectTuple(1, 2, 1, 8)) == ClassTuple(1, 2, 3, 1, 1, 0)
    assert class_from_vect(VectTuple(1, 2, 0, 4)) == ClassTuple(1, 0, 1, 1, 1, 0)
    a, b = vect_of("011001"), vect_of("001011")
    assert a != b and class_from_vect(a) == class_from_vect(b)


def test_class_from_vect_rejects_unrealizable():
    with pytest.raises(InconsistentTuple):
        class_from_vect(VectTuple(0, 4, 0, 4))
    with pytest.raises(InconsistentTuple):
        class_from_vect(VectTuple(0, 0, 0, 9))  # pairs(9) = [2,3]
    with pytest.raises(InconsistentTuple):
        class_from_vect(VectTuple(0, 1, 0, 3))


def test_realizable_vects_are_exactly_the_accepted_ones():
    for n in range(4, 60):
        realized = {vect_of(s) for s in factor_strings(n)}
        for first in (0, 1):
            for r in (0, 1):
                for p in range(n):
                    v = VectTuple(first, p, r, n)
                    try:
                        class_from_vect(v)
                        accepted = True
                    except InconsistentTuple:
                        accepted = False
                    assert accepted == (v in realized), v


def test_complexity_examples():
    assert complexity_brute(4, 2) == 8
    assert complexity_brute(7, 2) == 10
    # abelian complexity alternates 2, 3 from n = 1 on
    assert [complexity_brute(n, 1) for n in range(8)] == [1, 2, 3, 2, 3, 2, 3, 2]


def test_complexity_bucketing_matches_word_level():
    for n in range(0, 48):
        for ell in (1, 2, 3, 4):
            assert complexity_brute(n, ell) == complexity_brute_words(n, ell), (n, ell)
    for n in (200, 301):
        assert complexity_brute(n, 3) == complexity_brute_words(n, 3)


def test_complexity_against_pairwise_equivalence():
    for n in range(1, 14):
        for ell in (1, 2, 3):
            reps = []
            for s in sorted(factor_strings(n)):
                if not any(l_abelian_equivalent(s, r, ell) for r in reps):
                    reps.append(s)
            assert len(reps) == complexity_brute(n, ell)


@settings(max_examples=300, deadline=None)
@given(st.integers(1, 64), st.data(), st.sampled_from([2, 3]))
def test_equivalence_refines(n, data, ell):
    pool = sorted(factor_strings(n))
    u = data.draw(st.sampled_from(pool))
    v = data.draw(st.sampled_from(pool))
    if l_abelian_equivalent(u, v, ell):
        assert l_abelian_equivalent(u, v, ell - 1)


def test_equivalence_basics():
    assert l_abelian_equivalent("011001", "001011", 2)
    assert not l_abelian_equivalent("01", "011", 1)
    with pytest.raises(ValueError):
        l_abelian_equivalent("0", "0", 0)
