import pytest
from hypothesis import given, strategies as st

from tmabel.errors import BudgetExceeded, NotInImage, OddLength
from tmabel.words import (
    FactorSet,
    Pattern,
    Word,
    complement,
    count_factors,
    enumerate_factors,
    factor_complexity,
    is_factor,
    morphism_image,
    morphism_preimage,
    pattern_of,
    saturating_span,
    tm_letter,
    tm_prefix,
)

LONG = tm_prefix(1 << 14).bits


def naive_factors(n, text=LONG):
    return {text[i : i + n] for i in range(len(text) - n + 1)}


def test_letters_match_morphism_fixed_point():
    w = Word("0")
    for _ in range(10):
        w = morphism_image(w)
    assert w.bits == "".join(str(tm_letter(i)) for i in range(1024))
    assert tm_prefix(1024) == w


def test_tm_letter_range():
    assert tm_letter(0) == 0 and tm_letter(7) == 1
    assert tm_letter((1 << 64) - 1) == 0
    with pytest.raises(ValueError):
        tm_letter(1 << 64)
    with pytest.raises(ValueError):
        tm_letter(-1)


def test_word_behaviour():
    w = Word("0110")
    assert len(w) == 4 and list(w) == [0, 1, 1, 0]
    assert w[1] == 1 and w[1:3] == Word("11")
    assert w + "1" == "01101"
    assert "11" in w
    assert Word([0, 1]) == "01"
    assert hash(w) == hash(Word("0110"))
    with pytest.raises(ValueError):
        Word("012")
    with pytest.raises(ValueError):
        Word([0, 2])


def test_complement_and_pattern():
    assert complement("0110") == "1001"
    p = pattern_of("001")
    assert str(p) == "ααᾱ"
    assert p.matches("110") and p.matches("001") and not p.matches("010")
    assert Pattern((0, 1)).assignments() == (Word("01"), Word("10"))


def test_preimage():
    assert morphism_preimage("0110") == "01"
    with pytest.raises(OddLength):
        morphism_preimage("011")
    with pytest.raises(NotInImage):
        morphism_preimage("0011")


@given(st.text(alphabet="01", max_size=40))
def test_image_preimage_roundtrip(s):
    assert morphism_preimage(morphism_image(s)) == s


def test_closed_form_matches_naive_count():
    for n in range(0, 200):
        assert factor_complexity(n) == len(naive_factors(n)), n


def test_enumeration_matches_naive_sets():
    for n in range(0, 120):
        assert {w.bits for w in enumerate_factors(n)} == naive_factors(n), n


def test_count_matches_closed_form_large():
    for n in list(range(1, 300)) + [1000, 2047, 2048, 2049, 4096]:
        assert count_factors(n) == factor_complexity(n), n


def test_factor_set_examples():
    t6 = enumerate_factors(6)
    assert isinstance(t6, FactorSet) and len(t6) == 16
    assert "101101" in t6
    assert "000" not in enumerate_factors(3)
    assert is_factor("0110100110010110") and not is_factor("11011")
    assert t6.to_text().splitlines()[0] == sorted(w.bits for w in t6)[0]


def test_span_budget(monkeypatch):
    import tmabel.words as words

    assert saturating_span(10) >= 10
    monkeypatch.setattr(words, "MAX_SPAN", 1)
    with pytest.raises(BudgetExceeded):
        words.saturating_span(1000)
