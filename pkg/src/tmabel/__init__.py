"""Two-abelian complexity of the Thue-Morse word.

Factor enumeration, reading frames and unique extensions, the odd-frame
compression of 2-abelian classes, the interval recursion for pair counts
and the resulting logarithmic-time evaluator of the complexity sequence,
plus kernel-relation verification and structural checks of the sequence.
"""

from tmabel.errors import (
    BudgetExceeded,
    EmptyWord,
    FrameAmbiguous,
    InconsistentTuple,
    InsufficientSamples,
    MalformedCoding,
    NonClosure,
    NotAFactor,
    NotInImage,
    OddArgument,
    OddLength,
    TmabelError,
    TooShort,
)
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
    tm_letter,
    tm_prefix,
)
from tmabel.frames import (
    FrameFactorization,
    MerfResult,
    determined_letters,
    extensible_2frame,
    extension_ratio_extrema,
    fill_frame,
    merf,
    reading_frames,
    unique_extension_bounds,
)
from tmabel.abelian import (
    ClassTuple,
    ShortCoding,
    VectTuple,
    class_from_vect,
    class_of,
    complexity_brute,
    decode_short_coding,
    l_abelian_equivalent,
    short_coding,
    vect_of,
)
from tmabel.pairs import (
    IntInterval,
    PAIRS_brute,
    PAIRS_interval,
    PairsState,
    complexity_fast,
    complexity_range,
    even_count,
    pairs_brute,
    pairs_interval,
    pairs_window,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "ClassTuple",
    "EmptyWord",
    "FactorSet",
    "FrameAmbiguous",
    "FrameFactorization",
    "InconsistentTuple",
    "InsufficientSamples",
    "IntInterval",
    "MalformedCoding",
    "MerfResult",
    "NonClosure",
    "NotAFactor",
    "NotInImage",
    "OddArgument",
    "OddLength",
    "PAIRS_brute",
    "PAIRS_interval",
    "PairsState",
    "Pattern",
    "ShortCoding",
    "TmabelError",
    "TooShort",
    "VectTuple",
    "Word",
    "class_from_vect",
    "class_of",
    "complement",
    "complexity_brute",
    "complexity_fast",
    "complexity_range",
    "count_factors",
    "decode_short_coding",
    "determined_letters",
    "enumerate_factors",
    "even_count",
    "extensible_2frame",
    "extension_ratio_extrema",
    "factor_complexity",
    "fill_frame",
    "is_factor",
    "l_abelian_equivalent",
    "merf",
    "morphism_image",
    "morphism_preimage",
    "pairs_brute",
    "pairs_interval",
    "pairs_window",
    "pattern_of",
    "reading_frames",
    "short_coding",
    "tm_letter",
    "tm_prefix",
    "unique_extension_bounds",
    "vect_of",
]
