"""Kernel relations of the complexity sequence: catalog, verification, coverage, discovery."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import gcd
from typing import Callable, Optional

import numpy as np

from tmabel.errors import InsufficientSamples, NonClosure
from tmabel.pairs import complexity_fast, complexity_range


@dataclass(frozen=True, order=True)
class KernelTerm:
    """coefficient * P[modulus*n + residue]."""

    modulus: int
    residue: int
    coefficient: int = 1

    def __post_init__(self):
        if self.modulus < 1 or self.modulus & (self.modulus - 1):
            raise ValueError(f"modulus {self.modulus} is not a power of two")
        if not 0 <= self.residue < self.modulus:
            raise ValueError(f"residue {self.residue} outside [0, {self.modulus})")

    @property
    def key(self) -> tuple[int, int]:
        return (self.modulus, self.residue)

    def index(self, n: int) -> int:
        return self.modulus * n + self.residue

    def subsequence(self) -> str:
        m = "" if self.modulus == 1 else str(self.modulus)
        r = f"+{self.residue}" if self.residue else ""
        return f"P[{m}n{r}]"

    def __str__(self) -> str:
        if self.coefficient == 1:
            return self.subsequence()
        if self.coefficient == -1:
            return "-" + self.subsequence()
        return f"{self.coefficient}*{self.subsequence()}"


@dataclass(frozen=True)
class KernelRelation:
    """lhs.coefficient * P[lhs] = sum of rhs terms, for every n >= 0."""

    lhs: KernelTerm
    rhs: tuple

    def to_string(self) -> str:
        parts = []
        for t in self.rhs:
            s = str(t)
            if parts:
                s = f"- {s[1:]}" if s.startswith("-") else f"+ {s}"
            parts.append(s)
        return f"{self.lhs} = {' '.join(parts) if parts else '0'}"

    __str__ = to_string

    @classmethod
    def parse(cls, text: str) -> "KernelRelation":
        left, sep, right = text.partition("=")
        if not sep:
            raise ValueError(f"no '=' in {text!r}")
        lhs = _parse_terms(left)
        if len(lhs) != 1:
            raise ValueError(f"left side must be a single term: {left!r}")
        rhs = () if right.strip() == "0" else tuple(_parse_terms(right))
        return cls(lhs[0], rhs)

    def terms(self) -> list[KernelTerm]:
        return [self.lhs, *self.rhs]

    def residual(self, values: Callable[[KernelTerm], object]):
        """lhs - rhs, where values(term) gives P along term's subsequence (uncoefficiented)."""
        total = self.lhs.coefficient * values(self.lhs)
        for t in self.rhs:
            total = total - t.coefficient * values(t)
        return total


_TERM = re.compile(r"([+-]?)\s*(?:(\d+)\s*\*\s*)?P\[(\d*)n(?:\+(\d+))?\]")


def _parse_terms(text: str) -> list[KernelTerm]:
    text = text.strip()
    out = []
    pos = 0
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m:
            raise ValueError(f"cannot parse {text[pos:]!r}")
        sign, coef, mod, res = m.groups()
        c = int(coef) if coef else 1
        out.append(KernelTerm(int(mod) if mod else 1, int(res) if res else 0, -c if sign == "-" else c))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return out


_CATALOG = (
    "P[4n+1] = P[2n+1]",
    "P[8n+4] = P[8n+3] + P[4n+3] - P[4n+2]",
    "P[16n] = P[8n]",
    "P[16n+2] = P[8n+2]",
    "P[16n+6] = -P[16n+3] + P[8n+3] + 3*P[8n+2] + P[4n+3] - 2*P[4n+2] - P[2n+1]",
    "P[16n+7] = -P[16n+3] + P[8n+3] + 3*P[8n+2] + 2*P[4n+3] - 3*P[4n+2] - P[2n+1]",
    "P[16n+8] = P[8n+2] + P[4n+3] - P[2n+1]",
    "P[16n+10] = P[8n+2] + P[4n+3] - P[2n+1]",
    "P[16n+11] = -P[16n+3] + 3*P[8n+2] + P[4n+3] - 2*P[2n+1]",
    "P[16n+14] = P[16n+3] + P[8n+7] - P[8n+3] - P[8n+2] - P[4n+3] + 3*P[4n+2] - P[2n+1]",
    "P[16n+15] = P[16n+3] + 2*P[8n+7] - 3*P[8n+6] - 2*P[8n+3] + 6*P[4n+2] - 3*P[2n+1]",
    "P[32n+3] = P[8n+3]",
    "P[32n+19] = -P[16n+3] + P[8n+3] + 3*P[8n+2] + 2*P[4n+3] - 3*P[4n+2] - P[2n+1]",
)

# subsequences every kernel element reduces to
BASIS = tuple(
    KernelTerm(m, c)
    for m, c in ((2, 1), (4, 2), (4, 3), (8, 0), (8, 2), (8, 3), (8, 6), (8, 7), (16, 3))
)


def relations_catalog() -> list[KernelRelation]:
    return [KernelRelation.parse(s) for s in _CATALOG]


@dataclass(frozen=True)
class VerificationReport:
    relation: str
    n_lo: int
    n_hi: int
    holds: bool
    first_failure: Optional[int] = None

    def to_dict(self) -> dict:
        return {
            "relation": self.relation,
            "range": [self.n_lo, self.n_hi],
            "holds": self.holds,
            "first_failure": self.first_failure,
        }


@lru_cache(maxsize=2)
def _fast_table(hi: int) -> np.ndarray:
    return complexity_range(0, hi)


def _table_for(hi: int) -> np.ndarray:
    # round up so that nearby requests share one table
    return _fast_table(1 << max(hi, 1).bit_length())


def verify_relation(
    rel: KernelRelation, n_lo: int, n_hi: int, evaluator: Callable[[int], int] = complexity_fast
) -> VerificationReport:
    """Check rel for every n in [n_lo, n_hi] and report the least failing n.

    With the default evaluator the check is vectorized over one precomputed
    table of P; any other evaluator is called index by index and the scan
    stops at the first failure.
    """
    if n_hi < n_lo:
        return VerificationReport(rel.to_string(), n_lo, n_hi, True)
    if evaluator is complexity_fast:
        top = max(t.index(n_hi) for t in rel.terms())
        table = _table_for(top)
        n = np.arange(n_lo, n_hi + 1, dtype=np.int64)
        diff = rel.residual(lambda t: table[t.modulus * n + t.residue])
        bad = np.flatnonzero(diff)
        first = int(n_lo + bad[0]) if len(bad) else None
    else:
        first = None
        for n in range(n_lo, n_hi + 1):
            if rel.residual(lambda t: evaluator(t.index(n))) != 0:
                first = n
                break
    return VerificationReport(rel.to_string(), n_lo, n_hi, first is None, first)


def max_n_within(rel: KernelRelation, bound: int) -> int:
    """Largest n whose touched indices all stay <= bound (-1 if none)."""
    return min((bound - t.residue) // t.modulus for t in rel.terms())


@dataclass(frozen=True)
class Coverage:
    modulus: int
    covered: frozenset
    complete: bool

    @property
    def missing(self) -> list[int]:
        return sorted(set(range(self.modulus)) - self.covered)


def residue_coverage(rels: list, modulus: int = 32) -> Coverage:
    """Residues mod `modulus` reached by lifting every left-hand side."""
    covered = set()
    for rel in rels:
        m, c = rel.lhs.modulus, rel.lhs.residue
        if modulus % m:
            raise ValueError(f"lhs modulus {m} does not divide {modulus}")
        covered.update(range(c, modulus, m))
    covered = frozenset(covered)
    return Coverage(modulus, covered, len(covered) == modulus)


def _specialize(t: KernelTerm, k: int, j: int) -> KernelTerm:
    """t with n replaced by k*n + j."""
    return KernelTerm(t.modulus * k, t.modulus * j + t.residue, t.coefficient)


def _match(key: tuple[int, int], lhs: KernelTerm) -> Optional[tuple[int, int]]:
    m, c = key
    if m % lhs.modulus or (c - lhs.residue) % lhs.modulus:
        return None
    return m // lhs.modulus, (c - lhs.residue) // lhs.modulus


def reduce_term(key: tuple[int, int], rels: list, basis: list, max_steps: int = 100_000) -> dict:
    """Write P[key] as an integer combination of basis subsequences.

    Raises NonClosure when some subsequence matches neither the basis nor
    any left-hand side with unit coefficient.
    """
    targets = {b.key for b in basis}
    out: dict = {}
    pending = {key: 1}
    steps = 0
    while pending:
        k, coef = pending.popitem()
        if coef == 0:
            continue
        if k in targets:
            out[k] = out.get(k, 0) + coef
            continue
        steps += 1
        if steps > max_steps:
            raise NonClosure(_render(k), f"{_render(k)}: reduction did not terminate")
        for rel in rels:
            hit = _match(k, rel.lhs)
            if hit is not None and rel.lhs.coefficient == 1:
                for t in rel.rhs:
                    s = _specialize(t, *hit)
                    pending[s.key] = pending.get(s.key, 0) + coef * s.coefficient
                break
        else:
            raise NonClosure(_render(k))
    return {k: v for k, v in out.items() if v}


def _render(key: tuple[int, int]) -> str:
    return KernelTerm(*key).subsequence()


def basis_closure_check(rels: list, basis: list = BASIS, depth: int = 1) -> bool:
    """Every descendant of a basis subsequence, up to `depth` levels, reduces to the basis."""
    frontier = [b.key for b in basis]
    for _ in range(depth):
        children = []
        for m, c in frontier:
            children.extend([(2 * m, c), (2 * m, c + m)])
        for child in children:
            reduce_term(child, rels, basis)
        frontier = children
    return True


# ---- discovery -----------------------------------------------------------


def _integer_rref(rows: list[list[int]], ncols: int) -> tuple[list[list[int]], list[int]]:
    """Reduced echelon form over the integers, every row kept primitive."""
    mat = [list(r) for r in rows]
    pivots = []
    r = 0
    for col in range(ncols):
        pick = next((i for i in range(r, len(mat)) if mat[i][col]), None)
        if pick is None:
            continue
        mat[r], mat[pick] = mat[pick], mat[r]
        p = mat[r]
        for i in range(len(mat)):
            if i != r and mat[i][col]:
                a, b = p[col], mat[i][col]
                row = [a * x - b * y for x, y in zip(mat[i], p)]
                mat[i] = _primitive(row)
        pivots.append(col)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def _primitive(v: list[int]) -> list[int]:
    g = 0
    for x in v:
        g = gcd(g, x)
    return [x // g for x in v] if g > 1 else v


def integer_nullspace(rows: list[list[int]], ncols: int) -> list[list[int]]:
    """Primitive integer basis of {x : A x = 0}, one vector per free column."""
    ech, pivots = _integer_rref(rows, ncols)
    basis = []
    for free in (c for c in range(ncols) if c not in pivots):
        lcm = 1
        for row, pc in zip(ech, pivots):
            if row[free]:
                lcm = lcm * abs(row[pc]) // gcd(lcm, abs(row[pc]))
        v = [0] * ncols
        v[free] = lcm
        for row, pc in zip(ech, pivots):
            v[pc] = -row[free] * lcm // row[pc]
        basis.append(_primitive(v))
    return basis


def _as_relation(vec: list[int], columns: list[tuple[int, int]]) -> Optional[KernelRelation]:
    support = [(columns[i], x) for i, x in enumerate(vec) if x]
    if not support:
        return None
    g = 0
    for _, x in support:
        g = gcd(g, x)
    support = [(k, x // g) for k, x in support]
    # lhs: the finest subsequence (largest modulus, then residue)
    lead_key, lead = max(support, key=lambda kx: kx[0])
    sign = 1 if lead > 0 else -1
    lhs = KernelTerm(*lead_key, sign * lead)
    rhs = tuple(
        KernelTerm(*k, -sign * x)
        for k, x in sorted(support, key=lambda kx: kx[0], reverse=True)
        if k != lead_key
    )
    return KernelRelation(lhs, rhs)


def _rank_key(rel: KernelRelation) -> tuple:
    return (
        rel.lhs.modulus,
        len(rel.rhs) + 1,
        max(abs(t.coefficient) for t in rel.terms()),
        rel.lhs.residue,
        rel.to_string(),
    )


@dataclass
class Discovery:
    relations: list = field(default_factory=list)
    rejected: list = field(default_factory=list)


def discover_relations(
    n_max: int, max_modulus: int, max_terms: Optional[int] = None
) -> list[KernelRelation]:
    """Integer linear relations among the subsequences P[M n + c], M <= max_modulus.

    Samples n = 0..n_max, takes an exact integer nullspace basis of the
    sample matrix, adds pairwise differences of basis vectors (which exposes
    relations between two subsequences sharing an expansion), and keeps only
    candidates that also hold on the disjoint range [n_max+1, 8*n_max].
    """
    return discover(n_max, max_modulus, max_terms).relations


def discover(n_max: int, max_modulus: int, max_terms: Optional[int] = None) -> Discovery:
    if max_modulus < 1 or max_modulus & (max_modulus - 1):
        raise ValueError("max_modulus must be a power of two")
    columns = [(m, c) for m in _powers_up_to(max_modulus) for c in range(m)]
    if n_max + 1 <= len(columns):
        raise InsufficientSamples(
            f"{n_max + 1} samples for {len(columns)} subsequences; need more rows than columns"
        )
    table = complexity_range(0, max_modulus * n_max + max_modulus - 1)
    n = np.arange(n_max + 1)
    sample = np.stack([table[m * n + c] for m, c in columns], axis=1)
    rows = [[int(x) for x in r] for r in np.unique(sample, axis=0)]
    null = integer_nullspace(rows, len(columns))
    candidates = list(null)
    for u, v in combinations(null, 2):
        candidates.append([a - b for a, b in zip(u, v)])
    seen = set()
    result = Discovery()
    for vec in candidates:
        rel = _as_relation(vec, columns)
        if rel is None:
            continue
        text = rel.to_string()
        if text in seen:
            continue
        seen.add(text)
        if max_terms is not None and len(rel.rhs) + 1 > max_terms:
            continue
        report = verify_relation(rel, n_max + 1, 8 * n_max)
        (result.relations if report.holds else result.rejected).append(rel)
    result.relations.sort(key=_rank_key)
    return result


def _powers_up_to(m: int) -> list[int]:
    out = []
    p = 1
    while p <= m:
        out.append(p)
        p *= 2
    return out
