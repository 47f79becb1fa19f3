"""Command-line interface: `tmabel <command> ...`.

Exit codes: 0 when every record is ok, 1 when a check fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from functools import lru_cache
from typing import Optional

from tmabel import abelian, analysis, frames, pairs, regularity, words
from tmabel.errors import TmabelError

BRUTE_LIMIT = 2048


class UsageError(Exception):
    pass


class Output:
    def __init__(self, as_json: bool, stream=None):
        self.as_json = as_json
        self.stream = stream or sys.stdout
        self.failed = False
        self.color = (
            not as_json and "NO_COLOR" not in os.environ and getattr(self.stream, "isatty", lambda: False)()
        )

    def record(self, command: str, payload: dict, ok: bool = True, text: Optional[str] = None) -> None:
        if not ok:
            self.failed = True
        status = "ok" if ok else "fail"
        if self.as_json:
            line = json.dumps({"command": command, "payload": payload, "status": status})
        else:
            line = text if text is not None else " ".join(f"{k}={v}" for k, v in payload.items())
            if not ok:
                line += "  " + self._mark("FAIL")
        print(line, file=self.stream)

    def _mark(self, label: str) -> str:
        return f"\033[31m{label}\033[0m" if self.color else label


def parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise UsageError(f"bad range {text!r}; expected A..B") from None
    if a < 0 or b < a:
        raise UsageError(f"bad range {text!r}")
    return a, b


def _word_arg(text: str) -> str:
    if not text or text.strip("01"):
        raise UsageError(f"{text!r} is not a word over 0/1")
    return text


@lru_cache(maxsize=None)
def _brute_p(n: int) -> int:
    return abelian.complexity_brute(n, 2)


def cmd_word(args, out: Output) -> None:
    w = words.tm_prefix(args.length)
    out.record("word", {"length": args.length, "word": w.bits}, text=w.bits)


def cmd_factors(args, out: Output) -> None:
    fs = words.enumerate_factors(args.length)
    for w in fs:
        out.record("factors", {"length": args.length, "factor": w.bits}, text=w.bits)


def cmd_complexity(args, out: Output) -> None:
    lo, hi = parse_range(args.n)
    method = args.method or ("fast" if args.l == 2 else "brute")
    if method != "brute" and args.l != 2:
        raise UsageError("the fast evaluator only covers l = 2")
    fast = pairs.complexity_range(lo, hi).tolist() if method != "brute" else None
    if args.csv:
        print("index,value", file=out.stream)
    for i, n in enumerate(range(lo, hi + 1)):
        payload = {"n": n, "l": args.l}
        ok = True
        if fast is not None:
            payload["fast"] = fast[i]
        if method != "fast":
            payload["brute"] = abelian.complexity_brute(n, args.l)
        if method == "both":
            ok = payload["fast"] == payload["brute"]
        value = payload.get("fast", payload.get("brute"))
        if args.csv:
            print(f"{n},{value}", file=out.stream)
            out.failed |= not ok
            continue
        text = f"{n}\t{value}" if method != "both" else f"{n}\t{payload['fast']}\t{payload['brute']}"
        out.record("complexity", payload, ok, text)


def cmd_pairs(args, out: Output) -> None:
    lo, hi = parse_range(args.n)
    for n in range(lo, hi + 1):
        payload = {"n": n}
        ok = True
        if args.method != "brute":
            iv = pairs.pairs_interval(n)
            payload["interval"] = [iv.lo, iv.hi]
        if args.method != "interval":
            bs = pairs.pairs_brute(n)
            payload["brute"] = sorted(bs)
        if args.method == "both":
            ok = iv.to_set() == bs
        shown = payload.get("interval", payload.get("brute"))
        out.record("pairs", payload, ok, f"{n}\t{shown}")


def cmd_merf(args, out: Output) -> None:
    res = frames.merf(_word_arg(args.word))
    payload = {
        "word": args.word,
        "extended": res.extended.bits,
        "frame": res.frame_size,
        "offset": res.original_offset,
        "determined": len(res.extended) - len(args.word),
    }
    if args.trace:
        payload["steps"] = [
            {"q": s.q, "word": s.word.bits, "filled": s.filled.bits, "preimage": s.preimage.bits}
            for s in res.steps
        ]
        if not out.as_json:
            for s in res.steps:
                print(f"q={s.q}\t{s.word.bits}\t-> {s.filled.bits}\t-> {s.preimage.bits}", file=out.stream)
    out.record("merf", payload, text=f"extended {res.extended.bits}  frame {res.frame_size}  offset {res.original_offset}")


def cmd_bounds(args, out: Output) -> None:
    n = args.length
    if n < 1:
        raise UsageError("length must be positive")
    u_min, u_max = frames.unique_extension_bounds(n)
    payload = {"length": n, "u_min": u_min, "u_max": u_max}
    ok = True
    if n <= 64:
        counts = {w.bits: frames.determined_letters(w) for w in words.enumerate_factors(n)}
        lo = min(counts.values())
        hi = max(counts.values())
        payload["observed_min"], payload["observed_max"] = lo, hi
        payload["min_witness"] = min(w for w, c in counts.items() if c == lo)
        payload["max_witness"] = min(w for w, c in counts.items() if c == hi)
        ok = (lo, hi) == (u_min, u_max)
    out.record("bounds", payload, ok)


def cmd_coding(args, out: Output) -> None:
    c = abelian.short_coding(_word_arg(args.word))
    out.record("coding", {"word": args.word, "coding": str(c)}, text=str(c))


def cmd_decode(args, out: Output) -> None:
    if args.first not in ("0", "1"):
        raise UsageError("first letter must be 0 or 1")
    w = abelian.decode_short_coding(args.coding, int(args.first))
    out.record("decode", {"coding": args.coding, "first": int(args.first), "word": w.bits}, text=w.bits)


def cmd_verify(args, out: Output) -> None:
    what = args.what
    if what == "relations":
        for rel in regularity.relations_catalog():
            if args.evaluator == "brute":
                top = min(args.n_max, regularity.max_n_within(rel, BRUTE_LIMIT))
                rep = regularity.verify_relation(rel, 0, top, _brute_p)
            else:
                rep = regularity.verify_relation(rel, 0, args.n_max)
            out.record("verify relations", rep.to_dict(), rep.holds,
                       f"{'ok ' if rep.holds else 'FAIL'} {rep.relation}  n in [{rep.n_lo},{rep.n_hi}]")
    elif what == "palindromes":
        for q in range(1, args.q_max + 1):
            rep = analysis.palindrome_block(q)
            out.record("verify palindromes", rep.to_dict(), rep.is_palindrome,
                       f"q={q}  indices {rep.start}..{rep.start + len(rep.block) - 1}  palindrome={rep.is_palindrome}")
    elif what == "steps":
        rep = analysis.step_check(4, args.n_max)
        out.record("verify steps", rep.to_dict(), rep.ok,
                   f"steps {sorted(rep.steps)} on [4,{args.n_max}]  violations={len(rep.violations)}")
    elif what == "coverage":
        cov = regularity.residue_coverage(regularity.relations_catalog(), 32)
        closed = True
        try:
            regularity.basis_closure_check(regularity.relations_catalog(), regularity.BASIS, 1)
        except TmabelError:
            closed = False
        payload = {"modulus": 32, "covered": len(cov.covered), "missing": cov.missing,
                   "complete": cov.complete, "basis_closed": closed}
        out.record("verify coverage", payload, cov.complete and closed)


def cmd_witness(args, out: Output) -> None:
    for n, value in analysis.unbounded_witness(args.steps):
        out.record("witness", {"n": n, "P": value}, text=f"{n}\t{value}")


def cmd_discover(args, out: Output) -> None:
    for rel in regularity.discover_relations(args.n_max, args.modulus, args.max_terms):
        out.record("discover", {"relation": rel.to_string()}, text=rel.to_string())


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tmabel", description="2-abelian complexity of the Thue-Morse word")
    p.add_argument("--json", action="store_true", help="emit JSON lines")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("word", help="prefix of the Thue-Morse word")
    s.add_argument("--length", type=int, required=True)
    s.set_defaults(func=cmd_word)

    s = sub.add_parser("factors", help="all factors of a given length")
    s.add_argument("--length", type=int, required=True)
    s.set_defaults(func=cmd_factors)

    s = sub.add_parser("complexity", help="l-abelian complexity over a range")
    s.add_argument("--n", required=True, help="inclusive range A..B")
    s.add_argument("--l", type=int, default=2)
    s.add_argument("--method", choices=["fast", "brute", "both"])
    s.add_argument("--csv", action="store_true", help="index,value CSV")
    s.set_defaults(func=cmd_complexity)

    s = sub.add_parser("pairs", help="achievable pair counts")
    s.add_argument("--n", required=True)
    s.add_argument("--method", choices=["interval", "brute", "both"], default="interval")
    s.set_defaults(func=cmd_pairs)

    s = sub.add_parser("merf", help="maximal extensible reading frame")
    s.add_argument("word")
    s.add_argument("--trace", action="store_true")
    s.set_defaults(func=cmd_merf)

    s = sub.add_parser("bounds", help="bounds on forced letters")
    s.add_argument("--length", type=int, required=True)
    s.set_defaults(func=cmd_bounds)

    s = sub.add_parser("coding", help="short coding of a factor")
    s.add_argument("word")
    s.set_defaults(func=cmd_coding)

    s = sub.add_parser("decode", help="word from short coding and first letter")
    s.add_argument("coding")
    s.add_argument("first")
    s.set_defaults(func=cmd_decode)

    s = sub.add_parser("verify", help="numerical checks")
    s.add_argument("what", choices=["relations", "palindromes", "steps", "coverage"])
    s.add_argument("--n-max", type=int, default=1000)
    s.add_argument("--q-max", type=int, default=16)
    s.add_argument("--evaluator", choices=["fast", "brute"], default="fast")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("witness", help="chain on which P grows by 6 per step")
    s.add_argument("--steps", type=int, required=True)
    s.set_defaults(func=cmd_witness)

    s = sub.add_parser("discover", help="search for kernel relations")
    s.add_argument("--n-max", type=int, required=True)
    s.add_argument("--modulus", type=int, required=True)
    s.add_argument("--max-terms", type=int)
    s.set_defaults(func=cmd_discover)
    return p


def run(argv=None, stream=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out = Output(args.json, stream)
    try:
        args.func(args, out)
    except (UsageError, ValueError, TmabelError) as exc:
        print(f"tmabel: error: {exc}", file=sys.stderr)
        return 2
    return 1 if out.failed else 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
