"""JSON command-line interface.

Commands read a single JSON document from stdin (where input is needed)
and write one JSON report to stdout.  Exit codes: 0 = success or verdict
true, 1 = verified false, 2 = input error, 3 = resource cap (verdict
unknown).  Reports omit absent fields rather than emitting null, and are
byte-identical across repeated runs of the same request; ``--timing``
appends a runtime_ms field for humans, off by default to keep reports
deterministic.

Word schema::

    {"surface": {"genus": 1, "boundary": 0},
     "word": [{"base": "a1", "sign": 1,
               "conj": [{"base": "b1", "sign": -1}]}]}

``sign`` defaults to 1 and ``conj`` (a flat list, never nested) to empty.
Two-word commands (verify, fibersum) take ``"words": [[...], [...]]``
instead of ``"word"``.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .constructions import (
    branched_double_cover,
    mapping_torus_homology,
    theorem11_family,
    trefoil_completions,
)
from .fibration import (
    AbelianGroup,
    Fibration,
    double_report,
    euler_characteristic,
    fiber_sum,
    first_homology,
    gn_word,
    is_allowable,
)
from .pi1 import (
    DEFAULT_CAP,
    boundary_word,
    decide_equal,
    mcg_equal_rel_boundary,
)
from .rewriting import chain_relation_selftest, positivize
from .surface import SurfaceSig, Twist, TwistWord

EXIT_TRUE = 0
EXIT_FALSE = 1
EXIT_INPUT = 2
EXIT_UNKNOWN = 3

_VERDICT_EXIT = {"true": EXIT_TRUE, "false": EXIT_FALSE, "unknown": EXIT_UNKNOWN}


class InputError(Exception):
    """Bad request payload; the message names the offending field."""


# ---------------------------------------------------------------------------
# JSON (de)serialization
# ---------------------------------------------------------------------------


def _require(obj: dict, field: str, kind, where: str):
    if field not in obj:
        raise InputError(f"missing field {where}{field!r}")
    value = obj[field]
    if kind is int and (not isinstance(value, int) or isinstance(value, bool)):
        raise InputError(f"field {where}{field!r} must be an integer")
    if kind is list and not isinstance(value, list):
        raise InputError(f"field {where}{field!r} must be a list")
    if kind is dict and not isinstance(value, dict):
        raise InputError(f"field {where}{field!r} must be an object")
    if kind is str and not isinstance(value, str):
        raise InputError(f"field {where}{field!r} must be a string")
    return value


def parse_surface(obj: dict) -> SurfaceSig:
    surf = _require(obj, "surface", dict, "")
    genus = _require(surf, "genus", int, "surface.")
    boundary = _require(surf, "boundary", int, "surface.")
    try:
        return SurfaceSig(genus, boundary)
    except ValueError as exc:
        raise InputError(f"surface: {exc}") from exc


def _parse_letter(entry, where: str) -> Twist:
    if not isinstance(entry, dict):
        raise InputError(f"{where} must be an object with a 'base' field")
    base = _require(entry, "base", str, where + ".")
    sign = entry.get("sign", 1)
    if sign not in (1, -1):
        raise InputError(f"{where}.sign must be 1 or -1")
    conj_entries = entry.get("conj", [])
    if not isinstance(conj_entries, list):
        raise InputError(f"{where}.conj must be a list")
    conj = []
    for i, c in enumerate(conj_entries):
        if not isinstance(c, dict) or "base" not in c:
            raise InputError(f"{where}.conj[{i}] must be an object with a 'base' field")
        if "conj" in c:
            raise InputError(f"{where}.conj[{i}] must not be nested")
        csign = c.get("sign", 1)
        if csign not in (1, -1):
            raise InputError(f"{where}.conj[{i}].sign must be 1 or -1")
        conj.append((c["base"], csign))
    return Twist(base, sign, tuple(conj))


def parse_word(sig: SurfaceSig, letters, where: str = "word") -> TwistWord:
    if not isinstance(letters, list):
        raise InputError(f"field {where!r} must be a list of letters")
    twists = tuple(_parse_letter(e, f"{where}[{i}]") for i, e in enumerate(letters))
    try:
        return TwistWord(sig, twists)
    except ValueError as exc:
        raise InputError(f"{where}: {exc}") from exc


def word_json(word: TwistWord) -> list:
    out = []
    for t in word.letters:
        entry = {"base": t.base, "sign": t.sign}
        if t.conj:
            entry["conj"] = [{"base": n, "sign": s} for n, s in t.conj]
        out.append(entry)
    return out


def group_json(group: AbelianGroup) -> dict:
    return {"rank": group.rank, "torsion": list(group.torsion)}


def _read_request(stdin) -> dict:
    text = stdin.read()
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON on stdin: {exc}") from exc
    if not isinstance(obj, dict):
        raise InputError("request must be a JSON object")
    return obj


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def _cmd_verify(args, stdin) -> tuple[dict, int]:
    req = _read_request(stdin)
    sig = parse_surface(req)
    words = _require(req, "words", list, "")
    if len(words) != 2:
        raise InputError("field 'words' must hold exactly two words")
    w1 = parse_word(sig, words[0], "words[0]")
    w2 = parse_word(sig, words[1], "words[1]")
    try:
        verdict, engine = decide_equal(w1, w2, args.engine, args.cap)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    return {"command": "verify", "verdict": verdict, "engine": engine}, _VERDICT_EXIT[verdict]


def _cmd_positivize(args, stdin) -> tuple[dict, int]:
    req = _read_request(stdin)
    sig = parse_surface(req)
    word = parse_word(sig, _require(req, "word", list, ""))
    try:
        rep = positivize(word, args.cap, args.engine)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    report = {
        "command": "positivize",
        "verdict": rep.verified,
        "engine": rep.engine,
        "word_out": word_json(rep.output),
        "steps": rep.steps,
    }
    return report, _VERDICT_EXIT[rep.verified]


def _cmd_double(args, stdin) -> tuple[dict, int]:
    req = _read_request(stdin)
    sig = parse_surface(req)
    word = parse_word(sig, _require(req, "word", list, ""))
    try:
        palf = Fibration("disk", sig, word)
        rep = double_report(palf, args.cap)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    f = rep.fibration
    report = {
        "command": "double",
        "verdict": rep.verified,
        "engine": rep.engine,
        "chi": euler_characteristic(f),
        "h1": group_json(first_homology(f)),
        "word_out": word_json(f.word),
    }
    return report, _VERDICT_EXIT[rep.verified]


def _cmd_invariants(args, stdin) -> tuple[dict, int]:
    req = _read_request(stdin)
    sig = parse_surface(req)
    word = parse_word(sig, _require(req, "word", list, ""))
    base = req.get("base", "disk")
    try:
        f = Fibration(base, sig, word)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    allowable = is_allowable(f)
    report = {
        "command": "invariants",
        "verdict": "true" if allowable else "false",
        "chi": euler_characteristic(f),
        "h1": group_json(first_homology(f)),
    }
    return report, EXIT_TRUE if allowable else EXIT_FALSE


def _cmd_family(args, stdin) -> tuple[dict, int]:
    if args.n is None:
        raise InputError("family requires --n")
    try:
        fam = theorem11_family(args.n, args.cap)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    verdicts = [{"verdict": v, "engine": e} for v, e in fam.equal_verdicts]
    report = {
        "command": "family",
        "n": fam.n,
        "chis": list(fam.chis),
        "verdicts": verdicts,
        "h1s": [group_json(h) for h in fam.h1s],
    }
    worst = EXIT_TRUE
    if any(v == "unknown" for v, _ in fam.equal_verdicts):
        worst = EXIT_UNKNOWN
    return report, worst


def _cmd_trefoil(args, stdin) -> tuple[dict, int]:
    big, small = trefoil_completions(args.cap)
    report = {
        "command": "trefoil",
        "verdict": "true",
        "engine": "homology(g=1,faithful)",
        "chis": [euler_characteristic(big), euler_characteristic(small)],
        "letters": [big.letter_count, small.letter_count],
    }
    return report, EXIT_TRUE


def _cmd_branched_double(args, stdin) -> tuple[dict, int]:
    req = _read_request(stdin)
    sig = parse_surface(req)
    word = parse_word(sig, _require(req, "word", list, ""))
    try:
        fiber, monodromy = branched_double_cover(sig, word)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    report = {
        "command": "branched-double",
        "fiber": {"genus": fiber.genus, "boundary": fiber.boundary},
        "word_out": word_json(monodromy),
        "h1": group_json(mapping_torus_homology(fiber, monodromy)),
    }
    return report, EXIT_TRUE


def _cmd_fibersum(args, stdin) -> tuple[dict, int]:
    req = _read_request(stdin)
    sig = parse_surface(req)
    words = _require(req, "words", list, "")
    if len(words) != 2:
        raise InputError("field 'words' must hold exactly two words")
    try:
        f1 = Fibration("sphere", sig, parse_word(sig, words[0], "words[0]"))
        f2 = Fibration("sphere", sig, parse_word(sig, words[1], "words[1]"))
        f = fiber_sum(f1, f2)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    report = {
        "command": "fibersum",
        "chi": euler_characteristic(f),
        "h1": group_json(first_homology(f)),
        "word_out": word_json(f.word),
    }
    return report, EXIT_TRUE


def _cmd_gn(args, stdin) -> tuple[dict, int]:
    if args.n is None:
        raise InputError("gn requires --n")
    try:
        f = gn_word(args.n)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    report = {
        "command": "gn",
        "chi": euler_characteristic(f),
        "h1": group_json(first_homology(f)),
        "word_out": word_json(f.word),
    }
    return report, EXIT_TRUE


def _selftest_relator_corpus() -> bool:
    sig = SurfaceSig(2, 1)

    def w(names):
        return TwistWord.from_names(sig, names)

    checks = [
        # braid relations for once-intersecting pairs
        (w("a1 b1 a1"), w("b1 a1 b1")),
        (w("b1 a2 b1"), w("a2 b1 a2")),
        (w("a2 b2 a2"), w("b2 a2 b2")),
        (w("d2 b2 d2"), w("b2 d2 b2")),
        (w("e2 b2 e2"), w("b2 e2 b2")),
        # commutations for disjoint pairs
        (w("a1 a2"), w("a2 a1")),
        (w("b1 b2"), w("b2 b1")),
        (w("d2 e2"), w("e2 d2")),
        (w("d2 a1"), w("a1 d2")),
        (w("e2 b1"), w("b1 e2")),
        # boundary twist central
        (w("delta a1"), w("a1 delta")),
        # hyperelliptic relation at genus 1
        (TwistWord.from_names(SurfaceSig(1, 1), "a1 b1").power(6),
         TwistWord.from_names(SurfaceSig(1, 1), ["delta"])),
    ]
    if not all(mcg_equal_rel_boundary(lhs, rhs) for lhs, rhs in checks):
        return False
    # the boundary word is fixed by every generator
    bw = boundary_word(2)
    from .pi1 import apply_word
    for name in ("a1", "b1", "a2", "b2", "d2", "e2", "delta"):
        if apply_word(TwistWord(sig, (Twist(name),)), bw) != bw:
            return False
    return True


def _cmd_selftest(args, stdin) -> tuple[dict, int]:
    ok = _selftest_relator_corpus() and chain_relation_selftest()
    report = {"command": "selftest", "verdict": "true" if ok else "false"}
    return report, EXIT_TRUE if ok else EXIT_FALSE


_COMMANDS = {
    "verify": _cmd_verify,
    "positivize": _cmd_positivize,
    "double": _cmd_double,
    "invariants": _cmd_invariants,
    "family": _cmd_family,
    "trefoil": _cmd_trefoil,
    "branched-double": _cmd_branched_double,
    "fibersum": _cmd_fibersum,
    "gn": _cmd_gn,
    "selftest": _cmd_selftest,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dehn",
        description="Exact Dehn-twist word verification, rewriting, and "
                    "Lefschetz-fibration invariants (JSON in, JSON out).")
    parser.add_argument("command", choices=sorted(_COMMANDS))
    parser.add_argument("--n", type=int, default=None,
                        help="genus parameter for family/gn")
    parser.add_argument("--cap", type=int, default=DEFAULT_CAP,
                        help="free-group word-length cap (default 10^6)")
    parser.add_argument("--engine", choices=["auto", "homology", "pi1", "closed"],
                        default="auto", help="equality engine tier")
    parser.add_argument("--out", default=None,
                        help="also write the report to this path")
    parser.add_argument("--json", action="store_true",
                        help="emit JSON (the default; accepted for symmetry)")
    parser.add_argument("--timing", action="store_true",
                        help="append runtime_ms (breaks byte-determinism)")
    return parser


def run(argv=None, stdin=None, stdout=None) -> int:
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    args = build_parser().parse_args(argv)
    started = time.monotonic()
    try:
        report, code = _COMMANDS[args.command](args, stdin)
    except InputError as exc:
        report, code = {"command": args.command, "error": str(exc)}, EXIT_INPUT
    if args.timing:
        report["runtime_ms"] = int((time.monotonic() - started) * 1000)
    text = json.dumps(report, indent=2) + "\n"
    stdout.write(text)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    return code


def main() -> None:
    sys.exit(run())
