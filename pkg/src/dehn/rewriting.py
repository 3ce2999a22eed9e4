"""Word rewriting: commutation pulls, positivization, chain substitution.

Three rewriting algorithms on twist words, each returning a
:class:`RewriteReport` whose output is verified equal to the input by the
strongest applicable engine:

* ``commute_pull`` — move a pattern's letters to the front one adjacent
  transposition at a time; the hopped-over letter picks up a conjugator,
  so the letter count never changes.
* ``positivize`` — rewrite every negative letter of a word on a closed
  surface as a product of conjugated positive twists, using the fact that
  the inverse of a nonseparating twist is a positive word
  (``inverse_twist_expansion``) after transporting the curve to a1.
* ``chain_substitute`` — replace a literal (a1 b1 a2)^4 block by d2 e2,
  shortening the word by ten letters.
"""

from __future__ import annotations

from dataclasses import dataclass

from .homology import homology_equal
from .pi1 import DEFAULT_CAP, decide_equal, mcg_equal_rel_boundary
from .surface import (
    SurfaceSig,
    Twist,
    TwistWord,
    chain_index,
    chain_word,
    check_curve,
    geometric_disjoint,
)


@dataclass(frozen=True)
class RewriteReport:
    """Outcome of one rewriting pass.

    ``verified`` is the verdict ("true", "false", "unknown") of comparing
    input and output with the engine named in ``engine``; "unknown" only
    occurs under a resource cap or a necessary-only engine.
    """

    input: TwistWord
    output: TwistWord
    steps: int
    verified: str
    engine: str


def _chain_name(j: int) -> str:
    return f"a{(j + 1) // 2}" if j % 2 else f"b{j // 2}"


def transport_pairs(curve: str, sig: SurfaceSig) -> tuple[tuple[str, int], ...]:
    """Flat word v with  v . t_curve . v^-1  =  t_a1, as (name, sign) pairs.

    Chain curves ride down the chain one braid hop at a time; d2 and e2
    first hop onto b2 (which each meets once) and then ride down.  Validated
    against the faithful engine and on homology classes in the tests.
    """
    check_curve(curve, sig)
    if curve == "delta":
        raise ValueError("delta is separating; no transport to a1 exists")
    down = []
    if curve in ("d2", "e2"):
        hop = ((curve, 1), ("b2", 1))  # carries the curve onto b2
        top = 4
    else:
        hop = ()
        top = chain_index(curve)
    for j in range(2, top + 1):
        down += [(_chain_name(j), -1), (_chain_name(j - 1), -1)]
    return tuple(down) + hop


def transport_word(curve: str, sig: SurfaceSig) -> TwistWord:
    return TwistWord(sig, tuple(Twist(n, s) for n, s in transport_pairs(curve, sig)))


def _invert_pairs(pairs) -> tuple[tuple[str, int], ...]:
    return tuple((n, -s) for n, s in reversed(pairs))


def commute_pull(w: TwistWord, pattern: TwistWord,
                 cap: int = DEFAULT_CAP) -> RewriteReport:
    """Rewrite w as pattern . remainder by adjacent commutation moves.

    Each elementary move swaps an adjacent pair X T into T X', where X' is
    X conjugated by T^-1 (recorded on the conjugator field), except that X
    passes unchanged when the two bases are literally equal or declared
    disjoint and X carries no conjugator.  Pattern letters are matched
    leftmost-first against plain letters of w and pulled leftward; the
    letter count is preserved exactly.
    """
    if w.surface != pattern.surface:
        raise ValueError("word and pattern live on different surfaces")
    if any(t.conj for t in pattern.letters):
        raise ValueError("pattern letters must be plain twists")
    letters = list(w.letters)
    steps = 0
    for i, pat in enumerate(pattern.letters):
        pos = next((p for p in range(i, len(letters))
                    if letters[p].base == pat.base
                    and letters[p].sign == pat.sign
                    and not letters[p].conj), None)
        if pos is None:
            raise ValueError(
                f"pattern not realizable by commutation alone: no plain "
                f"{pat.base}^{pat.sign} at or after position {i}")
        while pos > i:
            x, t = letters[pos - 1], letters[pos]
            if not x.conj and (x.base == t.base or geometric_disjoint(x.base, t.base)):
                x2 = x  # exact commutation, no bookkeeping needed
            else:
                x2 = Twist(x.base, x.sign, ((t.base, -t.sign),) + x.conj)
            letters[pos - 1], letters[pos] = t, x2
            steps += 1
            pos -= 1
    output = TwistWord(w.surface, tuple(letters))
    verdict, engine = decide_equal(w, output, "auto", cap)
    return RewriteReport(w, output, steps, verdict, engine)


def prop9_factor(n: int, cap: int = DEFAULT_CAP) -> tuple[TwistWord, TwistWord]:
    """Factor (chain)^4 on (g=n, b=1) as (a1 b1 a2)^4 . psi.

    psi consists of 8n - 12 conjugated positive twists about nonseparating
    curves; the factorization is verified by the faithful engine.
    """
    if n < 2:
        raise ValueError("factorization requires genus >= 2")
    sig = SurfaceSig(n, 1)
    w = chain_word(sig, 4)
    pattern = TwistWord.from_names(sig, "a1 b1 a2").power(4)
    report = commute_pull(w, pattern, cap)
    if report.verified == "false":
        raise AssertionError("commutation pull failed verification")
    prefix = TwistWord(sig, report.output.letters[:12])
    psi = TwistWord(sig, report.output.letters[12:])
    return prefix, psi


def inverse_twist_expansion(sig: SurfaceSig) -> TwistWord:
    """The positive word equal to a1^-1 on a closed surface of genus >= 1.

    Namely (b1 a2 b2 ... ag bg) . (a1 b1 ... ag bg)^(4g+1), of length
    (2g - 1) + 2g(4g + 1); at genus 1 this is b(ab)^5.
    """
    if sig.boundary != 0:
        raise ValueError("the positive expansion of a1^-1 needs a closed surface")
    if sig.genus < 1:
        raise ValueError("genus >= 1 required")
    chain = chain_word(sig, 1).letters
    return TwistWord(sig, chain[1:] + chain * (4 * sig.genus + 1))


def positivize(w: TwistWord, cap: int = DEFAULT_CAP,
               engine: str = "auto") -> RewriteReport:
    """Rewrite a signed word on a closed surface as all-positive letters.

    A negative letter with conjugator u and base c becomes the expansion of
    a1^-1 transported back to c: every letter of inverse_twist_expansion,
    conjugated by u . (transport of c)^-1.  Positive letters pass through.
    Output length is P + N * len(expansion) for P positive and N negative
    input letters.  ``engine`` selects the verification tier ("auto" uses
    the strongest applicable engine; "homology" is the cheap necessary
    check).
    """
    sig = w.surface
    if sig.boundary != 0:
        raise ValueError("positivization is defined on closed surfaces")
    if any(t.base == "delta" for t in w.letters):
        raise ValueError("delta is separating; positivization needs nonseparating bases")
    expansion = inverse_twist_expansion(sig) if any(t.sign < 0 for t in w.letters) else None
    out: list[Twist] = []
    steps = 0
    for t in w.letters:
        if t.sign == 1:
            out.append(t)
            continue
        conj = t.conj + _invert_pairs(transport_pairs(t.base, sig))
        out.extend(Twist(e.base, 1, conj) for e in expansion.letters)
        steps += 1
    output = TwistWord(sig, tuple(out))
    verdict, engine_used = decide_equal(w, output, engine, cap)
    if verdict == "unknown" and engine == "auto" and not homology_equal(w, output):
        verdict, engine_used = "false", "homology(necessary)"
    return RewriteReport(w, output, steps, verdict, engine_used)


_CHAIN_BLOCK = ("a1", "b1", "a2") * 4


def chain_substitute(w: TwistWord, cap: int = DEFAULT_CAP) -> RewriteReport:
    """Replace the leftmost literal (a1 b1 a2)^4 block by d2 e2.

    The output is ten letters shorter and equal to the input as a mapping
    class (the chain relation); equality is verified by the strongest
    applicable engine.
    """
    if w.surface.genus < 2:
        raise ValueError("the chain relation needs genus >= 2")
    letters = w.letters
    start = None
    for i in range(len(letters) - 11):
        if all(letters[i + k].base == _CHAIN_BLOCK[k]
               and letters[i + k].sign == 1
               and not letters[i + k].conj
               for k in range(12)):
            start = i
            break
    if start is None:
        raise ValueError("no contiguous (a1 b1 a2)^4 block found")
    output = TwistWord(
        w.surface,
        letters[:start] + (Twist("d2"), Twist("e2")) + letters[start + 12:])
    verdict, engine = decide_equal(w, output, "auto", cap)
    return RewriteReport(w, output, 1, verdict, engine)


def chain_relation_selftest() -> bool:
    """Confirm (a1 b1 a2)^4 = d2 e2 on (g=2, b=1) under both engines."""
    sig = SurfaceSig(2, 1)
    lhs = TwistWord.from_names(sig, "a1 b1 a2").power(4)
    rhs = TwistWord.from_names(sig, "d2 e2")
    return homology_equal(lhs, rhs) and mcg_equal_rel_boundary(lhs, rhs)
