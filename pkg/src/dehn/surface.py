"""Surfaces, the standard curve system, and signed Dehn-twist words.

The model is an oriented genus-g surface with b in {0, 1} boundary
components.  Its standard curves are:

* the chain curves ``a1, b1, a2, b2, ..., ag, bg`` — consecutive curves in
  this order meet in one point, all other pairs are disjoint;
* ``d2`` and ``e2`` (genus >= 2 only) — the two boundary circles of a
  regular neighbourhood of the 3-chain ``a1, b1, a2``, each meeting ``b2``
  once and disjoint from ``a1, b1, a2`` and from each other;
* ``delta`` (one-boundary surfaces only) — a curve parallel to the boundary.

A :class:`Twist` is a signed Dehn twist about a standard curve, optionally
conjugated by a flat word of signed standard twists (depth one, never
nested): ``(conj=u, base=c, sign=s)`` denotes ``u · t_c^s · u^-1``.  A
:class:`TwistWord` is a finite sequence of twists composed left-to-right,
with the *rightmost* letter acting first on the surface.

Homology classes live in a fixed ordered basis ``e1, ..., e_2g`` whose
intersection form is the standard block form (``<e_{2i-1}, e_{2i}> = +1``,
all other basis pairings zero).  The curve classes in that basis are
hard-coded: ``a_i -> e_{2i-1}``; ``b_i -> e_{2i} - e_{2i+2}`` for ``i < g``
and ``b_g -> e_{2g}`` (consecutive chain curves must pair +1, so the b-classes
are not bare basis vectors); ``d2 -> e1 + e3``; ``e2 -> -(e1 + e3)``;
``delta -> 0``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

_CURVE_RE = re.compile(r"^(?:([ab])([1-9][0-9]*)|d2|e2|delta)$")


@dataclass(frozen=True)
class SurfaceSig:
    """Genus and boundary count of the model surface."""

    genus: int
    boundary: int

    def __post_init__(self):
        if not isinstance(self.genus, int) or self.genus < 0:
            raise ValueError(f"genus must be a non-negative integer, got {self.genus!r}")
        if self.boundary not in (0, 1):
            raise ValueError(f"boundary must be 0 or 1, got {self.boundary!r}")

    @property
    def closed(self) -> bool:
        return self.boundary == 0


def curve_valid(name: str, sig: SurfaceSig) -> bool:
    """Whether ``name`` denotes a standard curve on the surface ``sig``."""
    m = _CURVE_RE.match(name) if isinstance(name, str) else None
    if m is None:
        return False
    if name == "delta":
        return sig.boundary == 1
    if name in ("d2", "e2"):
        return sig.genus >= 2
    return int(m.group(2)) <= sig.genus


def check_curve(name: str, sig: SurfaceSig) -> None:
    if not curve_valid(name, sig):
        raise ValueError(f"curve {name!r} is not valid on genus {sig.genus}, "
                         f"boundary {sig.boundary}")


def standard_curves(sig: SurfaceSig) -> tuple[str, ...]:
    """All standard curve names on ``sig``: chain, then d2/e2, then delta."""
    names = []
    for i in range(1, sig.genus + 1):
        names.append(f"a{i}")
        names.append(f"b{i}")
    if sig.genus >= 2:
        names += ["d2", "e2"]
    if sig.boundary == 1:
        names.append("delta")
    return tuple(names)


def chain_index(name: str) -> int | None:
    """Position of a chain curve in the chain a1=1, b1=2, a2=3, ...; else None."""
    m = _CURVE_RE.match(name)
    if m is None or m.group(1) is None:
        return None
    i = int(m.group(2))
    return 2 * i - 1 if m.group(1) == "a" else 2 * i


def homology_class(name: str, sig: SurfaceSig) -> tuple[int, ...]:
    """Class of a standard curve in the fixed basis (length 2g)."""
    check_curve(name, sig)
    g = sig.genus
    v = [0] * (2 * g)
    if name == "delta":
        return tuple(v)
    if name in ("d2", "e2"):
        s = 1 if name == "d2" else -1
        v[0] = s
        v[2] = s
        return tuple(v)
    kind, i = name[0], int(name[1:])
    if kind == "a":
        v[2 * i - 2] = 1
    else:
        v[2 * i - 1] = 1
        if i < g:
            v[2 * i + 1] = -1
    return tuple(v)


def geometric_disjoint(c1: str, c2: str) -> bool:
    """Whether the fixed table declares the two standard curves disjoint.

    Consecutive chain curves meet once; d2/e2 meet b2 once and are disjoint
    from each other and from a1, b1, a2; delta is disjoint from everything.
    Pairs the table does not cover are reported as not disjoint.
    """
    if "delta" in (c1, c2):
        return True
    if c1 == c2:
        return False
    special = {c1, c2} & {"d2", "e2"}
    if special:
        if {c1, c2} == {"d2", "e2"}:
            return True
        (other,) = {c1, c2} - special
        return other in ("a1", "b1", "a2")
    i, j = chain_index(c1), chain_index(c2)
    return abs(i - j) != 1


@dataclass(frozen=True)
class Twist:
    """A signed Dehn twist about a standard curve, optionally conjugated.

    ``conj`` is a flat tuple of (curve name, sign) pairs; the twist denotes
    ``u · t_base^sign · u^-1`` where u is the conjugator word read
    left-to-right with the same composition convention as TwistWord.
    """

    base: str
    sign: int = 1
    conj: tuple[tuple[str, int], ...] = field(default=())

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"twist sign must be +1 or -1, got {self.sign!r}")
        object.__setattr__(self, "conj", tuple((str(n), int(s)) for n, s in self.conj))
        for _, s in self.conj:
            if s not in (1, -1):
                raise ValueError("conjugator entries must have sign +1 or -1")

    def inverse(self) -> "Twist":
        return Twist(self.base, -self.sign, self.conj)

    def validate(self, sig: SurfaceSig) -> None:
        check_curve(self.base, sig)
        for name, _ in self.conj:
            check_curve(name, sig)


@dataclass(frozen=True)
class TwistWord:
    """A word of twists on one surface; the rightmost letter acts first."""

    surface: SurfaceSig
    letters: tuple[Twist, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        for t in self.letters:
            if not isinstance(t, Twist):
                raise TypeError(f"letters must be Twist instances, got {t!r}")
            t.validate(self.surface)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: "TwistWord") -> "TwistWord":
        if self.surface != other.surface:
            raise ValueError("cannot concatenate words on different surfaces")
        return TwistWord(self.surface, self.letters + other.letters)

    def inverse(self) -> "TwistWord":
        """Reversed word of inverted letters (the group inverse)."""
        return TwistWord(self.surface, tuple(t.inverse() for t in reversed(self.letters)))

    def power(self, k: int) -> "TwistWord":
        if k < 0:
            return self.inverse().power(-k)
        return TwistWord(self.surface, self.letters * k)

    def all_positive(self) -> bool:
        return all(t.sign == 1 for t in self.letters)

    @classmethod
    def from_names(cls, sig: SurfaceSig, names) -> "TwistWord":
        """Build a word of plain twists from "a1 b1^-1 a2" or an iterable.

        Iterable entries may be names or (name, sign) pairs.
        """
        if isinstance(names, str):
            names = names.split()
        letters = []
        for item in names:
            if isinstance(item, str):
                if item.endswith("^-1"):
                    letters.append(Twist(item[:-3], -1))
                else:
                    letters.append(Twist(item, 1))
            else:
                name, sign = item
                letters.append(Twist(name, sign))
        return cls(sig, tuple(letters))


def chain_word(sig: SurfaceSig, copies: int = 1) -> TwistWord:
    """(a1 b1 a2 b2 ... ag bg) repeated ``copies`` times, plain positive."""
    if sig.genus < 1:
        raise ValueError("chain word requires genus >= 1")
    once = []
    for i in range(1, sig.genus + 1):
        once.append(Twist(f"a{i}"))
        once.append(Twist(f"b{i}"))
    return TwistWord(sig, tuple(once) * copies)
