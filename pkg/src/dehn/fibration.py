"""Lefschetz fibrations over the disk and sphere, and their invariants.

A fibration is a fiber signature, a base ("disk" or "sphere"), and an
all-positive twist word listing the vanishing cycles (one letter per
singular fiber).  Sphere fibrations need a closed fiber and a word whose
homology action is the identity (a necessary condition for the monodromy to
close up; exact closure is checked by the equality engines where needed).

Invariants are computed from the handle decomposition: the Euler
characteristic from the letter count, and first homology of the total
space as H1(fiber) modulo the letters' homology classes (conjugators
applied), by integer Smith normal form.
"""

from __future__ import annotations

from dataclasses import dataclass

from .homology import identity_matrix, transported_class, word_matrix
from .pi1 import DEFAULT_CAP
from .rewriting import positivize
from .snf import abelian_group_from_columns
from .surface import SurfaceSig, TwistWord, chain_word

BASES = ("disk", "sphere")


@dataclass(frozen=True)
class AbelianGroup:
    """Z^rank plus cyclic torsion factors in a divisibility chain."""

    rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(int(d) for d in self.torsion))
        if self.rank < 0:
            raise ValueError("rank must be non-negative")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError("torsion orders must form a divisibility chain")
        if any(d < 2 for d in self.torsion):
            raise ValueError("torsion orders must be at least 2")

    @property
    def trivial(self) -> bool:
        return self.rank == 0 and not self.torsion


@dataclass(frozen=True)
class Fibration:
    """A positive Lefschetz fibration: base, fiber, vanishing-cycle word."""

    base: str
    fiber: SurfaceSig
    word: TwistWord

    def __post_init__(self):
        if self.base not in BASES:
            raise ValueError(f"base must be one of {BASES}, got {self.base!r}")
        if self.word.surface != self.fiber:
            raise ValueError("word surface does not match the fiber signature")
        if not self.word.all_positive():
            raise ValueError("fibration words must be all-positive")
        if self.base == "sphere":
            if self.fiber.boundary != 0:
                raise ValueError("a sphere fibration needs a closed fiber")
            if word_matrix(self.word) != identity_matrix(2 * self.fiber.genus):
                raise ValueError("sphere fibration word must act trivially on homology")

    @property
    def letter_count(self) -> int:
        return len(self.word)


def euler_characteristic(f: Fibration) -> int:
    """chi of the total space: chi(fiber) x chi(base) + one per letter."""
    g, b, k = f.fiber.genus, f.fiber.boundary, f.letter_count
    if f.base == "disk":
        return (2 - 2 * g - b) + k
    return 2 * (2 - 2 * g) + k


def letter_classes(f: Fibration) -> list[tuple[int, ...]]:
    """Homology class of each vanishing cycle, conjugators applied."""
    return [transported_class(t, f.fiber) for t in f.word.letters]


def first_homology(f: Fibration) -> AbelianGroup:
    """H1 of the total space: H1(fiber) modulo the vanishing-cycle classes."""
    cols = [list(v) for v in letter_classes(f)]
    rank, torsion = abelian_group_from_columns(2 * f.fiber.genus, cols)
    return AbelianGroup(rank, tuple(torsion))


def is_allowable(f: Fibration) -> bool:
    """True iff every vanishing cycle is homologically essential."""
    zero = (0,) * (2 * f.fiber.genus)
    return all(v != zero for v in letter_classes(f))


@dataclass(frozen=True)
class DoubleReport:
    """Doubled fibration plus the positivization verification verdict."""

    fibration: Fibration
    verified: str
    engine: str


def double_report(palf: Fibration, cap: int = DEFAULT_CAP) -> DoubleReport:
    """Double a disk fibration over a one-boundary fiber into a sphere one.

    Caps the fiber, appends the reverse-inverse of the word, and
    positivizes, so the letter count becomes k x (1 + expansion length).
    """
    if palf.base != "disk" or palf.fiber.boundary != 1:
        raise ValueError("doubling applies to disk fibrations over a one-boundary fiber")
    if not is_allowable(palf):
        raise ValueError("doubling requires an allowable fibration")
    closed = SurfaceSig(palf.fiber.genus, 0)
    capped = TwistWord(closed, palf.word.letters)
    doubled = capped * capped.inverse()
    rep = positivize(doubled, cap)
    return DoubleReport(Fibration("sphere", closed, rep.output), rep.verified, rep.engine)


def double(palf: Fibration, cap: int = DEFAULT_CAP) -> Fibration:
    return double_report(palf, cap).fibration


def fiber_sum(f1: Fibration, f2: Fibration) -> Fibration:
    """Concatenate the words of two sphere fibrations with the same fiber."""
    if f1.base != "sphere" or f2.base != "sphere":
        raise ValueError("fiber sum is defined for sphere fibrations")
    if f1.fiber != f2.fiber:
        raise ValueError("fiber signatures differ")
    return Fibration("sphere", f1.fiber, f1.word * f2.word)


def gn_word(n: int) -> Fibration:
    """The genus-n sphere fibration with word (a1 b1 ... an bn)^(4n+2)."""
    if n < 1:
        raise ValueError("genus must be at least 1")
    sig = SurfaceSig(n, 0)
    return Fibration("sphere", sig, chain_word(sig, 4 * n + 2))


def boundary_open_book(palf: Fibration) -> tuple[SurfaceSig, TwistWord]:
    """The open book induced on the boundary: page and monodromy word."""
    if palf.base != "disk" or palf.fiber.boundary != 1:
        raise ValueError("the boundary open book needs a disk fibration with b = 1")
    return palf.fiber, palf.word
