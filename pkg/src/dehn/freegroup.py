"""Reduced words and endomorphisms of a finitely generated free group.

A word is a tuple of nonzero ints: ``k`` is the k-th generator, ``-k`` its
inverse, and words are kept freely reduced (no adjacent ``k, -k``).  An
automorphism is represented by the tuple of images of the generators and is
applied letterwise.
"""

from __future__ import annotations

Word = tuple[int, ...]


def reduce_word(letters) -> Word:
    """Freely reduce: cancel adjacent inverse pairs."""
    out: list[int] = []
    for x in letters:
        if x == 0:
            raise ValueError("0 is not a generator index")
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def invert_word(w: Word) -> Word:
    return tuple(-x for x in reversed(w))


def multiply(*words: Word) -> Word:
    out: list[int] = []
    for w in words:
        for x in w:
            if out and out[-1] == -x:
                out.pop()
            else:
                out.append(x)
    return tuple(out)


def conjugate(u: Word, w: Word) -> Word:
    """u w u^-1, reduced."""
    return multiply(u, w, invert_word(u))


def cyclically_reduce(w: Word) -> tuple[Word, Word]:
    """Return (u, core) with w = u core u^-1 and core cyclically reduced."""
    w = reduce_word(w)
    i, j = 0, len(w)
    while j - i >= 2 and w[i] == -w[j - 1]:
        i += 1
        j -= 1
    return w[:i], w[i:j]


class FreeAutomorphism:
    """An endomorphism of F_n given by generator images (assumed invertible).

    ``images[k]`` is the reduced image word of generator k+1.
    """

    __slots__ = ("images",)

    def __init__(self, images):
        self.images = tuple(reduce_word(w) for w in images)

    @property
    def rank(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> "FreeAutomorphism":
        return cls(tuple((k,) for k in range(1, n + 1)))

    @classmethod
    def from_map(cls, n: int, table: dict[int, Word]) -> "FreeAutomorphism":
        """Identity except on the listed generators."""
        return cls(tuple(tuple(table.get(k, (k,))) for k in range(1, n + 1)))

    def apply(self, w: Word) -> Word:
        out: list[int] = []
        for x in w:
            img = self.images[x - 1] if x > 0 else invert_word(self.images[-x - 1])
            for y in img:
                if out and out[-1] == -y:
                    out.pop()
                else:
                    out.append(y)
        return tuple(out)

    def compose(self, other: "FreeAutomorphism") -> "FreeAutomorphism":
        """self o other: apply other first."""
        if self.rank != other.rank:
            raise ValueError("rank mismatch")
        return FreeAutomorphism(tuple(self.apply(w) for w in other.images))

    def __eq__(self, other) -> bool:
        return isinstance(other, FreeAutomorphism) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def is_identity(self) -> bool:
        return all(w == (k + 1,) for k, w in enumerate(self.images))

    def total_image_length(self) -> int:
        return sum(len(w) for w in self.images)
