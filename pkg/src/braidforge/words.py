"""Free-group words over a named alphabet and their images in permutation groups.

Letters are signed 1-based generator indices: ``3`` is the third generator and
``-3`` its inverse.  Names only matter when parsing or printing.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence


class MalformedWordError(ValueError):
    """Raised for letters outside the alphabet or unparseable word text."""


class AlphabetMismatchError(ValueError):
    pass


@dataclass(frozen=True)
class Alphabet:
    names: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        if any(not name for name in self.names):
            raise ValueError("generator names must be non-empty")
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate generator names in {self.names}")

    @property
    def arity(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name) + 1
        except ValueError:
            raise MalformedWordError(f"unknown generator {name!r}") from None

    def name(self, index: int) -> str:
        return self.names[index - 1]

    def __len__(self):
        return len(self.names)


def reduce_letters(letters: Iterable[int]) -> tuple[int, ...]:
    """Free reduction of a raw letter sequence (no range checking)."""
    out: list[int] = []
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def cyclically_reduce(letters: Sequence[int]) -> tuple[int, ...]:
    w = reduce_letters(letters)
    i, j = 0, len(w) - 1
    while i < j and w[i] == -w[j]:
        i += 1
        j -= 1
    return w[i:j + 1]


@dataclass(frozen=True)
class Word:
    """An element of the free group on ``alphabet``, always freely reduced."""

    alphabet: Alphabet
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        arity = self.alphabet.arity
        for x in self.letters:
            if not isinstance(x, int) or x == 0 or abs(x) > arity:
                raise MalformedWordError(f"letter {x!r} outside alphabet of arity {arity}")
        object.__setattr__(self, "letters", reduce_letters(self.letters))

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return concat(self, other)

    def __pow__(self, k: int) -> "Word":
        return power(self, k)

    def __invert__(self) -> "Word":
        return inverse(self)

    def __str__(self):
        return format_word(self)

    def is_identity(self) -> bool:
        return not self.letters

    def exponent_sums(self) -> list[int]:
        sums = [0] * self.alphabet.arity
        for x in self.letters:
            sums[abs(x) - 1] += 1 if x > 0 else -1
        return sums


def free_reduce(alphabet: Alphabet, raw: Iterable[int]) -> Word:
    return Word(alphabet, tuple(raw))


def identity(alphabet: Alphabet) -> Word:
    return Word(alphabet, ())


def _check(u: Word, v: Word):
    if u.alphabet != v.alphabet:
        raise AlphabetMismatchError(f"{u.alphabet.names} vs {v.alphabet.names}")


def inverse(w: Word) -> Word:
    return Word(w.alphabet, tuple(-x for x in reversed(w.letters)))


def concat(*words: Word) -> Word:
    if not words:
        raise ValueError("concat needs at least one word")
    first = words[0]
    letters: list[int] = []
    for w in words:
        _check(first, w)
        letters.extend(w.letters)
    return Word(first.alphabet, tuple(letters))


def power(w: Word, k: int) -> Word:
    base = w if k >= 0 else inverse(w)
    return Word(w.alphabet, base.letters * abs(k))


def conjugate(w: Word, g: Word) -> Word:
    """Return g w g^-1."""
    return concat(g, w, inverse(g))


_TOKEN = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*)(?:\^(-?\d+))?$")


def parse_word(alphabet: Alphabet, text: str) -> Word:
    """Parse ``"s1 s2^2 s1^-1"``; the empty string or ``1``/``e`` is the identity."""
    letters: list[int] = []
    for token in text.replace("*", " ").split():
        if token in ("1", "e", "ε"):
            continue
        m = _TOKEN.match(token)
        if not m:
            raise MalformedWordError(f"cannot parse token {token!r}")
        idx = alphabet.index(m.group(1))
        k = int(m.group(2)) if m.group(2) is not None else 1
        letters.extend([idx if k > 0 else -idx] * abs(k))
    return Word(alphabet, tuple(letters))


def format_word(w: Word) -> str:
    if not w.letters:
        return "1"
    parts = []
    letters = w.letters
    i = 0
    while i < len(letters):
        j = i
        while j < len(letters) and letters[j] == letters[i]:
            j += 1
        k = (j - i) * (1 if letters[i] > 0 else -1)
        name = w.alphabet.name(abs(letters[i]))
        parts.append(name if k == 1 else f"{name}^{k}")
        i = j
    return " ".join(parts)


# -- permutations -------------------------------------------------------------

@dataclass(frozen=True)
class Permutation:
    """Bijection of the points 1..m; ``images[k-1]`` is the image of point k."""

    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(self.images)}: {self.images}")

    @classmethod
    def identity(cls, m: int) -> "Permutation":
        return cls(tuple(range(1, m + 1)))

    @classmethod
    def transposition(cls, m: int, i: int, j: int) -> "Permutation":
        images = list(range(1, m + 1))
        images[i - 1], images[j - 1] = j, i
        return cls(tuple(images))

    @classmethod
    def from_cycles(cls, m: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        images = list(range(1, m + 1))
        for cyc in cycles:
            for k, point in enumerate(cyc):
                images[point - 1] = cyc[(k + 1) % len(cyc)]
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, k: int) -> int:
        return self.images[k - 1]

    def compose(self, other: "Permutation") -> "Permutation":
        """``self ∘ other``: apply ``other`` first."""
        return Permutation(tuple(self.images[other.images[k] - 1] for k in range(self.degree)))

    __matmul__ = compose

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for k, image in enumerate(self.images, start=1):
            inv[image - 1] = k
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(image == k for k, image in enumerate(self.images, start=1))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(1, self.degree + 1):
            if start in seen or self(start) == start:
                continue
            cyc = [start]
            seen.add(start)
            k = self(start)
            while k != start:
                cyc.append(k)
                seen.add(k)
                k = self(k)
            out.append(tuple(cyc))
        return out

    def __str__(self):
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)


def evaluate_perm(w: Word, images: Mapping[int, Permutation] | Sequence[Permutation]) -> Permutation:
    """Image of ``w`` under the homomorphism fixed by generator images.

    ``images`` maps 1-based generator indices to permutations (a sequence is
    read as indexed from generator 1).
    """
    if not isinstance(images, Mapping):
        images = {k: p for k, p in enumerate(images, start=1)}
    used = {abs(x) for x in w.letters}
    missing = used - set(images)
    if missing:
        raise KeyError(f"no image for generators {sorted(missing)}")
    degrees = {p.degree for p in images.values()}
    if len(degrees) > 1:
        raise ValueError("generator images act on different point counts")
    m = degrees.pop() if degrees else 0
    result = list(range(1, m + 1))
    # right-to-left composition: result = g1 ∘ g2 ∘ ... applied to each point
    inverses = {}
    for x in reversed(w.letters):
        g = images[abs(x)]
        if x < 0:
            if abs(x) not in inverses:
                inverses[abs(x)] = g.inverse()
            g = inverses[abs(x)]
        result = [g.images[r - 1] for r in result]
    return Permutation(tuple(result))
