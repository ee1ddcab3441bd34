"""Left-greedy Garside normal form in the Artin braid group, and the Artin action oracle.

A permutation braid is stored as a tuple ``p`` in one-line notation on
0..n-1, where the positive braid σ_{i1}⋯σ_{ik} has permutation
s_{i1}∘⋯∘s_{ik}.  Its right descents are the i with p[i-1] > p[i]; its left
descents are the right descents of p⁻¹.  The half twist Δ is the reversal.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .words import Alphabet, Permutation, Word, reduce_letters

Perm = tuple[int, ...]


class WrongFamilyError(ValueError):
    """The word uses generators outside σ1..σ_{n-1}."""


def _sigma_letters(w: Word | Sequence[int], n: int) -> tuple[int, ...]:
    if isinstance(w, Word):
        for x in w.letters:
            name = w.alphabet.name(abs(x))
            if name != f"s{abs(x)}":
                raise WrongFamilyError(f"letter {name} is not a braid generator σ_i")
        letters = w.letters
    else:
        letters = tuple(w)
    if n < 2:
        raise ValueError("need n >= 2 strands")
    for x in letters:
        if x == 0 or abs(x) > n - 1:
            raise WrongFamilyError(f"letter {x} is not one of σ1..σ{n - 1}")
    return letters


# -- permutation braids -----------------------------------------------------------

def _compose(p: Perm, q: Perm) -> Perm:
    return tuple(p[j] for j in q)


def _inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, v in enumerate(p):
        inv[v] = i
    return tuple(inv)


def _transposition(n: int, i: int) -> Perm:
    p = list(range(n))
    p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


def right_descents(p: Perm) -> frozenset[int]:
    return frozenset(i for i in range(1, len(p)) if p[i - 1] > p[i])


def left_descents(p: Perm) -> frozenset[int]:
    return right_descents(_inverse(p))


def _delta(n: int) -> Perm:
    return tuple(range(n - 1, -1, -1))


def _tau(p: Perm) -> Perm:
    """Conjugation by Δ: σ_i ↦ σ_{n-i}."""
    n = len(p)
    return tuple(n - 1 - p[n - 1 - j] for j in range(n))


def simple_word(p: Perm) -> list[int]:
    """A positive σ-word for the permutation braid ``p`` (peels right descents)."""
    letters = []
    q = list(p)
    while True:
        for i in range(1, len(q)):
            if q[i - 1] > q[i]:
                q[i - 1], q[i] = q[i], q[i - 1]
                letters.append(i)
                break
        else:
            break
    return letters[::-1]


def _left_weight(a: Perm, b: Perm) -> tuple[Perm, Perm]:
    """Move letters from the front of b to the back of a until L(b) ⊆ R(a)."""
    n = len(a)
    while True:
        ra = right_descents(a)
        moved = False
        for i in sorted(left_descents(b)):
            if i not in ra:
                s = _transposition(n, i)
                a = _compose(a, s)
                b = _compose(s, b)
                moved = True
                break
        if not moved:
            return a, b


@dataclass(frozen=True)
class NormalFormBraid:
    strands: int
    inf: int
    factors: tuple[Perm, ...]

    def factor_permutations(self) -> list[Permutation]:
        return [Permutation(tuple(v + 1 for v in f)) for f in self.factors]

    def is_identity(self) -> bool:
        return self.inf == 0 and not self.factors

    def sup(self) -> int:
        return self.inf + len(self.factors)

    def to_word(self, alphabet: Alphabet | None = None) -> Word:
        alphabet = alphabet or Alphabet(tuple(f"s{i}" for i in range(1, self.strands)))
        delta = simple_word(_delta(self.strands))
        letters: list[int] = []
        if self.inf >= 0:
            letters += delta * self.inf
        else:
            letters += [-x for x in reversed(delta)] * (-self.inf)
        for f in self.factors:
            letters += simple_word(f)
        return Word(alphabet, tuple(letters))

    def __str__(self):
        body = " ".join(str(p) for p in self.factor_permutations())
        return f"inf={self.inf} factors=[{body}]"


def normal_form(w: Word | Sequence[int], n: int) -> NormalFormBraid:
    letters = reduce_letters(_sigma_letters(w, n))
    delta = _delta(n)
    identity = tuple(range(n))
    # Each σ_i⁻¹ becomes Δ⁻¹·(Δσ_i⁻¹); pulling the Δ⁻¹ leftwards applies τ to
    # everything already collected, so record how many τ's each factor owes.
    raw: list[tuple[Perm, int]] = []
    shifts = 0
    for x in letters:
        if x > 0:
            raw.append((_transposition(n, x), shifts))
        else:
            shifts += 1
            raw.append((_compose(delta, _transposition(n, -x)), shifts))
    simples = [_tau(p) if (shifts - k) % 2 else p for p, k in raw]
    inf = -shifts

    factors: list[Perm] = []
    for s in simples:
        factors.append(s)
        k = len(factors) - 1
        while k > 0:
            a, b = _left_weight(factors[k - 1], factors[k])
            if (a, b) == (factors[k - 1], factors[k]):
                break
            factors[k - 1], factors[k] = a, b
            k -= 1
        while factors and factors[-1] == identity:
            factors.pop()
    lead = 0
    while lead < len(factors) and factors[lead] == delta:
        lead += 1
    return NormalFormBraid(n, inf + lead, tuple(factors[lead:]))


def is_left_weighted(nf: NormalFormBraid) -> bool:
    fs = nf.factors
    return all(left_descents(fs[k + 1]) <= right_descents(fs[k]) for k in range(len(fs) - 1))


def equal_in_braid_group(u: Word | Sequence[int], v: Word | Sequence[int], n: int) -> bool:
    return normal_form(u, n) == normal_form(v, n)


# -- Artin action on the free group ---------------------------------------------------

def _substitute(images: list[tuple[int, ...]], word: tuple[int, ...]) -> tuple[int, ...]:
    out: list[int] = []
    for x in word:
        piece = images[abs(x) - 1]
        if x < 0:
            piece = tuple(-y for y in reversed(piece))
        for y in piece:
            if out and out[-1] == -y:
                out.pop()
            else:
                out.append(y)
    return tuple(out)


def artin_automorphism(w: Word | Sequence[int], n: int) -> list[tuple[int, ...]]:
    """Images of x1..xn under the right action of ``w`` on the free group F_n.

    σ_i sends x_i ↦ x_i x_{i+1} x_i⁻¹, x_{i+1} ↦ x_i and fixes the rest; the
    action is on the right, so x·(uv) = (x·u)·v.
    """
    letters = _sigma_letters(w, n)
    current = [(k,) for k in range(1, n + 1)]
    for x in letters:
        i = abs(x)
        gen_images = [(k,) for k in range(1, n + 1)]
        if x > 0:
            gen_images[i - 1] = (i, i + 1, -i)
            gen_images[i] = (i,)
        else:
            gen_images[i - 1] = (i + 1,)
            gen_images[i] = (-(i + 1), i, i + 1)
        current = [_substitute(gen_images, img) for img in current]
    return current


def artin_action(w: Word | Sequence[int], n: int, k: int) -> Word:
    if not 1 <= k <= n:
        raise ValueError(f"free generator index {k} outside 1..{n}")
    alphabet = Alphabet(tuple(f"x{i}" for i in range(1, n + 1)))
    return Word(alphabet, artin_automorphism(w, n)[k - 1])


def equal_by_action(u: Word | Sequence[int], v: Word | Sequence[int], n: int) -> bool:
    return artin_automorphism(u, n) == artin_automorphism(v, n)

