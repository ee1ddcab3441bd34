"""Finite groups concretized from trivial-subgroup coset tables.

Elements are coset numbers (0 is the identity).  The element for coset c is
the transversal word t(c), and c·d is found by tracing t(d) from c.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from math import factorial
from typing import Iterable, Sequence

from .abelian import AbelianInvariants, abelian_invariants
from .cosets import CosetTable, column
from .presentations import PROJECTIVE_PLANE, Presentation, named_word, standard_perm_images
from .schreier import schreier_transversal
from .words import Word, evaluate_perm


class NotRegularError(ValueError):
    """The coset table is not relative to the trivial subgroup."""


@dataclass(frozen=True)
class FiniteGroupTable:
    order: int
    mult: tuple[tuple[int, ...], ...]
    inverses: tuple[int, ...]
    gen_images: tuple[int, ...]          # element of each presentation generator
    element_words: tuple[Word, ...]
    presentation: Presentation

    @property
    def identity(self) -> int:
        return 0

    def element(self, w: Word) -> int:
        g = 0
        for x in w.letters:
            h = self.gen_images[abs(x) - 1]
            g = self.mult[g][h if x > 0 else self.inverses[h]]
        return g

    def product(self, *elements: int) -> int:
        g = 0
        for h in elements:
            g = self.mult[g][h]
        return g

    def power(self, g: int, k: int) -> int:
        base = g if k >= 0 else self.inverses[g]
        out = 0
        for _ in range(abs(k)):
            out = self.mult[out][base]
        return out

    def conjugate(self, g: int, by: int) -> int:
        return self.product(by, g, self.inverses[by])


def concretize(t: CosetTable) -> FiniteGroupTable:
    if any(not w.is_identity() for w in t.subgroup_gens):
        raise NotRegularError("concretize needs a trivial-subgroup table")
    tr = schreier_transversal(t)
    N = t.n_cosets
    mult = [[0] * N for _ in range(N)]
    order_bfs = sorted(range(N), key=lambda c: len(tr[c]))
    for c1 in range(N):
        row = mult[c1]
        row[0] = c1
        for c2 in order_bfs:
            edge = tr.edges[c2]
            if edge is None:
                continue
            parent, x = edge
            row[c2] = t.action[row[parent]][column(x)]
    inverses = [0] * N
    for c in range(N):
        inverses[c] = mult[c].index(0)
    gens = tuple(t.action[0][column(g)] for g in range(1, t.presentation.n_gens + 1))
    return FiniteGroupTable(N, tuple(tuple(r) for r in mult), tuple(inverses), gens,
                            tr.words, t.presentation)


def check_axioms(G: FiniteGroupTable, samples: int = 1000, seed: int = 0) -> None:
    rng = random.Random(seed)
    N = G.order
    for g in range(N):
        if G.mult[0][g] != g or G.mult[g][0] != g:
            raise AssertionError(f"identity fails at {g}")
        if G.mult[g][G.inverses[g]] != 0 or G.mult[G.inverses[g]][g] != 0:
            raise AssertionError(f"inverse fails at {g}")
    for _ in range(samples):
        a, b, c = rng.randrange(N), rng.randrange(N), rng.randrange(N)
        if G.mult[G.mult[a][b]][c] != G.mult[a][G.mult[b][c]]:
            raise AssertionError(f"associativity fails at {(a, b, c)}")
    if len(subgroup(G, G.gen_images)) != N:
        raise AssertionError("generator images do not generate")


def element_order(G: FiniteGroupTable, g: int) -> int:
    k, h = 1, g
    while h != 0:
        h = G.mult[h][g]
        k += 1
    return k


def conjugacy_classes(G: FiniteGroupTable) -> list[frozenset[int]]:
    seen: set[int] = set()
    classes = []
    for g in range(G.order):
        if g in seen:
            continue
        cls = frozenset(G.conjugate(g, h) for h in range(G.order))
        seen |= cls
        classes.append(cls)
    return classes


def centralizer(G: FiniteGroupTable, g: int) -> frozenset[int]:
    return frozenset(h for h in range(G.order) if G.mult[h][g] == G.mult[g][h])


def center(G: FiniteGroupTable) -> frozenset[int]:
    return frozenset(z for z in range(G.order) if all(G.mult[z][h] == G.mult[h][z] for h in range(G.order)))


def subgroup(G: FiniteGroupTable, generators: Iterable[int]) -> frozenset[int]:
    gens = list(generators)
    elements = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for h in frontier:
            for g in gens:
                k = G.mult[h][g]
                if k not in elements:
                    elements.add(k)
                    nxt.append(k)
        frontier = nxt
    return frozenset(elements)


def torsion_order_census(G: FiniteGroupTable, elements: Iterable[int] | None = None) -> Counter:
    elements = range(G.order) if elements is None else elements
    return Counter(element_order(G, g) for g in elements)


def is_abelian(G: FiniteGroupTable) -> bool:
    return all(G.mult[a][b] == G.mult[b][a] for a in range(G.order) for b in range(a))


@dataclass(frozen=True)
class Identification:
    label: str
    order: int
    abelian_invariants: AbelianInvariants | None
    order_statistics: tuple[tuple[int, int], ...]
    center_size: int
    involutions: int

    def __str__(self):
        if self.label != "other":
            return self.label
        stats = ",".join(f"{k}:{v}" for k, v in self.order_statistics)
        return f"other(order={self.order}, ab={self.abelian_invariants}, orders={{{stats}}})"


def _label(N: int, census: Counter, abelian: bool) -> str:
    involutions = census.get(2, 0)
    if N == 1:
        return "trivial"
    if census.get(N, 0):
        return f"Z{N}"
    if abelian:
        return "Z2xZ2" if N == 4 else "other"
    if N == 6:
        return "S3"
    if involutions == 1:
        # generalized quaternion and dicyclic groups have a unique involution
        if N == 8:
            return "Q8"
        if N == 12:
            return "Dic12"
        if N == 16 and census.get(8, 0):
            return "Q16"
    return "other"


def identify(G: FiniteGroupTable, ab: AbelianInvariants | None = None) -> Identification:
    """Fingerprint-based identification, sufficient for the small groups at hand."""
    census = torsion_order_census(G)
    ab = ab if ab is not None else abelian_invariants(G.presentation)
    label = _label(G.order, census, is_abelian(G))
    return Identification(label, G.order, ab, tuple(sorted(census.items())), len(center(G)),
                          census.get(2, 0))


def identify_subgroup(G: FiniteGroupTable, elements: Iterable[int]) -> Identification:
    """Identify a subgroup given as a closed set of elements of G."""
    H = sorted(set(elements))
    census = torsion_order_census(G, H)
    abelian = all(G.mult[a][b] == G.mult[b][a] for a in H for b in H)
    z = sum(1 for a in H if all(G.mult[a][b] == G.mult[b][a] for b in H))
    return Identification(_label(len(H), census, abelian), len(H), None,
                          tuple(sorted(census.items())), z, census.get(2, 0))


def pure_elements(G: FiniteGroupTable) -> frozenset[int]:
    """Elements whose braid permutation is trivial (kernel of π)."""
    p = G.presentation
    images = standard_perm_images(p)
    return frozenset(c for c in range(G.order) if evaluate_perm(G.element_words[c], images).is_identity())


def order4_pure_class_count(n: int, G: FiniteGroupTable | None = None, by: str = "pure") -> int:
    """Conjugacy classes of order-4 pure braids (n = 2 only, the finite case).

    ``by="pure"`` conjugates inside the pure subgroup, which is the count the
    (n-2)!(2n-1) formula gives.  ``by="ambient"`` conjugates by the whole
    group, which fuses two of the three classes at n = 2.
    """
    if n != 2:
        raise NotImplementedError("only n = 2 is finite; use order4_pure_class_formula")
    if by not in ("pure", "ambient"):
        raise ValueError(f"unknown conjugating group {by!r}")
    if G is None:
        from .cosets import enumerate_cosets
        from .presentations import projective_plane
        G = concretize(enumerate_cosets(projective_plane(2)))
    pure = pure_elements(G)
    conjugators = sorted(pure) if by == "pure" else range(G.order)
    remaining = {g for g in pure if element_order(G, g) == 4}
    count = 0
    while remaining:
        g = min(remaining)
        remaining -= {G.conjugate(g, h) for h in conjugators}
        count += 1
    return count


def order4_pure_class_formula(n: int) -> int:
    return factorial(n - 2) * (2 * n - 1)


def named_element(G: FiniteGroupTable, name: str, *params: int) -> int:
    p = G.presentation
    return G.element(named_word(p.family, name, p.n, *params))


def rp2_named(G: FiniteGroupTable, names: Sequence[str]) -> list[int]:
    if G.presentation.family != PROJECTIVE_PLANE:
        raise ValueError("not a projective-plane group")
    return [named_element(G, nm) for nm in names]
