"""Reidemeister–Schreier presentations of finite-index subgroups."""

from __future__ import annotations

from dataclasses import dataclass

from .cosets import CosetTable, column, letter_of
from .presentations import Presentation
from .words import Alphabet, Word, concat, inverse, reduce_letters


@dataclass(frozen=True)
class SchreierTransversal:
    """Coset representatives; ``edges[c]`` is (parent coset, letter) or None for coset 0."""

    table: CosetTable
    words: tuple[Word, ...]
    edges: tuple[tuple[int, int] | None, ...]

    def __getitem__(self, coset: int) -> Word:
        return self.words[coset]

    def __len__(self):
        return len(self.words)


def schreier_transversal(t: CosetTable) -> SchreierTransversal:
    """Breadth-first spanning tree of the coset graph, columns in table order."""
    alphabet = t.presentation.alphabet
    letters: list[tuple[int, ...] | None] = [None] * t.n_cosets
    edges: list[tuple[int, int] | None] = [None] * t.n_cosets
    letters[0] = ()
    queue = [0]
    k = 0
    while k < len(queue):
        c = queue[k]
        k += 1
        for col, d in enumerate(t.action[c]):
            if letters[d] is None:
                x = letter_of(col)
                letters[d] = letters[c] + (x,)
                edges[d] = (c, x)
                queue.append(d)
    return SchreierTransversal(t, tuple(Word(alphabet, w) for w in letters), tuple(edges))


@dataclass(frozen=True)
class SubgroupPresentation:
    """RS output plus the bookkeeping needed to map generators back into the parent group."""

    presentation: Presentation
    transversal: SchreierTransversal
    generator_keys: tuple[tuple[int, int], ...]   # (coset, generator index) per generator
    unsimplified_generator_count: int

    def parent_word(self, gen_index: int) -> Word:
        """The element t(c)·x·t(c·x)⁻¹ of the parent group named by a Schreier generator."""
        c, g = self.generator_keys[gen_index - 1]
        t = self.transversal
        d = t.table.action[c][column(g)]
        x = Word(t.table.presentation.alphabet, (g,))
        return concat(t[c], x, inverse(t[d]))

    def lift(self, w: Word) -> Word:
        letters: list[int] = []
        for y in w.letters:
            piece = self.parent_word(abs(y))
            letters.extend(piece.letters if y > 0 else inverse(piece).letters)
        return Word(self.transversal.table.presentation.alphabet, tuple(letters))


def _tree_edges(tr: SchreierTransversal) -> set[tuple[int, int]]:
    """Tree edges as (coset, positive generator) pairs in the direction c --g--> c·g."""
    tree = set()
    for d, edge in enumerate(tr.edges):
        if edge is None:
            continue
        c, x = edge
        if x > 0:
            tree.add((c, x))
        else:
            tree.add((d, -x))
    return tree


def rewrite(t: CosetTable, keys: dict[tuple[int, int], int], coset: int, word: Word) -> list[int]:
    """Rewrite ``word`` traced from ``coset`` as Schreier generator letters."""
    out: list[int] = []
    c = coset
    for x in word.letters:
        if x > 0:
            k = keys.get((c, x))
            if k is not None:
                out.append(k)
            c = t.action[c][column(x)]
        else:
            d = t.action[c][column(x)]
            k = keys.get((d, -x))
            if k is not None:
                out.append(-k)
            c = d
    return out


def subgroup_presentation(p: Presentation, t: CosetTable, simplify: bool = True) -> SubgroupPresentation:
    """Presentation of the subgroup whose coset table is ``t``.

    Generators are named ``c{coset}_{gen}`` (1-based coset numbers).  With
    ``simplify``, generators killed by length-one relators are removed and
    empty relators dropped; nothing more aggressive is attempted.
    """
    if t.presentation.alphabet != p.alphabet:
        raise ValueError("coset table belongs to a different presentation")
    tr = schreier_transversal(t)
    tree = _tree_edges(tr)
    key_list = [(c, g) for c in range(t.n_cosets) for g in range(1, p.n_gens + 1) if (c, g) not in tree]
    keys = {key: i + 1 for i, key in enumerate(key_list)}
    relators = []
    for c in range(t.n_cosets):
        for r in p.relators:
            relators.append(reduce_letters(rewrite(t, keys, c, r)))
    unsimplified = len(key_list)

    if simplify:
        key_list, relators = _eliminate_trivial_generators(key_list, relators)

    names = tuple(f"c{c + 1}_{p.alphabet.name(g)}" for c, g in key_list)
    alphabet = Alphabet(names)
    words = tuple(Word(alphabet, r) for r in relators)
    label = f"subgroup of {p.label} of index {t.n_cosets}"
    sub = Presentation(alphabet, words, label)
    return SubgroupPresentation(sub, tr, tuple(key_list), unsimplified)


def _eliminate_trivial_generators(key_list, relators):
    killed: set[int] = set()
    rels = [r for r in relators if r]
    while True:
        new = {abs(r[0]) for r in rels if len(r) == 1}
        if not new:
            break
        killed |= new
        rels = [reduce_letters(x for x in r if abs(x) not in killed) for r in rels]
        rels = [r for r in rels if r]
    keep = [i + 1 for i in range(len(key_list)) if i + 1 not in killed]
    renumber = {old: new for new, old in enumerate(keep, start=1)}
    rels = [tuple(renumber[abs(x)] * (1 if x > 0 else -1) for x in r) for r in rels]
    # order-preserving dedupe keeps output deterministic
    rels = list(dict.fromkeys(rels))
    return [key_list[i - 1] for i in keep], rels
