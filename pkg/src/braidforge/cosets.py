"""Todd–Coxeter coset enumeration (HLT with lookahead, and Felsch).

Cosets are numbered from 0 internally, coset 0 being the subgroup itself.
Columns of the table are ordered ``x1, x1^-1, x2, x2^-1, ...``; the column of
a signed letter is given by :func:`column`.  Serialized tables are 1-based.

Reference: Holt, Eick, O'Brien, *Handbook of Computational Group Theory*, ch. 5.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Sequence, Union

from .presentations import Presentation
from .words import AlphabetMismatchError, Permutation, Word

log = logging.getLogger(__name__)

HLT = "hlt"
FELSCH = "felsch"


@dataclass(frozen=True)
class EnumLimits:
    max_cosets: int = 2_000_000
    strategy: str = HLT

    def __post_init__(self):
        if self.max_cosets < 1:
            raise ValueError("max_cosets must be >= 1")
        if self.strategy not in (HLT, FELSCH):
            raise ValueError(f"unknown strategy {self.strategy!r}")


class InconsistentTableError(RuntimeError):
    """A completed table failed validation; indicates a bug, never a group property."""


def column(letter: int) -> int:
    return 2 * (letter - 1) if letter > 0 else 2 * (-letter - 1) + 1


def letter_of(col: int) -> int:
    g = col // 2 + 1
    return g if col % 2 == 0 else -g


@dataclass(frozen=True)
class CosetTable:
    presentation: Presentation
    subgroup_gens: tuple[Word, ...]
    n_cosets: int
    action: tuple[tuple[int, ...], ...]
    strategy: str = HLT
    cosets_used: int = 0

    def image(self, coset: int, letter: int) -> int:
        return self.action[coset][column(letter)]

    def trace(self, coset: int, word: Word | Sequence[int]) -> int:
        c = coset
        letters = word.letters if isinstance(word, Word) else word
        for x in letters:
            c = self.action[c][column(x)]
        return c

    def serialize(self) -> str:
        names = self.presentation.alphabet.names
        header = " ".join(f"{g} {g}^-1" for g in names)
        lines = [f"# cosets={self.n_cosets} columns: {header}"]
        for row in self.action:
            lines.append(" ".join(str(c + 1) for c in row))
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class ResourceExceeded:
    """Enumeration gave up; says nothing about the index."""

    cosets_used: int


EnumOutcome = Union[CosetTable, ResourceExceeded]


class _Full(Exception):
    pass


class _Enumerator:
    def __init__(self, p: Presentation, subgroup: Sequence[Word], limits: EnumLimits):
        self.ncols = 2 * p.n_gens
        self.rels = [[column(x) for x in r.letters] for r in p.relators if r.letters]
        self.subgroup = [[column(x) for x in w.letters] for w in subgroup]
        self.max_cosets = limits.max_cosets
        self.table: list[list[int | None]] = [[None] * self.ncols]
        self.parent = [0]
        self.live = 1
        self.defined = 1
        self.deductions: list[tuple[int, int]] | None = None
        if limits.strategy == FELSCH:
            self.deductions = []
            self.conjugates: list[list[list[int]]] = [[] for _ in range(self.ncols)]
            seen = set()
            for r in self.rels:
                for word in (r, [c ^ 1 for c in reversed(r)]):
                    for k in range(len(word)):
                        rot = tuple(word[k:] + word[:k])
                        if rot not in seen:
                            seen.add(rot)
                            self.conjugates[rot[0]].append(list(rot))

    # -- basic operations ----------------------------------------------------

    def define(self, alpha: int, x: int) -> None:
        if len(self.table) >= self.max_cosets:
            raise _Full
        beta = len(self.table)
        self.table.append([None] * self.ncols)
        self.parent.append(beta)
        self.live += 1
        self.defined += 1
        self.table[alpha][x] = beta
        self.table[beta][x ^ 1] = alpha
        if self.deductions is not None:
            self.deductions.append((alpha, x))

    def rep(self, k: int) -> int:
        parent = self.parent
        root = k
        while parent[root] != root:
            root = parent[root]
        while parent[k] != root:
            parent[k], k = root, parent[k]
        return root

    def merge(self, k: int, l: int, queue: list[int]) -> None:
        a, b = self.rep(k), self.rep(l)
        if a != b:
            lo, hi = (a, b) if a < b else (b, a)
            self.parent[hi] = lo
            queue.append(hi)
            self.live -= 1

    def coincidence(self, alpha: int, beta: int) -> None:
        table = self.table
        queue: list[int] = []
        self.merge(alpha, beta, queue)
        i = 0
        while i < len(queue):
            gamma = queue[i]
            i += 1
            row = table[gamma]
            for x in range(self.ncols):
                delta = row[x]
                if delta is None:
                    continue
                table[delta][x ^ 1] = None
                mu, nu = self.rep(gamma), self.rep(delta)
                if table[mu][x] is not None:
                    self.merge(nu, table[mu][x], queue)
                elif table[nu][x ^ 1] is not None:
                    self.merge(mu, table[nu][x ^ 1], queue)
                else:
                    table[mu][x] = nu
                    table[nu][x ^ 1] = mu
                    if self.deductions is not None:
                        self.deductions.append((mu, x))

    def scan(self, alpha: int, word: list[int], fill: bool) -> None:
        """Scan ``word`` at ``alpha``; define cosets to close it when ``fill``."""
        table = self.table
        f, i = alpha, 0
        b, j = alpha, len(word) - 1
        while True:
            while i <= j:
                nxt = table[f][word[i]]
                if nxt is None:
                    break
                f = nxt
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i:
                nxt = table[b][word[j] ^ 1]
                if nxt is None:
                    break
                b = nxt
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                table[f][word[i]] = b
                table[b][word[i] ^ 1] = f
                if self.deductions is not None:
                    self.deductions.append((f, word[i]))
                return
            if not fill:
                return
            self.define(f, word[i])

    # -- housekeeping ----------------------------------------------------------

    def lookahead(self) -> None:
        for beta in range(len(self.table)):
            for r in self.rels:
                if self.parent[beta] != beta:
                    break
                self.scan(beta, r, fill=False)

    def compact(self, keep: int) -> int:
        """Renumber live cosets in order; return the new number of ``keep``'s first live successor."""
        mapping = {}
        for c in range(len(self.table)):
            if self.parent[c] == c:
                mapping[c] = len(mapping)
        new_table = []
        for c in mapping:
            new_table.append([None if d is None else mapping[d] for d in self.table[c]])
        new_keep = len(mapping)
        for c in range(keep, len(self.table)):
            if c in mapping:
                new_keep = mapping[c]
                break
        self.table = new_table
        self.parent = list(range(len(new_table)))
        if self.deductions is not None:
            self.deductions = [(mapping[a], x) for a, x in self.deductions if a in mapping]
        return new_keep

    def make_room(self, alpha: int) -> int | None:
        self.lookahead()
        if self.deductions is not None:
            self.process_deductions()
        alpha = self.compact(alpha)
        if len(self.table) >= self.max_cosets:
            return None
        return alpha

    def process_deductions(self) -> None:
        stack = self.deductions
        table = self.table
        while stack:
            if len(stack) > 100_000:
                stack.clear()
                self.lookahead()
                continue
            alpha, x = stack.pop()
            if self.parent[alpha] != alpha:
                continue
            for w in self.conjugates[x]:
                self.scan(alpha, w, fill=False)
                if self.parent[alpha] != alpha:
                    break
            if self.parent[alpha] != alpha:
                continue
            beta = table[alpha][x]
            if beta is not None and self.parent[beta] == beta:
                for w in self.conjugates[x ^ 1]:
                    self.scan(beta, w, fill=False)
                    if self.parent[beta] != beta:
                        break

    # -- strategies -------------------------------------------------------------

    def run(self) -> bool:
        felsch = self.deductions is not None
        try:
            for w in self.subgroup:
                self.scan(0, w, fill=True)
                if felsch:
                    self.process_deductions()
        except _Full:
            return False
        alpha = 0
        while alpha < len(self.table):
            try:
                if self.parent[alpha] == alpha:
                    if felsch:
                        self._felsch_row(alpha)
                    else:
                        self._hlt_row(alpha)
                alpha += 1
            except _Full:
                resumed = self.make_room(alpha)
                if resumed is None:
                    return False
                alpha = resumed
        return True

    def _hlt_row(self, alpha: int) -> None:
        for r in self.rels:
            if self.parent[alpha] != alpha:
                return
            self.scan(alpha, r, fill=True)
        if self.parent[alpha] != alpha:
            return
        row = self.table[alpha]
        for x in range(self.ncols):
            if row[x] is None:
                self.define(alpha, x)

    def _felsch_row(self, alpha: int) -> None:
        for x in range(self.ncols):
            if self.parent[alpha] != alpha:
                return
            if self.table[alpha][x] is None:
                self.define(alpha, x)
                self.process_deductions()

    def finish(self) -> list[list[int]]:
        """Close remaining coincidences, then standardize by breadth-first renumbering."""
        while True:
            before = self.live
            self.lookahead()
            if self.live == before:
                break
        self.compact(0)
        order = [0]
        number = {0: 0}
        k = 0
        while k < len(order):
            for d in self.table[order[k]]:
                if d is None:
                    raise InconsistentTableError("table incomplete after enumeration")
                if d not in number:
                    number[d] = len(order)
                    order.append(d)
            k += 1
        return [[number[d] for d in self.table[c]] for c in order]


def enumerate_cosets(p: Presentation, subgroup_gens: Sequence[Word] = (),
                     limits: EnumLimits | None = None) -> EnumOutcome:
    """Enumerate the cosets of ⟨subgroup_gens⟩ in the group presented by ``p``."""
    limits = limits or EnumLimits()
    for w in subgroup_gens:
        if w.alphabet != p.alphabet:
            raise AlphabetMismatchError(f"subgroup generator {w} is not over {p.alphabet.names}")
    e = _Enumerator(p, subgroup_gens, limits)
    if not e.run():
        log.debug("enumeration of %s exceeded %d cosets", p.label, limits.max_cosets)
        return ResourceExceeded(e.defined)
    rows = e.finish()
    table = CosetTable(p, tuple(subgroup_gens), len(rows), tuple(tuple(r) for r in rows),
                       limits.strategy, e.defined)
    validate_table(table)
    return table


def validate_table(t: CosetTable) -> None:
    """Check bijectivity, relator closure at every coset, and subgroup generators fixing coset 0."""
    ncols = 2 * t.presentation.n_gens
    for c, row in enumerate(t.action):
        if len(row) != ncols:
            raise InconsistentTableError(f"row {c} has {len(row)} columns")
        for x, d in enumerate(row):
            if not 0 <= d < t.n_cosets or t.action[d][x ^ 1] != c:
                raise InconsistentTableError(f"coset {c} column {x} is not invertible")
    for r in t.presentation.relators:
        for c in range(t.n_cosets):
            if t.trace(c, r) != c:
                raise InconsistentTableError(f"relator {r} does not close at coset {c}")
    for w in t.subgroup_gens:
        if t.trace(0, w) != 0:
            raise InconsistentTableError(f"subgroup generator {w} moves coset 0")


def group_order(p: Presentation, limits: EnumLimits | None = None) -> int | None:
    """Order of the presented group, or ``None`` when enumeration is inconclusive."""
    out = enumerate_cosets(p, (), limits)
    return out.n_cosets if isinstance(out, CosetTable) else None


def index(p: Presentation, subgroup_gens: Sequence[Word],
          limits: EnumLimits | None = None) -> int | None:
    out = enumerate_cosets(p, subgroup_gens, limits)
    return out.n_cosets if isinstance(out, CosetTable) else None


def permutation_representation(t: CosetTable) -> dict[int, Permutation]:
    """Generator index ↦ permutation of the cosets, as points 1..n_cosets.

    Generator g acts on the left, sending coset c to c·g⁻¹, so that composing
    with :func:`evaluate_perm` is a homomorphism.
    """
    reps = {}
    for g in range(1, t.presentation.n_gens + 1):
        col = column(-g)
        reps[g] = Permutation(tuple(t.action[c][col] + 1 for c in range(t.n_cosets)))
    return reps
