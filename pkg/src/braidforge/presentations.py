"""Braid-group presentations, named elements, and quotient operators."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence

from .words import (
    Alphabet,
    AlphabetMismatchError,
    MalformedWordError,
    Permutation,
    Word,
    concat,
    cyclically_reduce,
    format_word,
    parse_word,
    power,
)

ARTIN = "artin"
SPHERE = "sphere"
PROJECTIVE_PLANE = "projective_plane"
FAMILIES = (ARTIN, SPHERE, PROJECTIVE_PLANE)

# short names used by the CLI group specs
FAMILY_CODES = {"B": ARTIN, "BS2": SPHERE, "BP2": PROJECTIVE_PLANE}


class FamilyError(ValueError):
    """A named element was requested from a family that does not have it."""


@dataclass(frozen=True)
class Presentation:
    alphabet: Alphabet
    relators: tuple[Word, ...]
    label: str = ""
    family: str | None = None
    n: int | None = None
    mapping_class: bool = False

    def __post_init__(self):
        object.__setattr__(self, "relators", tuple(self.relators))
        for r in self.relators:
            if r.alphabet != self.alphabet:
                raise AlphabetMismatchError(f"relator {r} is over a different alphabet")

    @property
    def n_gens(self) -> int:
        return self.alphabet.arity

    def word(self, text: str) -> Word:
        return parse_word(self.alphabet, text)

    def generator(self, index: int) -> Word:
        return Word(self.alphabet, (index,))

    def __str__(self):
        rels = " , ".join(format_word(r) for r in self.relators)
        return f"gens: {' '.join(self.alphabet.names)} ; rels: {rels}"


def _relator(alphabet: Alphabet, lhs: Sequence[int], rhs: Sequence[int] = ()) -> Word:
    """Relation lhs = rhs as the cyclically reduced relator lhs·rhs^-1."""
    raw = list(lhs) + [-x for x in reversed(rhs)]
    return Word(alphabet, cyclically_reduce(raw))


def sigma_alphabet(n: int) -> Alphabet:
    return Alphabet(tuple(f"s{i}" for i in range(1, n)))


def rp2_alphabet(n: int) -> Alphabet:
    return Alphabet(tuple(f"s{i}" for i in range(1, n)) + tuple(f"r{j}" for j in range(1, n + 1)))


def _artin_relators(alphabet: Alphabet, n: int) -> list[Word]:
    rels = []
    for i in range(1, n):
        for j in range(i + 2, n):
            rels.append(_relator(alphabet, [i, j], [j, i]))
    for i in range(1, n - 1):
        rels.append(_relator(alphabet, [i, i + 1, i], [i + 1, i, i + 1]))
    return rels


def _surface_letters(n: int) -> list[int]:
    """σ1⋯σ_{n-2} σ_{n-1}^2 σ_{n-2}⋯σ1."""
    if n < 2:
        return []
    return list(range(1, n - 1)) + [n - 1, n - 1] + list(range(n - 2, 0, -1))


def artin(n: int) -> Presentation:
    if n < 2:
        raise ValueError(f"artin(n) needs n >= 2, got {n}")
    alphabet = sigma_alphabet(n)
    return Presentation(alphabet, tuple(_artin_relators(alphabet, n)), f"B_{n}", ARTIN, n)


def sphere(n: int) -> Presentation:
    if n < 2:
        raise ValueError(f"sphere(n) needs n >= 2, got {n}")
    alphabet = sigma_alphabet(n)
    rels = _artin_relators(alphabet, n) + [_relator(alphabet, _surface_letters(n))]
    return Presentation(alphabet, tuple(rels), f"B_{n}(S2)", SPHERE, n)


def projective_plane(n: int) -> Presentation:
    """Van Buskirk's presentation, keeping all of σ1..σ_{n-1}, ρ1..ρn."""
    if n < 1:
        raise ValueError(f"projective_plane(n) needs n >= 1, got {n}")
    alphabet = rp2_alphabet(n)
    rho = lambda j: n - 1 + j  # noqa: E731
    rels = _artin_relators(alphabet, n)
    for i in range(1, n):
        for j in range(1, n + 1):
            if j not in (i, i + 1):
                rels.append(_relator(alphabet, [i, rho(j)], [rho(j), i]))
    for i in range(1, n):
        rels.append(_relator(alphabet, [rho(i + 1)], [-i, rho(i), -i]))
    for i in range(1, n):
        rels.append(_relator(alphabet, [-rho(i + 1), -rho(i), rho(i + 1), rho(i)], [i, i]))
    rels.append(_relator(alphabet, [rho(1), rho(1)], _surface_letters(n)))
    return Presentation(alphabet, tuple(rels), f"B_{n}(RP2)", PROJECTIVE_PLANE, n)


def family_presentation(family: str, n: int) -> Presentation:
    family = FAMILY_CODES.get(family, family)
    if family == ARTIN:
        return artin(n)
    if family == SPHERE:
        return sphere(n)
    if family == PROJECTIVE_PLANE:
        return projective_plane(n)
    raise FamilyError(f"unknown family {family!r}")


# -- named elements -------------------------------------------------------------

def _letters_alpha(n: int, which: int) -> list[int]:
    if which == 0:
        return list(range(1, n))
    if which == 1:
        return list(range(1, n - 1)) + [n - 1, n - 1]
    return list(range(1, n - 2)) + [n - 2, n - 2]


def _garside_letters(n: int) -> list[int]:
    out: list[int] = []
    for top in range(n - 1, 0, -1):
        out.extend(range(1, top + 1))
    return out


def _a_ij_letters(i: int, j: int) -> list[int]:
    middle = list(range(j - 1, i, -1))
    return middle + [i, i] + [-x for x in reversed(middle)]


def named_word(family: str, name: str, n: int, *params: int) -> Word:
    """The distinguished braid words, spelled over ``family``'s alphabet.

    Names: alpha0, alpha1, alpha2, garside, full_twist, a_ij(i, j) for any
    family; a, b, A_cap, B_cap, rho(k), Y_set(j) for the projective plane only.
    """
    family = FAMILY_CODES.get(family, family)
    if family not in FAMILIES:
        raise FamilyError(f"unknown family {family!r}")
    if n < 1 or (family != PROJECTIVE_PLANE and n < 2):
        raise ValueError(f"n={n} out of range for {family}")
    alphabet = rp2_alphabet(n) if family == PROJECTIVE_PLANE else sigma_alphabet(n)
    w = lambda letters: Word(alphabet, tuple(letters))  # noqa: E731

    if name in ("alpha0", "alpha1", "alpha2"):
        which = int(name[-1])
        if n < which + 1 or (which == 2 and n < 3):
            raise ValueError(f"{name} needs n >= {max(which + 1, 3 if which == 2 else 2)}")
        return w(_letters_alpha(n, which))
    if name == "garside":
        return w(_garside_letters(n))
    if name == "full_twist":
        return w(list(range(1, n)) * n)
    if name == "a_ij":
        if len(params) != 2:
            raise ValueError("a_ij needs (i, j)")
        i, j = params
        if not 1 <= i < j <= n:
            raise ValueError(f"a_ij needs 1 <= i < j <= n, got ({i}, {j}) with n={n}")
        return w(_a_ij_letters(i, j))

    if name not in ("rho", "a", "b", "A_cap", "B_cap", "Y_set"):
        raise FamilyError(f"unknown element name {name!r}")
    if family != PROJECTIVE_PLANE:
        raise FamilyError(f"{name!r} exists only in the projective plane family")
    rho = lambda j: n - 1 + j  # noqa: E731
    if name == "rho":
        (k,) = params
        if not 1 <= k <= n:
            raise ValueError(f"rho({k}) out of range for n={n}")
        return w([rho(k)])
    if n < 2:
        raise ValueError(f"{name} needs n >= 2")
    a = w([rho(n)] + list(range(n - 1, 0, -1)))
    b = w([rho(n - 1)] + list(range(n - 2, 0, -1)))
    if name == "a":
        return a
    if name == "b":
        return b
    if name == "A_cap":
        return power(a, n)
    if name == "B_cap":
        return power(b, n - 1)
    (j,) = params  # Y_set
    if not 0 <= j <= n - 2:
        raise ValueError(f"Y_set index {j} out of range 0..{n - 2}")
    return concat(power(a, -j), power(b, n - 1), power(a, j))


def y_set(n: int) -> list[Word]:
    """The torsion generating set of the pure RP² braid group: aⁿ, then a^-j b^{n-1} a^j."""
    fam = PROJECTIVE_PLANE
    return [named_word(fam, "A_cap", n)] + [named_word(fam, "Y_set", n, j) for j in range(n - 1)]


def pure_generators(family: str, n: int) -> list[Word]:
    """A_{i,j} for all i < j, plus ρ_k for the projective plane."""
    family = FAMILY_CODES.get(family, family)
    gens = [named_word(family, "a_ij", n, i, j) for j in range(2, n + 1) for i in range(1, j)]
    if family == PROJECTIVE_PLANE:
        gens += [named_word(family, "rho", n, k) for k in range(1, n + 1)]
    return gens


def full_twist_as_pure_product(family: str, n: int) -> Word:
    """∏_{i=1}^{n-1} (A_{i,i+1} ⋯ A_{i,n})."""
    parts = [named_word(family, "a_ij", n, i, j) for i in range(1, n) for j in range(i + 1, n + 1)]
    return concat(*parts)


def standard_perm_images(p: Presentation) -> dict[int, Permutation]:
    """σ_i ↦ (i, i+1), ρ_j ↦ identity, on n points."""
    if p.family not in FAMILIES or p.n is None:
        raise FamilyError("standard permutation images need a braid-family presentation")
    n = p.n
    images = {i: Permutation.transposition(n, i, i + 1) for i in range(1, n)}
    if p.family == PROJECTIVE_PLANE:
        for j in range(1, n + 1):
            images[n - 1 + j] = Permutation.identity(n)
    return images


# -- quotients ------------------------------------------------------------------

def add_relators(p: Presentation, ws: Sequence[Word], tag: str | None = None) -> Presentation:
    if not ws:
        return p
    for w in ws:
        if w.alphabet != p.alphabet:
            raise AlphabetMismatchError(f"word {w} is not over {p.alphabet.names}")
    tag = tag if tag is not None else ", ".join(format_word(w) for w in ws)
    new = tuple(Word(p.alphabet, cyclically_reduce(w.letters)) for w in ws)
    return Presentation(p.alphabet, p.relators + new, f"{p.label} / <<{tag}>>",
                        p.family, p.n, p.mapping_class)


def central_quotient(p: Presentation, n: int) -> Presentation:
    """Quotient by the full twist: the mapping class group of the family."""
    if p.family not in FAMILIES or p.n != n:
        raise FamilyError(f"central_quotient needs a braid-family presentation on {n} strands")
    twist = named_word(p.family, "full_twist", n)
    surface = {ARTIN: "D2", SPHERE: "S2", PROJECTIVE_PLANE: "RP2"}[p.family]
    base = family_presentation(p.family, n).label
    label = f"MCG_{n}({surface})" + p.label[len(base):]
    q = add_relators(p, [twist], tag="full_twist")
    return Presentation(q.alphabet, q.relators, label, p.family, n, True)


# -- text interfaces ------------------------------------------------------------

def parse_presentation(text: str) -> Presentation:
    """Parse ``gens: s1 s2 ; rels: s1 s2 s1 s2^-1 s1^-1 s2^-1 , s1^2``."""
    parts = {}
    for chunk in text.split(";"):
        if not chunk.strip():
            continue
        key, sep, body = chunk.partition(":")
        if not sep:
            raise MalformedWordError(f"expected 'gens:' or 'rels:' in {chunk!r}")
        parts[key.strip()] = body
    if "gens" not in parts:
        raise MalformedWordError("presentation text needs a 'gens:' section")
    alphabet = Alphabet(tuple(parts["gens"].split()))
    rel_texts = [r for r in parts.get("rels", "").split(",") if r.strip()]
    rels = tuple(Word(alphabet, cyclically_reduce(parse_word(alphabet, r).letters)) for r in rel_texts)
    return Presentation(alphabet, rels, "custom")


_GROUP_SPEC = re.compile(r"^(MCG-)?(B|BS2|BP2|D2|S2|RP2):(\d+)$")


def parse_group(spec: str) -> Presentation:
    """``B:4``, ``BS2:5``, ``BP2:3``, ``MCG-D2:4``, ``MCG-S2:3``, ``MCG-RP2:2``."""
    m = _GROUP_SPEC.match(spec.strip())
    if not m:
        raise MalformedWordError(f"unrecognised group spec {spec!r}")
    mcg, code, n = m.group(1), m.group(2), int(m.group(3))
    code = {"D2": "B", "S2": "BS2", "RP2": "BP2"}.get(code, code)
    p = family_presentation(code, n)
    return central_quotient(p, n) if mcg else p


def resolve_element(p: Presentation, token: str) -> Word:
    """A named element (``alpha1``, ``a``, ``a_ij(1,3)``, ``Y_set(0)``, ``rho(2)``) or a word."""
    m = re.match(r"^([A-Za-z_0-9]+)(?:\(([\d,\s]*)\))?$", token.strip())
    if p.family is not None and m:
        name, args = m.group(1), m.group(2)
        params = tuple(int(x) for x in args.split(",") if x.strip()) if args else ()
        try:
            return named_word(p.family, name, p.n, *params)
        except FamilyError:
            pass
    return parse_word(p.alphabet, token)


__all__ = [
    "Presentation", "artin", "sphere", "projective_plane", "named_word", "add_relators",
    "central_quotient", "parse_presentation", "parse_group", "pure_generators", "y_set",
    "standard_perm_images", "full_twist_as_pure_product", "resolve_element",
]
