"""Claim registry, suite runner and report emitter.

Every claim is a ClaimSpec with a committed set of n values and a check
function.  A check returns an Outcome (observed, expected, strength); the
runner turns it into a CheckResult.  Enumerations that run out of cosets
become ``inconclusive`` and never ``refuted``.

Strength is ``full`` when the computation decides the statement outright and
``necessary`` when only consequences in finite quotients were checked (for
instance torsion orders of elements of an infinite group).
"""

from __future__ import annotations

import csv
import io
import json
import random
import time
from dataclasses import dataclass, field
from math import factorial, gcd
from typing import Callable, Iterable, Sequence

from . import __version__
from .abelian import Abelianization, AbelianInvariants, abelian_invariants
from .cosets import CosetTable, EnumLimits, ResourceExceeded, enumerate_cosets
from .finite import (
    FiniteGroupTable, center, centralizer, concretize, element_order, identify,
    identify_subgroup, order4_pure_class_count, order4_pure_class_formula, pure_elements,
    subgroup, torsion_order_census,
)
from .garside import equal_by_action, equal_in_braid_group, normal_form
from .presentations import (
    ARTIN, PROJECTIVE_PLANE, SPHERE, Presentation, add_relators, artin, central_quotient,
    full_twist_as_pure_product, named_word, projective_plane, pure_generators, sphere,
    standard_perm_images, y_set,
)
from .schreier import subgroup_presentation
from .words import Word, concat, conjugate, evaluate_perm, power

VERIFIED, REFUTED, INCONCLUSIVE, UNSUPPORTED = "verified", "refuted", "inconclusive", "unsupported"
STATUSES = (VERIFIED, REFUTED, INCONCLUSIVE, UNSUPPORTED)
FULL, NECESSARY = "full", "necessary"
SUITES = ("disc", "sphere", "rp2", "mcg", "all")
DEFAULT_SEED = 20110311


class UnknownSuiteError(ValueError):
    pass


class _Inconclusive(Exception):
    def __init__(self, what: str, cosets_used: int):
        super().__init__(what)
        self.what = what
        self.cosets_used = cosets_used


class _Unsupported(Exception):
    pass


@dataclass(frozen=True)
class Outcome:
    observed: object
    expected: object
    strength: str = FULL


@dataclass(frozen=True)
class CheckResult:
    id: str
    n: int
    status: str
    observed: object = None
    expected: object = None
    strength: str | None = None
    locus: str = ""
    seed: int | None = None
    detail: str = ""
    wall_time: float = field(default=0.0, compare=False)

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "n": self.n,
            "locus": self.locus,
            "status": self.status,
            "strength": self.strength,
            "observed": self.observed,
            "expected": self.expected,
            "seed": self.seed,
            "detail": self.detail,
        }


@dataclass(frozen=True)
class ClaimSpec:
    id: str
    locus: str
    suite: str
    n_values: tuple[int, ...]
    check: Callable[[int, "Context"], Outcome]
    expected: str
    randomized: bool = False


class Context:
    """Limits, seed and a per-run cache of coset tables and derived objects."""

    def __init__(self, limits: EnumLimits | None = None, seed: int = DEFAULT_SEED):
        self.limits = limits or EnumLimits()
        self.seed = seed
        self._cache: dict = {}

    def table(self, p: Presentation, gens: Sequence[Word] = ()) -> CosetTable:
        key = ("table", p, tuple(gens))
        if key not in self._cache:
            out = enumerate_cosets(p, gens, self.limits)
            if isinstance(out, ResourceExceeded):
                raise _Inconclusive(f"enumeration of {p.label} exceeded max_cosets", out.cosets_used)
            self._cache[key] = out
        return self._cache[key]

    def order(self, p: Presentation) -> int:
        return self.table(p).n_cosets

    def index(self, p: Presentation, gens: Sequence[Word]) -> int:
        return self.table(p, gens).n_cosets

    def group(self, p: Presentation) -> FiniteGroupTable:
        key = ("group", p)
        if key not in self._cache:
            self._cache[key] = concretize(self.table(p))
        return self._cache[key]

    def pure_invariants(self, p: Presentation) -> AbelianInvariants:
        """Abelian invariants of the kernel of the permutation map, by Reidemeister–Schreier."""
        key = ("pure-ab", p)
        if key not in self._cache:
            t = self.table(p, pure_generators(p.family, p.n))
            sub = subgroup_presentation(p, t)
            self._cache[key] = abelian_invariants(sub.presentation)
        return self._cache[key]


# -- small helpers ------------------------------------------------------------------

def _ab(inv: AbelianInvariants) -> dict:
    return inv.to_dict()


def _is_pure(p: Presentation, w: Word) -> bool:
    return evaluate_perm(w, standard_perm_images(p)).is_identity()


def _relative_images(p: Presentation, words: Sequence[Word]) -> list[int] | None:
    """Images in a cyclic abelianization, as multiples of the image of the first generator.

    The sign of the cyclic generator chosen by the Smith form is arbitrary, so
    images are compared relative to σ1, which generates.
    """
    ab = Abelianization(p)
    if ab.invariants.free_rank or len(ab.invariants.torsion) != 1:
        return None
    (m,) = ab.invariants.torsion
    unit = ab.image(p.generator(1)).torsion[0]
    inv_unit = pow(unit, -1, m)
    return [(ab.image(w).torsion[0] * inv_unit) % m for w in words]


def _label_of(ctx: Context, p: Presentation) -> str:
    return identify(ctx.group(p)).label


def _cyclic_label(ctx: Context, p: Presentation) -> str:
    """Z_k / trivial / other, decided from the order and the abelianization."""
    order = ctx.order(p)
    if order == 1:
        return "trivial"
    inv = abelian_invariants(p)
    if inv.free_rank == 0 and inv.torsion == (order,):
        return f"Z{order}"
    return _label_of(ctx, p)


def _mcg(family: str, n: int) -> Presentation:
    base = {ARTIN: artin, SPHERE: sphere, PROJECTIVE_PLANE: projective_plane}[family](n)
    return central_quotient(base, n)


def _necessary_torsion(p: Presentation, w: Word, k: int) -> bool:
    """w^k dies in the abelianization and in the symmetric group (consequences of order dividing k)."""
    wk = power(w, k)
    ab = Abelianization(p).image(wk)
    return _is_pure(p, wk) and all(r == 0 for r in ab.torsion) and all(x == 0 for x in ab.free)


# -- theorem table -------------------------------------------------------------------

@dataclass(frozen=True)
class TableRow:
    family: str
    n: int
    G: int | None
    NG: int | None
    TG: int | None
    NTG: int | None

    def as_tuple(self) -> tuple:
        return (self.G, self.NG, self.TG, self.NTG)


TABLE_FAMILIES = ("B", "BS2", "BP2", "P", "PS2", "PP2",
                  "MCG-D2", "MCG-S2", "MCG-RP2", "PMCG-D2", "PMCG-S2", "PMCG-RP2")


def theorem_table(family: str, n: int) -> TableRow:
    """Claimed (G, NG, TG, NTG); None where the quantity is undefined or not claimed."""
    def row(*v):
        return TableRow(family, n, *v)

    if family == "B":
        return row(1 if n == 2 else 2, 1, None, None)
    if family == "BS2":
        return row(2, 1, 2, 1 if n % 2 else 2)
    if family == "BP2":
        return row(2, 2, 2, 2)
    if family == "P":
        k = n * (n - 1) // 2
        return row(k, k, None, None)
    if family == "PS2":
        k = (n * (n - 3) + 2) // 2
        return row(k, k, None, None)
    if family == "PP2":
        return row(n, n, n, n)
    if family == "MCG-D2":
        return row(1, 1, 1, 1) if n == 2 else row(2, 1, 2, 2)
    if family == "MCG-S2":
        return row(2, 1, 2, 1 if n % 2 else 2)
    if family == "MCG-RP2":
        return row(2, 2, 2, 2)
    if family == "PMCG-D2":
        k = n * (n - 1) // 2 - 1
        return row(k, k, None, None)
    if family == "PMCG-S2":
        k = n * (n - 3) // 2
        return row(k, k, None, None)
    if family == "PMCG-RP2":
        return row(n, n, n, n)
    raise ValueError(f"unknown table family {family!r}")


def _family_setup(family: str, n: int):
    """(ambient presentation, generating set, normal generating set, pure?) for the bound check.

    For pure families the generating set is checked by index n! plus purity in
    the ambient braid or mapping class group.
    """
    if family in ("B", "MCG-D2"):
        p = artin(n) if family == "B" else _mcg(ARTIN, n)
        gens = [p.generator(1)] if n == 2 else [p.generator(1), named_word(ARTIN, "alpha0", n)]
        return p, gens, [p.generator(1)], False
    if family in ("BS2", "MCG-S2"):
        p = sphere(n) if family == "BS2" else _mcg(SPHERE, n)
        gens = [named_word(SPHERE, "alpha0", n), named_word(SPHERE, "alpha1", n)]
        return p, gens, [p.generator(1)], False
    if family in ("BP2", "MCG-RP2"):
        p = projective_plane(n) if family == "BP2" else _mcg(PROJECTIVE_PLANE, n)
        gens = [named_word(PROJECTIVE_PLANE, "a", n), named_word(PROJECTIVE_PLANE, "b", n)]
        return p, gens, gens, False
    if family in ("P", "PMCG-D2"):
        p = artin(n) if family == "P" else _mcg(ARTIN, n)
        gens = pure_generators(ARTIN, n)
        if family == "PMCG-D2":
            gens = gens[1:]  # A_{1,2} is redundant modulo the full twist
        return p, gens, gens, True
    if family in ("PS2", "PMCG-S2"):
        p = sphere(n) if family == "PS2" else _mcg(SPHERE, n)
        gens = [named_word(SPHERE, "a_ij", n, i, j) for j in range(4, n + 1) for i in range(2, j)]
        if family == "PS2":
            gens.append(named_word(SPHERE, "full_twist", n))
        return p, gens, gens, True
    if family in ("PP2", "PMCG-RP2"):
        p = projective_plane(n) if family == "PP2" else _mcg(PROJECTIVE_PLANE, n)
        return p, y_set(n), y_set(n), True
    raise ValueError(f"unknown table family {family!r}")


def _bounds_outcome(family: str, n: int, ctx: Context) -> Outcome:
    p, gens, normal_gens, pure = _family_setup(family, n)
    if pure:
        lower_ab = ctx.pure_invariants(p).min_generators
        ok = ctx.index(p, gens) == factorial(n) and all(_is_pure(p, g) for g in gens)
        upper_g = len(gens) if ok else None
        upper_ng = upper_g
        lower_g = lower_ab
    else:
        lower_ab = abelian_invariants(p).min_generators
        lower_g = lower_ab
        if n >= 3:
            # the image in S_n is nonabelian, so the group is not cyclic
            s1, s2 = (evaluate_perm(p.generator(i), standard_perm_images(p)) for i in (1, 2))
            if s1 @ s2 != s2 @ s1:
                lower_g = max(lower_g, 2)
        upper_g = len(gens) if ctx.index(p, gens) == 1 else None
        upper_ng = len(normal_gens) if ctx.order(add_relators(p, normal_gens)) == 1 else None
    row = theorem_table(family, n)
    observed = {"G": [lower_g, upper_g], "NG": [lower_ab, upper_ng]}
    expected = {"G": [row.G, row.G], "NG": [row.NG, row.NG]}
    return Outcome(observed, expected)


def lower_and_upper_bound_check(family: str, n: int, limits: EnumLimits | None = None,
                                seed: int = DEFAULT_SEED) -> CheckResult:
    """Abelianization lower bound against an explicit (normal) generating set."""
    claim = ClaimSpec(f"bounds-{family}", "Prop. 3.1 pattern", "all", (n,),
                      lambda m, c: _bounds_outcome(family, m, c), "G, NG")
    return _run_claim(claim, n, Context(limits, seed))


# -- random braid pairs -------------------------------------------------------------

def random_word_pairs(seed: int, count: int, max_n: int = 5, max_len: int = 40, min_n: int = 2):
    """Seeded (n, u, v) triples of σ-letter tuples; every other pair is equal by construction.

    Equal pairs come from inserting free cancellations, braid relators and
    commutators into a copy of u, staying within ``max_len``.
    """
    rng = random.Random(seed)
    out = []
    for k in range(count):
        n = rng.randint(min_n, max_n)
        u = [rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(rng.randint(0, max_len))]
        if k % 2:
            u = u[: max_len - 12] if len(u) > max_len - 12 else u
            v = list(u)
            for _ in range(8):
                pos = rng.randint(0, len(v))
                i = rng.randint(1, n - 1)
                choice = rng.random()
                if choice < 0.3:
                    ins = [i, -i] if rng.random() < 0.5 else [-i, i]
                elif choice < 0.6 and i < n - 1:
                    ins = [i, i + 1, i, -(i + 1), -i, -(i + 1)]
                else:
                    j = rng.randint(1, n - 1)
                    ins = [i, j, -i, -j] if abs(i - j) >= 2 else []
                if len(v) + len(ins) <= max_len:
                    v[pos:pos] = ins
        else:
            v = [rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(rng.randint(0, max_len))]
        out.append((n, tuple(u), tuple(v)))
    return out


def oracle_agreement(pairs) -> dict:
    agree = equal = 0
    for n, u, v in pairs:
        a = equal_in_braid_group(u, v, n)
        agree += a == equal_by_action(u, v, n)
        equal += a
    return {"pairs": len(pairs), "agree": agree, "equal_pairs": equal}


# -- claim checks ---------------------------------------------------------------------

def _w(p: Presentation, name: str, *params: int) -> Word:
    return named_word(p.family, name, p.n, *params)


# disc

def _ng_normcl_s1(n, ctx):
    p = artin(n)
    return Outcome(ctx.order(add_relators(p, [p.generator(1)])), 1)


def _conj_delta(n, ctx):
    p = artin(n)
    d = _w(p, "alpha0")
    obs = [equal_in_braid_group(conjugate(p.generator(1), power(d, i)), p.generator(i + 1), n)
           for i in range(1, n - 1)]
    return Outcome(obs, [True] * (n - 2))


def _delta_power(n, ctx):
    p = artin(n)
    return Outcome(equal_in_braid_group(power(_w(p, "alpha0"), n), _w(p, "full_twist"), n), True)


def _alpha1_root(n, ctx):
    p = artin(n)
    return Outcome(equal_in_braid_group(power(_w(p, "alpha1"), n - 1), _w(p, "full_twist"), n), True)


def _ft_product(n, ctx):
    p = artin(n)
    return Outcome(equal_in_braid_group(full_twist_as_pure_product(ARTIN, n), _w(p, "full_twist"), n), True)


def _ft_central(n, ctx):
    p = artin(n)
    ft = _w(p, "full_twist")
    obs = all(equal_in_braid_group(concat(ft, p.generator(i)), concat(p.generator(i), ft), n)
              for i in range(1, n))
    nf = normal_form(ft, n)
    return Outcome({"commutes_with_generators": obs, "inf": nf.inf, "factors": len(nf.factors)},
                   {"commutes_with_generators": True, "inf": 2, "factors": 0})


def _aij_pure(n, ctx):
    p = artin(n)
    return Outcome(all(_is_pure(p, w) for w in pure_generators(ARTIN, n)), True)


def _aij_index(n, ctx):
    p = artin(n)
    return Outcome(ctx.index(p, pure_generators(ARTIN, n)), factorial(n))


def _pure_ab_artin(n, ctx):
    return Outcome(_ab(ctx.pure_invariants(artin(n))), {"free_rank": n * (n - 1) // 2, "torsion": []})


def _ab_artin(n, ctx):
    return Outcome(_ab(abelian_invariants(artin(n))), {"free_rank": 1, "torsion": []})


def _oracle(n, ctx):
    pairs = random_word_pairs(ctx.seed + n, 250, max_n=n, min_n=n)
    stats = oracle_agreement(pairs)
    return Outcome({"pairs": stats["pairs"], "agree": stats["agree"]},
                   {"pairs": stats["pairs"], "agree": stats["pairs"]})


# sphere

def _sphere_order(n, ctx):
    p = sphere(n)
    return Outcome({"order": ctx.order(p), "label": _label_of(ctx, p)}, {"order": 2, "label": "Z2"})


def _b3s2(n, ctx):
    p = sphere(n)
    return Outcome({"order": ctx.order(p), "label": _label_of(ctx, p)}, {"order": 12, "label": "Dic12"})


def _unique_involution(n, ctx):
    p = sphere(n)
    G = ctx.group(p)
    invols = [g for g in range(G.order) if element_order(G, g) == 2]
    ft = G.element(_w(p, "full_twist"))
    return Outcome({"involutions": len(invols), "is_full_twist": invols == [ft],
                    "central": all(g in center(G) for g in invols)},
                   {"involutions": 1, "is_full_twist": True, "central": True})


def _ab_sphere(n, ctx):
    return Outcome(_ab(abelian_invariants(sphere(n))), {"free_rank": 0, "torsion": [2 * (n - 1)]})


def _alpha_images(n, ctx):
    p = sphere(n)
    obs = _relative_images(p, [_w(p, f"alpha{i}") for i in range(3)])
    return Outcome(obs, [n - 1, n % (2 * (n - 1)), n - 1])


def _torsion_orders_sphere(n, ctx):
    p = sphere(n)
    claimed = [2 * n, 2 * (n - 1), 2 * (n - 2)]
    alphas = [_w(p, f"alpha{i}") for i in range(3)]
    if n == 3:
        G = ctx.group(p)
        return Outcome([element_order(G, G.element(a)) for a in alphas], claimed)
    obs = [_necessary_torsion(p, a, k) for a, k in zip(alphas, claimed)]
    return Outcome(obs, [True] * 3, NECESSARY)


def _roots_of_ft(n, ctx):
    p = sphere(n)
    ft = _w(p, "full_twist")
    powers = [power(_w(p, "alpha0"), n), power(_w(p, "alpha1"), n - 1), power(_w(p, "alpha2"), n - 2)]
    if n == 3:
        G = ctx.group(p)
        return Outcome([G.element(w) == G.element(ft) for w in powers], [True] * 3)
    # α0 and α1 already satisfy the identity in B_n; α2 only via necessary conditions
    exact = [equal_in_braid_group(w, ft, n) for w in powers[:2]]
    ab = Abelianization(p)
    a2 = _is_pure(p, powers[2]) and ab.image(powers[2]) == ab.image(ft)
    return Outcome(exact + [a2], [True] * 3, NECESSARY)


def _gen_alpha01(n, ctx):
    p = sphere(n)
    return Outcome(ctx.index(p, [_w(p, "alpha0"), _w(p, "alpha1")]), 1)


def _normcl_alpha1(n, ctx):
    p = sphere(n)
    return Outcome(ctx.order(add_relators(p, [_w(p, "alpha1")])), gcd(n, 2))


def _even_no_torsion_normgen(n, ctx):
    p = sphere(n)
    m = 2 * (n - 1)
    images = _relative_images(p, [_w(p, f"alpha{i}") for i in range(3)])
    proper = [gcd(x, m) > 1 for x in images]
    q = add_relators(p, [_w(p, "alpha1")])
    return Outcome({"representatives_proper": proper, "quotient_alpha1": _cyclic_label(ctx, q)},
                   {"representatives_proper": [True] * 3, "quotient_alpha1": "Z2"}, NECESSARY)


def _ntg_sphere(n, ctx):
    p = sphere(n)
    if n % 2:
        obs = ctx.order(add_relators(p, [_w(p, "alpha1")]))
        return Outcome({"NTG_upper_1": obs == 1}, {"NTG_upper_1": True}, FULL if n == 3 else NECESSARY)
    m = 2 * (n - 1)
    images = _relative_images(p, [_w(p, f"alpha{i}") for i in range(3)])
    lower2 = all(gcd(x, m) > 1 for x in images)
    upper2 = ctx.index(p, [_w(p, "alpha0"), _w(p, "alpha1")]) == 1
    return Outcome({"NTG_lower_2": lower2, "NTG_upper_2": upper2},
                   {"NTG_lower_2": True, "NTG_upper_2": True}, NECESSARY)


def _quotient_alpha0(n, ctx):
    p = sphere(n)
    return Outcome(_cyclic_label(ctx, add_relators(p, [_w(p, "alpha0")])), f"Z{n - 1}")


def _quotient_alpha2(n, ctx):
    p = sphere(n)
    q = add_relators(p, [_w(p, "alpha2")])
    if n == 3:
        return Outcome({"order": ctx.order(q), "label": _label_of(ctx, q)}, {"order": 6, "label": "S3"})
    return Outcome(_cyclic_label(ctx, q), f"Z{n - 1}")


def _pure_ab_sphere(n, ctx):
    return Outcome(_ab(ctx.pure_invariants(sphere(n))), {"free_rank": n * (n - 3) // 2, "torsion": [2]})


def _p3s2(n, ctx):
    p = sphere(n)
    t = ctx.table(p, pure_generators(SPHERE, n))
    sub = subgroup_presentation(p, t)
    return Outcome({"index": t.n_cosets, "order": ctx.order(sub.presentation)}, {"index": 6, "order": 2})


# rp2

def _b1rp2(n, ctx):
    return Outcome(ctx.order(projective_plane(n)), 2)


def _b2rp2(n, ctx):
    p = projective_plane(n)
    return Outcome({"order": ctx.order(p), "label": _label_of(ctx, p)}, {"order": 16, "label": "Q16"})


def _p2rp2(n, ctx):
    p = projective_plane(n)
    G = ctx.group(p)
    pure = pure_elements(G)
    gens = subgroup(G, [G.element(w) for w in pure_generators(PROJECTIVE_PLANE, n)])
    return Outcome({"order": len(pure), "generated_by_rho_and_A": gens == pure,
                    "label": identify_subgroup(G, pure).label},
                   {"order": 8, "generated_by_rho_and_A": True, "label": "Q8"})


def _ab_rp2(n, ctx):
    return Outcome(_ab(abelian_invariants(projective_plane(n))), {"free_rank": 0, "torsion": [2, 2]})


def _ab_image_a(n, ctx):
    p = projective_plane(n)
    ab = Abelianization(p)
    s, r = ab.image(p.generator(1)), ab.image(_w(p, "rho", 1))
    both = ab.image(concat(p.generator(1), _w(p, "rho", 1)))
    # a = ρ_n σ_{n-1}⋯σ_1 has σ-exponent n-1 and ρ-exponent 1
    expected_a = both if n % 2 == 0 else r
    return Outcome({"a_is_(n-1)sigma_plus_rho": ab.image(_w(p, "a")) == expected_a,
                    "sigma_rho_independent": len({s, r, both}) == 3 and any(s.torsion) and any(r.torsion)},
                   {"a_is_(n-1)sigma_plus_rho": True, "sigma_rho_independent": True})


def _orders_ab_n2(n, ctx):
    p = projective_plane(n)
    G = ctx.group(p)
    census = torsion_order_census(G)
    return Outcome({"a": element_order(G, G.element(_w(p, "a"))), "b": element_order(G, G.element(_w(p, "b"))),
                    "orders_divide_4n_or_4(n-1)": all((4 * n) % k == 0 or (4 * (n - 1)) % k == 0 for k in census)},
                   {"a": 4 * n, "b": 4 * (n - 1), "orders_divide_4n_or_4(n-1)": True})


def _gen_ab(n, ctx):
    p = projective_plane(n)
    return Outcome(ctx.index(p, [_w(p, "a"), _w(p, "b")]), 1)


def _rp2_torsion(n, ctx):
    p = projective_plane(n)
    a, b = _w(p, "a"), _w(p, "b")
    if n == 2:
        G = ctx.group(p)
        return Outcome([element_order(G, G.element(a)), element_order(G, G.element(b))], [8, 4])
    return Outcome([_necessary_torsion(p, a, 4 * n), _necessary_torsion(p, b, 4 * (n - 1))],
                   [True, True], NECESSARY)


def _quotient_rp2(name):
    def check(n, ctx):
        p = projective_plane(n)
        return Outcome(_cyclic_label(ctx, add_relators(p, [_w(p, name)])), "Z2")
    return check


def _y_index(n, ctx):
    p = projective_plane(n)
    Y = y_set(n)
    return Outcome({"index": ctx.index(p, Y), "all_pure": all(_is_pure(p, y) for y in Y), "size": len(Y)},
                   {"index": factorial(n), "all_pure": True, "size": n})


def _y_torsion(n, ctx):
    p = projective_plane(n)
    Y = y_set(n)
    if n == 2:
        G = ctx.group(p)
        return Outcome([element_order(G, G.element(y)) for y in Y], [4] * len(Y))
    return Outcome([_necessary_torsion(p, y, 4) for y in Y], [True] * len(Y), NECESSARY)


def _pure_ab_rp2(n, ctx):
    return Outcome(_ab(ctx.pure_invariants(projective_plane(n))), {"free_rank": 0, "torsion": [2] * n})


def _centralizers(n, ctx):
    p = projective_plane(n)
    G = ctx.group(p)
    obs = {}
    for name in ("a", "b"):
        g = G.element(_w(p, name))
        c = centralizer(G, g)
        obs[name] = {"size": len(c), "cyclic_on_element": c == subgroup(G, [g])}
    return Outcome(obs, {"a": {"size": 4 * n, "cyclic_on_element": True},
                         "b": {"size": 4 * (n - 1), "cyclic_on_element": True}})


def _class_count(n, ctx):
    if n != 2:
        raise _Unsupported(f"B_{n}(RP2) is infinite; formula value {order4_pure_class_formula(n)} not checked")
    G = ctx.group(projective_plane(n))
    return Outcome({"pure_conjugacy": order4_pure_class_count(n, G),
                    "ambient_conjugacy": order4_pure_class_count(n, G, by="ambient")},
                   {"pure_conjugacy": order4_pure_class_formula(n), "ambient_conjugacy": 2})


def _erratum(n, ctx):
    raise _Unsupported("B_3(RP2) is infinite; the five-class count is not decidable here")


def _h3_action(n, ctx):
    raise _Unsupported("homological action on the universal cover is out of scope; torsion generation is checked elsewhere")


# mcg

def _mcg_d2_n2(n, ctx):
    p = _mcg(ARTIN, n)
    return Outcome({"label": _cyclic_label(ctx, p), "pure_index": ctx.index(p, pure_generators(ARTIN, n)),
                    "order": ctx.order(p)},
                   {"label": "Z2", "pure_index": 2, "order": 2})


def _ab_mcg_d2(n, ctx):
    return Outcome(_ab(abelian_invariants(_mcg(ARTIN, n))), {"free_rank": 0, "torsion": [n * (n - 1)]})


def _ntg_mcg_d2(n, ctx):
    p = _mcg(ARTIN, n)
    images = _relative_images(p, [_w(p, "alpha0"), _w(p, "alpha1")])
    m = n * (n - 1)
    return Outcome({"images": images, "proper": [gcd(x, m) > 1 for x in images],
                    "upper_2": ctx.index(p, [_w(p, "alpha0"), _w(p, "alpha1")]) == 1},
                   {"images": [n - 1, n], "proper": [True, True], "upper_2": True}, NECESSARY)


def _pure_ab_mcg_d2(n, ctx):
    inv = ctx.pure_invariants(_mcg(ARTIN, n))
    return Outcome({"free_rank": inv.free_rank, "min_generators": inv.min_generators},
                   {"free_rank": n * (n - 1) // 2 - 1, "min_generators": n * (n - 1) // 2 - 1})


def _mcg3_s2(n, ctx):
    p = _mcg(SPHERE, n)
    G = ctx.group(p)
    orders = [element_order(G, G.element(_w(p, f"alpha{i}"))) for i in range(3)]
    return Outcome({"order": G.order, "label": identify(G).label, "alpha_orders": orders},
                   {"order": 6, "label": "S3", "alpha_orders": [3, 2, 1]})


def _mcg_s2_quotients(n, ctx):
    p = _mcg(SPHERE, n)
    obs = {f"alpha{i}": _cyclic_label(ctx, add_relators(p, [_w(p, f"alpha{i}")])) for i in range(3)}
    exp = {"alpha0": f"Z{n - 1}", "alpha1": "trivial" if n % 2 else "Z2",
           "alpha2": "S3" if n == 3 else f"Z{n - 1}"}
    return Outcome(obs, exp)


def _pure_ab_mcg_s2(n, ctx):
    return Outcome(_ab(ctx.pure_invariants(_mcg(SPHERE, n))), {"free_rank": n * (n - 3) // 2, "torsion": []})


def _mcg_rp2_gen(n, ctx):
    p = _mcg(PROJECTIVE_PLANE, n)
    return Outcome(ctx.index(p, [_w(p, "a"), _w(p, "b")]), 1)


def _mcg_rp2_orders(n, ctx):
    p = _mcg(PROJECTIVE_PLANE, n)
    G = ctx.group(p)
    return Outcome({"order": G.order, "a": element_order(G, G.element(_w(p, "a"))),
                    "b": element_order(G, G.element(_w(p, "b")))},
                   {"order": 8, "a": 2 * n, "b": 2 * (n - 1)})


def _mcg_rp2_quotients(n, ctx):
    p = _mcg(PROJECTIVE_PLANE, n)
    obs = {x: _cyclic_label(ctx, add_relators(p, [_w(p, x)])) for x in ("a", "b")}
    return Outcome(obs, {"a": "Z2", "b": "Z2"})


def _pure_ab_mcg_rp2(n, ctx):
    return Outcome(_ab(ctx.pure_invariants(_mcg(PROJECTIVE_PLANE, n))), {"free_rank": 0, "torsion": [2] * n})


def _bounds(family):
    return lambda n, ctx: _bounds_outcome(family, n, ctx)


def _r(lo: int, hi: int) -> tuple[int, ...]:
    return tuple(range(lo, hi + 1))


CLAIMS: tuple[ClaimSpec, ...] = (
    # disc
    ClaimSpec("prop1.3a-normcl-s1", "Prop. 1.3(a)", "disc", _r(2, 6), _ng_normcl_s1, "B_n/<<s1>> trivial"),
    ClaimSpec("prop1.3a-bounds", "Prop. 1.3(a)", "disc", _r(2, 6), _bounds("B"), "G, NG of B_n"),
    ClaimSpec("prop1.3a-conj-delta", "Sec. 2, proof of Prop. 1.3(a)", "disc", _r(3, 5), _conj_delta,
              "delta^i s1 delta^-i = s_{i+1}"),
    ClaimSpec("prop1.3b-pure-ab", "Prop. 1.3(b)", "disc", _r(3, 4), _pure_ab_artin, "P_n^Ab = Z^{n(n-1)/2}"),
    ClaimSpec("prop1.3b-bounds", "Prop. 1.3(b)", "disc", _r(3, 4), _bounds("P"), "G, NG of P_n"),
    ClaimSpec("eq9-aij-pure", "Eq. (9)", "disc", _r(2, 6), _aij_pure, "A_ij pure"),
    ClaimSpec("eq9-aij-index", "Eq. (9)", "disc", _r(3, 4), _aij_index, "<A_ij> has index n!"),
    ClaimSpec("eq13-delta-power", "Eq. (13)", "disc", _r(3, 5), _delta_power, "delta^n = Delta^2"),
    ClaimSpec("eq5-alpha1-root", "Eq. (5)", "disc", _r(3, 5), _alpha1_root, "alpha1^{n-1} = Delta^2 in B_n"),
    ClaimSpec("eq14-ft-product", "Eq. (14)", "disc", _r(3, 5), _ft_product, "Delta^2 = prod A_ij"),
    ClaimSpec("ft-central", "Sec. 1, full twist", "disc", _r(3, 5), _ft_central, "Delta^2 central, inf 2"),
    ClaimSpec("sec1-ab-artin", "Sec. 1", "disc", _r(2, 6), _ab_artin, "B_n^Ab = Z"),
    ClaimSpec("garside-oracle", "normal form vs Artin action", "disc", _r(3, 5), _oracle,
              "100% agreement", randomized=True),
    # sphere
    ClaimSpec("sec1-b2s2-order", "Sec. 1", "sphere", (2,), _sphere_order, "Z2"),
    ClaimSpec("sec1-b3s2-dic12", "Sec. 1", "sphere", (3,), _b3s2, "Dic12"),
    ClaimSpec("sec1-unique-involution", "Sec. 1", "sphere", (3,), _unique_involution,
              "Delta^2 is the unique involution and central"),
    ClaimSpec("sec1-ab-sphere", "Sec. 1", "sphere", _r(3, 8), _ab_sphere, "Z_{2(n-1)}"),
    ClaimSpec("sec3-alpha-images", "Sec. 3, proof of Thm 1.4(b)", "sphere", _r(3, 8), _alpha_images,
              "alpha_i -> n-1, n, n-1"),
    ClaimSpec("thm1.1-torsion-orders", "Thm 1.1", "sphere", _r(3, 6), _torsion_orders_sphere,
              "orders 2n, 2(n-1), 2(n-2)"),
    ClaimSpec("eq5-roots-ft", "Eq. (5)", "sphere", _r(3, 6), _roots_of_ft, "alpha_i^{n-i} = Delta^2"),
    ClaimSpec("sec1-gen-alpha01", "Sec. 1", "sphere", _r(3, 6), _gen_alpha01, "<alpha0, alpha1> = B_n(S2)"),
    ClaimSpec("prop1.2-normcl-alpha1", "Prop. 1.2", "sphere", _r(3, 8), _normcl_alpha1, "index gcd(n,2)"),
    ClaimSpec("thm1.4a-bounds", "Thm 1.4(a)", "sphere", _r(3, 6), _bounds("BS2"), "G=2, NG=1"),
    ClaimSpec("thm1.4b-even", "Thm 1.4(b)", "sphere", (4, 6, 8), _even_no_torsion_normgen,
              "no torsion normal generator; quotient by alpha1 Z2"),
    ClaimSpec("thm1.4c-ntg", "Thm 1.4(c)", "sphere", _r(3, 8), _ntg_sphere, "NTG 1 odd / 2 even"),
    ClaimSpec("thm1.4d-alpha0", "Thm 1.4(d)", "sphere", _r(3, 8), _quotient_alpha0, "Z_{n-1}"),
    ClaimSpec("thm1.4d-alpha2", "Thm 1.4(d)", "sphere", _r(3, 8), _quotient_alpha2, "Z_{n-1}, S3 at n=3"),
    ClaimSpec("thm1.4e-pure-ab", "Thm 1.4(e)", "sphere", _r(3, 5), _pure_ab_sphere, "Z^{n(n-3)/2} + Z2"),
    ClaimSpec("thm1.4e-bounds", "Thm 1.4(e)", "sphere", _r(3, 5), _bounds("PS2"), "G = NG = (n(n-3)+2)/2"),
    ClaimSpec("eq10-p3s2-order", "Eq. (10)", "sphere", (3,), _p3s2, "|P_3(S2)| = 2"),
    # rp2
    ClaimSpec("sec1-b1rp2-order", "Sec. 1", "rp2", (1,), _b1rp2, "Z2"),
    ClaimSpec("sec1-b2rp2-q16", "Sec. 1", "rp2", (2,), _b2rp2, "Q16"),
    ClaimSpec("sec1-p2rp2-q8", "Sec. 1", "rp2", (2,), _p2rp2, "Q8"),
    ClaimSpec("sec1-ab-rp2", "Prop. 2 remark", "rp2", _r(2, 6), _ab_rp2, "Z2 + Z2"),
    ClaimSpec("sec1-ab-image-a", "Prop. 2 remark", "rp2", _r(2, 6), _ab_image_a, "a -> (n-1, 1)"),
    ClaimSpec("sec1-orders-a-b", "Sec. 1", "rp2", (2,), _orders_ab_n2, "a, b of orders 4n, 4(n-1)"),
    ClaimSpec("thm1.5a-gen-ab", "Thm 1.5(a)", "rp2", _r(2, 5), _gen_ab, "<a, b> = B_n(RP2)"),
    ClaimSpec("thm1.5ab-bounds", "Thm 1.5(a),(b)", "rp2", _r(2, 5), _bounds("BP2"), "G = NG = 2"),
    ClaimSpec("thm1.5ab-torsion", "Thm 1.5(a),(b)", "rp2", _r(2, 5), _rp2_torsion, "a, b torsion"),
    ClaimSpec("thm1.5c-quotient-a", "Thm 1.5(c)", "rp2", _r(2, 5), _quotient_rp2("a"), "Z2"),
    ClaimSpec("thm1.5c-quotient-b", "Thm 1.5(c)", "rp2", _r(2, 5), _quotient_rp2("b"), "Z2"),
    ClaimSpec("thm1.5d-y-index", "Thm 1.5(d)", "rp2", _r(2, 4), _y_index, "<Y> has index n!, Y pure"),
    ClaimSpec("thm1.5d-y-torsion", "Thm 1.5(d)", "rp2", _r(2, 4), _y_torsion, "Y of order 4"),
    ClaimSpec("thm1.5d-pure-ab", "Thm 1.5(d)", "rp2", _r(2, 3), _pure_ab_rp2, "Z2^n"),
    ClaimSpec("thm1.5d-bounds", "Thm 1.5(d)", "rp2", _r(2, 3), _bounds("PP2"), "G = NG = n"),
    ClaimSpec("prop4.1-centralizers", "Prop. 4.1", "rp2", (2,), _centralizers, "Z(a) = <a>, Z(b) = <b>"),
    ClaimSpec("prop4.2-class-count", "Prop. 4.2", "rp2", _r(2, 4), _class_count, "(n-2)!(2n-1)"),
    ClaimSpec("rem4.1-erratum", "Remark after Prop. 4.1", "rp2", (3,), _erratum, "five classes"),
    ClaimSpec("prop6.1-h3-action", "Prop. 6.1", "rp2", (2,), _h3_action, "trivial action"),
    # mcg
    ClaimSpec("prop5.1-mcg-d2-n2", "Prop. 5.1 proof", "mcg", (2,), _mcg_d2_n2, "Z2, trivial pure part"),
    ClaimSpec("prop5.1-ab-mcg-d2", "Prop. 5.1 proof", "mcg", _r(2, 6), _ab_mcg_d2, "Z_{n(n-1)}"),
    ClaimSpec("prop5.1a-bounds", "Prop. 5.1(a)", "mcg", _r(2, 6), _bounds("MCG-D2"), "G, NG"),
    ClaimSpec("prop5.1a-ntg", "Prop. 5.1(a)", "mcg", _r(3, 6), _ntg_mcg_d2, "NTG = 2"),
    ClaimSpec("prop5.1b-pure-ab", "Prop. 5.1(b)", "mcg", _r(3, 4), _pure_ab_mcg_d2, "rank n(n-1)/2 - 1"),
    ClaimSpec("prop5.1b-bounds", "Prop. 5.1(b)", "mcg", _r(3, 4), _bounds("PMCG-D2"), "G = NG"),
    ClaimSpec("prop5.2-mcg3-s3", "Prop. 5.2", "mcg", (3,), _mcg3_s2, "S3; alpha orders 3, 2, 1"),
    ClaimSpec("prop5.2-quotients", "Prop. 5.2", "mcg", _r(3, 6), _mcg_s2_quotients, "quotients by alpha_i"),
    ClaimSpec("thm5.3a-bounds", "Thm 5.3(a)", "mcg", _r(3, 6), _bounds("MCG-S2"), "G = 2, NG = 1"),
    ClaimSpec("thm5.3c-pure-ab", "Thm 5.3(c)", "mcg", _r(4, 5), _pure_ab_mcg_s2, "Z^{n(n-3)/2}"),
    ClaimSpec("thm5.3c-bounds", "Thm 5.3(c)", "mcg", _r(4, 5), _bounds("PMCG-S2"), "G = NG = n(n-3)/2"),
    ClaimSpec("prop5.3a-gen", "Prop. 5.3(a)", "mcg", _r(2, 4), _mcg_rp2_gen, "<a, b> generates"),
    ClaimSpec("prop5.3a-orders", "Prop. 5.3(a)", "mcg", (2,), _mcg_rp2_orders, "orders 2n, 2(n-1)"),
    ClaimSpec("prop5.3bc-bounds", "Prop. 5.3(b),(c)", "mcg", _r(2, 4), _bounds("MCG-RP2"), "G = NG = 2"),
    ClaimSpec("prop5.3d-quotients", "Prop. 5.3(d)", "mcg", _r(2, 4), _mcg_rp2_quotients, "Z2"),
    ClaimSpec("prop5.4-pure-ab", "Prop. 5.4", "mcg", _r(2, 3), _pure_ab_mcg_rp2, "Z2^n"),
    ClaimSpec("prop5.4-bounds", "Prop. 5.4", "mcg", _r(2, 3), _bounds("PMCG-RP2"), "G = NG = n"),
)

if len({c.id for c in CLAIMS}) != len(CLAIMS):
    raise RuntimeError("duplicate claim ids")


# -- running ----------------------------------------------------------------------------

def _run_claim(claim: ClaimSpec, n: int, ctx: Context) -> CheckResult:
    seed = ctx.seed if claim.randomized else None
    start = time.perf_counter()
    try:
        out = claim.check(n, ctx)
    except _Inconclusive as exc:
        return CheckResult(claim.id, n, INCONCLUSIVE, {"cosets_used": exc.cosets_used}, claim.expected,
                           None, claim.locus, seed, exc.what, time.perf_counter() - start)
    except _Unsupported as exc:
        return CheckResult(claim.id, n, UNSUPPORTED, None, claim.expected, None, claim.locus, seed,
                           str(exc), time.perf_counter() - start)
    status = VERIFIED if out.observed == out.expected else REFUTED
    return CheckResult(claim.id, n, status, out.observed, out.expected, out.strength, claim.locus, seed,
                       "", time.perf_counter() - start)


def claims_for(suite: str) -> list[ClaimSpec]:
    if suite not in SUITES:
        raise UnknownSuiteError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    return [c for c in CLAIMS if suite == "all" or c.suite == suite]


def run_suite(suite: str, n_range: Iterable[int] | None = None, limits: EnumLimits | None = None,
              seed: int = DEFAULT_SEED) -> list[CheckResult]:
    """Run every claim of ``suite`` at each committed n that lies in ``n_range`` (all if None)."""
    claims = claims_for(suite)
    wanted = None if n_range is None else set(n_range)
    ctx = Context(limits, seed)
    results = []
    for claim in sorted(claims, key=lambda c: c.id):
        for n in claim.n_values:
            if wanted is None or n in wanted:
                results.append(_run_claim(claim, n, ctx))
    return sorted(results, key=lambda r: (r.id, r.n))


def exit_code(results: Sequence[CheckResult]) -> int:
    return 2 if any(r.status == REFUTED for r in results) else 0


# -- reports --------------------------------------------------------------------------

def summarize(results: Sequence[CheckResult]) -> dict:
    return {s: sum(1 for r in results if r.status == s) for s in STATUSES}


def report_document(results: Sequence[CheckResult], suite: str | None = None,
                    n_range: Sequence[int] | None = None, limits: EnumLimits | None = None,
                    seed: int | None = None) -> dict:
    limits = limits or EnumLimits()
    ordered = sorted(results, key=lambda r: (r.id, r.n))
    return {
        "tool": "braidforge",
        "version": __version__,
        "suite": suite,
        "n_range": [min(n_range), max(n_range)] if n_range else None,
        "limits": {"max_cosets": limits.max_cosets, "strategy": limits.strategy},
        "seed": seed,
        "summary": summarize(ordered),
        "results": [r.to_dict() for r in ordered],
        "timings": {f"{r.id}@{r.n}": round(r.wall_time, 6) for r in ordered},
    }


def _short(value) -> str:
    return json.dumps(value, sort_keys=True, separators=(",", ":"))


def emit_report(results: Sequence[CheckResult], fmt: str = "json", **meta) -> str:
    doc = report_document(results, **meta)
    if fmt == "json":
        return json.dumps(doc, indent=2) + "\n"
    if fmt == "tsv":
        buf = io.StringIO()
        w = csv.writer(buf, delimiter="\t", lineterminator="\n")
        w.writerow(["id", "n", "status", "strength", "observed", "expected", "locus"])
        for r in doc["results"]:
            w.writerow([r["id"], r["n"], r["status"], r["strength"] or "", _short(r["observed"]),
                        _short(r["expected"]), r["locus"]])
        return buf.getvalue()
    if fmt == "markdown":
        lines = [
            f"# braidforge {doc['version']} verification report",
            "",
            f"suite: {doc['suite']}  n: {doc['n_range']}  max_cosets: {doc['limits']['max_cosets']}"
            f"  strategy: {doc['limits']['strategy']}  seed: {doc['seed']}",
            "",
            "summary: " + ", ".join(f"{k} {v}" for k, v in doc["summary"].items()),
            "",
            "| id | n | status | strength | observed | expected | locus |",
            "|---|---|---|---|---|---|---|",
        ]
        for r in doc["results"]:
            lines.append(f"| {r['id']} | {r['n']} | {r['status']} | {r['strength'] or ''} | "
                         f"`{_short(r['observed'])}` | `{_short(r['expected'])}` | {r['locus']} |")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown report format {fmt!r}")
