"""Command-line interface: ``braidforge <subcommand> ...``.

Exit codes: 0 success (and no refuted claim), 1 for ``eq`` when the braids
differ, 2 when a verification refutes a claim, 3 on malformed input, 4 when
an enumeration hits ``--max-cosets``.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from . import __version__
from .abelian import abelian_invariants
from .cosets import EnumLimits, ResourceExceeded, enumerate_cosets
from .finite import (
    concretize, conjugacy_classes, element_order, identify, pure_elements,
)
from .garside import WrongFamilyError, equal_in_braid_group, normal_form
from .presentations import (
    FamilyError, Presentation, add_relators, parse_group, parse_presentation,
    pure_generators, resolve_element, sigma_alphabet,
)
from .schreier import subgroup_presentation
from .verify import (
    DEFAULT_SEED, SUITES, TABLE_FAMILIES, UnknownSuiteError, emit_report, exit_code,
    run_suite, theorem_table,
)
from .words import AlphabetMismatchError, MalformedWordError, format_word, parse_word

EXIT_OK, EXIT_DIFFERENT, EXIT_REFUTED, EXIT_MALFORMED, EXIT_INCONCLUSIVE = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_MALFORMED, f"{self.prog}: error: {message}\n")


def parse_n_range(text: str) -> list[int]:
    """``3..6``, ``4`` or ``2,3,5``."""
    try:
        if ".." in text:
            lo, hi = text.split("..")
            values = list(range(int(lo), int(hi) + 1))
        else:
            values = [int(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"bad n range {text!r}; use 3..6, 4 or 2,3,5") from None
    if not values:
        raise UsageError(f"empty n range {text!r}")
    return values


def _limits(args) -> EnumLimits:
    return EnumLimits(max_cosets=args.max_cosets, strategy=args.strategy)


def _presentation(args) -> Presentation:
    if getattr(args, "presentation", None):
        p = parse_presentation(args.presentation)
    elif getattr(args, "group", None):
        p = parse_group(args.group)
    else:
        raise UsageError("give --group (e.g. BS2:5, MCG-RP2:2) or --presentation")
    mods = _elements(p, getattr(args, "mod", None))
    return add_relators(p, mods) if mods else p


def _elements(p: Presentation, text: str | None):
    if not text:
        return []
    # commas inside parentheses belong to parameters, as in a_ij(1,3)
    return [resolve_element(p, tok) for tok in re.split(r",(?![^(]*\))", text) if tok.strip()]


def _enumerate(p, gens, args):
    out = enumerate_cosets(p, gens, _limits(args))
    if isinstance(out, ResourceExceeded):
        print(f"inconclusive: max_cosets={args.max_cosets} exceeded ({out.cosets_used} cosets used)")
        return None
    return out


# -- subcommands -------------------------------------------------------------------------

def cmd_define(args) -> int:
    p = parse_presentation(args.text)
    print(f"generators: {' '.join(p.alphabet.names)}")
    for r in p.relators:
        print(f"relator: {format_word(r) or '1'}")
    print(f"abelianization: {abelian_invariants(p)}")
    if args.order or args.table:
        t = _enumerate(p, [], args)
        if t is None:
            return EXIT_INCONCLUSIVE
        print(f"order: {t.n_cosets}")
        if args.table:
            print(t.serialize(), end="")
    return EXIT_OK


def cmd_nf(args) -> int:
    w = parse_word(sigma_alphabet(args.n), args.word)
    nf = normal_form(w, args.n)
    print(f"inf: {nf.inf}")
    print("factors: " + (" ".join(str(f) for f in nf.factor_permutations()) or "(none)"))
    return EXIT_OK


def cmd_eq(args) -> int:
    alphabet = sigma_alphabet(args.n)
    same = equal_in_braid_group(parse_word(alphabet, args.lhs), parse_word(alphabet, args.rhs), args.n)
    print("equal" if same else "different")
    return EXIT_OK if same else EXIT_DIFFERENT


def cmd_ab(args) -> int:
    inv = abelian_invariants(_presentation(args))
    print(json.dumps(inv.to_dict(), separators=(",", ":")) if args.format == "json" else inv)
    return EXIT_OK


def cmd_order(args) -> int:
    p = _presentation(args)
    t = _enumerate(p, [], args)
    if t is None:
        return EXIT_INCONCLUSIVE
    print(t.n_cosets)
    if args.table:
        print(t.serialize(), end="")
    return EXIT_OK


def cmd_index(args) -> int:
    p = _presentation(args)
    t = _enumerate(p, _elements(p, args.subgroup), args)
    if t is None:
        return EXIT_INCONCLUSIVE
    print(t.n_cosets)
    if args.table:
        print(t.serialize(), end="")
    return EXIT_OK


def cmd_pure_ab(args) -> int:
    p = _presentation(args)
    if p.family is None:
        raise UsageError("pure-ab needs a braid-family group (--group)")
    t = _enumerate(p, pure_generators(p.family, p.n), args)
    if t is None:
        return EXIT_INCONCLUSIVE
    sub = subgroup_presentation(p, t)
    inv = abelian_invariants(sub.presentation)
    print(json.dumps(inv.to_dict(), separators=(",", ":")) if args.format == "json" else inv)
    return EXIT_OK


def cmd_identify(args) -> int:
    p = _presentation(args)
    t = _enumerate(p, [], args)
    if t is None:
        return EXIT_INCONCLUSIVE
    print(identify(concretize(t)))
    return EXIT_OK


def _parse_filter(text: str | None) -> tuple[int | None, bool]:
    order, pure = None, False
    for part in (text or "").split(","):
        part = part.strip()
        if not part:
            continue
        if part == "pure":
            pure = True
        elif part.startswith("order="):
            try:
                order = int(part[len("order="):])
            except ValueError:
                raise UsageError(f"bad filter term {part!r}") from None
        else:
            raise UsageError(f"bad filter term {part!r}; use order=K and/or pure")
    return order, pure


def cmd_classes(args) -> int:
    p = _presentation(args)
    order, pure_only = _parse_filter(args.filter)
    t = _enumerate(p, [], args)
    if t is None:
        return EXIT_INCONCLUSIVE
    G = concretize(t)
    pure = pure_elements(G) if p.family is not None else frozenset()
    if pure_only and p.family is None:
        raise UsageError("the pure filter needs a braid-family group")
    if args.by == "pure":
        if p.family is None:
            raise UsageError("--by pure needs a braid-family group")
        conj = sorted(pure)
        classes, seen = [], set()
        for g in sorted(pure):
            if g not in seen:
                cls = frozenset(G.conjugate(g, h) for h in conj)
                seen |= cls
                classes.append(cls)
    else:
        classes = conjugacy_classes(G)
    shown = 0
    print("size\torder\tpure\trepresentative")
    for cls in classes:
        g = min(cls)
        k = element_order(G, g)
        is_pure = g in pure
        if (order is not None and k != order) or (pure_only and not is_pure):
            continue
        shown += 1
        print(f"{len(cls)}\t{k}\t{'yes' if is_pure else 'no'}\t{format_word(G.element_words[g]) or '1'}")
    print(f"classes: {shown}")
    return EXIT_OK


def cmd_verify(args) -> int:
    ns = parse_n_range(args.n) if args.n else None
    limits = _limits(args)
    results = run_suite(args.suite, ns, limits, args.seed)
    doc = emit_report(results, args.format, suite=args.suite, n_range=ns, limits=limits, seed=args.seed)
    if args.out:
        Path(args.out).write_text(doc)
    else:
        sys.stdout.write(doc)
    if args.figures:
        from .plotting import render_figures

        for path in render_figures(results, args.figures):
            print(f"figure: {path}", file=sys.stderr)
    return exit_code(results)


def cmd_table(args) -> int:
    families = [args.family] if args.family else list(TABLE_FAMILIES)
    for fam in families:
        if fam not in TABLE_FAMILIES:
            raise UsageError(f"unknown family {fam!r}; choose from {', '.join(TABLE_FAMILIES)}")
    ns = parse_n_range(args.n)
    print("family\tn\tG\tNG\tTG\tNTG")
    for fam in families:
        for n in ns:
            row = theorem_table(fam, n)
            cells = ["-" if v is None else str(v) for v in row.as_tuple()]
            print("\t".join([fam, str(n), *cells]))
    return EXIT_OK


# -- parser -----------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="braidforge", description="Braid and mapping class group computations.")
    parser.add_argument("--version", action="version", version=f"braidforge {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def enum_opts(sp):
        sp.add_argument("--max-cosets", type=int, default=EnumLimits().max_cosets)
        sp.add_argument("--strategy", choices=("hlt", "felsch"), default="hlt")

    def group_opts(sp, mod=True):
        sp.add_argument("--group", help="B:n, BS2:n, BP2:n, MCG-D2:n, MCG-S2:n, MCG-RP2:n")
        sp.add_argument("--presentation", help='e.g. "gens: x y ; rels: x^2 , y^3 , x y x^-1 y^-1"')
        if mod:
            sp.add_argument("--mod", help="comma-separated elements to quotient by, e.g. alpha1 or a,b")

    sp = sub.add_parser("define", help="parse a presentation and summarize it")
    sp.add_argument("text")
    sp.add_argument("--order", action="store_true", help="also enumerate the group order")
    sp.add_argument("--table", action="store_true", help="print the coset table")
    enum_opts(sp)
    sp.set_defaults(func=cmd_define)

    sp = sub.add_parser("nf", help="Garside normal form in B_n")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--word", required=True)
    sp.set_defaults(func=cmd_nf)

    sp = sub.add_parser("eq", help="decide equality in B_n (exit 0 equal, 1 different)")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--lhs", required=True)
    sp.add_argument("--rhs", required=True)
    sp.set_defaults(func=cmd_eq)

    sp = sub.add_parser("ab", help="abelian invariants")
    group_opts(sp)
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(func=cmd_ab)

    sp = sub.add_parser("order", help="group order by coset enumeration")
    group_opts(sp)
    sp.add_argument("--table", action="store_true", help="print the coset table")
    enum_opts(sp)
    sp.set_defaults(func=cmd_order)

    sp = sub.add_parser("index", help="index of a subgroup")
    group_opts(sp)
    sp.add_argument("--subgroup", required=True, help="comma-separated generators, e.g. a,b")
    sp.add_argument("--table", action="store_true", help="print the coset table")
    enum_opts(sp)
    sp.set_defaults(func=cmd_index)

    sp = sub.add_parser("pure-ab", help="abelian invariants of the pure subgroup")
    group_opts(sp)
    sp.add_argument("--format", choices=("text", "json"), default="text")
    enum_opts(sp)
    sp.set_defaults(func=cmd_pure_ab)

    sp = sub.add_parser("identify", help="identify a small finite group")
    group_opts(sp)
    enum_opts(sp)
    sp.set_defaults(func=cmd_identify)

    sp = sub.add_parser("classes", help="conjugacy classes of a finite group")
    group_opts(sp)
    sp.add_argument("--filter", help='e.g. "order=4,pure"')
    sp.add_argument("--by", choices=("group", "pure"), default="group",
                    help="conjugate by the whole group or inside the pure subgroup")
    enum_opts(sp)
    sp.set_defaults(func=cmd_classes)

    sp = sub.add_parser("verify", help="run a claim suite")
    sp.add_argument("--suite", choices=SUITES, default="all")
    sp.add_argument("--n", help="n range, e.g. 3..6 (default: each claim's committed range)")
    sp.add_argument("--format", choices=("json", "markdown", "tsv"), default="json")
    sp.add_argument("--out", help="write the report here instead of stdout")
    sp.add_argument("--figures", help="directory for status and timing figures")
    sp.add_argument("--seed", type=int, default=DEFAULT_SEED)
    enum_opts(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("table", help="print the claimed G/NG/TG/NTG values")
    sp.add_argument("--family", help=", ".join(TABLE_FAMILIES))
    sp.add_argument("--n", default="3..8")
    sp.set_defaults(func=cmd_table)
    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        # argparse exits on --help, --version and usage errors; report its code instead
        return exc.code if isinstance(exc.code, int) else EXIT_MALFORMED
    try:
        return args.func(args)
    except (UsageError, MalformedWordError, AlphabetMismatchError, FamilyError, WrongFamilyError,
            UnknownSuiteError, ValueError) as exc:
        print(f"braidforge: error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED


if __name__ == "__main__":
    sys.exit(main())
