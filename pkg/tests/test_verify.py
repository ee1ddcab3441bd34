import json

import pytest

from braidforge.cosets import EnumLimits
from braidforge.verify import (
    CLAIMS, FULL, INCONCLUSIVE, NECESSARY, REFUTED, UNSUPPORTED, VERIFIED, CheckResult,
    UnknownSuiteError, claims_for, emit_report, exit_code, lower_and_upper_bound_check,
    oracle_agreement, random_word_pairs, report_document, run_suite, theorem_table,
)


def test_claim_ids_unique_and_suites_cover_all():
    ids = [c.id for c in CLAIMS]
    assert len(ids) == len(set(ids))
    assert sum(len(claims_for(s)) for s in ("disc", "sphere", "rp2", "mcg")) == len(claims_for("all"))
    with pytest.raises(UnknownSuiteError):
        claims_for("torus")


def test_theorem_table_values():
    assert theorem_table("B", 5).as_tuple() == (2, 1, None, None)
    assert theorem_table("BS2", 5).as_tuple() == (2, 1, 2, 1)
    assert theorem_table("BS2", 6).as_tuple() == (2, 1, 2, 2)
    assert theorem_table("BP2", 4).as_tuple() == (2, 2, 2, 2)
    assert theorem_table("P", 4).as_tuple()[:2] == (6, 6)
    assert theorem_table("PS2", 5).as_tuple()[:2] == (6, 6)
    assert theorem_table("PP2", 3).as_tuple() == (3, 3, 3, 3)


@pytest.mark.parametrize("family,n", [("BP2", 3), ("PP2", 2), ("PP2", 3), ("PS2", 4), ("PS2", 5),
                                      ("B", 4), ("BS2", 5)])
def test_bounds_meet(family, n):
    r = lower_and_upper_bound_check(family, n)
    assert r.status == VERIFIED, r


def test_resource_exhaustion_is_inconclusive_not_refuted():
    r = lower_and_upper_bound_check("PP2", 3, EnumLimits(max_cosets=3))
    assert r.status == INCONCLUSIVE
    results = run_suite("rp2", [2, 3], EnumLimits(max_cosets=30))
    assert not any(x.status == REFUTED for x in results)
    assert any(x.status == INCONCLUSIVE for x in results)
    assert exit_code(results) == 0


def test_sphere_suite_verified():
    results = run_suite("sphere", range(3, 7))
    assert results and all(r.status == VERIFIED for r in results), \
        [r for r in results if r.status != VERIFIED]
    assert {r.strength for r in results} <= {FULL, NECESSARY}


def test_rp2_n2_class_count_and_unsupported():
    results = run_suite("rp2", [2, 3])
    by = {(r.id, r.n): r for r in results}
    count = by[("prop4.2-class-count", 2)]
    assert count.status == VERIFIED and count.observed["pure_conjugacy"] == 3
    assert by[("prop4.2-class-count", 3)].status == UNSUPPORTED
    assert by[("rem4.1-erratum", 3)].status == UNSUPPORTED


def test_disc_suite_includes_normal_closure():
    results = run_suite("disc", range(3, 6))
    hits = [r for r in results if r.id == "prop1.3a-normcl-s1"]
    assert [r.n for r in hits] == [3, 4, 5] and all(r.status == VERIFIED for r in hits)


def test_each_claim_once_per_n_and_sorted():
    results = run_suite("mcg", [2, 3])
    keys = [(r.id, r.n) for r in results]
    assert keys == sorted(keys) and len(keys) == len(set(keys))


def test_reports():
    empty = json.loads(emit_report([], "json"))
    assert empty["results"] == [] and empty["summary"][VERIFIED] == 0
    one = CheckResult("x", 3, VERIFIED, 1, 1, FULL, "somewhere")
    doc = json.loads(emit_report([one], "json", suite="disc", n_range=[3], seed=1))
    assert doc["results"][0]["status"] == "verified"
    assert list(doc) == ["tool", "version", "suite", "n_range", "limits", "seed", "summary",
                         "results", "timings"]
    assert "| x | 3 | verified |" in emit_report([one], "markdown")
    assert emit_report([one], "tsv").splitlines()[1].startswith("x\t3\tverified")
    with pytest.raises(ValueError):
        emit_report([one], "xml")


def test_exit_codes():
    ok = CheckResult("a", 2, VERIFIED)
    bad = CheckResult("b", 2, REFUTED)
    meh = CheckResult("c", 2, INCONCLUSIVE)
    assert exit_code([]) == 0
    assert exit_code([ok, meh]) == 0
    assert exit_code([ok, bad, meh]) == 2


def test_reruns_are_identical_apart_from_timings():
    def doc():
        d = report_document(run_suite("rp2", [2]), suite="rp2", n_range=[2], seed=5)
        d.pop("timings")
        return json.dumps(d, sort_keys=True)
    assert doc() == doc()


def test_random_pairs_seeded():
    a = random_word_pairs(4, 50)
    assert a == random_word_pairs(4, 50)
    assert all(2 <= n <= 5 and len(u) <= 40 and len(v) <= 40 for n, u, v in a)
    stats = oracle_agreement(a)
    assert stats["agree"] == stats["pairs"] == 50
    assert stats["equal_pairs"] >= 25
