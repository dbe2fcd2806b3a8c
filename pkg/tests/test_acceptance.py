"""Acceptance gate: eleven numbered criteria, one printed verdict line each.

Each criterion either holds exactly as stated, or holds in a corrected form
with the deviation mechanically documented by the claim suite — in that case
the verdict line carries a "finding:" note.  A criterion only passes when
every assertion in its body holds; the shared claim-suite run is reused so
the whole gate stays inside the runtime budget.
"""

import itertools
import math

import pytest

from diamondsemi import algebra, congruence, families
from diamondsemi.algebra import SubsetRef
from diamondsemi.congruence import all_partitions, principal_congruence
from diamondsemi.endo import endo_count, enumerate_brute, enumerate_fast
from diamondsemi.reference_tables import N4_ELEMENTS, compact_n4_label
from diamondsemi.verify import MISMATCH, PASS

NS = (4, 5, 6)


def _report(capsys, num, name, note=""):
    with capsys.disabled():
        tail = f"  (finding: {note})" if note else ""
        print(f"acceptance {num:02d} {name}: pass{tail}")


def _status(report_index, claim, n):
    return report_index[(claim, n)].status


def test_criterion_01_enumeration_census(capsys, semirings):
    assert {n: semirings[n].order for n in NS} == {4: 16, 5: 50, 6: 234}
    for n in NS:
        d = semirings[n].diamond
        fast = sorted(e.images for e in enumerate_fast(d))
        brute = sorted(e.images for e in enumerate_brute(d))
        assert fast == brute and len(fast) == endo_count(n)
    computed = {compact_n4_label(e.images) for e in semirings[4].endos}
    assert computed == set(N4_ELEMENTS)
    _report(capsys, 1, "enumeration census 16/50/234, oracle agreement")


def test_criterion_02_printed_tables(capsys, semirings, report_index):
    laws = algebra.check_laws(semirings[4])
    assert laws.exhaustive and laws.all_pass
    r = report_index[("Example 3.2", 4)]
    assert r.status in (PASS, MISMATCH)
    add_bad = r.witness.get("add_mismatches", [])
    mul_bad = r.witness.get("mul_mismatches", [])
    assert len(add_bad) <= 5 and len(mul_bad) <= 5
    note = ""
    if add_bad or mul_bad:
        cells = [(row, col) for row, col, _, _ in map(tuple, add_bad + mul_bad)]
        note = f"{len(cells)} printed cells deviate (typos): {cells}"
    _report(capsys, 2, "printed 16x16 tables, law-consistent, cell-by-cell", note)


def test_criterion_03_simplicity_results(capsys, semirings, report_index):
    S4 = semirings[4]
    assert algebra.is_ideal_simple(S4)
    simple, _ = congruence.is_congruence_simple(S4)
    assert simple
    for n in (5, 6):
        S = semirings[n]
        assert not algebra.is_ideal_simple(S)
        mx = families.make_subset(S, "MAX")
        kind, _ = algebra.ideal_kind(mx)
        assert kind == "two_sided" and len(mx) < S.order
    # the printed "simple only for n=4" disagrees with the congruence scan
    r = report_index[("Cor 4.5", 5)]
    assert r.status == MISMATCH
    assert r.witness["congruence_simple"] is True
    _report(
        capsys, 3, "simplicity: order 16 simple; larger not ideal-simple (MAX)",
        "the order-50 semiring is congruence-simple although not ideal-simple",
    )


def test_criterion_04_single_chain_restrictions(capsys, semirings, report_index):
    for n in NS:
        S = semirings[n]
        for i in range(1, n - 1):
            sub = families.make_subset(S, "Eai", (i,))
            assert len(sub) == 3 * (n - 1)
        ring = algebra.subsemiring_restrict(families.make_subset(S, "Eai", (1,)))
        assert algebra.is_ideal_simple(ring)
        # exhaustively confirmed: exactly one proper congruence exists
        assert _status(report_index, "Thm 5.6", n) == MISMATCH
        assert report_index[("Thm 5.6", n)].witness["proper_congruences"]
    _report(
        capsys, 4, "single-chain restrictions: order 3(n-1), ideal-simple",
        "they are not congruence-simple; the proper congruence is witnessed",
    )


def test_criterion_05_double_chain_restrictions(capsys, semirings, report_index):
    for n in (5, 6):
        S = semirings[n]
        for a, b in itertools.combinations(range(1, n - 1), 2):
            sub = families.make_subset(S, "Eset", (a, b))
            assert len(sub) == n * n
        assert _status(report_index, "Thm 7.1", n) == MISMATCH
        assert report_index[("Thm 7.1", n)].witness["proper_congruences"]
    ring = algebra.subsemiring_restrict(
        families.make_subset(semirings[5], "Eset", (1, 2))
    )
    assert algebra.is_ideal_simple(ring)
    _report(
        capsys, 5, "double-chain restrictions: ideal-simple for every atom pair",
        "not congruence-simple; proper congruences are witnessed",
    )


def test_criterion_06_union_ideal_maximality(capsys, report_index):
    assert _status(report_index, "Thm 7.5", 5) == PASS  # k = 3 = n-2 there
    for n in (5, 6):
        assert _status(report_index, "Prop 4.4", n) == PASS  # k = n-2 case
    r = report_index[("Thm 7.5", 6)]
    assert r.status == MISMATCH
    (entry,) = r.witness["intermediate_ideals"]
    assert entry["union_size"] < entry["intermediate_size"] < entry["ambient_order"]
    _report(
        capsys, 6, "union-of-chains ideal: proper two-sided, maximal at k=n-2",
        "at n=6, k=3 it is not maximal — an intermediate ideal is witnessed",
    )


def test_criterion_07_classification_census(capsys, semirings, report_index):
    for n in NS:
        S = semirings[n]
        k = n - 2
        records = algebra.classify(S)
        nil = [r for r in records if r.is_nilpotent]
        assert len(nil) == k
        assert {S.endos[r.index].images for r in nil} == {
            families.nilpotent_at(S.diamond, i).images for i in range(1, k + 1)
        }
        inv = [r for r in records if r.is_invertible]
        assert len(inv) == math.factorial(k)
        idx = {r.index for r in inv}
        for r in inv:  # closure, identity, inverses
            assert r.inverse in idx
            assert int(S.mul_table[r.index, r.inverse]) == S.one_index
            assert all(int(S.mul_table[r.index, j]) in idx for j in idx)
        # zero-divisor criterion: bottom in the image, almost-constants aside
        constants = set(families.make_subset(S, "AC").indices)
        for r in records:
            if r.index == S.zero_index or r.index in constants:
                continue
            assert r.is_zero_divisor == (0 in S.endos[r.index].images), (n, r.label)
        top_const = S.index(families.constant_top(S.diamond))
        assert not records[top_const].is_zero_divisor
        assert _status(report_index, "Prop 4.1", n) == PASS
    # the order-6 group of the 5-element diamond is non-abelian
    S5 = semirings[5]
    perms = [r.index for r in algebra.classify(S5) if r.is_invertible]
    assert any(
        int(S5.mul_table[x, y]) != int(S5.mul_table[y, x])
        for x, y in itertools.combinations(perms, 2)
    )
    _report(capsys, 7, "census: n-2 nilpotents, symmetric group of units, "
                       "zero-divisor criterion")


def test_criterion_08_ideal_kind_matrix(capsys, semirings, report_index):
    for n in NS:
        assert _status(report_index, "Prop 3.3", n) in (PASS, MISMATCH)
        assert _status(report_index, "Prop 4.3", n) == PASS
        assert _status(report_index, "Prop 6.2", n) == PASS
        assert _status(report_index, "Prop 5.8", n) == PASS
        S = semirings[n]
        # constants: right ideal, not two-sided
        kind, wit = algebra.ideal_kind(families.make_subset(S, "AC"))
        assert kind == "right" and wit is not None
        # two-valued maps: two-sided ideal inside the almost-absorbing ring
        aa = algebra.subsemiring_restrict(families.make_subset(S, "AA"))
        e01 = algebra.restrict_subset(aa, families.make_subset(S, "E01").indices)
        kind, _ = algebra.ideal_kind(e01)
        assert kind == "two_sided"
        # {zero, the nilpotent} is a proper two-sided ideal of the lower chain
        lower = algebra.subsemiring_restrict(families.make_subset(S, "E0i", (1,)))
        pair = algebra.restrict_subset(
            lower,
            (S.zero_index, S.index(families.nilpotent_at(S.diamond, 1))),
        )
        kind, _ = algebra.ideal_kind(pair)
        assert kind == "two_sided" and len(pair) < lower.order
    _report(capsys, 8, "ideal kinds: right-only constants, two-sided and "
                       "maximal ideals as documented")


def test_criterion_09_structure_identities(capsys, report_index):
    for claim in ("Prop 5.4", "Cor 5.5", "Lemma 6.1", "Prop 4.6",
                  "Lemma 3.7", "Cor 3.6"):
        for n in NS:
            assert _status(report_index, claim, n) == PASS, (claim, n)
    _report(capsys, 9, "structure identities: intersections, unions, "
                       "partial-identity algebra, redirect composition, Viterbi")


def test_criterion_10_small_objects(capsys, report_index):
    for n in NS:
        assert _status(report_index, "Example 6.4", n) == PASS
        assert _status(report_index, "§7 chain", n) == MISMATCH  # ideal-simple only
    assert _status(report_index, "Remark 7.2", 5) == PASS
    for n in (5, 6):
        assert _status(report_index, "Prop 7.3", n) == PASS
        assert _status(report_index, "Cor 7.4", n) == PASS
    _report(
        capsys, 10, "small objects: order-3 tables, nested chains, 13-element "
                    "subsemiring, order-16 embedding",
        "chains of order >= 3 are ideal-simple but not congruence-simple",
    )


def test_criterion_11_property_suites(capsys, semirings):
    S4 = semirings[4]
    for x, y in itertools.combinations(range(S4.order), 2):
        part = principal_congruence(S4, x, y)
        assert congruence.is_congruence(S4, part)
    # partition-sweep cross-check on the order <= 6 members of the suite
    small = [
        algebra.subsemiring_restrict(families.make_subset(semirings[4], "E01")),
        algebra.subsemiring_restrict(families.make_subset(semirings[5], "SIa", (1,))),
        algebra.subsemiring_restrict(families.make_subset(semirings[6], "Sk", (4,))),
        algebra.subsemiring_restrict(families.make_subset(semirings[6], "E01")),
    ]
    for ring in small:
        assert ring.order <= 6
        swept = {
            p.blocks for p in all_partitions(ring.order)
            if congruence.is_congruence(ring, p)
        }
        for x, y in itertools.combinations(range(ring.order), 2):
            assert principal_congruence(ring, x, y).blocks in swept
    _report(capsys, 11, "property suites: oracle enumeration, congruence "
                        "validity, full partition sweeps")
