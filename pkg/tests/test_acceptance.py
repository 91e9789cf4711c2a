"""Exit criteria. Each test records one PASS/FAIL line for the summary."""

import random
import time

import pytest

from gen import random_rules, random_squarefree_rules, random_weak_rules, validated
from latticegames.axioms import is_certificate, validate
from latticegames.bench import bench, growth_per_two
from latticegames.box_solver import solve_p0
from latticegames.classify import (
    Level,
    check_condition1_on_region,
    classify,
    is_squarefree,
    is_squarefree_via_positive_part,
    squarefree_violation_witness,
)
from latticegames.core import RuleSet, position_of
from latticegames.heap_codec import nim_rules
from latticegames.region_oracle import (
    check_mod2_periodicity,
    check_monoid_closure,
    default_budget,
    find_prop2_counterexample,
    solve_region,
)
from oracles import nim_p0_by_xor

ERRATUM = RuleSet.of([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0)])


@pytest.fixture(scope="module")
def general_suite():
    rng = random.Random(2011)
    suite = validated(random_rules, rng, 500, [1, 2, 3, 4], squarefree_bias=0.3)
    suite += validated(random_weak_rules, rng, 100, [2, 3, 4])
    return suite


@pytest.fixture(scope="module")
def squarefree_suite():
    rng = random.Random(526)
    suite = validated(random_squarefree_rules, rng, 50, [1, 2, 3, 4], lo=-2)
    return suite + validated(random_squarefree_rules, rng, 50, [5, 6], lo=-1)


def test_1_counterexample_reproduction(record):
    t0 = time.perf_counter()
    level = classify(ERRATUM).level
    v = find_prop2_counterexample(ERRATUM, (1, 1, 1), 4)
    dt = time.perf_counter() - t0
    got = None if v is None else (v.p, v.q, str(v.outcome_p), str(v.outcome_q), str(v.outcome_sum))
    ok = (
        level is Level.WEAKLY_SQUAREFREE_ONLY
        and got == ((1, 0, 1), (0, 1, 1), "P", "P", "N")
        and dt < 1.0
    )
    record("1 counterexample reproduction", ok, f"level={level.value} witness={got} time={dt:.3f}s")
    assert ok


def test_2_proposition1_equivalence(record, general_suite):
    discrepancies = 0
    witnesses = 0
    bad_witnesses = 0
    n_sf = 0
    for rs, _ in general_suite:
        cond3 = is_squarefree(rs)
        cond4 = is_squarefree_via_positive_part(rs)
        bound = max(1, max(x for g in rs.moves for x in g)) + 1
        region = check_condition1_on_region(rs, bound)
        cond1 = not region
        n_sf += cond3
        discrepancies += not (cond1 == cond3 == cond4)
        emitted = list(region) + list(classify(rs).witnesses)
        emitted += [w for w in map(squarefree_violation_witness, rs.moves) if w is not None]
        witnesses += len(emitted)
        bad_witnesses += sum(not w.verify() for w in emitted)
    n = len(general_suite)
    ok = n >= 500 and discrepancies == 0 and bad_witnesses == 0
    record(
        "2 proposition 1 equivalence",
        ok,
        f"{n} rule sets ({n_sf} squarefree), {discrepancies} discrepancies, "
        f"{witnesses} witnesses / {bad_witnesses} failed re-verification",
    )
    assert ok


def test_3_proposition2_suite(record, squarefree_suite):
    t0 = time.perf_counter()
    mono = mod2 = 0
    pairs = 0
    for rs, rep in squarefree_suite:
        w = rep.certificate
        sr = solve_region(rs, w, default_budget(w))
        m = check_monoid_closure(sr)
        mono += len(m.violations)
        pairs += m.checked_pairs
        mod2 += len(check_mod2_periodicity(sr).violations)
    dt = time.perf_counter() - t0
    ok = len(squarefree_suite) >= 100 and mono == 0 and mod2 == 0 and dt < 60
    record(
        "3 proposition 2 suite",
        ok,
        f"{len(squarefree_suite)} rule sets, {pairs} pairs, monoid violations={mono}, "
        f"mod2 violations={mod2}, time={dt:.1f}s",
    )
    assert ok


def test_4_theorem3_correctness(record, squarefree_suite):
    rng = random.Random(88)
    cases = [rs for rs, _ in squarefree_suite]
    cases += [rs for rs, _ in validated(random_squarefree_rules, rng, 30, [7, 8], lo=-1)]
    cases += [nim_rules(d) for d in range(1, 9)]
    mismatches = 0
    for rs in cases:
        w = validate(rs).certificate
        sb = solve_p0(rs, w)
        sr = solve_region(rs, w, sum(w))
        for mask in range(1 << rs.d):
            p = position_of(mask, rs.d)
            mismatches += sr[p] != sb.outcome(p)
    ok = mismatches == 0 and max(rs.d for rs in cases) == 8
    record("4 theorem 3 correctness", ok, f"{len(cases)} squarefree rule sets (d<=8), {mismatches} box mismatches")
    assert ok


def test_5_theorem3_complexity(record):
    rows = bench([12, 16, 20], family="nim", repetitions=5)
    stats_ok = all(
        r.positions_computed == 1 << r.d and r.option_evaluations <= r.bound for r in rows
    )
    growth = growth_per_two(rows)
    t20 = rows[-1].seconds
    ok = stats_ok and t20 < 10 and all(2 <= g <= 8 for g in growth)
    record(
        "5 theorem 3 complexity",
        ok,
        f"backend={rows[0].backend} times="
        + ",".join(f"d{r.d}:{r.seconds:.4f}s" for r in rows)
        + " growth/+2=" + ",".join(f"{g:.2f}" for g in growth),
    )
    assert ok


def test_6_nim_ground_truth(record):
    wrong = [d for d in range(1, 9) if solve_p0(nim_rules(d)).p0() != nim_p0_by_xor(d)]
    explicit = (
        solve_p0(nim_rules(3)).p0() == [(0, 0, 0), (1, 1, 1)]
        and solve_p0(nim_rules(4)).p0() == [(0, 0, 0, 0), (1, 1, 1, 0)]
    )
    ok = not wrong and explicit
    record("6 nim ground truth", ok, f"d=1..8 mismatches={wrong}, P0(3)/P0(4) exact={explicit}")
    assert ok


def test_7_axioms_soundness(record, general_suite, squarefree_suite):
    certs = [rep.certificate for _, rep in general_suite + squarefree_suite]
    bad = sum(
        not (is_certificate(rs, rep.certificate) and all(x > 0 for x in rep.certificate))
        for rs, rep in general_suite + squarefree_suite
    )
    line = validate(RuleSet.of([(1, -1), (-1, 1), (0, 1)]))
    ok = bad == 0 and not line.pointed and line.certificate is None
    record("7 axioms soundness", ok, f"{len(certs)} certificates, {bad} failed; line set pointed={line.pointed}")
    assert ok
