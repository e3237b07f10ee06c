"""Acceptance criteria 1 to 10, one test each.

Every test prints a single ``PASS criterion N`` or ``FAIL criterion N`` line
with the counts behind it, then asserts. Run with ``pytest
tests/test_acceptance.py`` to see the summary lines.
"""

import time

import pytest

from pathsun.families import chordal_corpus
from pathsun.validation import (
    check_directed_double,
    check_hierarchy_witnesses,
    check_interval_double,
    check_neighborhood_triples,
    check_f11_triple_trees,
    check_reconstruction,
    check_split_adjacency,
    check_path_agreement_corpus,
    check_path_agreement_random,
    check_three_leaves,
    split_ray_instances,
    suite_certificates,
)


@pytest.fixture(scope="module")
def corpus7():
    return chordal_corpus(7)


def report(capsys, number, checks, elapsed, limit=None):
    ok = all(c.ok for c in checks)
    timing = f"{elapsed:.2f}s"
    if limit is not None:
        timing += f" (limit {limit:g}s)"
        ok = ok and elapsed < limit
    detail = " | ".join(c.line() for c in checks)
    with capsys.disabled():
        print(f"\n{'PASS' if ok else 'FAIL'} criterion {number}: {timing}; {detail}")
        for c in checks:
            for v in c.violations[:5]:
                print(f"    {c.name}: {v}")
    return ok


def timed(run):
    start = time.perf_counter()
    checks = run()
    return checks, time.perf_counter() - start


def test_criterion_1_hierarchy_witnesses(capsys):
    checks, elapsed = timed(lambda: [check_hierarchy_witnesses()])
    assert report(capsys, 1, checks, elapsed, limit=1.0)


def test_criterion_2_path_recognizer_vs_oracle(capsys, corpus7):
    checks, elapsed = timed(lambda: [check_path_agreement_corpus(corpus7)])
    corpus_elapsed = elapsed
    random_checks, random_elapsed = timed(lambda: [check_path_agreement_random(samples=500, seed=0)])
    checks += random_checks
    ok = report(capsys, 2, checks, corpus_elapsed + random_elapsed)
    assert corpus_elapsed < 600
    assert ok


def test_criterion_3_directed_path_double_characterization(capsys, corpus7):
    checks, elapsed = timed(lambda: [check_directed_double(corpus7)])
    assert report(capsys, 3, checks, elapsed)


def test_criterion_4_interval_double_characterization(capsys, corpus7):
    checks, elapsed = timed(lambda: [check_interval_double(corpus7)])
    assert report(capsys, 4, checks, elapsed)


def test_criterion_5_three_leaf_subtrees(capsys):
    checks, elapsed = timed(lambda: [check_three_leaves(chordal_corpus(6))])
    assert report(capsys, 5, checks, elapsed)


def test_criterion_6_neighbourhood_triples(capsys, corpus7):
    checks, elapsed = timed(lambda: [check_neighborhood_triples(corpus7)])
    assert report(capsys, 6, checks, elapsed)


def test_criterion_7_f11_trees(capsys):
    checks, elapsed = timed(lambda: check_f11_triple_trees(3) + check_f11_triple_trees(4))
    assert report(capsys, 7, checks, elapsed, limit=60.0)


def test_criterion_8_reconstruction(capsys):
    checks, elapsed = timed(lambda: [check_reconstruction()])
    assert report(capsys, 8, checks, elapsed)


def test_criterion_9_certificate_soundness(capsys):
    checks, elapsed = timed(lambda: suite_certificates(n_max=7, samples=100, seed=0))
    assert checks[0].checked > 0
    assert report(capsys, 9, checks, elapsed)


def test_criterion_10_split_ray_adjacency(capsys):
    def run():
        instances = split_ray_instances()
        assert all(ss.graph.n <= 10 for ss in instances)
        return [check_split_adjacency(instances)]

    checks, elapsed = timed(run)
    assert report(capsys, 10, checks, elapsed)
