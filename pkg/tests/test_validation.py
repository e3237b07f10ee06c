import pytest

from pathsun.families import chordal_corpus, f11_8
from pathsun.validation import (
    SUITES,
    Check,
    check_bad_implies_not_path,
    check_chain,
    check_three_leaves,
    check_two_cliques,
    split_flower,
    split_ray_instances,
    suite_structure,
)


def test_check_line_format():
    c = Check("demo", checked=3)
    assert c.line() == "PASS demo: 3 checked, 0 violations"
    c.fail("x")
    c.notes.append("note")
    assert c.line() == "FAIL demo: 3 checked, 1 violations; note"


def test_three_leaves_at_seven_vertices():
    check = check_three_leaves(chordal_corpus(7))
    assert check.ok and check.checked > 2


def test_class_chain_is_monotone():
    assert check_chain(chordal_corpus(7)).ok


def test_split_instances_are_numerous_and_small():
    instances = split_ray_instances()
    assert len({ss.graph.adj for ss in instances}) >= 20
    assert all(ss.graph.n <= 10 and ss.split_petals() for ss in instances)


@pytest.mark.parametrize("petals", [3, 4])
@pytest.mark.parametrize("wide", [False, True])
def test_split_flower_shapes(petals, wide):
    ss = split_flower(petals, wide)
    assert len(ss.split_petals()) == petals
    assert check_two_cliques([ss]).ok


def test_structure_suite_outside_the_known_gap():
    for check in suite_structure():
        if check.name != "bad-sun-system-host-not-path":
            assert check.ok, check.line()


def test_bad_sun_systems_on_eight_vertices_include_path_graphs():
    check = check_bad_implies_not_path(chordal_corpus(8, n_min=8) + [f11_8()])
    assert {v.split(":")[0] for v in check.violations} == {"G}zcQO", "G}zdQO"}


def test_suites_are_registered():
    assert set(SUITES) == {"hierarchy", "theorem", "lemmas", "prop44", "certificates"}
