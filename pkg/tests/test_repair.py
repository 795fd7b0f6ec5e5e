import itertools

import pytest

from pinpoint.core.exceptions import EmptyMember, NoRepair, NotEntailed
from pinpoint.harness import Profile, generate_suite
from pinpoint.models import Ontology
from pinpoint.pinpointing import RepairFinder, is_repair, minimal_hitting_sets, optimal_repairs
from pinpoint.reasoner import classify, entails, module_for_goal
from pinpoint.utils import parse_goal


def test_hitting_sets_of_o1_family():
    assert minimal_hitting_sets([["ax3"], ["ax1", "ax2"]]) == [["ax1", "ax3"], ["ax2", "ax3"]]


def test_hitting_sets_are_minimal():
    family = [["a", "b"], ["b", "c"], ["c", "d"]]
    result = minimal_hitting_sets(family)
    assert ["b", "c"] in result and ["a", "c"] in result and ["b", "d"] in result
    for h in result:
        assert all(set(h) & set(s) for s in family)
        assert not any(set(h) > set(other) for other in result)


def test_hitting_sets_edge_cases():
    assert minimal_hitting_sets([]) == [[]]
    with pytest.raises(EmptyMember):
        minimal_hitting_sets([["a"], []])


def test_repairs_via_core(o2, o3, a_sub_c):
    result = optimal_repairs(o3, a_sub_c)
    assert result.via_core
    assert result.repairs == [["ax2", "ax3", "ax4"]]
    assert optimal_repairs(o2, a_sub_c).repairs == [["ax2"], ["ax1"]]


def test_repairs_via_hitting_sets(o1, a_sub_c):
    result = optimal_repairs(o1, a_sub_c)
    assert not result.via_core
    assert result.as_sets() == {frozenset({"ax2", "ax4"}), frozenset({"ax1", "ax4"})}
    assert result.removed == [["ax1", "ax3"], ["ax2", "ax3"]]


def test_core_and_hitting_set_paths_agree(o3, a_sub_c):
    via_core = RepairFinder().optimal_repairs(o3, a_sub_c, use_core=True)
    via_hs = RepairFinder().optimal_repairs(o3, a_sub_c, use_core=False)
    assert via_core.as_sets() == via_hs.as_sets()


def test_is_repair(o1, o2, a_sub_c):
    assert is_repair(o2, a_sub_c, ["ax1"])
    assert not is_repair(o2, a_sub_c, [])
    assert is_repair(o1, a_sub_c, ["ax2", "ax4"])
    assert not is_repair(o1, a_sub_c, ["ax1", "ax2"])


def test_every_optimal_repair_is_a_maximum_repair(o1, o3, a_sub_c):
    for o in (o1, o3):
        result = optimal_repairs(o, a_sub_c)
        for r in result.repairs:
            assert is_repair(o, a_sub_c, r)
        # no non-entailing subset is larger
        best = max(
            len(combo)
            for size in range(len(o) + 1)
            for combo in itertools.combinations(o.ids, size)
            if not entails(o.subset(combo), a_sub_c)
        )
        assert len(result.repairs[0]) == best


def test_no_repair_for_tautology(o1):
    with pytest.raises(NoRepair):
        optimal_repairs(o1, parse_goal("(sub A Top)"))


def test_repairs_need_entailment(o1):
    with pytest.raises(NotEntailed):
        optimal_repairs(o1, parse_goal("(sub C A)"))


def test_empty_ontology_has_no_repair():
    with pytest.raises(NoRepair):
        optimal_repairs(Ontology(), parse_goal("(sub A A)"))


def smallest_breaking_removal(o, goal, module, settings):
    for size in range(1, len(module) + 1):
        for combo in itertools.combinations(module.ids, size):
            if not entails(o.without(combo), goal, settings):
                return size
    return None


@pytest.mark.slow
@pytest.mark.parametrize("profile", [Profile.EL, Profile.ALC])
@pytest.mark.parametrize("block", range(4))
def test_optimal_repairs_on_generated_suite(profile, block, test_settings):
    finder = RepairFinder(test_settings)
    for seed, o in generate_suite(range(block * 50 + 1, block * 50 + 51), profile, settings=test_settings):
        for goal in classify(o, test_settings):
            module = module_for_goal(o, goal)
            if len(module) > 12 or entails(Ontology(), goal, test_settings):
                continue
            where = f"seed={seed} {profile.value} {goal}"
            result = finder.optimal_repairs(o, goal)
            for r in result.repairs:
                assert is_repair(o, goal, r, test_settings), where
            assert len(result.repairs[0]) == len(o) - smallest_breaking_removal(o, goal, module, test_settings), where
            if not result.via_core:
                continue
            assert result.as_sets() == finder.optimal_repairs(o, goal, use_core=False).as_sets(), where
