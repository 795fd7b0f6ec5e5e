import itertools

import pytest

from pinpoint.core.config import Settings
from pinpoint.core.exceptions import NotEntailed, PreconditionViolated
from pinpoint.harness import (
    Profile, brute_force_justifications, brute_force_muses, generate_ontology, generate_suite, muses_as_justifications,
)
from pinpoint.models import signature_of
from pinpoint.pinpointing import (
    DpllSolver, SatOracle, SatPinpointer, mus_membership, restrict_to_cone, sat, union_via_membership,
)
from pinpoint.pinpointing.encoding import AxiomLabel
from pinpoint.reasoner import entails, module_for_goal
from pinpoint.utils import parse_goal, parse_ontology
from pinpoint.utils.dimacs import formula_to_dimacs, formula_to_gcnf


def test_sat_basics():
    assert not sat([[1], [-1]])
    assert sat([])
    assert not sat([[]])
    assert sat([[1, -1]])


def test_dpll_model_satisfies_clauses():
    clauses = [[1, 2], [-1, 3], [-2, -3], [-3, 4], [1, -4]]
    model = DpllSolver(clauses).solve()
    assert model is not None
    assert all(any(model[abs(lit)] == (lit > 0) for lit in c) for c in clauses)


def test_pigeonhole_is_unsat():
    # three pigeons, two holes: p(i,h) = 2*i + h + 1
    def p(i, h):
        return 2 * i + h + 1
    clauses = [[p(i, 0), p(i, 1)] for i in range(3)]
    for h in range(2):
        for i in range(3):
            for j in range(i + 1, 3):
                clauses.append([-p(i, h), -p(j, h)])
    assert not sat(clauses)
    assert not SatOracle(Settings(sat_backend="pysat")).is_sat(clauses)


def test_phase_preference():
    model = DpllSolver([[1, 2]]).solve(phase=True)
    assert model == {1: True, 2: True}


def test_oracle_counts_calls():
    oracle = SatOracle()
    oracle.is_sat([[1]])
    oracle.is_sat([[1], [-1]])
    assert oracle.calls == 2


def test_encoding_of_chain(o2, a_sub_c):
    f = SatPinpointer().formula(o2, a_sub_c, cone=False)
    assert f.selector("ax1") == 1 and f.selector("ax2") == 2
    assert f.clauses[f.axiom_units["ax1"]] == (1,)
    assert f.clauses[f.axiom_units["ax2"]] == (2,)
    assert f.clauses[-1] == (-f.goal_var,)
    # A ⊑ A initialization, then one clause per rule step chaining to the goal
    assert len(f.clauses) == 6
    assert not sat(f.clauses)
    assert sat(f.clauses[1:])


def test_empty_trace_is_satisfiable(o2):
    f = SatPinpointer().formula(o2, parse_goal("(sub C A)"))
    assert sat(f.clauses)


def test_cone_drops_unrelated_axiom(o1, a_sub_c):
    o = parse_ontology("ax1: (sub A B)\nax2: (sub B C)\nax3: (sub A C)\nax4: (sub A (some r D))\nax5: (sub E F)")
    full = SatPinpointer().formula(o, a_sub_c, cone=False, use_module=False)
    cone = restrict_to_cone(full)
    assert "ax5" in full.axiom_units
    assert "ax5" not in cone.axiom_units
    assert {"ax1", "ax2", "ax3"} <= set(cone.axiom_units)
    assert restrict_to_cone(cone).clauses == cone.clauses


def test_mus_membership_plain_clauses():
    clauses = [[1], [-1], [2]]
    assert mus_membership(clauses, 0)
    assert mus_membership(clauses, 1)
    assert not mus_membership(clauses, 2)


def test_mus_membership_map_search_agrees():
    map_settings = Settings(mus_exhaustive_threshold=0)
    clauses = [[1], [-1, 2], [-2], [3], [-3, 1], [4]]
    exhaustive = [mus_membership(clauses, i) for i in range(len(clauses))]
    mapped = [mus_membership(clauses, i, map_settings) for i in range(len(clauses))]
    assert exhaustive == mapped == [True, True, True, True, True, False]


def test_mus_membership_preconditions(o1, a_sub_c):
    with pytest.raises(PreconditionViolated):
        mus_membership([[1], [2]], 0)
    f = SatPinpointer().formula(o1, a_sub_c)
    with pytest.raises(PreconditionViolated):
        mus_membership(f, len(f.clauses) - 1)


def test_axiom_membership_on_formula(o1, a_sub_c):
    f = SatPinpointer().formula(o1, a_sub_c)
    members = {ax_id for ax_id, idx in f.axiom_units.items() if mus_membership(f, idx)}
    assert members == {"ax1", "ax2", "ax3"}


@pytest.mark.parametrize("backend", ["dpll", "pysat"])
def test_union_via_membership(o1, o2, o3, a_sub_c, backend):
    s = Settings(sat_backend=backend)
    assert union_via_membership(o1, a_sub_c, s) == ["ax1", "ax2", "ax3"]
    assert union_via_membership(o2, a_sub_c, s) == ["ax1", "ax2"]
    assert union_via_membership(o3, a_sub_c, s) == ["ax1", "ax2", "ax3", "ax4"]


def test_union_via_membership_alc():
    o = parse_ontology("(sub A (or B C))\n(sub B D)\n(sub C D)\n(sub A D)\n(sub E D)")
    assert union_via_membership(o, parse_goal("(sub A D)")) == ["ax1", "ax2", "ax3", "ax4"]


def test_sat_union_errors(o1):
    with pytest.raises(NotEntailed):
        SatPinpointer().union(o1, parse_goal("(sub C A)"))
    with pytest.raises(PreconditionViolated):
        SatPinpointer().union(o1, parse_goal("(sub A (some r D))"))


def test_muses_match_justifications(o1, o3, a_sub_c):
    f = SatPinpointer().formula(o1, a_sub_c)
    assert set(muses_as_justifications(f, brute_force_muses(f))) == {frozenset({"ax3"}), frozenset({"ax1", "ax2"})}
    f3 = SatPinpointer().formula(o3, a_sub_c)
    assert set(muses_as_justifications(f3, brute_force_muses(f3))) == {
        frozenset({"ax1", "ax2"}), frozenset({"ax1", "ax3", "ax4"}),
    }


def test_dimacs_export(o2, a_sub_c):
    f = SatPinpointer().formula(o2, a_sub_c, cone=False)
    text = formula_to_dimacs(f)
    lines = text.splitlines()
    assert "c axiom ax1 var 1" in lines
    assert f"c goal var {f.goal_var}" in lines
    assert f"p cnf {f.num_vars} {len(f.clauses)}" in lines
    assert lines[-1] == f"-{f.goal_var} 0"


def test_gcnf_export(o2, a_sub_c):
    f = SatPinpointer().formula(o2, a_sub_c, cone=False)
    lines = formula_to_gcnf(f).splitlines()
    assert f"p gcnf {f.num_vars} {len(f.clauses)} 2" in lines
    assert "{1} 1 0" in lines
    assert "{2} 2 0" in lines
    assert lines[-1] == f"{{0}} -{f.goal_var} 0"


def test_labels_are_axioms_first(o1, a_sub_c):
    f = SatPinpointer().formula(o1, a_sub_c, cone=False)
    module_size = len(f.axiom_units)
    assert all(isinstance(f.labels[v], AxiomLabel) for v in range(1, module_size + 1))


def test_membership_union_on_generated_alc_instance():
    o = generate_ontology(194, 12, Profile.ALC)
    goal = parse_goal("(sub C E)")
    assert union_via_membership(o, goal) == brute_force_justifications(o, goal).union


@pytest.mark.slow
@pytest.mark.parametrize("profile", [Profile.EL, Profile.ALC])
@pytest.mark.parametrize("block", range(10))
def test_formula_unsat_iff_entailed(profile, block, test_settings):
    pinpointer = SatPinpointer(test_settings)
    for seed, o in generate_suite(range(block * 50 + 1, block * 50 + 51), profile, settings=test_settings):
        names = sorted(signature_of(o).concept_names)
        for a, b in itertools.permutations(names, 2):
            goal = parse_goal(f"(sub {a} {b})")
            where = f"seed={seed} {profile.value} {goal}"
            f = pinpointer.formula(o, goal)
            entailed = entails(o, goal, test_settings)
            assert (not sat(f.clauses)) == entailed, where
            if entailed and len(f.clauses) <= 20 and len(module_for_goal(o, goal)) <= test_settings.brute_force_cap:
                muses = set(muses_as_justifications(f, brute_force_muses(f, test_settings)))
                brute = brute_force_justifications(o, goal, test_settings)
                assert muses == {frozenset(j) for j in brute.justifications}, where
