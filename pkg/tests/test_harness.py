import csv

import pytest
from hypothesis import HealthCheck, given, settings as hyp_settings, strategies as st

from pinpoint.core.config import Settings
from pinpoint.core.exceptions import CapExceeded, DisagreementDetected, NotEntailed
from pinpoint.core.tasks import TaskManager, TaskStatus
from pinpoint.harness import (
    Profile, brute_force_justifications, check_agreement, generate_ontology, generate_suite, prune_comparison,
    prune_effectiveness, run_bench, semantic_entails,
)
from pinpoint.harness import bench as bench_module
from pinpoint.models import signature_of
from pinpoint.pinpointing import (
    BlackBoxPinpointer, compute_core, single_justification, union_of_all_justifications, union_via_membership,
)
from pinpoint.reasoner import classify, entails, module_for_goal, saturation_entails
from pinpoint.schemas import CSV_COLUMNS, BenchRow
from pinpoint.utils import parse_goal, parse_ontology, serialize_ontology


def test_generator_is_deterministic():
    assert generate_ontology(1, 5, Profile.EL) == generate_ontology(1, 5, Profile.EL)
    assert generate_ontology(1, 5, Profile.EL) != generate_ontology(2, 5, Profile.EL)


@given(seed=st.integers(0, 10_000), n=st.integers(1, 15), profile=st.sampled_from(list(Profile)))
def test_generated_axioms_parse_back(seed, n, profile):
    o = generate_ontology(seed, n, profile)
    assert len(o) == n
    assert parse_ontology(serialize_ontology(o)) == o


def test_el_profile_stays_in_el():
    for seed in range(50):
        text = serialize_ontology(generate_ontology(seed, 10, Profile.EL))
        for keyword in ("(not", "(or", "(all", "Bot"):
            assert keyword not in text


def test_generator_rejects_empty_size():
    with pytest.raises(ValueError):
        generate_ontology(1, 0)


def test_some_generated_goal_has_several_justifications():
    for seed in range(1, 501):
        o = generate_ontology(seed, 10, Profile.EL)
        for goal in classify(o):
            if len(module_for_goal(o, goal)) > 8:
                continue
            if len(brute_force_justifications(o, goal).justifications) >= 2:
                return
    pytest.fail("no instance with two justifications in 500 seeds")


def test_brute_force_examples(o1, o2, a_sub_c):
    r1 = brute_force_justifications(o1, a_sub_c)
    assert (r1.core, r1.union, r1.justifications) == ([], ["ax1", "ax2", "ax3"], [["ax3"], ["ax1", "ax2"]])
    r2 = brute_force_justifications(o2, a_sub_c)
    assert (r2.core, r2.union, r2.justifications) == (["ax1", "ax2"], ["ax1", "ax2"], [["ax1", "ax2"]])
    r3 = brute_force_justifications(o1, parse_goal("(sub A A)"))
    assert (r3.core, r3.union, r3.justifications) == ([], [], [[]])


def test_brute_force_cap(o1, a_sub_c):
    with pytest.raises(CapExceeded):
        brute_force_justifications(o1, a_sub_c, Settings(brute_force_cap=2))
    with pytest.raises(NotEntailed):
        brute_force_justifications(o1, parse_goal("(sub C A)"))


def test_semantic_entails_examples(o1, o2):
    assert semantic_entails(o2, parse_goal("(sub A C)"))
    assert not semantic_entails(o1, parse_goal("(sub C A)"))
    o = parse_ontology("(sub A (some r B))\n(sub A (all r C))\n(sub (some r (and B C)) D)")
    assert semantic_entails(o, parse_goal("(sub A D)"))
    assert not semantic_entails(o, parse_goal("(sub D A)"))


def test_semantic_countermodel_needs_role_successor():
    o = parse_ontology("(sub A (some r B))")
    assert not semantic_entails(o, parse_goal("(sub A (all r C))"))
    assert semantic_entails(o, parse_goal("(sub A (some r Top))"))


@pytest.mark.slow
@hyp_settings(max_examples=100, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(seed=st.integers(1, 1000), profile=st.sampled_from(list(Profile)))
def test_reasoners_agree_with_bounded_models(seed, profile):
    small = Settings(generator_concept_names=4, generator_role_names=1)
    o = generate_ontology(seed, 6, profile, small)
    names = sorted(signature_of(o).concept_names)
    for a in names:
        for b in names:
            goal = parse_goal(f"(sub {a} {b})")
            tableau = entails(o, goal)
            assert saturation_entails(o, goal) == tableau
            if tableau:
                # a real entailment has no countermodel of any size
                assert semantic_entails(o, goal, 3)
            if not semantic_entails(o, goal, 3):
                assert not tableau


@pytest.mark.slow
@pytest.mark.parametrize("profile", [Profile.EL, Profile.ALC])
@pytest.mark.parametrize("block", range(10))
def test_pinpointing_matches_brute_force(profile, block, test_settings):
    seeds = range(block * 50 + 1, block * 50 + 51)
    for seed, o in generate_suite(seeds, profile, settings=test_settings):
        for goal in classify(o, test_settings):
            if len(module_for_goal(o, goal)) > 16:
                continue
            check_against_brute_force(o, goal, test_settings, f"seed={seed} {profile.value} {goal}")


def check_against_brute_force(o, goal, settings, where):
    brute = brute_force_justifications(o, goal, settings)
    core = compute_core(o, goal, settings)
    assert core == brute.core, where
    result = union_of_all_justifications(o, goal, core, settings)
    assert result.union == brute.union, where
    assert union_via_membership(o, goal, settings) == brute.union, where

    just = single_justification(o, goal, core, settings)
    assert just in brute.justifications, where
    if set(just) == set(core):
        assert len(brute.justifications) == 1, where
    if len(brute.justifications) == 1:
        assert result.early_return and len(result.justifications) == 1, where

    calls = prune_comparison(o, goal, settings)
    assert calls["pruned"] <= calls["unpruned"], where
    assert calls["n_justifications"] == len(brute.justifications), where


@pytest.mark.parametrize("profile", list(Profile))
def test_check_against_brute_force_on_a_few_instances(profile, test_settings):
    for seed, o in generate_suite(range(1, 6), profile, settings=test_settings):
        for goal in classify(o, test_settings):
            if len(module_for_goal(o, goal)) <= 8:
                check_against_brute_force(o, goal, test_settings, f"seed={seed} {profile.value} {goal}")


def test_prune_comparison_reports_counts(o1, a_sub_c):
    calls = prune_comparison(o1, a_sub_c)
    assert calls["n_justifications"] == 2
    assert calls["pruned"] <= calls["unpruned"]


def test_bench_on_o1(ontology_dir, tmp_path):
    out = tmp_path / "bench.csv"
    rows = run_bench(ontology_dir, ["blackbox", "musmem", "brute"], out)
    goal_rows = [r for r in rows if r.goal == "(sub A C)"]
    assert [r.method for r in goal_rows] == ["blackbox", "brute", "musmem"]
    assert {r.union_size for r in goal_rows} == {3}

    brute = next(r for r in goal_rows if r.method == "brute")
    assert (brute.core_size, brute.just_size, brute.union_size) == (0, 1, 3)
    assert brute.n_justifications == 2

    with open(out, newline="", encoding="utf-8") as fp:
        table = list(csv.reader(fp))
    assert table[0] == CSV_COLUMNS
    assert len(table) == 1 + 3 * 3
    assert all(row[9] == "" for row in table[1:])


def test_bench_is_byte_identical(ontology_dir, tmp_path):
    first, second = tmp_path / "a.csv", tmp_path / "b.csv"
    run_bench(ontology_dir, ["blackbox", "brute"], first)
    run_bench(ontology_dir, ["blackbox", "brute"], second, settings=Settings(bench_workers=4))
    assert first.read_bytes() == second.read_bytes()


def test_bench_on_empty_directory(tmp_path):
    empty = tmp_path / "empty"
    empty.mkdir()
    out = tmp_path / "out.csv"
    assert run_bench(empty, ["blackbox"], out) == []
    assert out.read_text(encoding="utf-8") == ",".join(CSV_COLUMNS) + "\n"


def test_bench_timing_fills_column(ontology_dir, tmp_path):
    rows = run_bench(ontology_dir, ["blackbox"], tmp_path / "t.csv", timing=True)
    assert all(r.time_ms is not None for r in rows)


def test_bench_detects_disagreement(ontology_dir, tmp_path, monkeypatch):
    def wrong(name, o, goal, settings):
        return BenchRow(ontology=name, goal=str(goal), method="musmem", module_size=0, union_size=0, union=[])

    monkeypatch.setitem(bench_module.ROW_BUILDERS, "musmem", wrong)
    out = tmp_path / "bad.csv"
    with pytest.raises(DisagreementDetected):
        run_bench(ontology_dir, ["blackbox", "musmem"], out)
    assert out.exists()


def test_bench_skips_capped_brute_rows(ontology_dir, tmp_path):
    rows = run_bench(ontology_dir, ["blackbox", "brute"], tmp_path / "c.csv", settings=Settings(brute_force_cap=0))
    assert {r.method for r in rows} == {"blackbox"}


def test_check_agreement():
    rows = [
        BenchRow(ontology="o", goal="g", method="blackbox", module_size=1, union_size=1, union=["a"]),
        BenchRow(ontology="o", goal="g", method="brute", module_size=1, union_size=1, union=["a"]),
    ]
    assert check_agreement(rows) == []
    rows.append(BenchRow(ontology="o", goal="g", method="musmem", module_size=1, union_size=1, union=["b"]))
    assert len(check_agreement(rows)) == 1


def test_task_manager_bookkeeping():
    manager = TaskManager(workers=2)
    ok = manager.create_task(lambda: 42, "blackbox")
    bad = manager.create_task(lambda: 1 / 0, "blackbox")
    assert (ok, bad) == ("blackbox-1", "blackbox-2")
    manager.run_all()
    assert manager.get_task_status(ok).result == 42
    assert manager.get_task_status(ok).status == TaskStatus.COMPLETED
    assert [t.task_id for t in manager.failed()] == [bad]
    assert isinstance(manager.get_task_status(bad).exception, ZeroDivisionError)


def test_blackbox_counts_include_core(o1, a_sub_c):
    p = BlackBoxPinpointer()
    core = p.compute_core(o1, a_sub_c)
    before = p.oracle_calls
    p.union_of_all_justifications(o1, a_sub_c, core)
    assert p.oracle_calls > before


def test_layered_profile_only_links_consecutive_layers():
    o = generate_ontology(7, 30, Profile.LAYERED)
    layer = {name: i // 2 for i, name in enumerate("ABCDEFGH")}
    for ax in o:
        step = layer[ax.kind.rhs.name] - layer[ax.kind.lhs.name]
        assert step in (1, 2)


def test_layered_profile_needs_two_layers():
    with pytest.raises(ValueError):
        generate_ontology(1, 5, Profile.LAYERED, Settings(generator_concept_names=2))


def test_generate_suite_cycles_sizes():
    sizes = [len(o) for _, o in generate_suite(range(1, 6), Profile.EL)]
    assert sizes == [9, 10, 11, 12, 8]


def test_prune_saves_calls_on_two_disjoint_paths():
    o = parse_ontology("(sub A B)\n(sub B C)\n(sub C D)\n(sub A E)\n(sub E F)\n(sub F D)")
    calls = prune_comparison(o, parse_goal("(sub A D)"))
    assert calls["n_justifications"] == 2
    assert calls["pruned"] < calls["unpruned"]


@pytest.mark.slow
@pytest.mark.parametrize("profile", list(Profile))
def test_prune_never_costs_more_on_the_suite(profile, test_settings):
    counts = prune_effectiveness(range(1, 301), profile, settings=test_settings)
    assert counts["worse"] == 0
    assert counts["strict"] <= counts["multi"] <= counts["goals"]


@pytest.mark.slow
def test_prune_is_strictly_better_on_a_tenth_of_layered_goals(test_settings):
    counts = prune_effectiveness(range(1, 301), Profile.LAYERED, settings=test_settings)
    assert counts["multi"] > 0
    assert counts["strict"] * 10 >= counts["multi"]
