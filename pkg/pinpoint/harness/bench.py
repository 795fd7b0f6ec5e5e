# filepath: pinpoint/harness/bench.py
"""
Benchmark runner: every entailed atomic inclusion of every input ontology,
answered by each requested method, one CSV row per (ontology, goal, method).

Queries run through the TaskManager; rows are sorted before they are
written, so the CSV does not depend on scheduling. With timing off the
time_ms column stays empty and two runs give byte-identical files.
"""
import csv
import logging
import time
from pathlib import Path
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Union

from pinpoint.core.config import Settings, settings as default_settings
from pinpoint.core.exceptions import CapExceeded, DisagreementDetected
from pinpoint.core.tasks import TaskManager, TaskStatus, TaskTypes
from pinpoint.models import Gci, Ontology
from pinpoint.pinpointing import BlackBoxPinpointer, SatPinpointer
from pinpoint.reasoner import classify, module_for_goal
from pinpoint.schemas import CSV_COLUMNS, BenchRow
from pinpoint.utils import load_ontology
from .generator import SUITE_SIZES, Profile, generate_suite
from .oracle import brute_force_justifications

logger = logging.getLogger(__name__)

METHODS = (TaskTypes.BLACKBOX, TaskTypes.MUSMEM, TaskTypes.BRUTE)
ONTOLOGY_GLOB = "*.ont"


def _blackbox_row(name: str, o: Ontology, goal: Gci, settings: Settings) -> BenchRow:
    pinpointer = BlackBoxPinpointer(settings)
    core = pinpointer.compute_core(o, goal)
    result = pinpointer.union_of_all_justifications(o, goal, core)
    return BenchRow(
        ontology=name,
        goal=str(goal),
        method=TaskTypes.BLACKBOX,
        module_size=result.module_size,
        core_size=len(core),
        just_size=len(result.single_justification or []),
        union_size=len(result.union),
        oracle_calls=result.oracle_calls,
        union=result.union,
    )


def _musmem_row(name: str, o: Ontology, goal: Gci, settings: Settings) -> BenchRow:
    result = SatPinpointer(settings).union(o, goal)
    return BenchRow(
        ontology=name,
        goal=str(goal),
        method=TaskTypes.MUSMEM,
        module_size=result.module_size,
        union_size=len(result.union),
        oracle_calls=result.oracle_calls,
        union=result.union,
    )


def _brute_row(name: str, o: Ontology, goal: Gci, settings: Settings) -> BenchRow:
    result = brute_force_justifications(o, goal, settings)
    return BenchRow(
        ontology=name,
        goal=str(goal),
        method=TaskTypes.BRUTE,
        module_size=result.module_size,
        core_size=len(result.core),
        just_size=len(result.justifications[0]),
        union_size=len(result.union),
        n_justifications=len(result.justifications),
        oracle_calls=result.oracle_calls,
        union=result.union,
    )


ROW_BUILDERS: Dict[str, Callable[[str, Ontology, Gci, Settings], BenchRow]] = {
    TaskTypes.BLACKBOX: _blackbox_row,
    TaskTypes.MUSMEM: _musmem_row,
    TaskTypes.BRUTE: _brute_row,
}


def _timed(builder, name: str, o: Ontology, goal: Gci, settings: Settings, timing: bool) -> Callable[[], BenchRow]:
    def run() -> BenchRow:
        start = time.perf_counter()
        row = builder(name, o, goal, settings)
        if timing:
            row.time_ms = (time.perf_counter() - start) * 1000.0
        return row
    return run


def collect_inputs(inputs: Union[str, Path, Iterable[Union[str, Path]]]) -> List[Path]:
    """A directory expands to its *.ont files; results are sorted by name"""
    if isinstance(inputs, (str, Path)):
        inputs = [inputs]
    paths: List[Path] = []
    for item in inputs:
        p = Path(item)
        paths.extend(sorted(p.glob(ONTOLOGY_GLOB)) if p.is_dir() else [p])
    return sorted(paths, key=lambda p: p.name)


def check_agreement(rows: Sequence[BenchRow]) -> List[str]:
    """Goals on which the methods returned different unions"""
    unions: Dict[tuple, Dict[str, frozenset]] = {}
    for row in rows:
        unions.setdefault((row.ontology, row.goal), {})[row.method] = frozenset(row.union)
    return [
        f"{onto} {goal}: " + ", ".join(f"{m}={sorted(u)}" for m, u in sorted(by_method.items()))
        for (onto, goal), by_method in sorted(unions.items())
        if len(set(by_method.values())) > 1
    ]


def write_csv(rows: Sequence[BenchRow], out_path: Union[str, Path]):
    with open(out_path, "w", newline="", encoding="utf-8") as fp:
        writer = csv.writer(fp, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for row in rows:
            writer.writerow(row.to_csv())


def run_bench(
    inputs: Union[str, Path, Iterable[Union[str, Path]]],
    methods: Sequence[str] = METHODS,
    out_path: Optional[Union[str, Path]] = None,
    timing: bool = False,
    settings: Optional[Settings] = None,
) -> List[BenchRow]:
    """
    Run every method on every entailed atomic inclusion of the inputs.

    Brute-force rows whose module exceeds the cap are skipped with a
    warning; any other query failure is re-raised. The CSV is written
    before the agreement check.

    Raises:
        ValueError: unknown method
        DisagreementDetected: two methods returned different unions
    """
    settings = settings or default_settings
    unknown = [m for m in methods if m not in ROW_BUILDERS]
    if unknown:
        raise ValueError(f"unknown methods: {', '.join(unknown)}")

    manager = TaskManager(settings.bench_workers)
    for path in collect_inputs(inputs):
        o = load_ontology(path)
        goals = classify(o, settings)
        logger.info(f"{path.name}: {len(o)} axioms, {len(goals)} entailed atomic inclusions")
        for goal in goals:
            for method in methods:
                manager.create_task(
                    _timed(ROW_BUILDERS[method], path.name, o, goal, settings, timing),
                    method,
                    ontology=path.name,
                    goal=str(goal),
                )

    rows: List[BenchRow] = []
    for info in manager.run_all():
        if info.status == TaskStatus.COMPLETED:
            rows.append(info.result)
        elif isinstance(info.exception, CapExceeded):
            logger.warning(f"Skipping {info.task_id} on {info.labels}: {info.error}")
        elif info.exception is not None:
            raise info.exception
    rows.sort(key=BenchRow.sort_key)

    if out_path is not None:
        write_csv(rows, out_path)
        logger.info(f"Wrote {len(rows)} rows to {out_path}")

    disagreements = check_agreement(rows)
    if disagreements:
        raise DisagreementDetected("; ".join(disagreements))
    return rows


def prune_comparison(o: Ontology, goal: Gci, settings: Optional[Settings] = None) -> Dict[str, int]:
    """
    Oracle calls of the union search with and without the union prune.

    The core is computed once and handed to both searches, so the counts
    only cover the tree search.
    """
    settings = settings or default_settings
    core = BlackBoxPinpointer(settings).compute_core(o, goal)
    pruned = BlackBoxPinpointer(settings).union_of_all_justifications(o, goal, core, prune=True)
    unpruned = BlackBoxPinpointer(settings).union_of_all_justifications(o, goal, core, prune=False)
    return {
        "pruned": pruned.oracle_calls,
        "unpruned": unpruned.oracle_calls,
        "n_justifications": len(unpruned.justifications),
        "early_return": int(pruned.early_return),
    }


def prune_effectiveness(
    seeds: Iterable[int],
    profile: Profile,
    sizes: Sequence[int] = SUITE_SIZES,
    module_cap: int = 16,
    settings: Optional[Settings] = None,
) -> Dict[str, int]:
    """
    Count, over a generated suite, the entailed atomic goals with several
    justifications and how often the union prune strictly lowers (or
    raises) the oracle-call count of the union search.
    """
    settings = settings or default_settings
    counts = {"goals": 0, "multi": 0, "strict": 0, "worse": 0}
    for _, o in generate_suite(seeds, profile, sizes, settings):
        for goal in classify(o, settings):
            if len(module_for_goal(o, goal)) > module_cap:
                continue
            counts["goals"] += 1
            calls = prune_comparison(o, goal, settings)
            if calls["n_justifications"] < 2:
                continue
            counts["multi"] += 1
            counts["strict"] += calls["pruned"] < calls["unpruned"]
            counts["worse"] += calls["pruned"] > calls["unpruned"]
    logger.info(f"Prune effectiveness on {Profile(profile).value}: {counts}")
    return counts
