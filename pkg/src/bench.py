"""
Benchmark harness: run protocols on seeded random instances and tabulate
component counts next to both bounds.
"""
import logging
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional

import pandas as pd
from tqdm import tqdm

from .errors import SchemaError
from .fairness import Criterion, evaluate
from .instance import gen_random
from .protocols import ProtocolFactory
from .rational import format_rational

logger = logging.getLogger(__name__)

DEFAULTS = {"trials": 10, "seed": 0, "max_breakpoints": 3}


@dataclass
class TrialSpec:
    config: str
    trial: int
    seed: int
    criterion: str
    method: Optional[str]
    family_sizes: List[int]
    max_breakpoints: int
    weights: Optional[str]
    compact: bool = False
    timings: bool = False


@dataclass
class BenchReport:
    """Per-trial records plus per-configuration aggregates."""

    records: List[Dict[str, Any]]
    aggregates: List[Dict[str, Any]] = field(default_factory=list)

    @property
    def all_sound(self) -> bool:
        return all(record["sound"] for record in self.records)

    def to_dict(self) -> Dict[str, Any]:
        return {"records": self.records, "aggregates": self.aggregates, "all_sound": self.all_sound}


def parse_config(raw: Dict[str, Any], trials: Optional[int] = None, seed: Optional[int] = None,
                 timings: bool = False) -> List[TrialSpec]:
    """Expand a bench configuration into trial specs.

    Args:
        raw: Mapping with ``configurations`` and optional ``trials``, ``seed``, ``max_breakpoints``
        trials: Overrides the configured trial count
        seed: Overrides the configured base seed
        timings: Record wall times (the report is then no longer reproducible byte for byte)

    Returns:
        Trial specs in execution order; trial seeds are the base seed plus a running index
    """
    entries = raw.get("configurations")
    if not isinstance(entries, list) or not entries:
        raise SchemaError("configurations", "expected a non-empty list")
    trials = trials if trials is not None else int(raw.get("trials", DEFAULTS["trials"]))
    base_seed = seed if seed is not None else int(raw.get("seed", DEFAULTS["seed"]))
    default_breakpoints = int(raw.get("max_breakpoints", DEFAULTS["max_breakpoints"]))

    specs = []
    index = 0
    for position, entry in enumerate(entries):
        path = f"configurations[{position}]"
        if not isinstance(entry, dict):
            raise SchemaError(path, "expected a mapping")
        for key in ("name", "criterion", "family_sizes"):
            if key not in entry:
                raise SchemaError(f"{path}.{key}", "missing")
        try:
            criterion = Criterion.parse(entry["criterion"]).value
        except ValueError as exc:
            raise SchemaError(f"{path}.criterion", str(exc))
        sizes = entry["family_sizes"]
        if not isinstance(sizes, list) or not all(isinstance(s, int) and s >= 1 for s in sizes):
            raise SchemaError(f"{path}.family_sizes", "expected a list of positive integers")
        weights = entry.get("weights", "equal")
        if weights not in ("equal", "random"):
            raise SchemaError(f"{path}.weights", "expected 'equal' or 'random'")
        for trial in range(trials):
            specs.append(TrialSpec(
                config=str(entry["name"]),
                trial=trial,
                seed=base_seed + index,
                criterion=criterion,
                method=entry.get("method"),
                family_sizes=list(sizes),
                max_breakpoints=int(entry.get("max_breakpoints", default_breakpoints)),
                weights=None if weights == "equal" else "random",
                compact=bool(entry.get("compact", False)),
                timings=timings,
            ))
            index += 1
    return specs


def run_trial(spec: TrialSpec) -> Dict[str, Any]:
    """Generate one instance, divide it and evaluate the result."""
    started = time.perf_counter()
    inst = gen_random(len(spec.family_sizes), spec.family_sizes, spec.max_breakpoints, spec.seed, spec.weights)
    result = ProtocolFactory().divide(inst, spec.criterion, spec.method, spec.compact)
    report = evaluate(inst, result.allocation)
    record = {
        "config": spec.config,
        "trial": spec.trial,
        "seed": spec.seed,
        "k": inst.k,
        "n": inst.n,
        "criterion": spec.criterion,
        "method": result.method,
        "comp": result.comp,
        "paper_bound": result.paper_bound,
        "impl_bound": result.impl_bound,
        "verdicts": report.verdicts,
        "sound": report.verdicts[spec.criterion] and result.comp <= result.impl_bound,
    }
    if spec.timings:
        record["wall_time"] = round(time.perf_counter() - started, 6)
    return record


def aggregate(records: List[Dict[str, Any]]) -> List[Dict[str, Any]]:
    """Mean and max component counts per configuration, means as exact rationals."""
    if not records:
        return []
    frame = pd.DataFrame(records)
    grouped = frame.groupby("config", sort=False).agg(
        trials=("comp", "size"),
        comp_sum=("comp", "sum"),
        comp_max=("comp", "max"),
        impl_sum=("impl_bound", "sum"),
        impl_max=("impl_bound", "max"),
        paper_max=("paper_bound", "max"),
        sound=("sound", "all"),
    )
    rows = []
    for config, row in grouped.iterrows():
        trials = int(row["trials"])
        rows.append({
            "config": config,
            "trials": trials,
            "mean_comp": format_rational(Fraction(int(row["comp_sum"]), trials)),
            "max_comp": int(row["comp_max"]),
            "mean_impl_bound": format_rational(Fraction(int(row["impl_sum"]), trials)),
            "max_impl_bound": int(row["impl_max"]),
            "max_paper_bound": None if pd.isna(row["paper_max"]) else int(row["paper_max"]),
            "all_sound": bool(row["sound"]),
        })
    return rows


def run_bench(specs: List[TrialSpec], workers: int = 1) -> BenchReport:
    """Run every trial, in a process pool when ``workers > 1``; records keep trial order."""
    progress = dict(total=len(specs), desc="bench", disable=not sys.stderr.isatty())
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(tqdm(pool.map(run_trial, specs), **progress))
    else:
        records = [run_trial(spec) for spec in tqdm(specs, **progress)]
    report = BenchReport(records, aggregate(records))
    if not report.all_sound:
        bad = [r for r in records if not r["sound"]]
        logger.warning("%d trial(s) failed their own criterion, first: %s seed %s",
                       len(bad), bad[0]["config"], bad[0]["seed"])
    return report
