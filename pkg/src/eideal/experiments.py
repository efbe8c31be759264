"""Reproducible Monte Carlo campaigns over random edge ideals.

Workers share nothing but the immutable config; every trial draws its own
substream from hash(seed, experiment, n, trial); per-trial values are merged
in trial order, so reports are bit-identical for any worker count.
"""

from __future__ import annotations

import json
import math
import multiprocessing as mp
import time
from dataclasses import dataclass, field

from . import __version__
from .asymptotics import (expected_chordless_cycles, gw_limit_estimate,
                          prob_lp_dense_window, prob_lr_dense_window,
                          prob_lr_sparse_window)
from .betti import (DEFAULT_BETTI_GUARD, betti_table, pd_componentwise,
                    regularity_componentwise)
from .chordality import (count_chordless_cycles, count_triangles,
                         is_4_cochordal, is_cochordal, is_locally_4_cochordal,
                         is_locally_cochordal)
from .comb_invariants import (DEFAULT_MIS_BUDGET, BudgetExceededError,
                              cover_profile)
from .graph_core import (connected_components, disjoint_union,
                         induced_subgraph, max_degree, to_hex_dump)
from .random_models import (ParamSchedule, rng_for, sample_gnp, schedule_p,
                            substream_seed)

EXPERIMENT_KINDS = ("threshold", "gw_limit", "unmixed_scan",
                    "cycle_calibration", "lipschitz_audit", "variance_audit",
                    "froberg_audit")

PREDICATES = {
    "is_cochordal": is_cochordal,
    "is_4_cochordal": is_4_cochordal,
    "is_locally_cochordal": is_locally_cochordal,
    "is_locally_4_cochordal": is_locally_4_cochordal,
}

WILSON_Z = 1.959963984540054  # two-sided 95%


def wilson_interval(successes: int, trials: int) -> tuple[float, float]:
    """Score interval; stable at proportions near 0 and 1."""
    if trials <= 0:
        raise ValueError("trials must be positive")
    z2 = WILSON_Z * WILSON_Z
    phat = successes / trials
    denom = 1.0 + z2 / trials
    center = (phat + z2 / (2 * trials)) / denom
    half = (WILSON_Z / denom) * math.sqrt(
        phat * (1 - phat) / trials + z2 / (4 * trials * trials))
    return (max(0.0, center - half), min(1.0, center + half))


class ConfigError(ValueError):
    """Invalid experiment config; message names the offending field."""


@dataclass(frozen=True)
class ExperimentConfig:
    kind: str
    seed: int
    trials: int = 100
    n_list: tuple[int, ...] = ()
    schedule: ParamSchedule | None = None
    predicates: tuple[str, ...] = ()
    k_max: int = 6
    poisson_k3: bool = False
    betti_guard: int = DEFAULT_BETTI_GUARD
    mis_budget: int = DEFAULT_MIS_BUDGET
    gw_cap: int = 10 ** 5
    gw_trials: int = 10 ** 5
    exhaustive_n: int = 7
    random_audit: tuple[tuple[int, int], ...] = ((8, 120), (9, 60))

    def to_json(self) -> dict:
        obj: dict = {"kind": self.kind, "seed": self.seed,
                     "trials": self.trials}
        if self.n_list:
            obj["n_list"] = list(self.n_list)
        if self.schedule is not None:
            obj["schedule"] = self.schedule.to_json()
        if self.predicates:
            obj["predicates"] = list(self.predicates)
        if self.kind == "cycle_calibration":
            obj["k_max"] = self.k_max
            obj["poisson_k3"] = self.poisson_k3
        if self.kind == "gw_limit":
            obj["gw_cap"] = self.gw_cap
            obj["gw_trials"] = self.gw_trials
        if self.kind == "froberg_audit":
            obj["exhaustive_n"] = self.exhaustive_n
            obj["random_audit"] = [list(x) for x in self.random_audit]
        obj["betti_guard"] = self.betti_guard
        obj["mis_budget"] = self.mis_budget
        return obj

    @classmethod
    def from_json(cls, obj: dict) -> "ExperimentConfig":
        if not isinstance(obj, dict):
            raise ConfigError("config: expected a JSON object")
        kind = obj.get("kind")
        if kind not in EXPERIMENT_KINDS:
            raise ConfigError(
                f"kind: got {kind!r}, expected one of {EXPERIMENT_KINDS}")
        if "seed" not in obj or not isinstance(obj["seed"], int):
            raise ConfigError("seed: a 64-bit integer seed is required")
        kwargs: dict = {"kind": kind, "seed": obj["seed"]}
        if "trials" in obj:
            if not isinstance(obj["trials"], int) or obj["trials"] < 1:
                raise ConfigError("trials: must be an integer >= 1")
            kwargs["trials"] = obj["trials"]
        if "n_list" in obj:
            nl = obj["n_list"]
            if (not isinstance(nl, list) or not nl
                    or any(not isinstance(x, int) or x < 1 for x in nl)):
                raise ConfigError("n_list: must be a non-empty list of n >= 1")
            kwargs["n_list"] = tuple(nl)
        if "schedule" in obj:
            try:
                kwargs["schedule"] = ParamSchedule.from_json(obj["schedule"])
            except ValueError as exc:
                raise ConfigError(f"schedule: {exc}") from exc
        if "predicates" in obj:
            preds = obj["predicates"]
            if isinstance(preds, str):
                preds = [preds]
            for p in preds:
                if p not in PREDICATES:
                    raise ConfigError(
                        f"predicates: unknown {p!r}, expected "
                        f"{sorted(PREDICATES)}")
            kwargs["predicates"] = tuple(preds)
        for key in ("k_max", "betti_guard", "mis_budget", "gw_cap",
                    "gw_trials", "exhaustive_n"):
            if key in obj:
                if not isinstance(obj[key], int) or obj[key] < 1:
                    raise ConfigError(f"{key}: must be an integer >= 1")
                kwargs[key] = obj[key]
        if "poisson_k3" in obj:
            if not isinstance(obj["poisson_k3"], bool):
                raise ConfigError("poisson_k3: must be a boolean")
            kwargs["poisson_k3"] = obj["poisson_k3"]
        if "random_audit" in obj:
            try:
                kwargs["random_audit"] = tuple(
                    (int(n), int(c)) for n, c in obj["random_audit"])
            except (TypeError, ValueError) as exc:
                raise ConfigError("random_audit: expected [[n, count], ...]"
                                  ) from exc
        cfg = cls(**kwargs)
        cfg.validate()
        return cfg

    def validate(self):
        needs_schedule = self.kind in ("threshold", "gw_limit", "unmixed_scan",
                                       "cycle_calibration", "variance_audit")
        if needs_schedule and self.schedule is None:
            raise ConfigError(f"schedule: required for kind {self.kind!r}")
        needs_n = self.kind in ("threshold", "gw_limit", "unmixed_scan",
                                "cycle_calibration", "variance_audit")
        if needs_n and not self.n_list:
            raise ConfigError(f"n_list: required for kind {self.kind!r}")
        if self.kind == "threshold" and not self.predicates:
            raise ConfigError("predicates: required for kind 'threshold'")
        if self.kind in ("gw_limit", "variance_audit"):
            if self.schedule.kind != "sparse":
                raise ConfigError(
                    f"schedule: kind {self.kind!r} needs a sparse schedule")
            if self.kind == "gw_limit" and self.schedule.lam > 1:
                raise ConfigError("schedule: gw_limit needs lambda <= 1")


@dataclass
class Cell:
    experiment: str
    n: int | None
    cell_id: str
    estimate: float | None
    ci_lo: float | None = None
    ci_hi: float | None = None
    theory: float | None = None
    censored: int = 0
    guard_trips: int = 0
    trials: int = 0
    seconds: float = 0.0
    extra: dict = field(default_factory=dict)

    def as_dict(self, include_timing: bool = True) -> dict:
        obj = {"experiment": self.experiment, "n": self.n,
               "cell_id": self.cell_id, "estimate": self.estimate,
               "ci_lo": self.ci_lo, "ci_hi": self.ci_hi,
               "theory": self.theory, "censored": self.censored,
               "guard_trips": self.guard_trips, "trials": self.trials}
        if include_timing:
            obj["seconds"] = round(self.seconds, 3)
        if self.extra:
            obj["extra"] = self.extra
        return obj


CSV_COLUMNS = ("experiment", "n", "cell_id", "estimate", "ci_lo", "ci_hi",
               "theory", "censored", "guard_trips", "trials", "seconds")


def _fmt(x) -> str:
    if x is None:
        return ""
    if isinstance(x, float):
        return f"{x:.12g}"
    return str(x)


@dataclass
class ExperimentReport:
    kind: str
    config: dict
    cells: list[Cell]
    witnesses: list[dict] = field(default_factory=list)
    version: str = __version__

    @property
    def has_witness(self) -> bool:
        return bool(self.witnesses)

    def to_json(self, include_timing: bool = True) -> str:
        obj = {"experiment": self.kind, "version": self.version,
               "config": self.config,
               "cells": [c.as_dict(include_timing) for c in self.cells],
               "witnesses": self.witnesses}
        return json.dumps(obj, sort_keys=True, indent=2) + "\n"

    def to_csv(self, include_timing: bool = True) -> str:
        lines = [",".join(CSV_COLUMNS)]
        for c in self.cells:
            row = c.as_dict(include_timing=True)
            if not include_timing:
                row["seconds"] = None
            lines.append(",".join(_fmt(row.get(col)) for col in CSV_COLUMNS))
        return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Deterministic chunked worker pool
# ---------------------------------------------------------------------------

def _chunk_ranges(total: int, parts: int) -> list[tuple[int, int]]:
    parts = max(1, min(parts, total))
    step = (total + parts - 1) // parts
    return [(lo, min(lo + step, total)) for lo in range(0, total, step)]


def run_chunked(fn, tasks: list, workers: int) -> list:
    """Apply a picklable function to tasks; results come back in task order
    (pool.map preserves ordering), so merges are worker-count independent."""
    if workers <= 1 or len(tasks) <= 1:
        return [fn(task) for task in tasks]
    ctx = mp.get_context("fork")
    with ctx.Pool(processes=workers) as pool:
        return pool.map(fn, tasks)


def _trial_chunks(trials: int, workers: int) -> list[tuple[int, int]]:
    return _chunk_ranges(trials, max(workers * 4, 1))


# ---------------------------------------------------------------------------
# threshold
# ---------------------------------------------------------------------------

def _threshold_chunk(task):
    seed, n, p, pred_names, lo, hi = task
    counts = [0] * len(pred_names)
    for t in range(lo, hi):
        g = sample_gnp(n, p, substream_seed(seed, "threshold", n, t))
        for i, name in enumerate(pred_names):
            if PREDICATES[name](g):
                counts[i] += 1
    return counts


def run_threshold(config: ExperimentConfig, workers: int = 1) -> ExperimentReport:
    cells = []
    for n in config.n_list:
        p = schedule_p(config.schedule, n)
        t0 = time.perf_counter()
        tasks = [(config.seed, n, p, config.predicates, lo, hi)
                 for lo, hi in _trial_chunks(config.trials, workers)]
        partials = run_chunked(_threshold_chunk, tasks, workers)
        elapsed = time.perf_counter() - t0
        for i, name in enumerate(config.predicates):
            hits = sum(part[i] for part in partials)
            est = hits / config.trials
            lo_ci, hi_ci = wilson_interval(hits, config.trials)
            theory = _threshold_theory(config.schedule, name)
            cells.append(Cell("threshold", n, name, est, lo_ci, hi_ci,
                              theory, 0, 0, config.trials, elapsed,
                              extra={"p": p, "successes": hits}))
    return ExperimentReport("threshold", config.to_json(), cells)


def _threshold_theory(schedule: ParamSchedule, predicate: str) -> float | None:
    if schedule.kind == "window_sparse" and predicate in (
            "is_cochordal", "is_4_cochordal"):
        return prob_lr_sparse_window(schedule.lam).value
    if schedule.kind == "window_dense" and predicate == "is_4_cochordal":
        return prob_lp_dense_window(schedule.lam).value
    if schedule.kind == "window_dense" and predicate == "is_cochordal":
        return prob_lr_dense_window(schedule.lam).value
    if schedule.kind == "constant":
        if schedule.p == 0.0:
            return 1.0
        if schedule.p == 1.0:
            return 1.0
    return None


# ---------------------------------------------------------------------------
# gw_limit
# ---------------------------------------------------------------------------

def _gw_graph_chunk(task):
    seed, n, p, betti_guard, lo, hi = task
    rows = []
    for t in range(lo, hi):
        g = sample_gnp(n, p, substream_seed(seed, "gw_limit", n, t))
        parts = connected_components(g)
        reg = regularity_componentwise(g, betti_guard=betti_guard, parts=parts)
        pd = pd_componentwise(g, betti_guard=betti_guard, parts=parts)
        rows.append((reg.value, pd.value, reg.censored_components,
                     pd.censored_components, len(parts)))
    return rows


def run_gw_limit(config: ExperimentConfig, workers: int = 1) -> ExperimentReport:
    lam = config.schedule.lam
    cells = []
    tree_est = {}
    for which in ("induced_matching", "pd", "depth"):
        t0 = time.perf_counter()
        est = gw_limit_estimate(lam, config.gw_trials, config.gw_cap, which,
                                config.seed)
        tree_est[which] = est
        cells.append(Cell("gw_limit", None, f"tree_{which}", est.estimate,
                          est.estimate - WILSON_Z * est.stderr,
                          est.estimate + WILSON_Z * est.stderr,
                          None, round(est.censor_fraction * config.gw_trials),
                          0, est.trials, time.perf_counter() - t0,
                          extra={"stderr": est.stderr,
                                 "censor_fraction": est.censor_fraction}))
    for n in config.n_list:
        p = schedule_p(config.schedule, n)
        t0 = time.perf_counter()
        tasks = [(config.seed, n, p, config.betti_guard, lo, hi)
                 for lo, hi in _trial_chunks(config.trials, workers)]
        rows = [row for part in run_chunked(_gw_graph_chunk, tasks, workers)
                for row in part]
        elapsed = time.perf_counter() - t0
        columns = {
            "reg_star": [r[0] / n for r in rows],
            "pd": [r[1] / n for r in rows],
            "depth": [(n - r[1]) / n for r in rows],
        }
        censored = sum(max(r[2], r[3]) for r in rows)
        total_comps = sum(r[4] for r in rows)
        tree_key = {"reg_star": "induced_matching", "pd": "pd",
                    "depth": "depth"}
        for col, vals in columns.items():
            mean = math.fsum(vals) / len(vals)
            var = math.fsum((v - mean) ** 2 for v in vals) / (len(vals) - 1)
            se = math.sqrt(var / len(vals))
            est = tree_est[tree_key[col]]
            combined = math.hypot(se, est.stderr)
            gap_se = abs(mean - est.estimate) / combined if combined else 0.0
            cells.append(Cell(
                "gw_limit", n, f"graph_{col}", mean,
                mean - WILSON_Z * se, mean + WILSON_Z * se, est.estimate,
                censored, 0, len(vals), elapsed / 3,
                extra={"stderr": se, "gap_combined_se": gap_se,
                       "censored_component_fraction":
                           censored / total_comps if total_comps else 0.0}))
    return ExperimentReport("gw_limit", config.to_json(), cells)


# ---------------------------------------------------------------------------
# unmixed_scan
# ---------------------------------------------------------------------------

def _unmixed_chunk(task):
    seed, n, p, budget, lo, hi = task
    unmixed = 0
    counted = 0
    trips = 0
    for t in range(lo, hi):
        g = sample_gnp(n, p, substream_seed(seed, "unmixed_scan", n, t))
        try:
            if cover_profile(g, budget).unmixed:
                unmixed += 1
            counted += 1
        except BudgetExceededError:
            trips += 1
    return unmixed, counted, trips


def run_unmixed_scan(config: ExperimentConfig, workers: int = 1) -> ExperimentReport:
    cells = []
    for n in config.n_list:
        p = schedule_p(config.schedule, n)
        t0 = time.perf_counter()
        tasks = [(config.seed, n, p, config.mis_budget, lo, hi)
                 for lo, hi in _trial_chunks(config.trials, workers)]
        parts = run_chunked(_unmixed_chunk, tasks, workers)
        elapsed = time.perf_counter() - t0
        unmixed = sum(x[0] for x in parts)
        counted = sum(x[1] for x in parts)
        trips = sum(x[2] for x in parts)
        est = unmixed / counted if counted else float("nan")
        lo_ci, hi_ci = wilson_interval(unmixed, counted) if counted else (None,
                                                                          None)
        cells.append(Cell("unmixed_scan", n, "unmixed_fraction", est, lo_ci,
                          hi_ci, None, 0, trips, counted, elapsed,
                          extra={"p": p,
                                 "schedule": config.schedule.describe()}))
    return ExperimentReport("unmixed_scan", config.to_json(), cells)


# ---------------------------------------------------------------------------
# cycle_calibration
# ---------------------------------------------------------------------------

def _cycle_chunk(task):
    seed, n, p, k_max, want_k3, lo, hi = task
    sums = {k: 0 for k in range(4, k_max + 1)}
    sq_sums = {k: 0 for k in range(4, k_max + 1)}
    triangles = []
    for t in range(lo, hi):
        g = sample_gnp(n, p, substream_seed(seed, "cycle_calibration", n, t))
        counts = count_chordless_cycles(g, k_max).by_length
        for k in sums:
            c = counts.get(k, 0)
            sums[k] += c
            sq_sums[k] += c * c
        if want_k3:
            triangles.append(count_triangles(g))
    return sums, sq_sums, triangles


def run_cycle_calibration(config: ExperimentConfig,
                          workers: int = 1) -> ExperimentReport:
    cells = []
    for n in config.n_list:
        p = schedule_p(config.schedule, n)
        t0 = time.perf_counter()
        tasks = [(config.seed, n, p, config.k_max, config.poisson_k3, lo, hi)
                 for lo, hi in _trial_chunks(config.trials, workers)]
        parts = run_chunked(_cycle_chunk, tasks, workers)
        elapsed = time.perf_counter() - t0
        trials = config.trials
        for k in range(4, config.k_max + 1):
            total = sum(part[0][k] for part in parts)
            total_sq = sum(part[1][k] for part in parts)
            mean = total / trials
            var = (total_sq - trials * mean * mean) / (trials - 1)
            se = math.sqrt(max(var, 0.0) / trials)
            theory = expected_chordless_cycles(n, p, k)
            gap = abs(mean - theory) / se if se > 0 else (
                0.0 if mean == theory else math.inf)
            cells.append(Cell("cycle_calibration", n, f"mean_chordless_{k}",
                              mean, mean - WILSON_Z * se, mean + WILSON_Z * se,
                              theory, 0, 0, trials, elapsed / config.k_max,
                              extra={"stderr": se, "gap_se": gap, "p": p}))
        if config.poisson_k3:
            triangle_counts = [x for part in parts for x in part[2]]
            lam3 = (n * p) ** 3 / 6.0
            tv = _tv_distance_poisson(triangle_counts, lam3)
            cells.append(Cell("cycle_calibration", n, "triangle_poisson_tv",
                              tv, None, None, 0.0, 0, 0, trials, 0.0,
                              extra={"poisson_mean": lam3}))
    return ExperimentReport("cycle_calibration", config.to_json(), cells)


def _tv_distance_poisson(counts: list[int], lam: float) -> float:
    trials = len(counts)
    freq: dict[int, int] = {}
    for c in counts:
        freq[c] = freq.get(c, 0) + 1
    kmax = max(freq) if freq else 0
    tv = 0.0
    pmf_sum = 0.0
    pmf = math.exp(-lam)
    for k in range(0, kmax + 1):
        emp = freq.get(k, 0) / trials
        tv += abs(emp - pmf)
        pmf_sum += pmf
        pmf = pmf * lam / (k + 1)
    tv += 1.0 - pmf_sum  # residual Poisson mass beyond the observed max
    return tv / 2.0


# ---------------------------------------------------------------------------
# lipschitz_audit (vertex-deletion bounds + component additivity)
# ---------------------------------------------------------------------------

def _lipschitz_chunk(task):
    seed, lo, hi = task
    violations = []
    for t in range(lo, hi):
        rng_seed = substream_seed(seed, "lipschitz_audit", t)
        rng = rng_for(rng_seed)
        n = int(rng.integers(2, 11))
        p = float(rng.uniform(0.05, 0.95))
        g = sample_gnp(n, p, substream_seed(rng_seed, "g"))
        v = int(rng.integers(0, n))
        h = induced_subgraph(g, [u for u in range(n) if u != v])
        reg_g = betti_table(g).regularity_quotient()
        reg_h = betti_table(h).regularity_quotient()
        pd_g = betti_table(g).projective_dimension()
        pd_h = betti_table(h).projective_dimension()
        if abs(reg_g - reg_h) > 1:
            violations.append({"kind": "reg", "graph": to_hex_dump(g).strip(),
                               "vertex": v, "delta": reg_g - reg_h})
        if abs(pd_g - pd_h) > max_degree(g) + 1:
            violations.append({"kind": "pd", "graph": to_hex_dump(g).strip(),
                               "vertex": v, "delta": pd_g - pd_h})
    return violations


def _additivity_chunk(task):
    seed, lo, hi = task
    violations = []
    for t in range(lo, hi):
        rng_seed = substream_seed(seed, "additivity_audit", t)
        rng = rng_for(rng_seed)
        n1 = int(rng.integers(2, 7))
        n2 = int(rng.integers(2, 7))
        a = sample_gnp(n1, float(rng.uniform(0.1, 0.9)),
                       substream_seed(rng_seed, "a"))
        b = sample_gnp(n2, float(rng.uniform(0.1, 0.9)),
                       substream_seed(rng_seed, "b"))
        g = disjoint_union(a, b)
        table = betti_table(g)
        reg_sum = (betti_table(a).regularity_quotient()
                   + betti_table(b).regularity_quotient())
        pd_sum = (betti_table(a).projective_dimension()
                  + betti_table(b).projective_dimension())
        if table.regularity_quotient() != reg_sum:
            violations.append({"kind": "reg_additivity",
                               "graph": to_hex_dump(g).strip()})
        if table.projective_dimension() != pd_sum:
            violations.append({"kind": "pd_additivity",
                               "graph": to_hex_dump(g).strip()})
    return violations


def run_lipschitz_audit(config: ExperimentConfig,
                        workers: int = 1) -> ExperimentReport:
    t0 = time.perf_counter()
    tasks = [(config.seed, lo, hi)
             for lo, hi in _trial_chunks(config.trials, workers)]
    lip_violations = [v for part in run_chunked(_lipschitz_chunk, tasks,
                                                workers) for v in part]
    add_trials = max(200, config.trials // 5)
    tasks = [(config.seed, lo, hi)
             for lo, hi in _trial_chunks(add_trials, workers)]
    add_violations = [v for part in run_chunked(_additivity_chunk, tasks,
                                                workers) for v in part]
    elapsed = time.perf_counter() - t0
    cells = [
        Cell("lipschitz_audit", None, "vertex_deletion_violations",
             float(len(lip_violations)), None, None, 0.0, 0, 0,
             config.trials, elapsed / 2),
        Cell("lipschitz_audit", None, "additivity_violations",
             float(len(add_violations)), None, None, 0.0, 0, 0,
             add_trials, elapsed / 2),
    ]
    return ExperimentReport("lipschitz_audit", config.to_json(), cells,
                            witnesses=lip_violations + add_violations)


# ---------------------------------------------------------------------------
# variance_audit
# ---------------------------------------------------------------------------

def _variance_chunk(task):
    seed, n, p, betti_guard, lo, hi = task
    vals = []
    for t in range(lo, hi):
        g = sample_gnp(n, p, substream_seed(seed, "variance_audit", n, t))
        vals.append(regularity_componentwise(g, betti_guard=betti_guard).value)
    return vals


def run_variance_audit(config: ExperimentConfig,
                       workers: int = 1) -> ExperimentReport:
    cells = []
    for n in config.n_list:
        p = schedule_p(config.schedule, n)
        t0 = time.perf_counter()
        tasks = [(config.seed, n, p, config.betti_guard, lo, hi)
                 for lo, hi in _trial_chunks(config.trials, workers)]
        vals = [v for part in run_chunked(_variance_chunk, tasks, workers)
                for v in part]
        elapsed = time.perf_counter() - t0
        mean = sum(vals) / len(vals)
        var = sum((v - mean) ** 2 for v in vals) / (len(vals) - 1)
        cells.append(Cell("variance_audit", n, "reg_star_variance_over_n",
                          var / n, None, None, 8.0, 0, 0, len(vals), elapsed,
                          extra={"mean_reg_star": mean, "variance": var}))
    return ExperimentReport("variance_audit", config.to_json(), cells)


# ---------------------------------------------------------------------------
# froberg_audit
# ---------------------------------------------------------------------------

def run_froberg_audit(config: ExperimentConfig,
                      workers: int = 1) -> ExperimentReport:
    from .corpus import exhaustive_flag_audit, random_flag_audit

    t0 = time.perf_counter()
    checked, mismatches = exhaustive_flag_audit(config.exhaustive_n, workers)
    elapsed = time.perf_counter() - t0
    cells = [Cell("froberg_audit", config.exhaustive_n,
                  "exhaustive_disagreements", float(len(mismatches)), None,
                  None, 0.0, 0, 0, checked, elapsed)]
    witnesses = [{"n": config.exhaustive_n, "edge_mask": m, "flags": flags}
                 for m, flags in mismatches]
    for n, count in config.random_audit:
        t0 = time.perf_counter()
        bad = random_flag_audit(n, count, config.seed)
        cells.append(Cell("froberg_audit", n, "random_disagreements",
                          float(len(bad)), None, None, 0.0, 0, 0, count,
                          time.perf_counter() - t0))
        witnesses.extend({"n": n, "edge_mask": m, "flags": flags}
                         for m, flags in bad)
    return ExperimentReport("froberg_audit", config.to_json(), cells,
                            witnesses=witnesses)


RUNNERS = {
    "threshold": run_threshold,
    "gw_limit": run_gw_limit,
    "unmixed_scan": run_unmixed_scan,
    "cycle_calibration": run_cycle_calibration,
    "lipschitz_audit": run_lipschitz_audit,
    "variance_audit": run_variance_audit,
    "froberg_audit": run_froberg_audit,
}


def run_experiment(config: ExperimentConfig, workers: int = 1) -> ExperimentReport:
    config.validate()
    return RUNNERS[config.kind](config, workers)
