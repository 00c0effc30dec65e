"""Seeded Monte-Carlo experiment runners and CSV persistence.

Each trial draws its channels from trial_seed(master_seed, index), so results
are independent of execution order and worker count; aggregation always walks
trials in index order. Every CSV starts with one '#' metadata comment line
(scenario hash, master seed, artifact version) followed by the header row.
"""

from __future__ import annotations

import dataclasses
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from . import __version__
from .beamforming import design_beamforming
from .channels import generate_channels, trial_seed
from .objective import (ObjectiveCoefficients, SolverId, compute_coefficients,
                        f_rational, rate)
from .scenario import Scenario
from .solvers import ES_DEFAULT_GRID, FIXED_PA_DEFAULT, GAConfig, solve
from .taylor import expand_q, surrogate_value

DEFAULT_SOLVERS = (SolverId.ES, SolverId.ESMPI_GA, SolverId.TTE,
                   SolverId.GA, SolverId.EPA, SolverId.FIXED)
DEFAULT_K_VALUES = (1, 2, 4, 8, 16, 32, 64)
DEFAULT_N_VALUES = (8, 16, 32, 64, 128, 256, 512, 1024)
CURVE_POINTS = 201   # 200 uniform intervals, so 0, 0.5 and 1 are on-grid


@dataclass(frozen=True)
class ExperimentSpec:
    kind: str                                  # curve | sweep_k | sweep_n | solve
    scenario: Scenario = Scenario()
    solvers: tuple[SolverId, ...] = DEFAULT_SOLVERS
    trials: int = 200
    master_seed: int = 0
    sweep_values: tuple[int, ...] = ()
    out_path: Optional[str] = None
    workers: int = 1
    ga: GAConfig = GAConfig()
    es_grid_points: int = ES_DEFAULT_GRID
    curve_points: int = CURVE_POINTS
    beta0: float = 0.5
    fixed_beta: float = FIXED_PA_DEFAULT

    def __post_init__(self):
        if self.kind not in ("curve", "sweep_k", "sweep_n", "solve"):
            raise ValueError(f"unknown experiment kind: {self.kind!r}")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.sweep_values and any(v < 1 for v in self.sweep_values):
            raise ValueError("sweep values must be positive")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")


def _coeffs_for_trial(scenario: Scenario, seed: int) -> ObjectiveCoefficients:
    ch = generate_channels(scenario, seed)
    design = design_beamforming(ch)
    return compute_coefficients(scenario, ch, design)


def _map_trials(fn, args_list, workers: int):
    if workers <= 1 or len(args_list) <= 1:
        return [fn(args) for args in args_list]
    chunk = max(1, len(args_list) // (workers * 4))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, args_list, chunksize=chunk))


def _meta(spec: ExperimentSpec) -> dict:
    # total power is spelled out because the reproduced figures never state it
    return {
        "scenario_hash": spec.scenario.scenario_hash(),
        "master_seed": spec.master_seed,
        "version": __version__,
        "total_power_watts": spec.scenario.total_power,
    }


def format_value(x) -> str:
    if isinstance(x, float):
        return repr(x)
    return str(x)


def write_csv(path, header: Sequence[str], rows, meta: dict) -> None:
    path = Path(path)
    if path.parent != Path("."):
        path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write("# " + " ".join(f"{k}={v}" for k, v in meta.items()) + "\n")
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(format_value(x) for x in row) + "\n")


# -- curve: original vs surrogate rates over the beta grid --------------------

def _curve_trial(args):
    scenario, seed, points = args
    coeffs = _coeffs_for_trial(scenario, seed)
    grid = np.linspace(0.0, 1.0, points)
    orig = rate(f_rational(coeffs, grid))
    out = [orig]
    for order in (1, 3):
        te = expand_q(coeffs, 0.5, order=order)
        approx = np.maximum(surrogate_value(te, coeffs, grid), 0.0)
        out.append(rate(approx))
    return np.stack(out)


def run_curve(spec: ExperimentSpec):
    args = [(spec.scenario, trial_seed(spec.master_seed, t), spec.curve_points)
            for t in range(spec.trials)]
    acc = _map_trials(_curve_trial, args, spec.workers)
    mean = np.mean(np.stack(acc, axis=0), axis=0)
    grid = np.linspace(0.0, 1.0, spec.curve_points)
    header = ["beta", "rate_original", "rate_surrogate_order1", "rate_surrogate_order3"]
    rows = [(float(b), float(mean[0, i]), float(mean[1, i]), float(mean[2, i]))
            for i, b in enumerate(grid)]
    if spec.out_path:
        write_csv(spec.out_path, header, rows, _meta(spec))
    return header, rows


# -- sweep_k: multi-start convergence toward exhaustive search ----------------

def _sweep_k_trial(args):
    scenario, seed, k_values, ga, es_grid = args
    coeffs = _coeffs_for_trial(scenario, seed)
    es_rate = solve(coeffs, SolverId.ES, es_grid_points=es_grid).rate_bits
    k_rates = [solve(coeffs, SolverId.ESMPI_GA,
                     cfg=dataclasses.replace(ga, num_inits=k)).rate_bits
               for k in k_values]
    return es_rate, k_rates


def run_sweep_k(spec: ExperimentSpec):
    k_values = tuple(spec.sweep_values) or DEFAULT_K_VALUES
    args = [(spec.scenario, trial_seed(spec.master_seed, t), k_values,
             spec.ga, spec.es_grid_points) for t in range(spec.trials)]
    acc = _map_trials(_sweep_k_trial, args, spec.workers)
    es_mean = float(np.mean([a[0] for a in acc]))
    k_means = np.mean(np.array([a[1] for a in acc]), axis=0)
    header = ["K", "mean_rate_esmpi_ga", "mean_rate_es"]
    rows = [(k, float(k_means[i]), es_mean) for i, k in enumerate(k_values)]
    if spec.out_path:
        write_csv(spec.out_path, header, rows, _meta(spec))
    return header, rows


# -- sweep_n: solver comparison versus the surface size -----------------------

def _sweep_n_trial(args):
    scenario, seed, solvers, ga, es_grid, beta0, fixed_beta = args
    coeffs = _coeffs_for_trial(scenario, seed)
    return [solve(coeffs, s, cfg=ga, es_grid_points=es_grid,
                  beta0=beta0, fixed_beta=fixed_beta).rate_bits
            for s in solvers]


def solver_column(solver_id: SolverId) -> str:
    return f"mean_rate_{solver_id.value.lower()}"


def run_sweep_n(spec: ExperimentSpec):
    n_values = tuple(spec.sweep_values) or DEFAULT_N_VALUES
    header = ["N"] + [solver_column(s) for s in spec.solvers]
    rows = []
    for n_idx, n in enumerate(n_values):
        scen_n = dataclasses.replace(spec.scenario, num_irs_elements=n)
        args = [(scen_n, trial_seed(spec.master_seed, n_idx * spec.trials + t),
                 spec.solvers, spec.ga, spec.es_grid_points, spec.beta0,
                 spec.fixed_beta) for t in range(spec.trials)]
        acc = _map_trials(_sweep_n_trial, args, spec.workers)
        means = np.mean(np.array(acc), axis=0)
        rows.append((n, *(float(m) for m in means)))
    if spec.out_path:
        write_csv(spec.out_path, header, rows, _meta(spec))
    return header, rows


# -- solve: one draw, all requested solvers ------------------------------------

def solve_once(spec: ExperimentSpec):
    coeffs = _coeffs_for_trial(spec.scenario, trial_seed(spec.master_seed, 0))
    header = ["solver", "beta_opt", "snr", "rate_bits", "evals", "iterations"]
    rows = []
    for s in spec.solvers:
        sol = solve(coeffs, s, cfg=spec.ga, es_grid_points=spec.es_grid_points,
                    beta0=spec.beta0, fixed_beta=spec.fixed_beta)
        rows.append((sol.solver_id.value, sol.beta_opt, sol.snr, sol.rate_bits,
                     sol.evals, sol.iterations))
    if spec.out_path:
        write_csv(spec.out_path, header, rows, _meta(spec))
    return header, rows


def run_experiment(spec: ExperimentSpec):
    runner = {"curve": run_curve, "sweep_k": run_sweep_k,
              "sweep_n": run_sweep_n, "solve": solve_once}[spec.kind]
    return runner(spec)
