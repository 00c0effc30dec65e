"""Power-allocation solvers over the reduced objective.

All solvers evaluate the ORIGINAL objective when ranking candidates; the
surrogate only proposes stationary points. Ties in the argmax break toward
the smaller beta, making every solver a deterministic function of its inputs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Optional, Sequence

from . import kernels, polyroots, taylor
from .objective import (GRAD_MARGIN, ObjectiveCoefficients, PASolution,
                        SolverId, make_solution)

ES_DEFAULT_GRID = 10_000
FIXED_PA_DEFAULT = 0.99


@dataclass(frozen=True)
class GAConfig:
    num_inits: int = 32
    step_length: float = 0.01
    accuracy: float = 1e-6
    max_iters_per_init: int = 10_000
    safe_margin: float = GRAD_MARGIN

    def __post_init__(self):
        if self.num_inits < 1:
            raise ValueError("num_inits must be >= 1")
        if not self.step_length > 0:
            raise ValueError("step_length must be > 0")
        if not self.accuracy > 0:
            raise ValueError("accuracy must be > 0")
        if not 0 < self.safe_margin < 0.5:
            raise ValueError("safe_margin must lie in (0, 0.5)")


@dataclass(frozen=True)
class CandidateSet:
    """Candidate betas for the final argmax; always contains the endpoints."""
    candidates: list[float] = field(default_factory=list)

    @classmethod
    def from_values(cls, values: Sequence[float]) -> "CandidateSet":
        cands = [0.0, 1.0]
        for v in values:
            v = min(max(float(v), 0.0), 1.0)   # out-of-range -> nearest endpoint
            if all(abs(v - c) > 1e-12 for c in cands):
                cands.append(v)
        return cls(candidates=sorted(cands))


class GAResult(NamedTuple):
    beta_final: float
    f_final: float
    iterations: int
    evals: int


def solve_es(coeffs: ObjectiveCoefficients,
             grid_points: int = ES_DEFAULT_GRID) -> PASolution:
    """Exhaustive search on a uniform grid over [0, 1], endpoints included."""
    if grid_points < 2:
        raise ValueError("grid_points must be >= 2")
    beta, best = kernels.es_scan(*coeffs.scalars(), grid_points)
    return make_solution(SolverId.ES, beta, best, evals=grid_points, iterations=0)


def ga_from_point(coeffs: ObjectiveCoefficients, beta_start: float,
                  cfg: GAConfig = GAConfig()) -> GAResult:
    """Single gradient-ascent run from beta_start (no endpoint candidates)."""
    margin = cfg.safe_margin
    if not margin <= beta_start <= 1.0 - margin:
        raise ValueError("beta_start must lie in [margin, 1 - margin]")
    beta, fval, iters, evals = kernels.ga_ascend(
        *coeffs.scalars(), beta_start, cfg.step_length, cfg.accuracy,
        margin, cfg.max_iters_per_init)
    return GAResult(beta, fval, iters, evals)


def solve_esmpi_ga(coeffs: ObjectiveCoefficients,
                   cfg: GAConfig = GAConfig()) -> PASolution:
    """Equal-spacing multi-start ascent; argmax over finals plus endpoints."""
    beta, best, iters, evals = kernels.esmpi_scan(
        *coeffs.scalars(), cfg.num_inits, cfg.step_length, cfg.accuracy,
        cfg.safe_margin, cfg.max_iters_per_init)
    return make_solution(SolverId.ESMPI_GA, beta, best, evals=evals, iterations=iters)


def solve_ga(coeffs: ObjectiveCoefficients,
             cfg: GAConfig = GAConfig()) -> PASolution:
    """Single-start baseline: ascent from 0.5 plus the endpoint candidates."""
    beta, best, iters, evals = kernels.esmpi_scan(
        *coeffs.scalars(), 1, cfg.step_length, cfg.accuracy,
        cfg.safe_margin, cfg.max_iters_per_init)
    return make_solution(SolverId.GA, beta, best, evals=evals, iterations=iters)


def _tte_fallback(coeffs: ObjectiveCoefficients, beta0: float) -> PASolution:
    # robust route: reference Taylor machinery + companion-backed root solver
    te = taylor.expand_q(coeffs, beta0)
    quartic = taylor.derivative_numerator(te, coeffs)
    roots = polyroots.solve_quartic(quartic).real_roots
    cands = CandidateSet.from_values(roots).candidates
    best_beta, best_f = None, None
    for c in cands:
        v = kernels.f_value(*coeffs.scalars(), c)
        if best_f is None or v > best_f or (v == best_f and c < best_beta):
            best_beta, best_f = c, v
    return make_solution(SolverId.TTE, best_beta, best_f,
                         evals=len(cands), iterations=0)


def solve_tte(coeffs: ObjectiveCoefficients, beta0: float = 0.5) -> PASolution:
    """Closed-form solve via the cubic surrogate of the radical at beta0."""
    if not 0.0 < beta0 < 1.0:
        raise ValueError("beta0 must lie in (0, 1)")
    beta, best, evals, ok = kernels.tte_solve(*coeffs.scalars(), beta0)
    if not ok:
        return _tte_fallback(coeffs, beta0)
    return make_solution(SolverId.TTE, beta, best, evals=evals, iterations=0)


def solve_fixed(coeffs: ObjectiveCoefficients,
                beta_fixed: float = FIXED_PA_DEFAULT,
                solver_id: SolverId = SolverId.FIXED) -> PASolution:
    if not 0.0 <= beta_fixed <= 1.0:
        raise ValueError("beta_fixed must lie in [0, 1]")
    snr = kernels.f_value(*coeffs.scalars(), beta_fixed)
    return make_solution(solver_id, beta_fixed, snr, evals=1, iterations=0)


def solve_epa(coeffs: ObjectiveCoefficients) -> PASolution:
    return solve_fixed(coeffs, 0.5, solver_id=SolverId.EPA)


def solve(coeffs: ObjectiveCoefficients, solver_id: SolverId,
          cfg: GAConfig = GAConfig(), es_grid_points: int = ES_DEFAULT_GRID,
          beta0: float = 0.5,
          fixed_beta: float = FIXED_PA_DEFAULT) -> PASolution:
    """Dispatch a solver by identity (the CLI/bench entry point)."""
    if solver_id is SolverId.ES:
        return solve_es(coeffs, es_grid_points)
    if solver_id is SolverId.GA:
        return solve_ga(coeffs, cfg)
    if solver_id is SolverId.ESMPI_GA:
        return solve_esmpi_ga(coeffs, cfg)
    if solver_id is SolverId.TTE:
        return solve_tte(coeffs, beta0)
    if solver_id is SolverId.EPA:
        return solve_epa(coeffs)
    if solver_id is SolverId.FIXED:
        return solve_fixed(coeffs, fixed_beta)
    raise ValueError(f"unknown solver: {solver_id}")
