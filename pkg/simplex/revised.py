"""
Two-phase revised simplex method for standard-form LPs.

    minimize c^T v  subject to  E v = f,  v >= 0

Phase 1 starts from an all-artificial basis and minimizes the sum of the
artificials; phase 2 optimizes the real objective from the resulting basis.
Pricing uses partial steepest edge until a run of degenerate pivots is seen,
after which the phase finishes on Bland's smallest-index rule, so the method
cannot cycle. The basis inverse is kept explicitly, updated per pivot and
rebuilt from scratch every ``refactor_every`` pivots and before any
optimality verdict is returned.
"""

import logging
from typing import Optional

import numpy as np

from errors import IterationLimitError
from simplex.model import LpSolution, LpStatus, SolverSettings, StandardLp

logger = logging.getLogger(__name__)


class RevisedSimplex:
    """Solver state for one LP. Not shared between threads."""

    def __init__(self, lp: StandardLp, settings: SolverSettings):
        self.settings = settings
        e, f = lp.eq_matrix, lp.eq_rhs
        self.p, self.q = e.shape
        # flip rows so the artificial start is feasible
        self.row_signs = np.where(f < 0, -1.0, 1.0)
        self.matrix = np.hstack([e * self.row_signs[:, None], np.eye(self.p)])
        self.rhs = f * self.row_signs
        self.cost = np.concatenate([lp.objective, np.zeros(self.p)])
        self.basis = np.arange(self.q, self.q + self.p)
        self.b_inv = np.eye(self.p)
        self.x_b = self.rhs.copy()
        self.iterations = 0
        self.pivots_since_refactor = 0

    def refactor(self):
        self.b_inv = np.linalg.inv(self.matrix[:, self.basis])
        self.x_b = self.b_inv @ self.rhs
        self.pivots_since_refactor = 0

    def price(self, cost):
        duals = cost[self.basis] @ self.b_inv
        return duals, cost - duals @ self.matrix

    def choose_entering(self, reduced, allowed, bland) -> Optional[int]:
        candidates = np.flatnonzero(allowed & (reduced < -self.settings.opt_tol))
        if candidates.size == 0:
            return None
        if bland:
            return int(candidates[0])
        limit = self.settings.pricing_candidates
        if candidates.size > limit:
            order = np.argsort(reduced[candidates], kind="stable")[:limit]
            candidates = np.sort(candidates[order])
        directions = self.b_inv @ self.matrix[:, candidates]
        edge_weights = 1.0 + np.einsum("ij,ij->j", directions, directions)
        scores = reduced[candidates] ** 2 / edge_weights
        return int(candidates[np.argmax(scores)])

    def ratio_test(self, direction, bland):
        rows = np.flatnonzero(direction > self.settings.pivot_tol)
        if rows.size == 0:
            return None
        values = np.maximum(self.x_b[rows], 0.0)
        ratios = values / direction[rows]
        ties = rows[ratios <= ratios.min() + self.settings.feas_tol]
        if bland:
            leave = ties[np.argmin(self.basis[ties])]
        else:
            leave = ties[np.argmax(direction[ties])]
        return int(leave), max(self.x_b[leave], 0.0) / direction[leave]

    def pivot(self, leave, enter, direction, step):
        self.x_b -= step * direction
        self.x_b[leave] = step
        pivot_row = self.b_inv[leave] / direction[leave]
        self.b_inv -= np.outer(direction, pivot_row)
        self.b_inv[leave] = pivot_row
        self.basis[leave] = enter
        self.pivots_since_refactor += 1

    def run_phase(self, cost, allowed, phase):
        """Iterate until optimal or unbounded. Returns (status, payload)."""
        settings = self.settings
        bland = False
        degenerate_streak = 0
        while True:
            if self.iterations >= settings.max_iters:
                raise IterationLimitError(
                    f"Simplex exceeded {settings.max_iters} iterations in phase {phase}",
                    iterations=self.iterations)
            if self.pivots_since_refactor >= settings.refactor_every:
                self.refactor()

            duals, reduced = self.price(cost)
            enter = self.choose_entering(reduced, allowed, bland)
            if enter is None:
                if self.pivots_since_refactor:
                    # confirm the verdict on a fresh factorization
                    self.refactor()
                    continue
                return LpStatus.OPTIMAL, (duals, reduced)

            direction = self.b_inv @ self.matrix[:, enter]
            choice = self.ratio_test(direction, bland)
            if choice is None:
                return LpStatus.UNBOUNDED, (enter, direction)
            leave, step = choice

            if step <= settings.feas_tol:
                degenerate_streak += 1
                if not bland and degenerate_streak >= settings.degenerate_switch:
                    bland = True
                    logger.debug(f"Phase {phase}: {degenerate_streak} degenerate pivots, "
                                 f"switching to Bland's rule at iteration {self.iterations}")
            else:
                degenerate_streak = 0

            self.pivot(leave, enter, direction, step)
            self.iterations += 1

    def drive_out_artificials(self):
        """Pivot basic artificials out after phase 1; rows left behind are redundant."""
        redundant = 0
        for row in range(self.p):
            if self.basis[row] < self.q:
                continue
            coefficients = self.b_inv[row] @ self.matrix[:, :self.q]
            coefficients[self.basis[self.basis < self.q]] = 0.0
            enter = int(np.argmax(np.abs(coefficients)))
            if abs(coefficients[enter]) <= 1e-9:
                redundant += 1
                continue
            direction = self.b_inv @ self.matrix[:, enter]
            self.pivot(row, enter, direction, 0.0)
        self.refactor()
        if redundant:
            logger.debug(f"{redundant} redundant equality row(s) detected")

    def solve(self) -> LpSolution:
        settings = self.settings
        q = self.q

        phase1_cost = np.concatenate([np.zeros(q), np.ones(self.p)])
        status, _ = self.run_phase(phase1_cost, np.ones(q + self.p, dtype=bool), phase=1)
        infeasibility = float(self.x_b[self.basis >= q].sum())
        scale = max(1.0, float(np.abs(self.rhs).max(initial=0.0)))
        if infeasibility > settings.feas_tol * scale:
            logger.debug(f"Phase 1 optimum {infeasibility:.3e}: infeasible")
            return LpSolution(status=LpStatus.INFEASIBLE, objective_value=float("nan"),
                              iterations=self.iterations)
        self.drive_out_artificials()

        allowed = np.concatenate([np.ones(q, dtype=bool), np.zeros(self.p, dtype=bool)])
        status, payload = self.run_phase(self.cost, allowed, phase=2)

        if status is LpStatus.UNBOUNDED:
            enter, direction = payload
            ray = np.zeros(q + self.p)
            ray[enter] = 1.0
            ray[self.basis] -= direction
            return LpSolution(status=LpStatus.UNBOUNDED, objective_value=float("-inf"),
                              iterations=self.iterations, ray=ray[:q])

        duals, reduced = payload
        full = np.zeros(q + self.p)
        full[self.basis] = self.x_b
        point = full[:q]
        point[(point < 0) & (point >= -settings.feas_tol)] = 0.0
        return LpSolution(
            status=LpStatus.OPTIMAL,
            objective_value=float(self.cost[:q] @ point),
            iterations=self.iterations,
            point=point,
            duals=duals * self.row_signs,
            reduced_costs=reduced[:q],
            basis=self.basis.copy(),
        )


def solve_lp(lp: StandardLp, feas_tol: float = 1e-9, max_iters: int = 50_000,
             settings: Optional[SolverSettings] = None) -> LpSolution:
    """
    Solve a standard-form LP.

    Returns an LpSolution whose status is optimal, infeasible or unbounded.
    Raises IterationLimitError when ``max_iters`` pivots are not enough.
    """
    if settings is None:
        settings = SolverSettings(feas_tol=feas_tol, max_iters=max_iters)
    solution = RevisedSimplex(lp, settings).solve()
    if solution.is_optimal:
        residual = float(np.abs(lp.eq_matrix @ solution.point - lp.eq_rhs).max(initial=0.0))
        if residual > settings.feas_tol * max(1.0, float(np.abs(lp.eq_rhs).max(initial=0.0))):
            logger.warning(f"⚠️  LP solution residual {residual:.2e} above feas_tol")
    return solution
