from simplex.model import LpSolution, LpStatus, SolverSettings, StandardLp
from simplex.revised import RevisedSimplex, solve_lp
