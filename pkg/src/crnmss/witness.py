"""Floating-point steady-state search for fully open networks.

Multistart damped Newton on the mass-action right-hand side.  Every
returned state is re-validated exactly: the coordinates are rationalized
(floats convert to rationals without loss) and the residual and Jacobian
rank are recomputed in exact arithmetic.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .embedding import is_fully_open
from .linalg import rank_frac
from .massaction import jacobian, mass_action_system
from .network import ReactionNetwork
from .structure import stoich

RESIDUAL_TOL = 1e-10
EXACT_RESIDUAL_TOL = Fraction(1, 10**8)
DEDUP_TOL = 1e-6
STABILITY_MARGIN = 1e-9
GRID_POINTS = (1e-2, 1e-1, 1.0, 10.0, 1e2)
MAX_GRID_STARTS = 3125
MAX_DAMPING_HALVINGS = 40
MAX_NEWTON_ITERATIONS = 100


@dataclass(frozen=True)
class SteadyStateWitness:
    network: ReactionNetwork
    kappa: tuple[Fraction, ...]
    states: tuple[tuple[float, ...], ...]
    residuals: tuple[float, ...]
    nondegenerate: tuple[bool, ...]
    stability: tuple[str, ...]  # "stable" | "unstable" | "undetermined"

    def count_nondegenerate(self) -> int:
        return sum(self.nondegenerate)

    def to_json(self) -> dict:
        return {
            "kappa": [str(k) for k in self.kappa],
            "states": [list(x) for x in self.states],
            "residuals": list(self.residuals),
            "nondegenerate": list(self.nondegenerate),
            "stability": list(self.stability),
        }


def _mass_action_arrays(net: ReactionNetwork, kappa: Sequence[Fraction]):
    s, r = net.num_species, net.num_reactions
    exponents = np.zeros((r, s))
    gamma = np.zeros((s, r))
    for j, rxn in enumerate(net.reactions):
        for i, coeff in rxn.reactant.items:
            exponents[j, i] = coeff
        rv, pv = rxn.reactant.vector(s), rxn.product.vector(s)
        for i in range(s):
            gamma[i, j] = pv[i] - rv[i]
    rates = np.array([float(k) for k in kappa])
    return exponents, gamma, rates


def _rhs_batch(x, exponents, gamma, rates):
    monomials = rates * np.exp(np.log(x) @ exponents.T)
    return monomials @ gamma.T, monomials


def _jac_batch(x, monomials, exponents, gamma):
    weights = monomials[:, :, None] * (exponents[None, :, :] / x[:, None, :])
    return np.einsum("ij,bjk->bik", gamma, weights)


def _solve_batch(jacs, rhs):
    """Batched linear solve; singular systems are flagged, not fatal."""
    ok = np.ones(len(jacs), dtype=bool)
    try:
        return np.linalg.solve(jacs, rhs[:, :, None])[:, :, 0], ok
    except np.linalg.LinAlgError:
        out = np.zeros_like(rhs)
        for i in range(len(jacs)):
            try:
                out[i] = np.linalg.solve(jacs[i], rhs[i])
            except np.linalg.LinAlgError:
                ok[i] = False
        return out, ok


def _newton_all_starts(starts, exponents, gamma, rates, residual_tol):
    x = np.array(starts, dtype=float)
    n = len(x)
    alive = np.ones(n, dtype=bool)
    converged = np.zeros(n, dtype=bool)
    for _ in range(MAX_NEWTON_ITERATIONS):
        active = np.where(alive & ~converged)[0]
        if active.size == 0:
            break
        f_act, mon_act = _rhs_batch(x[active], exponents, gamma, rates)
        res_act = np.max(np.abs(f_act), axis=1)
        done = res_act < residual_tol
        converged[active[done]] = True
        work = active[~done]
        if work.size == 0:
            continue
        xw, fw, resw = x[work], f_act[~done], res_act[~done]
        jacs = _jac_batch(xw, mon_act[~done], exponents, gamma)
        steps, solvable = _solve_batch(jacs, -fw)
        alive[work[~solvable]] = False
        work, xw, steps, resw = (
            work[solvable],
            xw[solvable],
            steps[solvable],
            resw[solvable],
        )
        if work.size == 0:
            continue
        # cap the step so iterates stay strictly positive, then damp by
        # halving until the residual strictly decreases
        with np.errstate(divide="ignore", invalid="ignore"):
            caps = np.where(steps < 0, -xw / steps, np.inf)
        t = np.minimum(1.0, 0.99 * caps.min(axis=1))
        accepted = np.zeros(len(work), dtype=bool)
        for _halving in range(MAX_DAMPING_HALVINGS + 1):
            pending = np.where(~accepted)[0]
            if pending.size == 0:
                break
            trial = xw[pending] + t[pending, None] * steps[pending]
            positive = (trial > 0).all(axis=1)
            trial_safe = np.clip(trial, 1e-300, None)
            f_try, _ = _rhs_batch(trial_safe, exponents, gamma, rates)
            better = positive & (np.max(np.abs(f_try), axis=1) < resw[pending])
            good = pending[better]
            x[work[good]] = trial[better]
            accepted[good] = True
            t[pending[~better]] /= 2
        alive[work[~accepted]] = False
    return [tuple(float(v) for v in x[i]) for i in np.where(converged)[0]]


def _relative_distance(a: Sequence[float], b: Sequence[float]) -> float:
    scale = max(1.0, max(abs(v) for v in a), max(abs(v) for v in b))
    return max(abs(u - v) for u, v in zip(a, b)) / scale


def _dedup(states, tol):
    kept: list[tuple[float, ...]] = []
    for state in sorted(states):
        if all(_relative_distance(state, other) >= tol for other in kept):
            kept.append(state)
    return kept


def _default_starts(s: int, seed: int, max_starts: int):
    if 5**s <= max_starts:
        return list(itertools.product(GRID_POINTS, repeat=s))
    rng = random.Random(seed)
    return [
        tuple(10.0 ** rng.uniform(-2.0, 2.0) for _ in range(s))
        for _ in range(max_starts)
    ]


def witness_search(
    net: ReactionNetwork,
    kappa: Sequence,
    *,
    seed: int = 0,
    starts: Sequence[Sequence[float]] | None = None,
    residual_tol: float = RESIDUAL_TOL,
    dedup_tol: float = DEDUP_TOL,
    max_starts: int = MAX_GRID_STARTS,
) -> SteadyStateWitness:
    """Find positive steady states of the mass-action system.

    Runs damped Newton from a log-spaced positive grid (random starts
    above five species), keeps converged points with residual infinity
    norm below ``residual_tol``, deduplicates at relative distance
    ``dedup_tol``, and validates each survivor exactly: rationalized
    residual below 1e-8 and exact Jacobian rank for nondegeneracy.
    """
    if not is_fully_open(net):
        raise ValueError("witness search requires a fully open network")
    rates = tuple(Fraction(k) for k in kappa)
    system = mass_action_system(net, rates)
    s = net.num_species
    dim = stoich(net).rank
    exponents, gamma, rate_arr = _mass_action_arrays(net, rates)
    if starts is None:
        starts = _default_starts(s, seed, max_starts)
    found = _newton_all_starts(starts, exponents, gamma, rate_arr, residual_tol)
    states: list[tuple[float, ...]] = []
    residuals: list[float] = []
    nondeg: list[bool] = []
    stability: list[str] = []
    for state in _dedup(found, dedup_tol):
        exact_point = tuple(Fraction(v) for v in state)
        exact_res = system.rhs(exact_point)
        if max(abs(v) for v in exact_res) >= EXACT_RESIDUAL_TOL:
            continue
        f_val, mon = _rhs_batch(np.array([state]), exponents, gamma, rate_arr)
        residuals.append(float(np.max(np.abs(f_val[0]))))
        exact_jac = jacobian(system, exact_point)
        nondeg.append(rank_frac(exact_jac) == dim)
        jac = _jac_batch(np.array([state]), mon, exponents, gamma)[0]
        real_parts = np.linalg.eigvals(jac).real
        if np.all(real_parts < -STABILITY_MARGIN):
            stability.append("stable")
        elif np.any(real_parts > STABILITY_MARGIN):
            stability.append("unstable")
        else:
            stability.append("undetermined")
        states.append(state)
    return SteadyStateWitness(
        net,
        rates,
        tuple(states),
        tuple(residuals),
        tuple(nondeg),
        tuple(stability),
    )


def rate_search(
    net: ReactionNetwork,
    budget: int = 10000,
    seed: int = 0,
    **search_options,
) -> SteadyStateWitness | None:
    """Sample rate constants log-uniformly in [1e-3, 1e3] until some
    sample yields at least two nondegenerate positive steady states.

    Deterministic for a fixed seed and budget; returns None when the
    budget is exhausted.
    """
    if not is_fully_open(net):
        raise ValueError("rate search requires a fully open network")
    rng = random.Random(seed)
    r = net.num_reactions
    for _ in range(budget):
        kappa = tuple(Fraction(10.0 ** rng.uniform(-3.0, 3.0)) for _ in range(r))
        witness = witness_search(net, kappa, seed=seed, **search_options)
        if witness.count_nondegenerate() >= 2:
            return witness
    return None
