"""Factory functions for randomized configurations.

These build SimConfigs that satisfy the convergence-theorem preconditions
(strongly connected graph, initial containing arc below the arc bound,
refractory period not greater than one minus the arc bound) from a single
seed, for property checks over many networks.
"""

from typing import Optional, Tuple

import numpy as np

from ..continuity import ContinuityConfig, ContinuityMode
from ..engine import AlphaSchedule, InitialPhases, SimConfig
from ..prc import DelayAdvanceAlgorithm, DelayAdvanceParams
from ..topology import random_strongly_connected


def create_theorem_config(
    seed: int,
    *,
    mode: ContinuityMode = ContinuityMode.JUMP,
    random_alpha: bool = True,
    alpha: float = 0.5,
    alpha_low: float = 0.05,
    n_range: Tuple[int, int] = (2, 6),
    arc_bound: float = 0.5,
    max_refractory: Optional[float] = None,
    omega_a_range: Tuple[float, float] = (0.1, 0.9),
    tau_range: Tuple[float, float] = (0.05, 0.5),
    cycles: int = 100,
    sample_dt: float = 0.05,
    stop_on_sync: bool = True,
) -> SimConfig:
    """Create a random theorem-check configuration.

    Args:
        seed: Seeds every random choice below.
        mode: Continuity method.
        random_alpha: Draw a fresh coupling strength from (alpha_low, 1] for
            firing instant instead of using alpha.
        alpha: Constant coupling strength.
        alpha_low: Lower (exclusive) bound of the random coupling strengths.
        n_range: Inclusive range of network sizes.
        arc_bound: Bound on the initial containing arc, in (0, 1/2].
        max_refractory: Largest refractory bound drawn; defaults to 1 - arc_bound.
        omega_a_range: Range of constant-frequency offsets (multiples of omega0).
        tau_range: Range of constant-time durations in seconds.
        cycles: Horizon in periods of the fundamental frequency.
        sample_dt: Seconds between phase samples.
        stop_on_sync: Stop once synchronized.

    Returns:
        A SimConfig with theorem_check enabled.

    Example:
        >>> cfg = create_theorem_config(3, mode=ContinuityMode.CONSTANT_FREQUENCY, random_alpha=False)
        >>> cfg.theorem_check
        True
    """
    rng = np.random.default_rng(seed)
    n = int(rng.integers(n_range[0], n_range[1] + 1))
    graph = random_strongly_connected(n, rng)
    # strictly inside the bound: random phases never span the whole arc
    arc_length = float(rng.uniform(0.05, arc_bound))
    arc_offset = float(rng.random())
    refractory_limit = 1.0 - arc_bound if max_refractory is None else max_refractory
    refractory = float(rng.uniform(0.0, refractory_limit))
    omega_a = float(rng.uniform(*omega_a_range))
    tau = float(rng.uniform(*tau_range))
    phase_seed = int(rng.integers(2**31))
    alpha_seed = int(rng.integers(2**31))

    schedule = AlphaSchedule(kind="random", low=alpha_low, high=1.0, seed=alpha_seed) if random_alpha else None
    continuity = ContinuityConfig.symmetric(mode, omega_a=omega_a, tau=tau)
    return SimConfig(
        graph=graph,
        algorithm=DelayAdvanceAlgorithm(DelayAdvanceParams(refractory=refractory)),
        alpha=alpha,
        continuity=continuity,
        initial=InitialPhases(seed=phase_seed, arc_length=arc_length, arc_offset=arc_offset),
        horizon=cycles / continuity.omega0,
        sample_dt=sample_dt,
        alpha_schedule=schedule,
        theorem_check=True,
        arc_bound=arc_bound,
        stop_on_sync=stop_on_sync,
    )
