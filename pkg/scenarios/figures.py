"""Built-in figure scenarios.

Six networks of six oscillators, each run in the three continuity modes:

    name               topology    algorithm              omega_a  tau    arc   horizon
    prc_all_to_all     all-to-all  prc, D = 0             0.3      0.3 s  0.45  60 s
    prc_refractory     all-to-all  prc, D = 0.5           0.3      0.3 s  0.45  60 s
    prc_ring           ring        prc, D = 0             0.3      0.3 s  0.45  120 s
    peskin             all-to-all  eps 0.002, gamma 3     0.3      0.1 s  0.2   200 s
    mirollo_strogatz   all-to-all  eps 0.002, b 5         0.3      0.1 s  0.2   200 s
    rfa                all-to-all  eps 0.002              0.007    1.1 s  0.2   200 s

omega_a is given as a multiple of omega0 = 1. Seeds are fixed, so every run
is reproducible bit for bit.
"""

from dataclasses import dataclass, replace
from typing import Optional, Tuple

from ..continuity import ContinuityConfig, ContinuityMode
from ..engine import InitialPhases, SimConfig
from ..prc import create_algorithm
from ..topology import Graph, all_to_all, ring


@dataclass(frozen=True)
class FigureScenario:
    """One built-in network, runnable in any continuity mode.

    Attributes:
        name: Scenario name, also its output directory.
        topology: "all_to_all" or "ring".
        algorithm: Algorithm name (see prc.create_algorithm).
        refractory: Refractory bound D (prc only).
        epsilon: State increment (state-map algorithms).
        gamma: Peskin dissipation.
        b: Mirollo-Strogatz concavity.
        alpha: Coupling strength (1 for the state maps).
        omega_a: Constant-frequency offset, multiple of omega0.
        tau: Constant-time duration in seconds.
        initial_arc: Random initial phases lie in an arc of this length.
        horizon: Simulated seconds.
        seed: Initial-phase seed.
        sync_tolerance: Arc counted as synchronized in the report.
        n: Number of oscillators.
    """
    name: str
    topology: str
    algorithm: str
    alpha: float
    omega_a: float
    tau: float
    initial_arc: float
    horizon: float
    seed: int
    refractory: float = 0.0
    epsilon: Optional[float] = None
    gamma: Optional[float] = None
    b: Optional[float] = None
    sync_tolerance: float = 1e-6
    n: int = 6

    def graph(self) -> Graph:
        return ring(self.n) if self.topology == "ring" else all_to_all(self.n)

    def config(
        self,
        mode: ContinuityMode,
        *,
        seed: Optional[int] = None,
        sample_dt: float = 0.01,
        stop_on_sync: bool = False,
    ) -> SimConfig:
        """SimConfig of this scenario in one continuity mode.

        Args:
            mode: Continuity method.
            seed: Overrides the built-in initial-phase seed.
            sample_dt: Seconds between phase samples.
            stop_on_sync: Stop the run once synchronized.
        """
        algorithm = create_algorithm(
            self.algorithm,
            refractory=self.refractory,
            epsilon=self.epsilon,
            gamma=self.gamma,
            b=self.b,
        )
        return SimConfig(
            graph=self.graph(),
            algorithm=algorithm,
            alpha=self.alpha,
            continuity=ContinuityConfig.symmetric(ContinuityMode(mode), omega_a=self.omega_a, tau=self.tau),
            initial=InitialPhases(seed=self.seed if seed is None else seed, arc_length=self.initial_arc),
            horizon=self.horizon,
            sample_dt=sample_dt,
            sync_tolerance=self.sync_tolerance,
            stop_on_sync=stop_on_sync,
        )


PRC_ALL_TO_ALL = FigureScenario(
    name="prc_all_to_all",
    topology="all_to_all",
    algorithm="prc",
    alpha=0.5,
    omega_a=0.3,
    tau=0.3,
    initial_arc=0.45,
    horizon=60.0,
    seed=4,
)

PRC_REFRACTORY = replace(PRC_ALL_TO_ALL, name="prc_refractory", refractory=0.5, seed=6)

PRC_RING = replace(PRC_ALL_TO_ALL, name="prc_ring", topology="ring", horizon=120.0, seed=7)

PESKIN = FigureScenario(
    name="peskin",
    topology="all_to_all",
    algorithm="peskin",
    epsilon=0.002,
    gamma=3.0,
    alpha=1.0,
    omega_a=0.3,
    tau=0.1,
    initial_arc=0.2,
    horizon=200.0,
    seed=9,
    sync_tolerance=1e-4,
)

MIROLLO_STROGATZ = replace(PESKIN, name="mirollo_strogatz", algorithm="mirollo_strogatz", gamma=None, b=5.0, seed=10)

RFA = replace(PESKIN, name="rfa", algorithm="rfa", gamma=None, omega_a=0.007, tau=1.1, seed=11)

FIGURE_SCENARIOS: Tuple[FigureScenario, ...] = (
    PRC_ALL_TO_ALL,
    PRC_REFRACTORY,
    PRC_RING,
    PESKIN,
    MIROLLO_STROGATZ,
    RFA,
)

FIGURE_MODES: Tuple[ContinuityMode, ...] = (
    ContinuityMode.JUMP,
    ContinuityMode.CONSTANT_FREQUENCY,
    ContinuityMode.CONSTANT_TIME,
)

