"""Seeded random d-regular simple graphs and theorem implication sweeps.

Generation uses the stub-pairing (configuration) model restricted to
simple outcomes: stubs are shuffled and paired, clashing pairs (loops or
repeats) are thrown back, and the whole attempt restarts from scratch
when no progress is possible.  No edge-switch repair is ever applied, so
every returned graph is an honest sample of the restricted pairing
process, bit-reproducible from its seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .graphs import Edge, Graph, make_graph
from .packing import pack_trees, sigma as packing_sigma, verify_pack_result
from .spectra import lambda2

_MASK64 = (1 << 64) - 1


def splitmix64(state: int) -> tuple[int, int]:
    """One step of the splitmix64 sequence: (new_state, output)."""
    state = (state + 0x9E3779B97F4A7C15) & _MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return state, z ^ (z >> 31)


@dataclass(frozen=True)
class GenConfig:
    d: int
    n: int
    seed: int
    max_retries: int = 10_000

    def __post_init__(self):
        if self.d < 1 or self.d >= self.n:
            raise ValueError("need 1 <= d < n")
        if (self.n * self.d) % 2 != 0:
            raise ValueError("n*d must be even")
        if self.max_retries < 1:
            raise ValueError("max_retries must be positive")


def random_regular(cfg: GenConfig) -> Graph:
    """Random d-regular simple graph, deterministic given cfg.seed."""
    rng = random.Random(cfg.seed & _MASK64)
    for _ in range(cfg.max_retries):
        edges = _pairing_attempt(rng, cfg.n, cfg.d)
        if edges is not None:
            g = make_graph(cfg.n, edges)
            assert g.degree_if_regular() == cfg.d
            return g
    raise RuntimeError(
        f"no simple {cfg.d}-regular pairing on {cfg.n} vertices "
        f"after {cfg.max_retries} attempts"
    )


def _pairing_attempt(rng: random.Random, n: int, d: int) -> list[Edge] | None:
    stubs = [v for v in range(n) for _ in range(d)]
    edges: set[Edge] = set()
    while stubs:
        rng.shuffle(stubs)
        leftover: list[int] = []
        for u, v in zip(stubs[0::2], stubs[1::2]):
            e = (u, v) if u < v else (v, u)
            if u == v or e in edges:
                leftover.extend((u, v))
            else:
                edges.add(e)
        if len(leftover) == len(stubs):
            return None     # dead end: discard the whole attempt
        stubs = leftover
    return sorted(edges)


@dataclass(frozen=True)
class Counterexample:
    """A graph where the spectral premise held but the packing fell short."""

    graph: Graph
    d: int
    n: int
    k: int
    lambda2: float
    sigma: int
    seed: int


@dataclass(frozen=True)
class TheoremReport:
    """Tallies of (premise, conclusion) over a seeded trial batch.

    Premise: lambda2 < d - (2k-1)/(d+1).  Conclusion: the graph packs k
    edge-disjoint spanning trees.  For k in {2, 3} the implication is a
    proved theorem, so any counterexample is an implementation bug; for
    k >= 4 it is an open conjecture and a counterexample is a finding.
    """

    d: int
    n: int
    k: int
    trials: int
    seed: int
    premise_and_conclusion: int = 0
    premise_only: int = 0
    conclusion_only: int = 0
    neither: int = 0
    counterexamples: tuple[Counterexample, ...] = field(default=())

    @property
    def conjecture(self) -> bool:
        return self.k >= 4

    @property
    def clean(self) -> bool:
        return not self.counterexamples


def theorem_check(d: int, n: int, k: int, trials: int, seed: int) -> TheoremReport:
    """Test 'small lambda2 forces k disjoint spanning trees' empirically.

    The statements under test hypothesize d >= 2k; below that the premise
    is counted as false for every trial (the run is vacuous, never a bug).
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    degree_ok = d >= 2 * k
    threshold = d - (2 * k - 1) / (d + 1)
    state = seed & _MASK64
    both = premise_only = conclusion_only = neither = 0
    bad: list[Counterexample] = []
    for _ in range(trials):
        state, trial_seed = splitmix64(state)
        g = random_regular(GenConfig(d=d, n=n, seed=trial_seed))
        lam2 = lambda2(g)
        premise = degree_ok and lam2 < threshold
        packed = pack_trees(g, k)
        check = verify_pack_result(g, packed)
        if not check.ok:
            raise AssertionError(f"pack_trees certificate invalid: {check.reason}")
        if premise and packed.success:
            both += 1
        elif premise:
            premise_only += 1
            bad.append(Counterexample(
                graph=g, d=d, n=n, k=k, lambda2=lam2,
                sigma=packing_sigma(g).sigma, seed=trial_seed,
            ))
        elif packed.success:
            conclusion_only += 1
        else:
            neither += 1
    return TheoremReport(
        d=d, n=n, k=k, trials=trials, seed=seed,
        premise_and_conclusion=both, premise_only=premise_only,
        conclusion_only=conclusion_only, neither=neither,
        counterexamples=tuple(bad),
    )
