import pytest

from treepack.graphs import complete_graph
from treepack.randgen import (
    GenConfig,
    random_regular,
    splitmix64,
    theorem_check,
)


class TestGenConfig:
    def test_odd_stub_count_rejected(self):
        with pytest.raises(ValueError):
            GenConfig(d=3, n=5, seed=0)

    def test_degree_must_fit(self):
        with pytest.raises(ValueError):
            GenConfig(d=4, n=4, seed=0)
        with pytest.raises(ValueError):
            GenConfig(d=0, n=4, seed=0)

    def test_retries_positive(self):
        with pytest.raises(ValueError):
            GenConfig(d=3, n=4, seed=0, max_retries=0)


class TestRandomRegular:
    def test_cubic_on_four_vertices_is_k4(self):
        g = random_regular(GenConfig(d=3, n=4, seed=123))
        assert g.edges == complete_graph(4).edges

    def test_deterministic_for_fixed_seed(self):
        a = random_regular(GenConfig(d=4, n=10, seed=99))
        b = random_regular(GenConfig(d=4, n=10, seed=99))
        assert a.edges == b.edges

    def test_different_seeds_vary(self):
        seen = {random_regular(GenConfig(d=3, n=12, seed=s)).edges for s in range(6)}
        assert len(seen) > 1

    @pytest.mark.parametrize("d,n", [(3, 8), (4, 9), (5, 12), (7, 16), (10, 44)])
    def test_output_is_simple_and_regular(self, d, n):
        for seed in (0, 1, 2):
            g = random_regular(GenConfig(d=d, n=n, seed=seed))
            assert g.n == n
            assert g.degree_if_regular() == d
            assert all(u != v for u, v in g.edges)


class TestSplitmix:
    def test_deterministic(self):
        assert splitmix64(42) == splitmix64(42)

    def test_advances_state(self):
        state, out = splitmix64(42)
        state2, out2 = splitmix64(state)
        assert (state, out) != (state2, out2)

    def test_outputs_fit_64_bits(self):
        state = 0
        for _ in range(100):
            state, out = splitmix64(state)
            assert 0 <= out < 2 ** 64
            assert 0 <= state < 2 ** 64


class TestTheoremCheck:
    def test_counts_partition_the_trials(self):
        r = theorem_check(d=6, n=14, k=2, trials=25, seed=5)
        assert (r.premise_and_conclusion + r.premise_only
                + r.conclusion_only + r.neither) == 25

    def test_small_run_is_clean_for_k2(self):
        r = theorem_check(d=6, n=14, k=2, trials=25, seed=5)
        assert r.premise_only == 0
        assert r.counterexamples == ()
        assert r.clean
        assert not r.conjecture

    def test_k_below_two_rejected(self):
        with pytest.raises(ValueError):
            theorem_check(d=6, n=14, k=1, trials=1, seed=0)

    def test_k4_run_is_flagged_as_conjecture_territory(self):
        r = theorem_check(d=8, n=18, k=4, trials=5, seed=3)
        assert r.conjecture

    def test_reproducible(self):
        a = theorem_check(d=6, n=14, k=2, trials=10, seed=11)
        b = theorem_check(d=6, n=14, k=2, trials=10, seed=11)
        assert (a.premise_and_conclusion, a.neither) == (b.premise_and_conclusion, b.neither)
