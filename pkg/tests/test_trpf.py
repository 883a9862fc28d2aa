import math

import numpy as np
import pytest

from gbcomet import E_GAMMA, trpf, trpf_curve


class TestSupport:
    def test_zero_below_onset(self):
        rng = np.random.default_rng(4)
        for _ in range(40):
            p = float(rng.choice([31, 37, 101, 997]))
            k = int(rng.integers(2, 6))
            x = rng.uniform(1.0, p**k * 0.999)
            assert trpf(x, p, k, "real") == 0.0
            assert trpf(x, p, k, "simulated") == 0.0

    def test_three_factor_onset(self):
        # at x = p^3 only the chain r = p qualifies and the log term is 1
        assert trpf(31**3, 31, 3, "real") == pytest.approx(E_GAMMA / 31, rel=1e-13)

    def test_invalid_factor_count(self):
        with pytest.raises(ValueError):
            trpf(1000.0, 31, 6, "real")
        with pytest.raises(ValueError):
            trpf(1000.0, 31, 1, "real")


class TestJumps:
    def test_jump_heights_at_chain_onsets(self):
        # each chain prime r enters at x = p r^2 with a step of
        # (e^gamma / r) / log_p(r); neighbouring terms move only O(1/x)
        p = 31
        for r in (37, 41):
            x = p * r * r
            step = trpf(x, p, 3, "real") - trpf(x - 1, p, 3, "real")
            expected = (E_GAMMA / r) / (math.log(r) / math.log(p))
            assert step == pytest.approx(expected, rel=1e-2)


class TestCurve:
    def test_onset_value_on_grid(self):
        curve = trpf_curve(31, (1, 5, 401), "real")
        i = int(np.argmin(np.abs(curve.grid - 2.0)))
        assert curve.grid[i] == pytest.approx(2.0, abs=1e-12)
        assert curve.per_factor[2][i] == pytest.approx(E_GAMMA, rel=1e-9)

    def test_all_zero_until_final_point(self):
        curve = trpf_curve(31, (1, 2, 11), "real")
        assert np.all(curve.total[:-1] == 0.0)
        assert curve.total[-1] == pytest.approx(E_GAMMA, rel=1e-12)

    def test_support_per_factor(self):
        curve = trpf_curve(31, (1, 5, 101), "real")
        for k, vals in curve.per_factor.items():
            assert np.all(vals[curve.grid < k] == 0.0)
            assert np.all(vals >= 0.0)

    def test_total_is_sum(self):
        curve = trpf_curve(31, (1, 4, 61), "real")
        acc = sum(curve.per_factor.values())
        assert np.allclose(curve.total, acc, rtol=0, atol=0)

    def test_real_average_near_one(self):
        # trapezoid average of the total over log_p(x) in [2, 4.5] for p=31
        curve = trpf_curve(31, (2, 4.5, 201), "real")
        avg = np.trapezoid(curve.total, curve.grid) / (curve.grid[-1] - curve.grid[0])
        assert 0.7 < avg < 1.2

    def test_simulated_plateau(self):
        curve = trpf_curve(1000, (4, 5, 21), "simulated")
        i = int(np.argmin(np.abs(curve.grid - 4.5)))
        assert 0.9 < curve.total[i] < 1.1
        assert 0.85 < curve.total.mean() < 1.15

    def test_factor_subset(self):
        curve = trpf_curve(31, (1, 3, 21), "real", factors=(2,))
        assert set(curve.per_factor) == {2}
        assert np.array_equal(curve.total, curve.per_factor[2])

    def test_grid_validation(self):
        with pytest.raises(ValueError):
            trpf_curve(31, (0.5, 3, 11), "real")
        with pytest.raises(ValueError):
            trpf_curve(31, (3, 2, 11), "real")
        with pytest.raises(ValueError):
            trpf_curve(31, (1, 3, 1), "real")
