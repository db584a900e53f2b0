import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import naive_segment_fluctuations
from hurstscan import (
    FluctuationProfile,
    InputError,
    average_fluctuation,
    build_profile,
    classify_persistence,
    fit_scaling,
    gen_fgn,
    mfdfa,
    segment_fluctuations,
)


class TestBuildProfile:
    def test_alternating_series(self):
        np.testing.assert_allclose(build_profile([1, -1, 1, -1]), [1, 0, 1, 0])

    def test_constant_series_annihilated(self):
        np.testing.assert_allclose(build_profile([5.0, 5.0, 5.0]), [0, 0, 0])

    def test_direct_arithmetic(self):
        np.testing.assert_allclose(build_profile([1, 2, 3]), [-1, -1, 0])

    def test_too_short(self):
        with pytest.raises(InputError):
            build_profile([1.0])

    @given(
        st.lists(
            st.floats(min_value=-1e6, max_value=1e6, allow_nan=False),
            min_size=2,
            max_size=400,
        )
    )
    def test_profile_closes(self, xs):
        # cumulative demeaned sum returns to zero at the end
        prof = build_profile(xs)
        bound = 1e-9 * len(xs) * max(np.std(xs), 1.0)
        assert abs(prof[-1]) <= bound


class TestAverageFluctuation:
    def test_constant_segments_any_q(self):
        for q in (-2.0, -1.0, 1.0, 2.0, 3.0, 4.0):
            assert average_fluctuation([9.0, 9.0, 9.0], q) == pytest.approx(3.0)

    def test_two_segment_q2(self):
        # ((1 + 4) / 2) ** (1/2), evaluated by hand
        assert average_fluctuation([1.0, 4.0], 2.0) == pytest.approx(
            1.5811388300841898, abs=1e-14
        )

    def test_two_segment_q4(self):
        # ((1**2 + 4**2) / 2) ** (1/4) = 8.5 ** 0.25, evaluated by hand
        assert average_fluctuation([1.0, 4.0], 4.0) == pytest.approx(
            1.7074764851741444, abs=1e-14
        )

    def test_q_zero_rejected(self):
        with pytest.raises(InputError):
            average_fluctuation([1.0, 4.0], 0.0)

    def test_zero_segment_with_negative_q_rejected(self):
        with pytest.raises(InputError):
            average_fluctuation([0.0, 4.0], -2.0)

    @given(
        st.lists(
            st.floats(min_value=1e-3, max_value=1e3), min_size=2, max_size=30
        ),
        st.sampled_from([(-2.0, -1.0), (-1.0, 1.0), (1.0, 2.0), (2.0, 4.0)]),
    )
    def test_monotone_in_q(self, f2, qpair):
        # power means are nondecreasing in the order
        lo, hi = qpair
        assert average_fluctuation(f2, lo) <= average_fluctuation(f2, hi) * (1 + 1e-12)


class TestSegmentFluctuations:
    def test_matches_naive_normal_equations(self):
        rng = np.random.default_rng(7)
        prof = build_profile(rng.normal(size=20))
        got = segment_fluctuations(prof, 5)
        want = naive_segment_fluctuations(prof, 5)
        assert got.shape == (8,)
        np.testing.assert_allclose(got, want, atol=1e-10)

    def test_naive_agreement_many_shapes(self):
        rng = np.random.default_rng(123)
        for _ in range(25):
            t = int(rng.integers(12, 51))
            s = int(rng.integers(3, t // 4 + 1))
            prof = build_profile(rng.normal(size=t))
            np.testing.assert_allclose(
                segment_fluctuations(prof, s),
                naive_segment_fluctuations(prof, s),
                atol=1e-10,
            )

    def test_divisible_length_symmetry(self):
        # when s divides T the backward pass sees the same segments
        rng = np.random.default_rng(11)
        prof = build_profile(rng.normal(size=40))
        f2 = segment_fluctuations(prof, 10)
        assert f2.size == 8
        np.testing.assert_array_equal(np.sort(f2[:4]), np.sort(f2[4:]))

    def test_linear_profile_detrended_exactly(self):
        t = np.arange(60, dtype=float)
        f2 = segment_fluctuations(3.0 + 2.0 * t, 10, order=1)
        np.testing.assert_allclose(f2, 0.0, atol=1e-9)

    def test_quadratic_profile_with_order_two(self):
        t = np.arange(80, dtype=float)
        prof = 1.0 - 0.5 * t + 0.03 * t**2
        np.testing.assert_allclose(segment_fluctuations(prof, 10, order=2), 0.0, atol=1e-9)
        # order 1 must leave the curvature behind
        assert segment_fluctuations(prof, 10, order=1).max() > 1e-3

    def test_scale_bounds(self):
        prof = np.arange(40, dtype=float)
        with pytest.raises(InputError):
            segment_fluctuations(prof, 2, order=1)  # below order + 2
        with pytest.raises(InputError):
            segment_fluctuations(prof, 11)  # above T // 4

    @given(
        st.lists(
            st.floats(min_value=-1e4, max_value=1e4), min_size=16, max_size=120
        ),
        st.integers(min_value=3, max_value=30),
    )
    @settings(max_examples=60)
    def test_nonnegative(self, xs, s):
        if s > len(xs) // 4:
            s = len(xs) // 4
        f2 = segment_fluctuations(np.cumsum(xs), s)
        assert np.all(f2 >= 0.0)


class TestFitScaling:
    def test_exact_power_law(self):
        scales = np.arange(10, 51)
        fp = FluctuationProfile(q=2.0, scales=scales, fq=2.0 * scales**0.6)
        fit = fit_scaling(fp)
        assert fit.hurst == pytest.approx(0.6, abs=1e-12)
        assert fit.log_intercept == pytest.approx(np.log(2.0), abs=1e-12)
        assert fit.r_squared == pytest.approx(1.0, abs=1e-12)
        assert fit.stderr_hurst == pytest.approx(0.0, abs=1e-12)

    def test_constant_fluctuations_zero_slope(self):
        scales = np.arange(10, 21)
        fit = fit_scaling(FluctuationProfile(2.0, scales, np.full(11, 3.0)))
        assert fit.hurst == pytest.approx(0.0, abs=1e-14)

    def test_needs_three_scales(self):
        with pytest.raises(InputError):
            fit_scaling(FluctuationProfile(2.0, np.array([10, 20]), np.array([1.0, 2.0])))


class TestMfdfa:
    def test_white_noise_hurst_half(self):
        x = np.random.default_rng(42).normal(size=10000)
        _, fit = mfdfa(x, range(10, 51))[2.0]
        assert 0.45 <= fit.hurst <= 0.55

    def test_fgn_persistent(self):
        x = gen_fgn(10000, 0.7, seed=5)
        _, fit = mfdfa(x, range(10, 51))[2.0]
        assert 0.65 <= fit.hurst <= 0.75
        assert classify_persistence(fit.hurst) == "persistent"

    def test_fgn_antipersistent(self):
        x = gen_fgn(10000, 0.3, seed=5)
        _, fit = mfdfa(x, range(10, 51))[2.0]
        assert 0.25 <= fit.hurst <= 0.35

    def test_monofractal_flatness(self):
        x = gen_fgn(10000, 0.7, seed=17)
        res = mfdfa(x, range(10, 51), qs=(1.0, 2.0, 3.0, 4.0))
        hs = [res[q][1].hurst for q in (1.0, 2.0, 3.0, 4.0)]
        assert max(hs) - min(hs) < 0.1

    def test_scale_invariance(self):
        x = gen_fgn(4000, 0.6, seed=3)
        base = mfdfa(x, range(10, 41))[2.0][1]
        for k in (1e-3, 7.3):
            fit = mfdfa(k * x, range(10, 41))[2.0][1]
            assert abs(fit.hurst - base.hurst) <= 1e-12
            assert fit.log_intercept - base.log_intercept == pytest.approx(
                np.log(k), abs=1e-9
            )

    def test_shuffle_destroys_persistence(self):
        x = gen_fgn(10000, 0.8, seed=9)
        shuffled = np.random.default_rng(1234).permutation(x)
        _, fit = mfdfa(shuffled, range(10, 51))[2.0]
        assert 0.45 <= fit.hurst <= 0.55

    def test_series_too_short(self):
        with pytest.raises(InputError):
            mfdfa(np.random.default_rng(0).normal(size=150), range(10, 51))

    def test_cumulate_flag_consistency(self):
        # feeding a prebuilt profile with cumulate off reproduces the default path
        x = np.random.default_rng(8).normal(size=1000)
        direct = mfdfa(x, range(10, 26))[2.0][1]
        via_profile = mfdfa(build_profile(x), range(10, 26), cumulate=False)[2.0][1]
        assert direct.hurst == via_profile.hurst
        assert direct.log_intercept == via_profile.log_intercept

    def test_results_keyed_and_ordered_by_scale(self):
        x = np.random.default_rng(2).normal(size=800)
        fp, _ = mfdfa(x, [20, 10, 15])[2.0]
        np.testing.assert_array_equal(fp.scales, [10, 15, 20])


class TestClassifyPersistence:
    def test_examples(self):
        assert classify_persistence(0.5) == "uncorrelated"
        assert classify_persistence(0.7, band=0.01) == "persistent"
        assert classify_persistence(0.49, band=0.02) == "uncorrelated"
        assert classify_persistence(0.3) == "anti-persistent"


class TestFluctuationProfileType:
    def test_rejects_unsorted_scales(self):
        with pytest.raises(InputError):
            FluctuationProfile(2.0, np.array([10, 10, 12]), np.array([1.0, 1.0, 1.0]))

    def test_rejects_nonpositive_fluctuations(self):
        with pytest.raises(InputError):
            FluctuationProfile(2.0, np.array([10, 12, 14]), np.array([1.0, 0.0, 1.0]))

    def test_csv_export_format(self, tmp_path):
        fp = FluctuationProfile(2.0, np.array([10, 11]), np.array([0.5, 0.625]))
        path = tmp_path / "fluct.csv"
        fp.write_csv(path)
        assert path.read_text() == "s,fq\n10,0.5\n11,0.625\n"
