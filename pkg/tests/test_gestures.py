import cmath
import math

import numpy as np
import pytest

from pctorus import (
    GesturePath,
    SELECTION_35,
    chord_locus,
    continuous_transpose,
    dft,
    indicator,
    magnitudes,
    nearest_on_path,
    path_polyline,
    phases,
    restricted_rotation,
    torus_distance,
    transpose,
)

rng = np.random.default_rng(6)

CMAJ = indicator({0, 4, 7})
FMIN = indicator({0, 5, 8})


class TestContinuousTranspose:
    def test_full_turn_identity(self):
        out = continuous_transpose(CMAJ, 12.0)
        assert max(abs(x - y) for x, y in zip(out.values, CMAJ.values)) < 1e-12

    def test_matches_discrete_at_integers(self):
        d = indicator({0, 3, 7})
        for t in range(13):
            cont = continuous_transpose(d, float(t))
            disc = transpose(d, t)
            assert max(abs(x - y) for x, y in zip(cont.values, disc.values)) < 1e-12

    def test_fractional_phase_advance(self):
        moved = continuous_transpose(CMAJ, 1.0)
        base_ph = phases(dft(CMAJ))
        new_ph = phases(dft(moved))
        d5 = math.remainder(new_ph[5] - base_ph[5], 2 * math.pi)
        d3 = math.remainder(new_ph[3] - base_ph[3], 2 * math.pi)
        assert d5 == pytest.approx(-5 * math.pi / 6, abs=1e-9)
        assert d3 == pytest.approx(-math.pi / 2, abs=1e-9)

    def test_real_valued_and_magnitudes_kept(self):
        for t in rng.uniform(0, 12, size=20):
            out = continuous_transpose(CMAJ, float(t))
            assert max(abs(v.imag) for v in out.values) < 1e-9
            base = magnitudes(dft(CMAJ))
            got = magnitudes(dft(out))
            # the self-mirror coefficient c/2 must shrink to stay real, all
            # others keep their magnitude exactly
            for m in list(range(6)) + list(range(7, 12)):
                assert got[m] == pytest.approx(base[m], abs=1e-9)
            assert got[6] <= base[6] + 1e-9


class TestRestrictedRotation:
    def test_zero_rotation_identity(self):
        out = restricted_rotation(CMAJ, SELECTION_35, 0.0, 0.0)
        assert max(abs(x - y) for x, y in zip(out.values, CMAJ.values)) < 1e-12

    def test_inverse_rotation(self):
        out = restricted_rotation(CMAJ, SELECTION_35, 0.7, -1.1)
        back = restricted_rotation(out, SELECTION_35, -0.7, 1.1)
        assert max(abs(x - y) for x, y in zip(back.values, CMAJ.values)) < 1e-12

    def test_only_selected_coefficients_move(self):
        out = restricted_rotation(CMAJ, SELECTION_35, 0.4, 0.9)
        base = dft(CMAJ).coeffs
        got = dft(out).coeffs
        for t in (0, 1, 2, 4, 6, 8, 10, 11):
            assert abs(got[t] - base[t]) < 1e-12
        assert abs(got[3] - base[3] * cmath.exp(0.4j)) < 1e-12
        assert abs(got[5] - base[5] * cmath.exp(0.9j)) < 1e-12
        assert abs(got[9] - base[9] * cmath.exp(-0.4j)) < 1e-12

    def test_output_real(self):
        out = restricted_rotation(CMAJ, SELECTION_35, 1.3, -2.2)
        assert max(abs(v.imag) for v in out.values) < 1e-12


class TestPathPolyline:
    def test_passes_through_all_major_triads(self):
        path = GesturePath(CMAJ, resolution=12)
        samples = path_polyline(path, SELECTION_35)
        for t, locus in samples:
            expected = chord_locus(transpose(CMAJ, int(t)), SELECTION_35)
            assert torus_distance(locus, expected, SELECTION_35) < 1e-9

    def test_winding_numbers(self):
        path = GesturePath(CMAJ, resolution=1200)
        samples = path_polyline(path, SELECTION_35)
        unwrapped_j = np.unwrap([locus.angle_j for _, locus in samples])
        unwrapped_k = np.unwrap([locus.angle_k for _, locus in samples])
        step = 12 / 1200
        total_j = unwrapped_j[-1] - unwrapped_j[0] - 2 * math.pi * 3 * step / 12
        total_k = unwrapped_k[-1] - unwrapped_k[0] - 2 * math.pi * 5 * step / 12
        assert round(-total_j / (2 * math.pi)) == 3
        assert round(-total_k / (2 * math.pi)) == 5

    def test_resolution_two_endpoints(self):
        samples = path_polyline(GesturePath(CMAJ, resolution=2), SELECTION_35)
        assert [t for t, _ in samples] == [0.0, 6.0]

    def test_linear_phase_advance(self):
        path = GesturePath(CMAJ, resolution=480)
        samples = path_polyline(path, SELECTION_35)
        unwrapped = np.unwrap([locus.angle_k for _, locus in samples])
        ts = np.array([t for t, _ in samples])
        assert np.allclose(unwrapped - unwrapped[0], -2 * math.pi * 5 * ts / 12, atol=1e-9)

    def test_sampled_distributions_real(self):
        path = GesturePath(CMAJ, resolution=64)
        for i in range(64):
            d = path.at(i * 12 / 64)
            assert max(abs(v.imag) for v in d.values) < 1e-9


class TestNearestOnPath:
    def test_f_minor_against_major_line(self):
        t_star, dist = nearest_on_path(FMIN, GesturePath(CMAJ), SELECTION_35)
        assert t_star == pytest.approx(0.5974, abs=1e-3)
        assert dist < 0.02

    def test_sixty_percent_on_fifth_coordinate(self):
        target = phases(dft(FMIN))[5]
        a = phases(dft(CMAJ))[5]
        b = phases(dft(transpose(CMAJ, 1)))[5]
        frac = math.remainder(target - a, 2 * math.pi) / math.remainder(
            b - a, 2 * math.pi
        )
        assert frac == pytest.approx(0.6, abs=1e-9)

    def test_target_on_path(self):
        t_star, dist = nearest_on_path(transpose(CMAJ, 4), GesturePath(CMAJ), SELECTION_35)
        assert t_star == pytest.approx(4.0, abs=1e-5)
        assert dist < 1e-6

    def test_global_minimum_against_fine_sweep(self):
        path = GesturePath(CMAJ)
        _, dist = nearest_on_path(FMIN, path, SELECTION_35, samples=4096)
        target_locus = chord_locus(FMIN, SELECTION_35)
        for t in np.linspace(0, 12, 40960, endpoint=False):
            sampled = torus_distance(
                chord_locus(path.at(float(t)), SELECTION_35), target_locus, SELECTION_35
            )
            assert dist <= sampled + 1e-9

    def test_restricted_path_keeps_other_coefficients(self):
        path = GesturePath(CMAJ, selection=SELECTION_35, resolution=16)
        base = dft(CMAJ).coeffs
        for i in range(16):
            got = dft(path.at(i * 12 / 16)).coeffs
            for t in (0, 1, 2, 4, 6):
                assert abs(got[t] - base[t]) < 1e-12
