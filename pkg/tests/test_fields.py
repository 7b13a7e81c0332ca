"""Tests for grid fields, radial quadrature, functionals and field files."""

import math

import numpy as np
import pytest

from fraclog.errors import DomainError, FieldFormatError, ZeroFieldError
from fraclog.extremals import aubin_talenti, gaussian, random_mixture
from fraclog.fields import (
    apply_fractional_laplacian,
    build_grid,
    build_radial,
    entropy,
    entropy_q,
    frac_half_norm_sq,
    frequency_multiplier,
    gradient_lp_norm,
    gradient_norm_sq,
    l2_norm_sq,
    load_field,
    lp_norm,
    make_field,
    save_field,
    spectral_l2_norm_sq,
)
from fraclog.fields.grid import fourier_transform, second_difference_laplacian, zero_mode_correction
from fraclog.fields.io import decode_field, encode_field
from fraclog.fields.radial import integrate, quadrature_rule


def unit_gaussian_1d(N: int):
    """exp(-pi x^2) on [-8, 8)."""
    return build_grid(lambda x: np.exp(-math.pi * x[..., 0] ** 2), 1, 8.0, N)


class TestGridConstruction:
    """Grid parameters, sampling and the truncation check."""

    def test_samples_layout(self):
        """Axis 0 runs over x_1 and the first point is -L."""
        field_ = build_grid(lambda x: x[..., 0] + 10.0 * x[..., 1], 2, 1.0, 16)
        assert field_.samples.shape == (16, 16)
        assert field_.samples[0, 0] == pytest.approx(-11.0)
        assert field_.samples[1, 0] - field_.samples[0, 0] == pytest.approx(field_.spacing)

    def test_samples_read_only(self, gaussian_grid_1d):
        with pytest.raises(ValueError):
            gaussian_grid_1d.samples[0] = 1.0

    @pytest.mark.parametrize("d,L,N", [(4, 8.0, 64), (0, 8.0, 64), (2, 8.0, 100), (2, 8.0, 8), (2, -1.0, 64)])
    def test_bad_grid(self, d, L, N):
        with pytest.raises(DomainError):
            make_field(d, L, N, np.zeros((max(N, 1),) * max(min(d, 3), 1)))

    def test_non_finite_samples(self):
        with pytest.raises(DomainError):
            build_grid(lambda x: np.full(x.shape[:-1], np.nan), 1, 8.0, 32)

    def test_gaussian_not_truncated(self, gaussian_grid_1d):
        assert not gaussian_grid_1d.truncated
        assert gaussian_grid_1d.shell_mass_fraction < 1e-10

    def test_slow_decay_flagged(self, caplog):
        """(1 + |x|^2)^{-1/2} in 2-d keeps a large share of its mass near the boundary."""
        field_ = aubin_talenti(2, 0.5, 1.0, "grid", points_per_axis=64)
        assert field_.truncated
        assert field_.shell_mass_fraction > 1e-3
        assert "truncated" in caplog.text


class TestSpectralOperators:
    """Plancherel, multiplier algebra and the s = 2 consistency check."""

    def test_plancherel(self, grid_corpus):
        """h^d sum |f|^2 equals the spectral norm to 1e-10."""
        for field_ in grid_corpus:
            assert spectral_l2_norm_sq(field_) == pytest.approx(l2_norm_sq(field_), rel=1e-10)

    def test_multiplier_semigroup(self, grid_corpus):
        """(2 pi |xi|)^{s1} (2 pi |xi|)^{s2} = (2 pi |xi|)^{s1 + s2} to 1e-12."""
        field_ = grid_corpus[0]
        product = frequency_multiplier(field_, 0.3).values * frequency_multiplier(field_, 0.45).values
        np.testing.assert_allclose(product, frequency_multiplier(field_, 0.75).values, rtol=1e-12)

    def test_operator_semigroup(self, grid_corpus):
        """Applying orders 0.3 then 0.45 matches order 0.75 on samples."""
        field_ = grid_corpus[1]
        twice = apply_fractional_laplacian(apply_fractional_laplacian(field_, 0.3), 0.45)
        once = apply_fractional_laplacian(field_, 0.75)
        scale = np.max(np.abs(once.samples))
        assert np.max(np.abs(twice.samples - once.samples)) <= 1e-11 * scale

    def test_zero_frequency_multiplier(self, gaussian_grid_1d):
        assert frequency_multiplier(gaussian_grid_1d, 0.5).values[0] == 0.0

    def test_radial_symmetry_of_lattice(self):
        """Frequencies of equal radius get bitwise equal multipliers."""
        field_ = build_grid(lambda x: np.exp(-np.sum(x**2, axis=-1)), 2, 4.0, 32)
        values = frequency_multiplier(field_, 0.7).values
        assert values[1, 2] == values[2, 1] == values[-1, 2] == values[2, -1]

    def test_second_difference_convergence(self):
        """(-Delta) spectral vs second differences: error ratio 4 +- 20% per doubling."""
        errors = []
        for N in (128, 256, 512):
            field_ = unit_gaussian_1d(N)
            spectral = apply_fractional_laplacian(field_, 2.0).samples
            finite = -second_difference_laplacian(field_).samples
            errors.append(np.max(np.abs(spectral - finite)) / np.max(np.abs(spectral)))
        for coarse, fine in zip(errors, errors[1:]):
            assert 3.2 <= coarse / fine <= 4.8

    def test_second_difference_norm(self):
        """||Delta f||^2 spectral vs second differences: within 10 h^2, error ratio 4 +- 20%."""
        gaps = []
        for N in (128, 256, 512):
            field_ = unit_gaussian_1d(N)
            spectral = frac_half_norm_sq(field_, 2.0)
            finite = l2_norm_sq(second_difference_laplacian(field_))
            gap = abs(spectral - finite) / spectral
            assert gap <= 10.0 * field_.spacing**2
            gaps.append(gap)
        for coarse, fine in zip(gaps, gaps[1:]):
            assert 3.2 <= coarse / fine <= 4.8

    def test_gaussian_gradient_norm(self):
        """||grad e^{-pi x^2}||^2 = pi / sqrt 2 in 1-d."""
        field_ = unit_gaussian_1d(256)
        assert frac_half_norm_sq(field_, 1.0) == pytest.approx(math.pi / math.sqrt(2.0), rel=1e-10)

    @pytest.mark.parametrize("s", [0.1, 0.25, 0.4, 0.5, 0.75, 1.5])
    def test_gaussian_fractional_norm(self, s):
        """integral (2 pi |xi|)^{2s} e^{-2 pi xi^2} = (2 pi)^{s - 1/2} Gamma(s + 1/2) in 1-d."""
        expected = (2.0 * math.pi) ** (s - 0.5) * math.gamma(s + 0.5)
        assert frac_half_norm_sq(unit_gaussian_1d(256), s) == pytest.approx(expected, rel=1e-6)

    @pytest.mark.parametrize("L", [8.0, 12.0, 16.0])
    def test_fractional_norm_independent_of_box(self, L):
        """The zero-mode kink of |xi|^{2s} is corrected, so L does not bias the norm."""
        field_ = build_grid(lambda x: np.exp(-math.pi * x[..., 0] ** 2), 1, L, 256)
        assert frac_half_norm_sq(field_, 0.5) == pytest.approx(1.0, rel=1e-6)

    def test_fractional_norm_two_dimensions(self):
        """(2 pi)^{s - d/2} pi^{d/2} Gamma(d/2 + s) / Gamma(d/2) for e^{-pi |x|^2} in 2-d."""
        s = 0.5
        field_ = build_grid(lambda x: np.exp(-math.pi * np.sum(x**2, axis=-1)), 2, 8.0, 64)
        expected = (2.0 * math.pi) ** (s - 1.0) * math.pi * math.gamma(1.0 + s)
        assert frac_half_norm_sq(field_, s) == pytest.approx(expected, rel=1e-6)

    def test_zero_mode_correction_size(self):
        """The uncorrected lattice sum at s = 1/2 is low by (2 pi / 6) / (2L)^2."""
        field_ = unit_gaussian_1d(256)
        transform = fourier_transform(field_)
        correction = zero_mode_correction(field_, transform, 0.5)
        assert correction == pytest.approx(-2.0 * math.pi / 6.0 / 16.0**2, rel=5e-3)
        assert zero_mode_correction(field_, transform, 1.0) == 0.0


class TestRadialQuadrature:
    """Double-exponential radial rule in abstract dimension."""

    def test_nodes_increasing_positive(self):
        nodes, log_weights = quadrature_rule(3, 64)
        assert np.all(nodes > 0)
        assert np.all(np.diff(nodes) > 0)
        assert log_weights.shape == nodes.shape

    def test_too_few_nodes(self):
        with pytest.raises(DomainError):
            quadrature_rule(3, 16)

    @pytest.mark.parametrize("n", [1, 2, 3, 5, 10, 50, 200])
    def test_gaussian_mass(self, n):
        """integral over R^n of e^{-pi |x|^2} = 1."""
        profile = build_radial(lambda r: np.exp(-math.pi * r * r), None, n)
        assert lp_norm(profile, 1.0) == pytest.approx(1.0, rel=1e-9)

    def test_thousand_dimensions(self):
        """Log weights keep n = 1000 finite; 2048 nodes resolve the concentrated shell."""
        profile = build_radial(lambda r: np.exp(-math.pi * r * r), None, 1000, 2048)
        assert math.isfinite(lp_norm(profile, 2.0))
        assert l2_norm_sq(profile) == pytest.approx(2.0 ** -500, rel=1e-9)

    def test_power_law_integral(self):
        """integral over R^3 of (1 + r^2)^{-3} = pi^2 / 4."""
        profile = build_radial(lambda r: (1.0 + r * r) ** -1.0, None, 3, algebraic_tail=True)
        assert lp_norm(profile, 3.0) ** 3 == pytest.approx(math.pi**2 / 4.0, rel=1e-10)

    def test_signed_integral(self):
        """Sign-changing integrands go through the signed log-sum."""
        profile = build_radial(lambda r: np.exp(-math.pi * r * r), None, 1)
        # integral over R of (1 - 2 pi x^2) e^{-pi x^2} vanishes
        factor = 1.0 - 2.0 * math.pi * profile.nodes**2
        value = integrate(profile, np.log(profile.values), factor)
        assert abs(value) <= 1e-9

    def test_scaled_profile(self, gaussian_radial_3d):
        doubled = gaussian_radial_3d.scaled(2.0)
        assert l2_norm_sq(doubled) == pytest.approx(4.0 * l2_norm_sq(gaussian_radial_3d), rel=1e-14)
        assert gradient_norm_sq(doubled) == pytest.approx(4.0 * gradient_norm_sq(gaussian_radial_3d), rel=1e-14)

    def test_non_finite_values(self):
        with pytest.raises(DomainError):
            build_radial(lambda r: np.full_like(r, np.nan), None, 3)


class TestFunctionals:
    """Norms and entropies against closed forms."""

    def test_entropy_q_gaussian_grid_and_radial(self):
        """Ent_4(e^{-pi x^2}) = -1/4 + ln(2)/2 on both representations."""
        expected = -0.25 + 0.5 * math.log(2.0)
        grid = unit_gaussian_1d(256)
        radial = build_radial(lambda r: np.exp(-math.pi * r * r), None, 1)
        assert entropy_q(grid, 4.0) == pytest.approx(expected, rel=1e-10)
        assert entropy_q(radial, 4.0) == pytest.approx(expected, rel=1e-10)

    def test_entropy_scaling(self, gaussian_radial_3d):
        """Ent(lambda f) = lambda^2 Ent(f)."""
        lam = 3.0
        base = entropy(gaussian_radial_3d)
        expected = lam**2 * base
        assert entropy(gaussian_radial_3d.scaled(lam)) == pytest.approx(expected, rel=1e-12)

    def test_entropy_zero_field(self):
        zero = make_field(1, 8.0, 32, np.zeros(32))
        with pytest.raises(ZeroFieldError):
            entropy(zero)

    def test_entropy_exponent(self, gaussian_grid_1d):
        with pytest.raises(DomainError):
            entropy_q(gaussian_grid_1d, 1.0)

    def test_lp_exponent(self, gaussian_grid_1d):
        with pytest.raises(DomainError):
            lp_norm(gaussian_grid_1d, 0.5)

    def test_gradient_needs_derivative(self):
        profile = build_radial(lambda r: np.exp(-r * r), None, 3)
        with pytest.raises(DomainError):
            gradient_norm_sq(profile)

    def test_gradient_lp_norm(self):
        """||f'||_p for f = e^{-r} in R^1: (2 integral_0^inf e^{-p r} dr)^{1/p} = (2/p)^{1/p}."""
        profile = build_radial(lambda r: np.exp(-r), lambda r: -np.exp(-r), 1)
        assert gradient_lp_norm(profile, 3.0) == pytest.approx((2.0 / 3.0) ** (1.0 / 3.0), rel=1e-10)

    def test_zero_norm(self):
        zero = make_field(2, 8.0, 16, np.zeros((16, 16)))
        assert lp_norm(zero, 2.0) == 0.0
        assert l2_norm_sq(zero) == 0.0


class TestFieldFiles:
    """Flat binary container."""

    def test_save_and_load(self, tmp_path):
        field_ = random_mixture(3, 2, 2, 8.0, 32)
        path = tmp_path / "fields" / "mixture.bin"
        save_field(field_, path)
        loaded = load_field(path)
        assert loaded.dim == 2 and loaded.points_per_axis == 32 and loaded.half_width == 8.0
        assert np.array_equal(loaded.samples, field_.samples)
        assert path.stat().st_size == 24 + 16 * 32 * 32

    def test_truncated_payload(self):
        blob = encode_field(gaussian(1, 1.0, "grid", points_per_axis=32)[0])
        with pytest.raises(FieldFormatError):
            decode_field(blob[:-16])

    def test_short_header(self):
        with pytest.raises(FieldFormatError):
            decode_field(b"\x00" * 10)

    def test_bad_dimension_header(self):
        blob = np.array([5, 16], dtype="<i8").tobytes() + np.array([1.0], dtype="<f8").tobytes()
        with pytest.raises(FieldFormatError):
            decode_field(blob)

    def test_missing_file(self, tmp_path):
        with pytest.raises(FieldFormatError):
            load_field(tmp_path / "absent.bin")
