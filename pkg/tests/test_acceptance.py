"""Full-size acceptance runs: equality cases, corpus validity and asymptotics."""

import math

import numpy as np
import pytest

from fraclog.constants import (
    asymptotic_ratio,
    gns_constant,
    gns_exponents,
    minimize_margin_over_a,
    optimal_a_lieb_loss,
    optimal_a_theorem1,
    sobolev_constant,
)
from fraclog.extremals import aubin_talenti, gaussian, gns_extremal, mixture_corpus, radial_corpus
from fraclog.fields import (
    apply_fractional_laplacian,
    build_grid,
    frac_half_norm_sq,
    frequency_multiplier,
    gradient_norm_sq,
    l2_norm_sq,
    spectral_l2_norm_sq,
)
from fraclog.fields.grid import second_difference_laplacian
from fraclog.inequalities import (
    entropy_interpolation_check,
    gns_margin,
    lieb_loss_margin,
    log_linear_bound_check,
    sobolev_margin_radial_s1,
    theorem1_margin,
    theorem2_margin,
)

pytestmark = pytest.mark.slow

CORPUS_SEED = 7
CORPUS_SIZE = 20


@pytest.fixture(scope="module")
def full_grid_corpus():
    return mixture_corpus(seed=CORPUS_SEED, count=CORPUS_SIZE, d=2, L=8.0, N=256)


@pytest.fixture(scope="module")
def full_radial_corpus():
    return radial_corpus(seed=CORPUS_SEED, count=CORPUS_SIZE, n=3)


def test_gaussian_equality():
    for n in (1, 2, 3, 5, 10):
        for a in (0.5, 1.0, 2.0):
            profile, oracle = gaussian(n, a)
            report = lieb_loss_margin(profile, a)
            assert abs(report.relative_margin) <= 1e-8, (n, a)
            lhs = oracle.ent + n * (1.0 + math.log(a)) * oracle.l2sq
            rhs = a * a / math.pi * oracle.gradsq
            assert lhs == pytest.approx(0.5 * n * a**n, rel=1e-12)
            assert rhs == pytest.approx(0.5 * n * a**n, rel=1e-12)


def test_sobolev_extremal_equality():
    coarse = sobolev_margin_radial_s1(aubin_talenti(3, 1.0, node_count=512))
    fine = sobolev_margin_radial_s1(aubin_talenti(3, 1.0, node_count=1024))
    assert abs(coarse.relative_margin) <= 1e-4
    assert abs(fine.relative_margin) <= max(abs(coarse.relative_margin) / 4.0, 1e-11)


def test_gns_extremal_equality():
    params = gns_exponents(3, 2.0, 3.0)
    assert (params.r, params.theta, params.delta) == (4.0, 0.5, 3.0)
    assert abs(gns_margin(gns_extremal(3, 2.0, 3.0), 2.0, 3.0).relative_margin) <= 1e-4


def test_theorem1_corpus(full_grid_corpus):
    checked = 0
    for field_ in full_grid_corpus:
        for s in (0.25, 0.5, 0.75, 0.9):
            for a in (0.5, 1.0, 2.0):
                report = theorem1_margin(field_, s, a)
                assert report.margin >= -1e-6 * abs(report.rhs), report.params
                checked += 1
    assert checked == 240


def test_theorem2_corpus(full_radial_corpus):
    for profile in full_radial_corpus:
        for p, q in ((2.0, 3.0), (2.0, 4.0), (1.5, 2.0)):
            for a in (0.5, 1.0, 2.0):
                report = theorem2_margin(profile, p, q, a)
                assert report.margin >= -1e-6 * abs(report.rhs), report.params


def test_asymptotic_ratio_convergence():
    gaps = [abs(asymptotic_ratio(n, 1.0) - 1.0) for n in (10**2, 10**3, 10**4, 10**5)]
    assert all(later < earlier for earlier, later in zip(gaps, gaps[1:]))
    assert gaps[1] <= 0.02
    assert gaps[3] <= 0.001


def test_theta_one_corner():
    for n in (3, 4, 6, 10):
        q = 2.0 * (n - 1) / (n - 2.0)
        assert gns_constant(n, 2.0, q) ** 2 == pytest.approx(sobolev_constant(n, 1.0), rel=1e-9)


def test_proof_chain_lemmas(full_grid_corpus, full_radial_corpus):
    values = np.linspace(0.1, 10.0, 100)
    for x in values:
        for b in values:
            report = log_linear_bound_check(float(x), float(b))
            assert report.margin >= -1e-12
    for b in values:
        assert abs(log_linear_bound_check(1.0 / float(b), float(b)).margin) <= 1e-12

    for field_ in [*full_grid_corpus, *full_radial_corpus]:
        for eps in (1.0 / 3.0, 1.0, 3.0):
            report = entropy_interpolation_check(field_, 2.0, eps)
            assert report.margin >= -1e-9 * abs(report.rhs)


def test_operator_correctness(full_grid_corpus):
    for field_ in full_grid_corpus[:5]:
        assert spectral_l2_norm_sq(field_) == pytest.approx(l2_norm_sq(field_), rel=1e-10)
        product = frequency_multiplier(field_, 0.4).values * frequency_multiplier(field_, 0.6).values
        np.testing.assert_allclose(product, frequency_multiplier(field_, 1.0).values, rtol=1e-12)

    errors = []
    for N in (128, 256, 512):
        field_ = build_grid(lambda x: np.exp(-math.pi * x[..., 0] ** 2), 1, 8.0, N)
        exact = apply_fractional_laplacian(field_, 2.0).samples
        errors.append(np.max(np.abs(exact + second_difference_laplacian(field_).samples)))
        spectral = frac_half_norm_sq(field_, 2.0)
        finite = l2_norm_sq(second_difference_laplacian(field_))
        assert abs(spectral - finite) <= 10.0 * field_.spacing**2 * spectral
    for coarse, fine in zip(errors, errors[1:]):
        assert coarse / fine == pytest.approx(4.0, rel=0.2)


def test_optimal_scale_formulas(full_grid_corpus, full_radial_corpus):
    for profile in full_radial_corpus[:10]:
        closed = optimal_a_lieb_loss(l2_norm_sq(profile), gradient_norm_sq(profile), 3)
        numeric = minimize_margin_over_a(lambda a, f=profile: lieb_loss_margin(f, a).margin, closed)
        assert numeric == pytest.approx(closed, rel=1e-6)

    for field_ in full_grid_corpus[:10]:
        closed = optimal_a_theorem1(l2_norm_sq(field_), frac_half_norm_sq(field_, 0.5), 2, 0.5)
        numeric = minimize_margin_over_a(lambda a, f=field_: theorem1_margin(f, 0.5, a).margin, closed)
        assert numeric == pytest.approx(closed, rel=1e-6)
