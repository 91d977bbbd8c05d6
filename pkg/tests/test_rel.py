"""Relativistic singular oscillator: parameters, spectrum, ladder algebra."""

import math

import numpy as np
import pytest

from fdosc import rel
from fdosc.errors import CouplingError, SpectralError
from fdosc.opcore import default_grid, grid_ratio

GRID = default_grid()
MODEL = rel.make_rel_model(0.5, 0.1)


def test_exponents_frozen():
    assert MODEL.alpha == pytest.approx(1.179077033921902, abs=1e-14)
    assert MODEL.nu == pytest.approx(2.5096901208892457, abs=1e-14)


def test_exponent_identities():
    # the pair of constraints that make the factorization close
    a, nu, w0, g0 = MODEL.alpha, MODEL.nu, MODEL.omega0, MODEL.g0
    assert a * (a - 1.0) + nu * (nu - 1.0) == pytest.approx(1.0 / w0**2, rel=1e-13)
    assert a * (a - 1.0) * nu * (nu - 1.0) == pytest.approx(
        2.0 * g0 / w0**2, rel=1e-13)


def test_ground_energy_frozen():
    assert rel.energy(MODEL, 0) == pytest.approx(1.8443835774055741, abs=1e-13)
    assert rel.energy(MODEL, 3) == pytest.approx(1.8443835774055741 + 3.0,
                                                 abs=1e-12)


def test_coupling_validation():
    with pytest.raises(CouplingError):
        rel.make_rel_model(0.0, 0.1)
    with pytest.raises(CouplingError):
        rel.make_rel_model(-0.5, 0.1)
    with pytest.raises(CouplingError):
        rel.make_rel_model(0.5, 0.0)
    with pytest.raises(CouplingError):
        rel.make_rel_model(0.5, -0.1)
    with pytest.raises(CouplingError):
        rel.make_rel_model(0.5, 0.6)  # 8 g0 omega0^2 > 1


def test_boundary_coupling_admitted():
    # 8 g0 omega0^2 = 1 exactly: exponents stay real and coincide in root
    m = rel.make_rel_model(0.5, 0.5)
    assert m.alpha == pytest.approx(m.nu, rel=1e-12)
    assert rel.energy(m, 0) > 1.0


@pytest.mark.parametrize("n", range(5))
def test_eigen_equation(n):
    H = rel.hamiltonian_rel(MODEL)
    st = rel.eigenfunction_rel(MODEL, n)
    out = H(st.wavefunction)
    worst = max(abs(out(p) - st.energy_mc2 * st.wavefunction(p))
                / (1.0 + abs(st.energy_mc2 * st.wavefunction(p))) for p in GRID)
    assert worst < 1e-10


def test_wavefunction_evaluable_at_operator_shift_points():
    wf = rel.eigenfunction_rel(MODEL, 2).wavefunction
    for p in (0.5, 2.0, 7.0):
        for shift in (0.0, 0.5j, -0.5j, 1j):
            val = wf(p + shift)
            assert np.isfinite(val.real) and np.isfinite(val.imag)


def test_half_shift_pair_annihilates_ground():
    b_minus, _ = rel.ladder_b(MODEL)
    wf0 = rel.eigenfunction_rel(MODEL, 0).wavefunction
    scale = max(abs(wf0(p)) for p in GRID)
    assert max(abs(b_minus(wf0)(p)) for p in GRID) / scale < 1e-12


def test_two_step_raising_maps_to_next_state():
    _, B_plus = rel.ladder_B(MODEL)
    for n in range(3):
        st = rel.eigenfunction_rel(MODEL, n)
        nxt = rel.eigenfunction_rel(MODEL, n + 1)
        ratio, spread = grid_ratio(B_plus(st.wavefunction), nxt.wavefunction, GRID)
        assert spread < 1e-10
        # in this normalization the raising map is exactly -1
        assert ratio == pytest.approx(-1.0, abs=1e-10)


def test_printed_two_step_variant_differs_by_known_scalar():
    Bm, _ = rel.ladder_B(MODEL)
    Bm_printed, _ = rel.ladder_B_printed(MODEL)
    wf = rel.eigenfunction_rel(MODEL, 1).wavefunction
    offset = 0.5 / MODEL.omega0
    worst = max(abs(Bm(wf)(p) - Bm_printed(wf)(p) - offset * wf(p)) for p in GRID)
    assert worst < 1e-10 * max(abs(wf(p)) for p in GRID)


def test_spectral_weight_positive_on_spectrum():
    for n in range(8):
        assert rel.spectral_f(MODEL, rel.energy(MODEL, n)) > 0.0
    # closed form: f(E_n) = 4 omega0^2 (n+alpha-1/2)(n+nu-1/2)
    a, nu, w0 = MODEL.alpha, MODEL.nu, MODEL.omega0
    for n in range(4):
        assert rel.spectral_f(MODEL, rel.energy(MODEL, n)) == pytest.approx(
            4.0 * w0**2 * (n + a - 0.5) * (n + nu - 0.5), rel=1e-12)


def test_spectral_weight_rejects_nonpositive():
    with pytest.raises(SpectralError):
        rel.spectral_f_sqrt_inv(MODEL, 0.0)


def test_su11_k0_eigenvalue():
    basis = rel.su11_rel(MODEL)
    for n in range(4):
        assert basis.k0_eigenvalue(n) == pytest.approx(
            n + 0.5 * (MODEL.alpha + MODEL.nu), rel=1e-13)


def test_ladder_state_proportional_to_closed_form():
    st = rel.ladder_state(MODEL, 2)
    ref = rel.eigenfunction_rel(MODEL, 2)
    assert st.built_by_ladder
    _, spread = grid_ratio(st.wavefunction, ref.wavefunction, GRID)
    assert spread < 1e-10


def test_nonrel_limit_deviation_shrinks():
    devs = rel.nonrel_limit(0.1, [1e-2, 5e-3, 2.5e-3])
    assert devs[0] > devs[1] > devs[2]
    assert devs[0] / devs[1] == pytest.approx(2.0, rel=0.05)


def test_eigenfunction_rejects_negative_index():
    with pytest.raises(ValueError):
        rel.eigenfunction_rel(MODEL, -1)
