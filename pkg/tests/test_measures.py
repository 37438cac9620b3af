"""Correlation measures: closed forms, the measurement map, negativity and
the brute-force minimization oracles."""

import numpy as np
import pytest

from discordlab import families, linalg, measures, states
from discordlab.measures import (
    XCoefficients,
    d1_closed_x,
    d1_oracle,
    d1_x_with_method,
    d2_closed,
    d2_oracle,
    is_degenerate_x,
    measure_map,
    measurement_axis,
    negativity,
)
from discordlab.states import XState, from_x_state, sample_random_state, to_x_state

MAXMIX = np.eye(4, dtype=complex) / 4


def theta_state(theta):
    return families.make_state(families.FamilyParams("theta", theta=theta))


def bell_phi_plus():
    return from_x_state(XState(0.5, 0.0, 0.0, 0.5, 0.5, 0.0))


def random_product_state(seed):
    rng = np.random.default_rng(seed)

    def qubit():
        g = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
        m = g @ g.conj().T
        return m / np.trace(m).real

    return linalg.kron(qubit(), qubit())


def random_local_unitary(seed):
    rng = np.random.default_rng(seed)
    g = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
    q, r = np.linalg.qr(g)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def unit(v):
    a = np.asarray(v, dtype=float)
    return a / np.sqrt(a @ a)


def test_measurement_axis_validates():
    n = measurement_axis([0.6, 0.0, 0.8])
    np.testing.assert_allclose(n, [0.6, 0.0, 0.8], atol=1e-15)
    for bad in ([3.0, 0.0, 4.0], [0.0, 0.0, 0.0], [1.0, 0.0]):
        with pytest.raises(ValueError):
            measurement_axis(bad)


def test_measure_map_examples():
    axis = measurement_axis(unit([0.3, -0.5, 0.8]))
    np.testing.assert_allclose(measure_map(MAXMIX, axis), MAXMIX, atol=1e-15)

    rho_c = families.make_state(families.FamilyParams("classical", w=0.2, s=0.2))
    np.testing.assert_allclose(measure_map(rho_c, measurement_axis([1.0, 0.0, 0.0])),
                               rho_c, atol=1e-14)

    dephased = measure_map(bell_phi_plus(), measurement_axis([0.0, 0.0, 1.0]))
    np.testing.assert_allclose(dephased, np.diag([0.5, 0.0, 0.0, 0.5]), atol=1e-14)


def test_measure_map_idempotent():
    rng = np.random.default_rng(17)
    for seed in range(10):
        rho = sample_random_state(seed, "full-rank")
        axis = measurement_axis(unit(rng.standard_normal(3)))
        once = measure_map(rho, axis)
        np.testing.assert_allclose(measure_map(once, axis), once, atol=1e-13)


def test_d2_closed_examples():
    assert abs(d2_closed(theta_state(np.pi / 4)) - 0.25) < 1e-12
    for seed in range(10):
        assert d2_closed(random_product_state(seed)) < 1e-12
    rho_d = families.make_state(families.FamilyParams("discordant", w=0.2, s=0.2))
    assert abs(d2_closed(rho_d) - 0.02) < 1e-12


def test_d2_closed_theta_formula():
    for theta in np.linspace(0.0, np.pi / 2, 41):
        expected = min(0.5 * np.sin(theta) ** 2, 0.25 * np.sin(2 * theta) ** 2)
        assert abs(d2_closed(theta_state(theta)) - expected) < 1e-12


def test_d1_closed_examples():
    assert abs(d1_closed_x(to_x_state(theta_state(np.pi / 4))) - 0.5) < 1e-12
    for w in (0.1, 0.25, 0.4):
        for frac in (0.3, 1.0):
            s = families.s_max(w) * frac
            rho_c = families.make_state(families.FamilyParams("classical", w=w, s=s))
            assert d1_closed_x(to_x_state(rho_c)) < 1e-12
    rho_d = families.make_state(families.FamilyParams("discordant", w=0.2, s=0.2))
    expected = 0.16 / np.sqrt(0.68)
    assert abs(d1_closed_x(to_x_state(rho_d)) - expected) < 1e-12


def test_d1_method_flags():
    val, method = d1_x_with_method(to_x_state(theta_state(np.pi / 4)))
    assert method == "closed-x" and abs(val - 0.5) < 1e-12

    # all coefficients vanish: trivially zero through the closed form
    val, method = d1_x_with_method(to_x_state(MAXMIX))
    assert (val, method) == (0.0, "closed-x")

    bell = to_x_state(bell_phi_plus())
    assert is_degenerate_x(bell)
    val, method = d1_x_with_method(bell)
    assert method == "oracle" and abs(val - 1.0) < 1e-5


def test_x_coefficients_invariants():
    for seed in range(10):
        c = XCoefficients.from_x_state(to_x_state(sample_random_state(seed, "x-shaped")))
        assert c.a == max(c.a3 ** 2, c.a2 ** 2 + c.x ** 2)
        assert c.b == min(c.a3 ** 2, c.a1 ** 2)
        assert max(abs(c.a1), abs(c.a2), abs(c.a3), abs(c.x)) <= 1 + 1e-10


def test_negativity_examples():
    assert abs(negativity(bell_phi_plus()) - 1.0) < 1e-12
    expected = (2 * np.sqrt(2) - 2) / 4
    assert abs(negativity(theta_state(np.pi / 4)) - expected) < 1e-12
    assert negativity(theta_state(np.pi / 2)) < 1e-12
    for theta in np.linspace(0.0, np.pi / 2, 21):
        expected = max(0.0, (np.sqrt(6 - 2 * np.cos(4 * theta)) - 2) / 4)
        assert abs(negativity(theta_state(theta)) - expected) < 1e-12


def test_d2_oracle_examples():
    val, _axis = d2_oracle(MAXMIX, 500, 50)
    assert val < 1e-10
    val, _axis = d2_oracle(theta_state(np.pi / 4), 2000, 200)
    assert abs(val - 0.25) < 1e-6


def test_d1_oracle_examples():
    for seed in range(3):
        val, _axis = d1_oracle(random_product_state(seed), 2000, 200)
        assert val < 1e-8
    val, _axis = d1_oracle(theta_state(np.pi / 6), 2000, 200)
    assert abs(val - 0.5 * np.sin(np.pi / 3)) < 1e-5
    val, _axis = d1_oracle(bell_phi_plus(), 2000, 200)
    assert abs(val - 1.0) < 1e-5


def test_oracle_axis_deterministic_and_unit():
    rho = sample_random_state(12, "x-shaped")
    v1, a1 = d1_oracle(rho, 500, 50)
    v2, a2 = d1_oracle(rho, 500, 50)
    assert v1 == v2
    np.testing.assert_array_equal(a1, a2)
    assert abs(np.linalg.norm(a1) - 1.0) < 1e-12


def test_local_unitary_invariance():
    for seed in (0, 1):
        rho = sample_random_state(seed, "full-rank")
        u = linalg.kron(random_local_unitary(seed + 100), random_local_unitary(seed + 200))
        rotated = u @ rho @ u.conj().T
        assert abs(d2_closed(rotated) - d2_closed(rho)) < 1e-10
        assert abs(negativity(rotated) - negativity(rho)) < 1e-10
        d1_a = d1_oracle(rho, 2000, 200)[0]
        d1_b = d1_oracle(rotated, 2000, 200)[0]
        assert abs(d1_a - d1_b) < 1e-4


def gauged_x(rho):
    """XState of rho with corner phases removed by local rotations,
    which leave every measure here invariant."""
    a = np.asarray(rho, dtype=complex)
    return XState(a[0, 0].real, a[1, 1].real, a[2, 2].real, a[3, 3].real,
                  abs(a[0, 3]), abs(a[1, 2]))


def test_corner_sign_gauge_is_sound():
    # flipping a corner sign is a local phase, so d1 must not move
    for seed in (0, 1, 2):
        rho = sample_random_state(seed, "bell-diagonal")
        val = d1_closed_x(gauged_x(rho))
        ref, _ = d1_oracle(rho, 2000, 200)
        assert abs(val - ref) < 1e-5


def test_chain_on_bell_diagonal_sample():
    # small fast version; the full-size run lives in the acceptance suite
    for seed in range(200):
        rho = sample_random_state(seed, "bell-diagonal")
        d1 = d1_closed_x(gauged_x(rho))
        root_d2 = np.sqrt(d2_closed(rho))
        assert d1 >= root_d2 - 1e-9
        assert root_d2 >= negativity(rho) - 1e-9


def test_theta_family_chain_regions():
    for theta in np.linspace(0.02, np.pi / 4 - 0.02, 15):
        rho = theta_state(theta)
        d1 = d1_closed_x(to_x_state(rho))
        root_d2 = np.sqrt(d2_closed(rho))
        n = negativity(rho)
        assert d1 > root_d2 > n
    for theta in np.linspace(np.pi / 4, np.pi / 2, 15):
        rho = theta_state(theta)
        assert abs(d1_closed_x(to_x_state(rho)) - np.sqrt(d2_closed(rho))) < 1e-10
