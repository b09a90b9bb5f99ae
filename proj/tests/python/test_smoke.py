import cmath
import math

import pytest

import dtqw


def test_momentum_unitary_is_special_unitary():
    m = dtqw.WalkModel.non_commuting(0.9, -0.4)
    u = dtqw.momentum_unitary(m, 0.3)
    det = u[0][0] * u[1][1] - u[0][1] * u[1][0]
    assert abs(det - 1) < 1e-12
    half_trace = 0.5 * (u[0][0] + u[1][1]).real
    assert abs(math.acos(half_trace) - dtqw.quasi_energy(m, 0.3)) < 1e-10


def test_bloch_vector_is_unit():
    n = dtqw.bloch_vector(dtqw.WalkModel.split_step(0.6, 1.1), 0.8)
    assert abs(math.hypot(*n) - 1) < 1e-12


def test_dirac_census():
    result = dtqw.find_dirac_points(dtqw.Family.non_commuting)
    assert len(result["points"]) == 13
    assert not result["continuous_boundary"]


def test_zak_trivial_case():
    m = dtqw.WalkModel.non_commuting(math.pi / 2, 0.0)
    for band in (dtqw.Band.plus, dtqw.Band.minus):
        assert abs(abs(dtqw.zak_phase(m, band)) - math.pi) < 1e-6


def test_gapless_raises():
    with pytest.raises(dtqw.DomainError):
        dtqw.zak_phase(dtqw.WalkModel.non_commuting(0.0, 0.0), dtqw.Band.plus)


def test_walk_matches_oracle():
    m = dtqw.WalkModel.standard(math.pi / 4)
    a = dtqw.evolve_distribution(m, 12, "plus")
    b = dtqw.oracle_distribution(m, 12, "plus")
    assert a["min_x"] == b["min_x"]
    assert max(abs(x - y) for x, y in zip(a["p"], b["p"])) < 1e-12
    assert dtqw.similarity(a["min_x"], a["p"], a["p"]) == 1.0


def test_holonomy_and_metric():
    angle, drift = dtqw.latitude_holonomy(math.pi / 3, 20000)
    assert abs(cmath.phase(cmath.exp(1j * (angle - math.pi)))) < 1e-6
    assert drift < 1e-9
    g, v = dtqw.quantum_geometric_tensor(1.0, 0.3)
    assert abs(g[0][0] - 0.25) < 1e-8
    assert abs(g[1][1] - 0.25 * math.sin(1.0) ** 2) < 1e-8


def test_winding_and_cli():
    assert abs(dtqw.winding_number(dtqw.WalkModel.split_step(math.pi / 4, 0.2))) == 1
    code, out, err = dtqw.run_cli(["qgt", "--theta", "1.0", "--phi", "0.3"])
    assert code == 0
    assert '"g"' in out
    assert dtqw.run_cli(["bogus"])[0] == 2
