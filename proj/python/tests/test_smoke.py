import math

import pytest

import shadowham as sh


def test_classify_and_hamiltonian():
    r = sh.euler(1.0)
    c = sh.classify(r)
    assert c.tag.label == "i-a"
    bs = sh.enumerate_branches(r, -1, 1)
    assert len(bs.hamiltonians) == 3
    h = bs.hamiltonians[1]
    assert h.m == 0
    assert abs(h.lambda_ - math.pi / 3) < 1e-15
    assert abs(h.cA - math.pi / (3 * math.sqrt(3))) < 1e-14
    assert h.real_valued


def test_no_hamiltonian_at_critical_tau():
    r = sh.euler(2.0)
    assert sh.classify(r).tag.label == "iii-b"
    with pytest.raises(sh.NoHamiltonianError):
        sh.generator_jordan(r)
    bs = sh.enumerate_branches(r, -2, 2)
    assert bs.hamiltonians == []
    assert bs.no_hamiltonian is not None


def test_errors_are_value_errors():
    with pytest.raises(ValueError):
        sh.custom(1, 0, 0, 2, 1.0)
    with pytest.raises(sh.ShadowhamError):
        sh.make_integrator("leapfrog", 1.0)


def test_flow_matches_discrete_orbit():
    r = sh.euler(0.66)
    g = sh.generator_distinct(r, sh.classify(r).eigen, 1)
    orbit = sh.discrete_orbit(r, 1.0, 0.0, 6)
    assert len(orbit) == 7
    for tk, qk, pk in orbit:
        _, qc, pc = sh.continuous_state(g, 1.0, 0.0, tk)
        assert abs(qc - qk) < 1e-10
        assert abs(pc - pk) < 1e-10
    assert sh.rotation_sense(sh.hamiltonian_from_generator(g)) == "clockwise"


def test_case_ii_params():
    r = sh.custom(1, 0, 0, 1, 1.0)
    g = sh.generator_scalar(r, 1, sh.CaseIIParams.real_rotation())
    assert sh.hamiltonian_from_generator(g).real_valued


def test_run_suite():
    assert sh.run_suite()["passed"]
    assert not sh.run_suite(inject_fault=True)["passed"]
