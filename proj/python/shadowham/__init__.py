"""Shadow Hamiltonians of linear symplectic integrators for the harmonic oscillator."""

import json as _json

from ._core import (
    BranchSet,
    CaseIIParams,
    CaseTag,
    Classification,
    EigenStructure,
    Generator,
    NoHamiltonianError,
    ShadowHamiltonian,
    ShadowhamError,
    TransitionMatrix,
    classify,
    compose,
    continuous_state,
    custom,
    discrete_orbit,
    double_euler,
    enumerate_branches,
    euler,
    euler_closed_form,
    euler_closed_hamiltonian,
    euler_lambda,
    generator_distinct,
    generator_jordan,
    generator_scalar,
    hamiltonian_from_generator,
    make_integrator,
    position_verlet,
    rotation_sense,
    sample_trajectory,
    velocity_verlet,
    vp,
)
from ._core import run_suite as _run_suite

__version__ = "0.1.0"


def run_suite(seed=None, inject_fault=False):
    """Run the verification suite and return the report as a dict."""
    if seed is None:
        return _json.loads(_run_suite(inject_fault=inject_fault))
    return _json.loads(_run_suite(seed=seed, inject_fault=inject_fault))
