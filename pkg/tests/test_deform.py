import numpy as np
import pytest
from conftest import instances
from hypothesis import given, settings
from hypothesis import strategies as st

from weakhopf import (
    admissible_from_base,
    canonical_element,
    canonical_properties,
    cartan_target,
    check_axioms,
    check_kappa_squared_inner,
    deform,
    deform_to_involutive_base,
    is_admissible,
    is_weak_kac,
    pair_groupoid_wha,
    sample_admissible,
    spectra_distinct,
    spectrum_invariant,
)
from weakhopf.algebra import commutator, invert
from weakhopf.deform import base_involutivity_residual, deform_maps, deformation_report
from weakhopf.errors import AbelianBaseOnlyTrivial, NotAdmissible

TOL = 1e-8


def close(x, y, tol=1e-9):
    return (x - y).norm() <= tol * max(1.0, y.norm())


def diag_k(W, *entries):
    N = canonical_element(W, TOL).cartan.algebra
    return admissible_from_base(W, N.element([np.diag(entries)]), TOL)


@pytest.fixture(scope="module")
def deformed(op_m2):
    return deform(op_m2, diag_k(op_m2, 2.0, 2.0 / 3.0), TOL)


@pytest.mark.parametrize("name", sorted(instances()))
def test_canonical_element_is_one_on_shipped_instances(name):
    W = instances()[name]
    c = canonical_element(W, TOL)
    assert close(c.q, W.algebra.unit())
    assert canonical_properties(W, c, TOL).passed
    assert np.allclose(spectrum_invariant(W, TOL), 1.0)


def test_canonical_properties_on_deformation(op_m2, deformed):
    c = canonical_element(deformed, TOL)
    rep = canonical_properties(deformed, c, TOL)
    assert rep.passed, rep.failures()
    assert np.allclose(c.spectrum, [0.5, 1.5])


def test_kappa_squared_inner(op_m2, deformed):
    assert check_kappa_squared_inner(op_m2, tol=TOL).passed
    assert check_kappa_squared_inner(deformed, tol=TOL).passed
    # kappa^2 is no longer the identity on the base
    assert base_involutivity_residual(deformed, TOL) > 1e-3


def test_spec_admissible_example(op_m2):
    k = diag_k(op_m2, 2.0, 2.0 / 3.0)
    assert is_admissible(op_m2, k, TOL)
    assert np.allclose(k.spectrum, [0.5, 1.5])


def test_non_admissible_rejected(op_m2):
    N = canonical_element(op_m2, TOL).cartan.algebra
    with pytest.raises(NotAdmissible):
        admissible_from_base(op_m2, N.element([np.diag([2.0, 2.0])]), TOL)
    with pytest.raises(NotAdmissible):
        deform(op_m2, 2 * op_m2.algebra.unit(), TOL)


def test_q_is_admissible(op_m2):
    assert is_admissible(op_m2, canonical_element(op_m2, TOL).q, TOL)


def test_abelian_base_only_trivial():
    W = pair_groupoid_wha(3)
    with pytest.raises(AbelianBaseOnlyTrivial):
        sample_admissible(W, 0, TOL)
    assert is_admissible(W, W.algebra.unit(), TOL)


def test_trivial_deformation_is_identity(op_m2):
    out = deform(op_m2, op_m2.algebra.unit(), TOL)
    assert np.allclose(out.delta.matrix, op_m2.delta.matrix)
    assert np.allclose(out.K, op_m2.K)
    assert np.allclose(out.e, op_m2.e)


def test_deformed_structure_is_not_kac(deformed):
    assert is_weak_kac(deformed, TOL) == (False, False)


def test_spectra_of_two_deformations_differ(op_m2):
    a = deform(op_m2, diag_k(op_m2, 2.0, 2.0 / 3.0), TOL)
    b = deform(op_m2, diag_k(op_m2, 4.0, 4.0 / 7.0), TOL)
    sa, sb = spectrum_invariant(a, TOL), spectrum_invariant(b, TOL)
    assert np.allclose(sb, [0.25, 1.75])
    assert spectra_distinct(sa, sb)
    assert not spectra_distinct(sa, sa)


def test_normalization_returns_to_base_involutive(deformed):
    back = deform_to_involutive_base(deformed, TOL)
    assert base_involutivity_residual(back, TOL) <= TOL
    assert np.allclose(spectrum_invariant(back, TOL), 1.0)


def test_normalization_of_involutive_instance_is_noop(op_m2):
    out = deform_to_involutive_base(op_m2, TOL)
    assert np.allclose(out.delta.matrix, op_m2.delta.matrix)


def test_deformation_counts_in_metadata(deformed):
    assert deformed.metadata["deformations"] == 1


def test_unverified_maps_match_verified(op_m2):
    k = diag_k(op_m2, 2.0, 2.0 / 3.0).k
    raw = deform_maps(op_m2, k)
    assert deformation_report(op_m2, raw, k, TOL).passed


@settings(max_examples=10, deadline=None)
@given(st.integers(0, 10**6))
def test_sampled_k_admissible_and_commutes_with_q(seed):
    W = instances()["op-M2"]
    c = canonical_element(W, TOL)
    k = sample_admissible(W, seed, TOL, c)
    assert is_admissible(W, k, TOL, c)
    assert commutator(k.k, c.q).norm() <= TOL
    assert close(W.kappa(W.kappa(k.k)), k.k, TOL)
    assert np.isclose(k.spectrum.sum(), 2.0)
    assert (k.spectrum > 0).all()


@settings(max_examples=10, deadline=None)
@given(st.integers(0, 10**6))
def test_kappa_squared_fixed_iff_commutes_with_q(seed):
    """On the base of a deformed structure, kappa^2(k) = k exactly when [k, q] = 0."""
    W = deform(instances()["op-M2"], diag_k(instances()["op-M2"], 2.0, 2.0 / 3.0), TOL)
    c = canonical_element(W, TOL)
    rng = np.random.default_rng(seed)
    S = c.cartan.structure
    y = S.algebra.random_positive(rng)
    candidates = [S.embed(y), sample_admissible(W, seed, TOL, c).k]
    for k in candidates:
        fixed = (W.kappa(W.kappa(k)) - k).norm() <= 1e-7 * max(1.0, k.norm())
        commutes = commutator(k, c.q).norm() <= 1e-7 * max(1.0, k.norm())
        assert fixed == commutes


@settings(max_examples=5, deadline=None)
@given(st.integers(0, 10**6))
def test_deformation_closure(seed):
    W = instances()["op-M2"]
    k = sample_admissible(W, seed, TOL)
    out = deform(W, k, TOL)
    assert check_axioms(out, TOL).passed
    c = canonical_element(out, TOL)
    assert close(c.q, invert(k.k) * canonical_element(W, TOL).q, TOL)
    assert cartan_target(out, TOL).blocks == (2,)
    twice = deform_to_involutive_base(out, TOL)
    assert np.allclose(spectrum_invariant(twice, TOL), 1.0)
