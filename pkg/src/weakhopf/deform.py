"""The canonical element of the target base and the deformations it controls."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import (
    AlgElement,
    GaugedInvolution,
    LinearMapRep,
    center_expectation,
    default_tol,
    invert,
    is_strictly_positive,
    left_mult,
    right_mult,
    spectrum,
    tensor_elem,
)
from .errors import (
    AbelianBaseOnlyTrivial,
    CrossCheckMismatch,
    NotAdmissible,
    NotInvertible,
    NotPositive,
    PostconditionViolated,
    Singular,
    WeakHopfError,
)
from .hopf import (
    WeakHopf,
    antipode_inverse,
    base_tensor_coordinates,
    cartan_angles,
    cartan_source,
    cartan_target,
    check_axioms,
    f_element,
    generated_base_algebra,
)
from .report import StructureReport, relative_residual
from .separating import gauge_from_separating, solve_gauge


@dataclass(frozen=True, eq=False)
class CanonicalElement:
    q: AlgElement
    q_t: AlgElement
    spectrum: np.ndarray
    cartan: object


@dataclass(frozen=True, eq=False)
class AdmissibleK:
    k: AlgElement
    k_t: AlgElement
    spectrum: np.ndarray  # of k^-1 q, in base coordinates


def _tol(W, tol):
    return default_tol(W.dim) if tol is None else tol


def canonical_element(W, tol=None, cartan=None):
    """The canonical element ``q`` of the target base, computed two independent ways.

    (a) the separating-element formula ``q = sum f'_i f_i`` applied to
    ``f = (kappa (x) i) Delta(1)``; (b) the linear solve ``f = (1 (x) q) e``.
    """
    tol = _tol(W, tol)
    cartan = cartan_target(W, tol) if cartan is None else cartan
    N = cartan.algebra
    f, resid = base_tensor_coordinates(W, cartan, f_element(W))
    if resid > tol:
        raise CrossCheckMismatch(f"(kappa (x) i)Delta(1) leaves the base tensor square ({resid:.3g})")
    q_a = gauge_from_separating(N, f, tol)
    q_b, res_b = solve_gauge(N, f)
    if res_b > tol or (q_a - q_b).norm() > 10 * tol * max(1.0, q_a.norm()):
        raise CrossCheckMismatch(
            f"canonical element algorithms disagree by {(q_a - q_b).norm():.3g} (solve residual {res_b:.3g})"
        )
    try:
        invert(q_a, tol)
    except Singular as exc:
        raise NotInvertible("canonical element is singular") from exc
    if not is_strictly_positive(q_a, tol):
        raise NotPositive("canonical element is not positive")
    q_t = (q_a + q_a.adj()) / 2
    return CanonicalElement(cartan.structure.embed(q_t), q_t, spectrum(q_t), cartan)


def canonical_properties(W, c=None, tol=None):
    """Residuals of the four defining properties of the canonical element."""
    tol = _tol(W, tol)
    c = canonical_element(W, tol) if c is None else c
    S = c.cartan.structure
    N = S.algebra
    kinv = antipode_inverse(W, tol)
    acc = W.AA.zero()
    for gamma, n in enumerate(N.blocks):
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                eij = S.embed(N.e(i, j, gamma))
                eji = S.embed(N.e(j, i, gamma))
                acc = acc + (1.0 / n) * tensor_elem(kinv(eij * c.q), eji)
    kq = W.kappa(W.kappa(c.q))
    res = {
        "delta_one_expansion": relative_residual((acc - W.delta_one).vec, W.delta_one.vec),
        "kappa_squared_fixes_q": relative_residual((kq - c.q).vec, c.q.vec),
        "central_expectation_one": relative_residual((center_expectation(c.q_t) - N.unit()).vec, N.unit().vec),
    }
    res.update(check_kappa_squared_inner(W, c, tol).residuals)
    res["positive"] = max(0.0, -float(c.spectrum[0])) + (0.0 if c.spectrum[0] > tol else 1.0)
    return StructureReport(res, tol, "canonical element")


def check_kappa_squared_inner(W, c=None, tol=None, basis=None):
    """``kappa^2(x) = q^-1 kappa(q) x q kappa(q^-1)`` on the algebra generated by both bases."""
    tol = _tol(W, tol)
    c = canonical_element(W, tol) if c is None else c
    A = W.algebra
    if basis is None:
        basis = generated_base_algebra(W, tol, (c.cartan, cartan_source(W, tol)))
    q, qi = c.q, invert(c.q)
    left = qi * W.kappa(q)
    right = q * W.kappa(qi)
    K2 = W.K @ W.K
    diffs, refs = [], []
    for k in range(basis.shape[1]):
        x = AlgElement(A, basis[:, k])
        rhs = left * x * right
        diffs.append(K2 @ x.vec - rhs.vec)
        refs.append(rhs.vec)
    return StructureReport({"kappa_squared_inner": relative_residual(np.array(diffs), np.array(refs))},
                           tol, "kappa squared on the generated base algebra")


# --- admissible parameters --------------------------------------------------


def _standard_positive(W, k, tol):
    if W.inv.is_standard:
        return is_strictly_positive(k, tol)
    return is_strictly_positive(W.standardization.forward(k), tol)


def admissibility_report(W, k, tol=None, c=None):
    tol = _tol(W, tol)
    c = canonical_element(W, tol) if c is None else c
    S = c.cartan.structure
    N = S.algebra
    res = {"in_base": S.distance(k) / max(1.0, k.norm())}
    res["strictly_positive"] = 0.0 if _standard_positive(W, k, tol) else 1.0
    kk = W.kappa(W.kappa(k))
    res["kappa_squared_fixed"] = relative_residual((kk - k).vec, k.vec)
    try:
        k_t = S.coordinates(k)
        ratio = invert(k_t, tol) * c.q_t
        res["central_expectation_one"] = relative_residual(
            (center_expectation(ratio) - N.unit()).vec, N.unit().vec)
    except Singular:
        res["central_expectation_one"] = np.inf
    return StructureReport(res, tol, "admissibility")


def is_admissible(W, k, tol=None, c=None):
    if isinstance(k, AdmissibleK):
        k = k.k
    return admissibility_report(W, k, tol, c).passed


def _simplex_weights(rng, n, floor=1e-3):
    """Uniform weights on the simplex scaled to sum ``n``, each at least ``floor``."""
    w = rng.dirichlet(np.ones(n))
    return floor + (n - n * floor) * w


def sample_admissible(W, seed=0, tol=None, c=None):
    """Random admissible ``k``: ``k^-1 q`` has eigenvalues ``r_i > 0`` with ``sum r_i = n`` per block."""
    tol = _tol(W, tol)
    c = canonical_element(W, tol) if c is None else c
    S = c.cartan.structure
    N = S.algebra
    if N.is_abelian:
        raise AbelianBaseOnlyTrivial("commutative base: k = q is the only admissible choice")
    rng = np.random.default_rng(seed)
    mats = []
    for n, qg in zip(N.blocks, c.q_t.mats):
        if n == 1:
            mats.append(qg.copy())
            continue
        w, V = np.linalg.eigh((qg + qg.conj().T) / 2)
        r = _simplex_weights(rng, n)
        mats.append((V * (w / r)) @ V.conj().T)
    k_t = N.element(mats)
    k = S.embed(k_t)
    return AdmissibleK(k, k_t, spectrum(invert(k_t) * c.q_t, tol=1e-6))


def admissible_from_base(W, k_t, tol=None, c=None):
    """Wrap base coordinates ``k_t`` as an admissible parameter (validated)."""
    c = canonical_element(W, tol) if c is None else c
    k = c.cartan.structure.embed(k_t)
    if not is_admissible(W, k, tol, c):
        raise NotAdmissible("element is not admissible")
    return AdmissibleK(k, k_t, spectrum(invert(k_t) * c.q_t, tol=1e-6))


# --- deformation -----------------------------------------------------------


def deform_maps(W, k):
    """Apply the deformation formulas for ``k`` without any checks."""
    A, AA = W.algebra, W.AA
    ki = invert(k)
    delta = right_mult(tensor_elem(A.unit(), ki)) @ W.delta.matrix
    kappa = left_mult(k) @ right_mult(ki) @ W.K
    eps = W.eps.matrix @ right_mult(k)
    g = k * W.inv.gauge_or_unit()
    g = (g + g.adj()) / 2
    meta = dict(W.metadata)
    meta["deformations"] = int(meta.get("deformations", 0)) + 1
    return WeakHopf(
        A,
        LinearMapRep(A, AA, delta),
        LinearMapRep(A, A, kappa),
        LinearMapRep(A, W.eps.codomain, eps),
        GaugedInvolution(A, g),
        label=W.label,
        metadata=meta,
    )


def deform(W, k, tol=None, verify=True, c=None):
    """Rescale involution, coproduct, antipode and counit of ``W`` by the admissible ``k``."""
    tol = _tol(W, tol)
    c = canonical_element(W, tol) if c is None else c
    if isinstance(k, AdmissibleK):
        k = k.k
    if not is_admissible(W, k, tol, c):
        raise NotAdmissible(f"k fails {admissibility_report(W, k, tol, c).failures()}")
    out = deform_maps(W, k)
    if verify:
        verify_deformation(W, out, k, tol, c)
    return out


def verify_deformation(W, out, k, tol=None, c=None):
    """Postconditions of a deformation; raises ``PostconditionViolated``."""
    tol = _tol(W, tol)
    c = canonical_element(W, tol) if c is None else c
    rep = deformation_report(W, out, k, tol, c)
    if not rep.passed:
        raise PostconditionViolated(f"deformation fails {rep.failures()}")
    return rep


def deformation_report(W, out, k, tol=None, c=None):
    tol = _tol(W, tol)
    c = canonical_element(W, tol) if c is None else c
    axioms = check_axioms(out, tol)
    res = dict(axioms.residuals)
    try:
        new_t, new_s = cartan_target(out, tol), cartan_source(out, tol)
        res["same_target_base"] = float(np.max(cartan_angles(c.cartan.basis, new_t.basis)))
        res["same_source_base"] = float(np.max(cartan_angles(cartan_source(W, tol).basis, new_s.basis)))
        c_new = canonical_element(out, tol, new_t)
        expected = invert(k) * c.q
        res["canonical_element"] = relative_residual((c_new.q - expected).vec, expected.vec)
    except WeakHopfError:
        res["same_target_base"] = res["same_source_base"] = res["canonical_element"] = np.inf
    return StructureReport(res, tol, "deformation")


def deform_to_involutive_base(W, tol=None, verify=True):
    """Deform by the canonical element itself; the antipode becomes involutive on the bases."""
    c = canonical_element(W, tol)
    return deform(W, c.q, tol, verify, c)


def base_involutivity_residual(W, tol=None):
    """``|kappa^2 - id|`` restricted to ``A_t`` and ``A_s``."""
    At, As = cartan_target(W, tol), cartan_source(W, tol)
    K2 = W.K @ W.K
    Q = np.hstack([At.basis, As.basis])
    return relative_residual(K2 @ Q - Q, Q)


def spectrum_invariant(W, tol=None):
    """Eigenvalues (with multiplicity) of the canonical element in base coordinates."""
    return canonical_element(W, tol).spectrum


def spectra_distinct(s1, s2, sep=1e-6):
    s1, s2 = np.sort(np.asarray(s1)), np.sort(np.asarray(s2))
    return bool(s1.shape != s2.shape or float(np.max(np.abs(s1 - s2))) > sep)
