"""Weak Hopf C*-algebras: the axiom checker and the structural invariants.

Identities quantified over "every x, y" are evaluated on the canonical basis,
which suffices because every identity is (bi)linear or conjugate-linear.
Checks that involve the involution run on :meth:`WeakHopf.standardized`, an
isomorphic copy carrying the standard involution.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from functools import cached_property

import numpy as np
from scipy.linalg import null_space

from .algebra import (
    AlgElement,
    BlockAlgebra,
    C,
    GaugedInvolution,
    LinearMapRep,
    SubalgebraStructure,
    adjoint_matrix,
    apply_tensor,
    default_tol,
    flip,
    from_product,
    orthonormal_span,
    recover_matrix_units,
    standardize,
    structure_constants,
    subalgebra_generated,
    tensor,
    tensor_elem,
    to_product,
)
from .errors import (
    NonUniqueSolution,
    NoSolution,
    NotPositive,
    Singular,
    StructureRecoveryFailed,
    WeakHopfError,
)
from .report import StructureReport, relative_residual
from .separating import is_separating

AXIOMS = (
    "delta_multiplicative",
    "delta_star",
    "coassociativity",
    "kappa_antimultiplicative",
    "kappa_star_involutive",
    "kappa_coproduct",
    "weak_antipode",
    "counit_left",
    "counit_right",
    "counit_multiplicativity",
    "counit_positive",
)


@dataclass(frozen=True, eq=False)
class WeakHopf:
    """``(A, Delta, kappa, eps)`` with an involution gauge on ``A``."""

    algebra: BlockAlgebra
    delta: LinearMapRep
    kappa: LinearMapRep
    eps: LinearMapRep
    inv: GaugedInvolution = None
    label: str = ""
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        A = self.algebra
        if self.inv is None:
            object.__setattr__(self, "inv", GaugedInvolution.standard(A))
        if self.delta.domain != A or self.delta.codomain != tensor(A, A):
            raise WeakHopfError("coproduct must map A -> A (x) A")
        if self.kappa.domain != A or self.kappa.codomain != A:
            raise WeakHopfError("antipode must map A -> A")
        if self.eps.domain != A or self.eps.codomain != C:
            raise WeakHopfError("counit must map A -> C")

    @property
    def dim(self):
        return self.algebra.dim

    @property
    def gauge(self):
        return self.inv.gauge

    @cached_property
    def AA(self):
        return tensor(self.algebra, self.algebra)

    @cached_property
    def M(self):
        return structure_constants(self.algebra)

    @cached_property
    def D(self):
        """Coproduct in product coordinates: ``D[x, a, b]`` = coefficient of ``E_a (x) E_b`` in ``Delta(E_x)``."""
        A = self.algebra
        return to_product(self.delta.matrix.T, A, A)

    @cached_property
    def K(self):
        return self.kappa.matrix

    @cached_property
    def e(self):
        return self.eps.matrix[0]

    @cached_property
    def delta_one(self):
        return self.delta(self.algebra.unit())

    def coproduct(self, x):
        return self.delta(x)

    def antipode(self, x):
        return self.kappa(x)

    def counit(self, x):
        return self.eps.scalar_value(x)

    def adjoint(self, x):
        return self.inv.adjoint(x)

    @cached_property
    def standardization(self):
        return standardize(self.inv)

    def standardized(self):
        """Isomorphic structure with the standard involution (identity when ungauged)."""
        if self.inv.is_standard:
            return self
        fwd, bwd = self.standardization
        cols = (self.delta.matrix @ bwd.matrix).T
        delta = apply_tensor(fwd, fwd, cols).T
        return WeakHopf(
            self.algebra,
            LinearMapRep(self.algebra, self.AA, delta),
            fwd @ self.kappa @ bwd,
            self.eps @ bwd,
            label=self.label,
            metadata=dict(self.metadata),
        )

    def with_maps(self, **changes):
        return replace(self, **changes)


def _tol(W, tol):
    return default_tol(W.dim) if tol is None else tol


def _blocks_batch(V, B):
    """Split a batch of canonical vectors ``V[..., dim]`` into per-block matrix stacks."""
    return [V[..., B.offsets[g]:B.offsets[g + 1]].reshape(V.shape[:-1] + (n, n))
            for g, n in enumerate(B.blocks)]


def _unblock(mats):
    return np.concatenate([m.reshape(m.shape[:-2] + (-1,)) for m in mats], axis=-1)


def _pair_products(V, B):
    """``V[x] V[y]`` for every pair, as canonical vectors ``[x, y, dim]``."""
    mats = _blocks_batch(V, B)
    return _unblock([np.matmul(m[:, None], m[None, :]) for m in mats])


def _batch_adjoint(V, B):
    return _unblock([np.conj(np.swapaxes(m, -1, -2)) for m in _blocks_batch(V, B)])


def check_axioms(W, tol=None):
    """Residual for each defining identity; see ``AXIOMS`` for the names."""
    tol = _tol(W, tol)
    S = W.standardized()
    A, AA, d = S.algebra, S.AA, S.dim
    M, K, e, Dx = S.M, S.K, S.e, S.D
    Dm = S.delta.matrix
    star = adjoint_matrix(A)
    eye = np.eye(d)
    res = {}

    # Delta(E_x E_y) against Delta(E_x) Delta(E_y)
    images = Dm.T
    lhs = np.einsum("kxy,pk->xyp", M, Dm)
    rhs = _pair_products(images, AA)
    res["delta_multiplicative"] = relative_residual(lhs - rhs, rhs)

    lhs = images[star]
    rhs = _batch_adjoint(images, AA)
    res["delta_star"] = relative_residual(lhs - rhs, rhs)

    left = apply_tensor(S.delta, LinearMapRep.identity(A), images)
    right = apply_tensor(LinearMapRep.identity(A), S.delta, images)
    res["coassociativity"] = relative_residual(left - right, right)

    lhs = np.einsum("pk,kxy->xyp", K, M)
    rhs = np.einsum("kqp,qy,px->xyk", M, K, K)
    res["kappa_antimultiplicative"] = relative_residual(lhs - rhs, rhs)

    # kappa(kappa(x*)*) = x; kappa o * is conjugate-linear and units are real
    kstar = K[:, star]
    twice = K @ np.conj(kstar[star, :])
    res["kappa_star_involutive"] = relative_residual(twice - eye, eye)

    lhs = apply_tensor(S.kappa, S.kappa, images)
    rhs = (flip(A).matrix @ Dm @ K).T
    res["kappa_coproduct"] = relative_residual(lhs - rhs, rhs)

    # (m(kappa (x) i) (x) i)(Delta (x) i)Delta(x) = (1 (x) x)Delta(1)
    T = np.einsum("pab,xpc->xabc", Dx, Dx)
    T = np.einsum("qa,xabc->xqbc", K, T)
    lhs = np.einsum("kqb,xqbc->xkc", M, T)
    C1 = to_product(S.delta_one.vec, A, A)
    rhs = np.einsum("ab,kxb->xak", C1, M)
    res["weak_antipode"] = relative_residual(lhs - rhs, rhs)

    res["counit_left"] = relative_residual(np.einsum("a,xab->xb", e, Dx) - eye, eye)
    res["counit_right"] = relative_residual(np.einsum("b,xab->xa", e, Dx) - eye, eye)

    L = np.einsum("k,kxa->xa", e, M)
    lhs = L @ C1 @ L
    res["counit_multiplicativity"] = relative_residual(lhs - L, L)

    G = L[star, :]
    herm = relative_residual(G - G.conj().T, G)
    lam = np.linalg.eigvalsh((G + G.conj().T) / 2)[0]
    res["counit_positive"] = max(herm, max(0.0, -lam) / max(1.0, np.linalg.norm(G)))
    return StructureReport(res, tol, f"axioms {W.label}".strip())


# --- counits and Cartan subalgebras ----------------------------------------


def counit_target(W):
    """``eps_t = m (i (x) kappa) Delta``."""
    mat = np.einsum("kaq,qb,xab->kx", W.M, W.K, W.D)
    return LinearMapRep(W.algebra, W.algebra, mat)


def counit_source(W):
    """``eps_s = m (kappa (x) i) Delta``."""
    mat = np.einsum("kqb,qa,xab->kx", W.M, W.K, W.D)
    return LinearMapRep(W.algebra, W.algebra, mat)


@dataclass(frozen=True, eq=False)
class CartanData:
    which: str
    structure: SubalgebraStructure

    @property
    def basis(self):
        """Orthonormal (Hilbert-Schmidt) basis of the subspace, columns."""
        return self.structure.basis

    @property
    def blocks(self):
        return self.structure.algebra.blocks

    @property
    def algebra(self):
        return self.structure.algebra

    def elements(self):
        A = self.structure.ambient
        return [AlgElement(A, self.basis[:, k]) for k in range(self.basis.shape[1])]

    def contains(self, x, tol):
        return self.structure.distance(x) <= tol * max(1.0, x.norm())


def cartan_subspace(W, which="target", tol=None):
    """Orthonormal basis of ``A_t`` (or ``A_s``) as the null space of its defining equations."""
    tol = _tol(W, tol)
    A = W.algebra
    one = A.unit()
    d1 = W.delta_one
    cols = []
    for k in range(A.dim):
        x = A.basis(k)
        xt = tensor_elem(x, one) if which == "target" else tensor_elem(one, x)
        dx = W.delta(x)
        cols.append(np.concatenate([(dx - d1 * xt).vec, (dx - xt * d1).vec]))
    Mx = np.stack(cols, axis=1)
    smax = np.linalg.norm(Mx, 2)
    return null_space(Mx, rcond=max(tol, 1e-12) / max(smax, 1.0) if smax > 0 else 1e-12)


def _cartan(W, which, tol=None, seed=0):
    S = W.standardized()
    Q = cartan_subspace(S, which, tol)
    if Q.shape[1] == 0:
        raise StructureRecoveryFailed(f"{which} Cartan subspace is trivial")
    try:
        struct = recover_matrix_units([AlgElement(S.algebra, Q[:, k]) for k in range(Q.shape[1])],
                                      seed=seed, tol=None if tol is None else max(tol, 1e-12))
    except WeakHopfError as exc:
        raise StructureRecoveryFailed(str(exc)) from exc
    if not W.inv.is_standard:
        struct = struct.transported(W.standardization.backward)
    data = CartanData(which, struct)
    counit = counit_target(W) if which == "target" else counit_source(W)
    tol_ = _tol(W, tol)
    for k in range(W.dim):
        x = counit(W.algebra.basis(k))
        if struct.distance(x) > 1e3 * tol_ * max(1.0, x.norm()):
            raise StructureRecoveryFailed(f"counit range leaves the {which} Cartan subalgebra")
    return data


def cartan_target(W, tol=None, seed=0):
    return _cartan(W, "target", tol, seed)


def cartan_source(W, tol=None, seed=0):
    return _cartan(W, "source", tol, seed)


# --- Haar projection and Haar measure ---------------------------------------


def _solve_unique(H, N, rhs, tol, what):
    """Solve ``H z = 0, N z = rhs`` requiring a unique exact solution."""
    full = np.vstack([H, N])
    b = np.concatenate([np.zeros(H.shape[0], dtype=complex), rhs])
    s = np.linalg.svd(full, compute_uv=False)
    if s.size == 0 or s[0] == 0:
        raise NoSolution(f"{what}: empty system")
    rank = int(np.sum(s > tol * s[0]))
    if rank < full.shape[1]:
        raise NonUniqueSolution(f"{what}: solution space has dimension {full.shape[1] - rank}")
    z = np.linalg.lstsq(full, b, rcond=None)[0]
    r = relative_residual(full @ z - b, b)
    if r > tol:
        raise NoSolution(f"{what}: inconsistent system (residual {r:.3g})")
    return z


def homogeneous_nullity(H, tol):
    s = np.linalg.svd(H, compute_uv=False)
    if s.size == 0 or s[0] == 0:
        return H.shape[1]
    return H.shape[1] - int(np.sum(s > tol * s[0]))


def _haar_projection_system(W):
    d = W.dim
    Et = counit_target(W).matrix
    blocks = [W.K - np.eye(d)]
    # a p - eps_t(a) p for every basis a; left multiplication by E_c is M[:, c, :]
    for a in range(d):
        blocks.append(W.M[:, a, :] - np.einsum("c,kcb->kb", Et[:, a], W.M))
    return np.vstack(blocks), Et, W.algebra.unit().vec


def haar_projection(W, tol=None):
    """The Haar projection: unique solution of its characterizing linear relations."""
    tol = _tol(W, tol)
    H, Et, one = _haar_projection_system(W)
    p = AlgElement(W.algebra, _solve_unique(H, Et, one, tol, "Haar projection"))
    if (p * p - p).norm() > tol * max(1.0, p.norm()) or (W.adjoint(p) - p).norm() > tol * max(1.0, p.norm()):
        raise NoSolution("Haar projection solution is not a self-adjoint idempotent")
    return p


def haar_projection_residuals(W, p, tol=None):
    tol = _tol(W, tol)
    A = W.algebra
    Et = counit_target(W)
    absorb = [(A.basis(a) * p - Et(A.basis(a)) * p).vec for a in range(A.dim)]
    return StructureReport(
        {
            "kappa_fixed": relative_residual((W.kappa(p) - p).vec, p.vec),
            "counit_target_unit": relative_residual((Et(p) - A.unit()).vec, A.unit().vec),
            "absorption": relative_residual(np.array(absorb), p.vec),
            "idempotent": relative_residual((p * p - p).vec, p.vec),
            "self_adjoint": relative_residual((W.adjoint(p) - p).vec, p.vec),
        },
        tol,
        "Haar projection",
    )


def _haar_measure_system(W):
    """Rows acting on the coefficient vector of a functional."""
    d, M, K, Dx = W.dim, W.M, W.K, W.D
    A = W.algebra
    kappa_rows = K.T - np.eye(d)
    C1 = to_product(W.delta_one.vec, A, A)
    # (i (x) phi)((1 (x) y) Delta(x)) - kappa((i (x) phi)(Delta(y)(1 (x) x))), compressed by QR
    R = np.zeros((0, d), dtype=complex)
    for x in range(d):
        lhs = np.einsum("ab,cyb->yac", Dx[x], M)
        rhs = np.einsum("pa,yab,cb->ypc", K, Dx, M[:, :, x])
        rows = (lhs - rhs).reshape(-1, d)
        R = np.linalg.qr(np.vstack([R, rows]), mode="r")
    return np.vstack([kappa_rows, R]), C1, A.unit().vec


def haar_measure(W, tol=None):
    """The normalized Haar measure as a functional ``A -> C``."""
    tol = _tol(W, tol)
    H, C1, one = _haar_measure_system(W)
    phi = _solve_unique(H, C1, one, tol, "Haar measure")
    functional = LinearMapRep(W.algebra, C, phi[None, :])
    G = _gram(W, functional)
    lam = np.linalg.eigvalsh((G + G.conj().T) / 2)[0]
    if relative_residual(G - G.conj().T, G) > tol or lam <= tol:
        raise NotPositive("Haar measure is not a faithful positive functional")
    return functional


def _gram(W, functional):
    """Gram matrix ``phi(x* y)`` in standardized coordinates."""
    S = W.standardized()
    A = W.algebra
    phi = functional.matrix[0]
    if not W.inv.is_standard:
        phi = phi @ W.standardization.backward.matrix
    L = np.einsum("k,kxa->xa", phi, S.M)
    return L[adjoint_matrix(A), :]


def haar_measure_residuals(W, phi, tol=None):
    tol = _tol(W, tol)
    H, C1, one = _haar_measure_system(W)
    v = phi.matrix[0]
    G = _gram(W, phi)
    d = W.dim
    return StructureReport(
        {
            "kappa_invariant": relative_residual(H[:d] @ v, v),
            "normalization": relative_residual(C1 @ v - one, one),
            "strong_invariance": relative_residual(H[d:] @ v, v),
            "positive": max(0.0, -np.linalg.eigvalsh((G + G.conj().T) / 2)[0]),
        },
        tol,
        "Haar measure",
    )


def is_weak_kac(W, tol=None, phi=None):
    """``(kappa involutive, Haar measure tracial)``; the two must agree."""
    tol = _tol(W, tol)
    d = W.dim
    K2 = W.K @ W.K
    kappa_involutive = relative_residual(K2 - np.eye(d), np.eye(d)) <= tol
    phi = haar_measure(W, tol) if phi is None else phi
    L = np.einsum("k,kxy->xy", phi.matrix[0], W.M)
    phi_tracial = relative_residual(L - L.T, L) <= tol
    return bool(kappa_involutive), bool(phi_tracial)


def antipode_inverse(W, tol=None):
    tol = _tol(W, tol)
    s = np.linalg.svd(W.K, compute_uv=False)
    if s[-1] < tol * max(1.0, s[0]):
        raise Singular("antipode is not invertible")
    return LinearMapRep(W.algebra, W.algebra, np.linalg.inv(W.K))


# --- (kappa (x) i) Delta(1) as a separating element of the base -----------


def f_element(W):
    """``(kappa (x) i) Delta(1)`` as an element of ``A (x) A``."""
    v = apply_tensor(W.kappa, LinearMapRep.identity(W.algebra), W.delta_one.vec)
    return AlgElement(W.AA, v)


def base_tensor_coordinates(W, cartan, x):
    """Coordinates of ``x in A_t (x) A_t`` in the recovered base, plus the membership residual."""
    A = W.algebra
    N = cartan.algebra
    U = cartan.structure.embedding.matrix
    P = cartan.structure._pinv
    Cx = to_product(x.vec, A, A)
    Fa = P @ Cx @ P.T
    resid = relative_residual(U @ Fa @ U.T - Cx, Cx)
    return AlgElement(tensor(N, N), from_product(Fa, N, N)), resid


def check_f_separating(W, cartan=None, tol=None):
    tol = _tol(W, tol)
    cartan = cartan_target(W, tol) if cartan is None else cartan
    f, resid = base_tensor_coordinates(W, cartan, f_element(W))
    rep = is_separating(cartan.algebra, f, tol)
    rep.residuals = {"in_base_tensor": resid, **rep.residuals}
    rep.title = "f separating for the target base"
    return rep


def generated_base_algebra(W, tol=None, cartans=None):
    """Orthonormal basis of the algebra generated by ``A_t`` and ``A_s``."""
    At, As = cartans if cartans is not None else (cartan_target(W, tol), cartan_source(W, tol))
    return subalgebra_generated(At.elements() + As.elements())


def cartan_angles(P, Q):
    """Principal angles (radians) between two subspaces given by orthonormal columns."""
    if P.shape[1] != Q.shape[1]:
        return np.array([np.pi / 2])
    # sines from the orthogonal residual; arccos of cosines is unstable near 0
    R = Q - P @ (P.conj().T @ Q)
    s = np.linalg.svd(R, compute_uv=False)
    return np.sort(np.arcsin(np.clip(s, 0.0, 1.0)))


def orthonormal(Q):
    return orthonormal_span(Q.T)
