"""Finite-dimensional C*-algebras presented as direct sums of full matrix blocks.

Every algebra is stored through its canonical basis of matrix units
``e^g_{i,j}``, enumerated block by block in the given order and row-major
inside a block.  Elements are flat complex coordinate vectors in that basis and
linear maps are dense matrices between such coordinate spaces.

Tensor products order their blocks lexicographically by block pairs and use the
Kronecker product inside a block, so ``tensor(tensor(A, B), C)`` and
``tensor(A, tensor(B, C))`` have identical canonical bases.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cache, cached_property
from math import isqrt
from typing import NamedTuple

import numpy as np
from scipy.linalg import block_diag, null_space

from .errors import (
    DegenerateRandomization,
    NotAnAlgebra,
    NotHermitian,
    NotPositive,
    ShapeMismatch,
    Singular,
)

MAX_RETRIES = 8


def default_tol(dim, norm=1.0):
    """Residual tolerance scaled by operand norm and dimension."""
    return 1e-9 * max(1.0, float(norm)) * dim


@dataclass(frozen=True)
class BlockAlgebra:
    blocks: tuple
    label: str = field(default="", compare=False)

    def __post_init__(self):
        blocks = tuple(int(n) for n in self.blocks)
        if not blocks or any(n < 1 for n in blocks):
            raise ShapeMismatch(f"invalid block sizes {self.blocks!r}")
        object.__setattr__(self, "blocks", blocks)

    @cached_property
    def dim(self):
        return sum(n * n for n in self.blocks)

    @cached_property
    def offsets(self):
        out = [0]
        for n in self.blocks:
            out.append(out[-1] + n * n)
        return tuple(out)

    @property
    def is_abelian(self):
        return all(n == 1 for n in self.blocks)

    def index(self, gamma, i, j):
        """Canonical basis position of the unit ``e^gamma_{i,j}`` (0-based)."""
        n = self.blocks[gamma]
        return self.offsets[gamma] + i * n + j

    def basis_labels(self):
        return [(g, i, j) for g, n in enumerate(self.blocks) for i in range(n) for j in range(n)]

    def element(self, mats):
        mats = list(mats)
        if len(mats) != len(self.blocks):
            raise ShapeMismatch(f"expected {len(self.blocks)} blocks, got {len(mats)}")
        parts = []
        for n, m in zip(self.blocks, mats):
            m = np.asarray(m, dtype=complex)
            if m.shape != (n, n):
                raise ShapeMismatch(f"block of shape {m.shape}, expected {(n, n)}")
            parts.append(m.ravel())
        return AlgElement(self, np.concatenate(parts))

    def from_vec(self, vec):
        return AlgElement(self, vec)

    def zero(self):
        return AlgElement(self, np.zeros(self.dim, dtype=complex))

    def unit(self):
        return self.element([np.eye(n) for n in self.blocks])

    def scalar(self, c):
        return c * self.unit()

    def basis(self, k):
        v = np.zeros(self.dim, dtype=complex)
        v[k] = 1.0
        return AlgElement(self, v)

    def e(self, i, j, gamma=0):
        """Matrix unit ``e^gamma_{i,j}`` with 1-based ``i, j`` as in the literature."""
        return self.basis(self.index(gamma, i - 1, j - 1))

    def central_projection(self, gamma):
        mats = [np.eye(n) if g == gamma else np.zeros((n, n)) for g, n in enumerate(self.blocks)]
        return self.element(mats)

    def random_element(self, rng):
        v = rng.standard_normal(self.dim) + 1j * rng.standard_normal(self.dim)
        return AlgElement(self, v)

    def random_positive(self, rng, floor=0.1):
        """Random strictly positive element with spectrum bounded below by ``floor``."""
        x = self.random_element(rng)
        return x.adj() * x + floor * self.unit()

    def __str__(self):
        if self.label:
            return self.label
        return " + ".join("C" if n == 1 else f"M{n}" for n in self.blocks)


C = BlockAlgebra((1,), "C")


class AlgElement:
    """An element of a :class:`BlockAlgebra`, one complex matrix per block."""

    __slots__ = ("algebra", "vec")

    def __init__(self, algebra, vec):
        vec = np.array(vec, dtype=complex).ravel()
        if vec.shape != (algebra.dim,):
            raise ShapeMismatch(f"vector of length {vec.size} for algebra of dim {algebra.dim}")
        vec.flags.writeable = False
        self.algebra = algebra
        self.vec = vec

    @property
    def mats(self):
        A = self.algebra
        return [self.vec[A.offsets[g]:A.offsets[g + 1]].reshape(n, n) for g, n in enumerate(A.blocks)]

    def _check(self, other):
        if not isinstance(other, AlgElement):
            return False
        if other.algebra != self.algebra:
            raise ShapeMismatch(f"elements of {self.algebra} and {other.algebra}")
        return True

    def __add__(self, other):
        self._check(other)
        return AlgElement(self.algebra, self.vec + other.vec)

    def __sub__(self, other):
        self._check(other)
        return AlgElement(self.algebra, self.vec - other.vec)

    def __neg__(self):
        return AlgElement(self.algebra, -self.vec)

    def __mul__(self, other):
        if isinstance(other, AlgElement):
            return mul(self, other)
        return AlgElement(self.algebra, self.vec * other)

    def __rmul__(self, c):
        return AlgElement(self.algebra, c * self.vec)

    def __truediv__(self, c):
        return AlgElement(self.algebra, self.vec / c)

    def adj(self):
        """Standard adjoint: blockwise conjugate transpose."""
        return self.algebra.element([m.conj().T for m in self.mats])

    def norm(self):
        return float(np.linalg.norm(self.vec))

    def allclose(self, other, atol=1e-9):
        self._check(other)
        return bool(np.linalg.norm(self.vec - other.vec) <= atol)

    def __repr__(self):
        return f"AlgElement({self.algebra}, {np.array2string(self.vec, precision=4)})"


def mul(x, y):
    x._check(y)
    return x.algebra.element([a @ b for a, b in zip(x.mats, y.mats)])


def commutator(x, y):
    return mul(x, y) - mul(y, x)


def hermitian_residual(x):
    return (x - x.adj()).norm()


def opposite_embed(x):
    """Blockwise transpose, realizing the opposite algebra inside the same blocks."""
    return x.algebra.element([m.T for m in x.mats])


def trace_canonical(x):
    """Sum of the unnormalized matrix traces of the blocks."""
    return complex(sum(np.trace(m) for m in x.mats))


def center_expectation(x):
    """Conditional expectation onto the center: ``sum_g tr(x p^g)/n_g p^g``."""
    A = x.algebra
    return A.element([np.trace(m) / n * np.eye(n) for n, m in zip(A.blocks, x.mats)])


# --- linear maps -----------------------------------------------------------


@dataclass(frozen=True, eq=False)
class LinearMapRep:
    """Linear map between block algebras as a dense matrix over canonical bases."""

    domain: BlockAlgebra
    codomain: BlockAlgebra
    matrix: np.ndarray

    def __post_init__(self):
        m = np.array(self.matrix, dtype=complex)
        if m.shape != (self.codomain.dim, self.domain.dim):
            raise ShapeMismatch(
                f"matrix {m.shape} does not map dim {self.domain.dim} -> {self.codomain.dim}"
            )
        m.flags.writeable = False
        object.__setattr__(self, "matrix", m)

    def __call__(self, x):
        if x.algebra != self.domain:
            raise ShapeMismatch(f"map on {self.domain} applied to element of {x.algebra}")
        return AlgElement(self.codomain, self.matrix @ x.vec)

    def __matmul__(self, other):
        if other.codomain != self.domain:
            raise ShapeMismatch("composition of incompatible maps")
        return LinearMapRep(other.domain, self.codomain, self.matrix @ other.matrix)

    def __sub__(self, other):
        return LinearMapRep(self.domain, self.codomain, self.matrix - other.matrix)

    @classmethod
    def identity(cls, A):
        return cls(A, A, np.eye(A.dim))

    def scalar_value(self, x):
        """For functionals into C: the complex number assigned to ``x``."""
        return complex(self(x).vec[0])


@cache
def _tensor_perm(blocks_a, blocks_b):
    """Canonical index in A(x)B of ``E_a (x) E_b``, listed in Kronecker order ``a*dB + b``."""
    A, B = BlockAlgebra(blocks_a), BlockAlgebra(blocks_b)
    perm = np.empty(A.dim * B.dim, dtype=np.intp)
    off = 0
    for g, na in enumerate(A.blocks):
        for d, nb in enumerate(B.blocks):
            size = na * nb
            i, j, k, l = np.meshgrid(np.arange(na), np.arange(na), np.arange(nb), np.arange(nb),
                                     indexing="ij")
            canon = off + (i * nb + k) * size + (j * nb + l)
            a = A.offsets[g] + i * na + j
            b = B.offsets[d] + k * nb + l
            perm[(a * B.dim + b).ravel()] = canon.ravel()
            off += size * size
    perm.flags.writeable = False
    return perm


@cache
def _tensor_cached(blocks_a, blocks_b):
    return tuple(na * nb for na in blocks_a for nb in blocks_b)


def tensor(A, B):
    label = f"({A})(x)({B})" if A.label or B.label else ""
    return BlockAlgebra(_tensor_cached(A.blocks, B.blocks), label)


def to_product(v, A, B):
    """Coefficient matrix ``C[a, b]`` of a tensor-algebra vector in the ``E_a (x) E_b`` basis."""
    return np.asarray(v)[..., _tensor_perm(A.blocks, B.blocks)].reshape(
        np.shape(v)[:-1] + (A.dim, B.dim))


def from_product(C, A, B):
    C = np.asarray(C)
    lead = C.shape[:-2]
    out = np.empty(lead + (A.dim * B.dim,), dtype=complex)
    out[..., _tensor_perm(A.blocks, B.blocks)] = C.reshape(lead + (A.dim * B.dim,))
    return out


def tensor_elem(x, y):
    A, B = x.algebra, y.algebra
    return tensor(A, B).element([np.kron(a, b) for a in x.mats for b in y.mats])


def tensor_map(S, T):
    dom = tensor(S.domain, T.domain)
    cod = tensor(S.codomain, T.codomain)
    pd = _tensor_perm(S.domain.blocks, T.domain.blocks)
    pc = _tensor_perm(S.codomain.blocks, T.codomain.blocks)
    M = np.zeros((cod.dim, dom.dim), dtype=complex)
    M[np.ix_(pc, pd)] = np.kron(S.matrix, T.matrix)
    return LinearMapRep(dom, cod, M)


def apply_tensor(S, T, v):
    """Apply ``S (x) T`` to canonical coordinates ``v`` (trailing axis) without forming it."""
    C = to_product(v, S.domain, T.domain)
    return from_product(S.matrix @ C @ T.matrix.T, S.codomain, T.codomain)


def flip(A):
    AA = tensor(A, A)
    idx = np.arange(AA.dim)
    swapped = from_product(np.swapaxes(to_product(idx, A, A), -1, -2), A, A).real.astype(np.intp)
    M = np.zeros((AA.dim, AA.dim))
    M[idx, swapped] = 1.0
    return LinearMapRep(AA, AA, M)


def multiplication_map(A):
    """The linear map ``m: A (x) A -> A``, ``x (x) y -> xy``."""
    M = structure_constants(A).reshape(A.dim, A.dim * A.dim)
    AA = tensor(A, A)
    out = np.empty((A.dim, AA.dim), dtype=complex)
    out[:, _tensor_perm(A.blocks, A.blocks)] = M
    return LinearMapRep(AA, A, out)


@cache
def _structure_constants(blocks):
    A = BlockAlgebra(blocks)
    M = np.zeros((A.dim, A.dim, A.dim))
    for g, n in enumerate(A.blocks):
        i, j, l = np.meshgrid(np.arange(n), np.arange(n), np.arange(n), indexing="ij")
        o = A.offsets[g]
        M[o + i * n + l, o + i * n + j, o + j * n + l] = 1.0
    M.flags.writeable = False
    return M


def structure_constants(A):
    """``M[c, a, b]``: coefficient of ``E_c`` in ``E_a E_b``."""
    return _structure_constants(A.blocks)


def left_mult(x):
    """Matrix of ``y -> x y``."""
    return block_diag(*[np.kron(m, np.eye(m.shape[0])) for m in x.mats])


def right_mult(x):
    """Matrix of ``y -> y x``."""
    return block_diag(*[np.kron(np.eye(m.shape[0]), m.T) for m in x.mats])


def adjoint_matrix(A):
    """Permutation realizing the standard adjoint on coordinates (to be composed with conj)."""
    perm = np.empty(A.dim, dtype=np.intp)
    for g, n in enumerate(A.blocks):
        for i in range(n):
            for j in range(n):
                perm[A.index(g, i, j)] = A.index(g, j, i)
    return perm


# --- spectral calculus ------------------------------------------------------


def _hermitian_mats(x, tol=None):
    tol = default_tol(x.algebra.dim, x.norm()) if tol is None else tol
    if hermitian_residual(x) > tol * max(1.0, x.norm()):
        raise NotHermitian(f"element is not Hermitian (residual {hermitian_residual(x):.3g})")
    return [(m + m.conj().T) / 2 for m in x.mats]


def spectrum(x, tol=None):
    """Eigenvalues with multiplicity, ascending."""
    vals = [np.linalg.eigvalsh(m) for m in _hermitian_mats(x, tol)]
    return np.sort(np.concatenate(vals))


def is_positive(x, tol=None):
    tol = default_tol(x.algebra.dim, x.norm()) if tol is None else tol
    try:
        return bool(spectrum(x, tol)[0] >= -tol)
    except NotHermitian:
        return False


def is_strictly_positive(x, tol=None):
    tol = default_tol(x.algebra.dim, x.norm()) if tol is None else tol
    try:
        return bool(spectrum(x, tol)[0] > tol)
    except NotHermitian:
        return False


def hermitian_function(x, f, tol=None):
    out = []
    for m in _hermitian_mats(x, tol):
        w, V = np.linalg.eigh(m)
        out.append((V * f(w)) @ V.conj().T)
    return x.algebra.element(out)


def sqrt_positive(x, tol=None):
    tol = default_tol(x.algebra.dim, x.norm()) if tol is None else tol
    if not is_positive(x, tol):
        raise NotPositive("square root of a non-positive element")
    return hermitian_function(x, lambda w: np.sqrt(np.clip(w, 0.0, None)), tol)


def invert(x, tol=None):
    tol = default_tol(x.algebra.dim, x.norm()) if tol is None else tol
    out = []
    for m in x.mats:
        if np.linalg.svd(m, compute_uv=False).min() < tol:
            raise Singular("element is not invertible")
        out.append(np.linalg.inv(m))
    return x.algebra.element(out)


# --- involutions ------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class GaugedInvolution:
    """The involution ``x -> g x* g^-1``; ``gauge=None`` is the standard one."""

    algebra: BlockAlgebra
    gauge: AlgElement | None = None

    def __post_init__(self):
        if self.gauge is not None and self.gauge.algebra != self.algebra:
            raise ShapeMismatch("gauge lives in a different algebra")

    @classmethod
    def standard(cls, A):
        return cls(A, None)

    @property
    def is_standard(self):
        return self.gauge is None

    @cached_property
    def gauge_inverse(self):
        return invert(self.gauge)

    def adjoint(self, x):
        if self.gauge is None:
            return x.adj()
        return self.gauge * x.adj() * self.gauge_inverse

    def gauge_or_unit(self):
        return self.algebra.unit() if self.gauge is None else self.gauge


def adjoint(x, inv=None):
    return x.adj() if inv is None else inv.adjoint(x)


class Standardization(NamedTuple):
    """``forward(x) = g^-1/2 x g^1/2`` and its inverse."""

    forward: LinearMapRep
    backward: LinearMapRep


def standardize(inv):
    """Isomorphism carrying the gauged involution to the standard one."""
    A = inv.algebra
    if inv.gauge is None:
        ident = LinearMapRep.identity(A)
        return Standardization(ident, ident)
    g = inv.gauge
    if not is_strictly_positive(g):
        raise NotPositive("gauge must be strictly positive")
    h = hermitian_function(g, np.sqrt)
    hi = hermitian_function(g, lambda w: 1.0 / np.sqrt(w))
    fwd = left_mult(hi) @ right_mult(h)
    bwd = left_mult(h) @ right_mult(hi)
    return Standardization(LinearMapRep(A, A, fwd), LinearMapRep(A, A, bwd))


# --- structure recovery -----------------------------------------------------


@dataclass(frozen=True, eq=False)
class SubalgebraStructure:
    """A *-subalgebra ``S`` of ``ambient`` with recovered matrix units.

    ``embedding`` sends the canonical basis of the abstract ``algebra`` to the
    concrete matrix units inside ``ambient``; ``basis`` is an orthonormal basis
    of ``S`` under the Hilbert-Schmidt pairing.
    """

    ambient: BlockAlgebra
    algebra: BlockAlgebra
    embedding: LinearMapRep
    basis: np.ndarray

    def embed(self, y):
        return self.embedding(y)

    @cached_property
    def _pinv(self):
        return np.linalg.pinv(self.embedding.matrix)

    def coordinates(self, x):
        """Abstract coordinates of an ambient element lying in ``S``."""
        return AlgElement(self.algebra, self._pinv @ x.vec)

    def transported(self, psi):
        """The same structure pushed through an ambient automorphism ``psi``."""
        U = psi.matrix @ self.embedding.matrix
        return SubalgebraStructure(
            self.ambient, self.algebra, LinearMapRep(self.algebra, self.ambient, U),
            orthonormal_span(U.T),
        )

    def unit(self):
        return self.embed(self.algebra.unit())

    def distance(self, x):
        """Hilbert-Schmidt distance from ``x`` to the subspace."""
        Q = self.basis
        return float(np.linalg.norm(x.vec - Q @ (Q.conj().T @ x.vec)))

    def units(self):
        return [self.embed(self.algebra.basis(k)) for k in range(self.algebra.dim)]


def orthonormal_span(vectors, tol=None):
    V = np.atleast_2d(np.asarray(vectors, dtype=complex))
    if V.size == 0:
        return np.zeros((V.shape[-1] if V.ndim == 2 else 0, 0), dtype=complex)
    U, s, _ = np.linalg.svd(V.T, full_matrices=False)
    if s.size == 0 or s[0] == 0:
        return U[:, :0]
    tol = 1e-10 * s[0] * max(V.shape) if tol is None else tol
    return U[:, s > tol]


def _spectral_groups(m_blocks, A, threshold=0.5, gap=1e-6):
    """Spectral projections (as elements of ``A``) of a Hermitian element, eigenvalues > threshold."""
    pairs = []
    for g, m in enumerate(m_blocks):
        w, V = np.linalg.eigh(m)
        for k in range(len(w)):
            pairs.append((w[k], g, V[:, k]))
    pairs = [p for p in pairs if p[0] > threshold]
    pairs.sort(key=lambda p: p[0])
    groups = []
    scale = max([abs(p[0]) for p in pairs], default=1.0)
    for p in pairs:
        if groups and p[0] - groups[-1][-1][0] <= gap * scale:
            groups[-1].append(p)
        else:
            groups.append([p])
    projections = []
    for grp in groups:
        mats = [np.zeros((n, n), dtype=complex) for n in A.blocks]
        for _, g, v in grp:
            mats[g] += np.outer(v, v.conj())
        projections.append(A.element(mats))
    return projections


def _first_support(x):
    d = np.concatenate([np.abs(np.diag(m)) for m in x.mats])
    return int(np.argmax(d > 0.5 * d.max()))


def _random_hermitian_in(Q, A, rng, shift_unit):
    c = rng.standard_normal(Q.shape[1]) + 1j * rng.standard_normal(Q.shape[1])
    h = AlgElement(A, Q @ c)
    h = (h + h.adj()) / 2
    return h + (h.norm() + 1.0) * shift_unit


def recover_matrix_units(span, seed=0, tol=None, max_retries=MAX_RETRIES):
    """Recover block sizes and concrete matrix units of a *-subalgebra given by a spanning set.

    Raises ``NotAnAlgebra`` when the span is not closed under products and the
    adjoint, and ``DegenerateRandomization`` when every randomized split hit an
    eigenvalue collision.
    """
    span = list(span)
    if not span:
        raise NotAnAlgebra("empty span")
    A = span[0].algebra
    Q = orthonormal_span([x.vec for x in span])
    s = Q.shape[1]
    if s == 0:
        raise NotAnAlgebra("span is zero")
    tol = default_tol(A.dim) if tol is None else tol
    elems = [AlgElement(A, Q[:, k]) for k in range(s)]

    def off_span(v):
        return np.linalg.norm(v - Q @ (Q.conj().T @ v))

    worst = max(off_span(mul(x, y).vec) for x in elems for y in elems)
    worst = max(worst, max(off_span(x.adj().vec) for x in elems))
    if worst > tol:
        raise NotAnAlgebra(f"span not closed under product/adjoint (residual {worst:.3g})")

    # unit of S: u with u x = x for all basis x
    Lu = np.stack([np.concatenate([mul(b, x).vec for x in elems]) for b in elems], axis=1)
    rhs = np.concatenate([x.vec for x in elems])
    cu = np.linalg.lstsq(Lu, rhs, rcond=None)[0]
    unit_s = AlgElement(A, Q @ cu)
    unit_s = (unit_s + unit_s.adj()) / 2

    # center of S
    comm = np.stack([np.concatenate([commutator(b, x).vec for x in elems]) for b in elems], axis=1)
    # absolute threshold: for a commutative span ``comm`` is pure roundoff
    smax = np.linalg.norm(comm, 2) if comm.size else 0.0
    Z = null_space(comm, rcond=1e-9 * max(1.0, smax) / smax) if smax > 0 else np.eye(len(elems))
    zdim = Z.shape[1]
    QZ = Q @ Z

    for attempt in range(max_retries + 1):
        rng = np.random.default_rng(seed + attempt)
        h = _random_hermitian_in(QZ, A, rng, unit_s)
        centrals = _spectral_groups(h.mats, A)
        if len(centrals) != zdim:
            continue
        blocks = []
        ok = True
        for P in centrals:
            QP = orthonormal_span([mul(P, x).vec for x in elems])
            m = isqrt(QP.shape[1])
            if m * m != QP.shape[1]:
                ok = False
                break
            hp = _random_hermitian_in(QP, A, rng, P)
            minimal = _spectral_groups(hp.mats, A)
            if len(minimal) != m:
                ok = False
                break
            minimal.sort(key=_first_support)
            sub = [AlgElement(A, QP[:, k]) for k in range(QP.shape[1])]
            col = [minimal[0]]
            for i in range(1, m):
                cands = [minimal[i] * b * minimal[0] for b in sub]
                y = max(cands, key=lambda c: c.norm())
                c = trace_canonical(y.adj() * y).real / trace_canonical(minimal[0]).real
                col.append(y / np.sqrt(c))
            units = [[col[i] * col[j].adj() for j in range(m)] for i in range(m)]
            blocks.append((m, _first_support(P), units))
        if not ok:
            continue
        blocks.sort(key=lambda b: (b[0], b[1]))
        abstract = BlockAlgebra(tuple(b[0] for b in blocks))
        U = np.stack([u.vec for _, _, units in blocks for row in units for u in row], axis=1)
        emb = LinearMapRep(abstract, A, U)
        return SubalgebraStructure(A, abstract, emb, Q)
    raise DegenerateRandomization(f"eigenvalue collisions in {max_retries + 1} attempts")


def subalgebra_generated(elements, tol=None, max_rounds=64):
    """Orthonormal basis of the unital algebra generated by ``elements`` (products to stabilization)."""
    elements = list(elements)
    A = elements[0].algebra
    Q = orthonormal_span([A.unit().vec] + [x.vec for x in elements], tol)
    for _ in range(max_rounds):
        els = [AlgElement(A, Q[:, k]) for k in range(Q.shape[1])]
        prods = [mul(x, y).vec for x in els for y in els]
        Qn = orthonormal_span([Q[:, k] for k in range(Q.shape[1])] + prods, tol)
        if Qn.shape[1] == Q.shape[1]:
            return Qn
        Q = Qn
    raise NotAnAlgebra("closure did not stabilize")


def as_elements(A, Q):
    return [AlgElement(A, Q[:, k]) for k in range(Q.shape[1])]


__all__ = [
    "AlgElement",
    "BlockAlgebra",
    "C",
    "GaugedInvolution",
    "LinearMapRep",
    "Standardization",
    "SubalgebraStructure",
    "adjoint",
    "apply_tensor",
    "center_expectation",
    "commutator",
    "default_tol",
    "flip",
    "from_product",
    "hermitian_function",
    "invert",
    "is_positive",
    "is_strictly_positive",
    "left_mult",
    "mul",
    "multiplication_map",
    "opposite_embed",
    "orthonormal_span",
    "recover_matrix_units",
    "right_mult",
    "spectrum",
    "sqrt_positive",
    "standardize",
    "structure_constants",
    "subalgebra_generated",
    "tensor",
    "tensor_elem",
    "tensor_map",
    "to_product",
    "trace_canonical",
]
