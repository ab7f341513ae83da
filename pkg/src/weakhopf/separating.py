"""Separating elements of a finite-dimensional C*-algebra ``N``.

Elements of ``N (x) N`` are plain :class:`AlgElement` objects of ``tensor(N, N)``.
Whenever a product "in N^o (x) N" is needed, the first leg is transposed,
the product is taken in the ordinary algebra and the first leg is transposed
back (:func:`op_product`).
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import (
    AlgElement,
    LinearMapRep,
    center_expectation,
    default_tol,
    flip,
    hermitian_function,
    is_strictly_positive,
    multiplication_map,
    tensor,
    tensor_elem,
    tensor_map,
)
from .errors import GaugeNotNormalized, NotPositive, NotSeparating
from .report import StructureReport, relative_residual


@dataclass(frozen=True, eq=False)
class SeparatingElement:
    """A separating element ``f = (1 (x) g) e`` together with its gauge ``g``."""

    N: object
    f: AlgElement
    g: AlgElement


def _tol(N, tol):
    return default_tol(tensor(N, N).dim) if tol is None else tol


def transpose_map(N):
    perm = np.array([N.index(g, j, i) for g, i, j in N.basis_labels()])
    M = np.zeros((N.dim, N.dim))
    M[perm, np.arange(N.dim)] = 1.0
    return LinearMapRep(N, N, M)


def opposite_first_leg(N):
    """``tau (x) id`` on ``N (x) N``: an isomorphism ``N^o (x) N -> N (x) N``."""
    return tensor_map(transpose_map(N), LinearMapRep.identity(N))


def op_product(N, x, y):
    """Product of ``x, y`` in ``N^o (x) N``."""
    T = opposite_first_leg(N)
    return T(T(x) * T(y))


def one_tensor(N, a):
    return tensor_elem(N.unit(), a)


def tensor_one(N, a):
    return tensor_elem(a, N.unit())


def mult_map(N, x):
    return multiplication_map(N)(x)


def _e_value(N):
    NN = tensor(N, N)
    out = NN.zero()
    for gamma, n in enumerate(N.blocks):
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                out = out + (1.0 / n) * tensor_elem(N.e(i, j, gamma), N.e(j, i, gamma))
    return out


def symmetric_e(N):
    """The symmetric separating element ``sum 1/n_g e_ij^o (x) e_ji``."""
    return SeparatingElement(N, _e_value(N), N.unit())


def is_separating(N, f, tol=None):
    """Report on ``f(a^o (x) 1) = f(1 (x) a)`` over the basis and ``m(f) = 1``."""
    tol = _tol(N, tol)
    diffs, refs = [], []
    for k in range(N.dim):
        a = N.basis(k)
        lhs = op_product(N, f, tensor_one(N, a))
        rhs = op_product(N, f, one_tensor(N, a))
        diffs.append(lhs.vec - rhs.vec)
        refs.append(rhs.vec)
    m = mult_map(N, f)
    return StructureReport(
        {
            "flip_relation": relative_residual(np.array(diffs), np.array(refs)),
            "multiplication": relative_residual((m - N.unit()).vec, N.unit().vec),
        },
        tol,
        "separating",
    )


def separating_from_gauge(N, g, tol=None):
    tol = _tol(N, tol)
    if (center_expectation(g) - N.unit()).norm() > tol:
        raise GaugeNotNormalized("the central expectation of the gauge must be 1")
    e = _e_value(N)
    return SeparatingElement(N, op_product(N, one_tensor(N, g), e), g)


def gauge_from_separating(N, f, tol=None):
    """Recover ``g = sum f'_i f_i`` from ``f = sum f_i (x) f'_i``."""
    if not is_separating(N, f, tol):
        raise NotSeparating("element is not separating")
    return multiplication_map(N)(flip(N)(f))


def solve_gauge(N, f):
    """Least-squares ``g`` with ``f = (1 (x) g) e``; returns ``(g, residual)``."""
    e = _e_value(N)
    cols = [op_product(N, one_tensor(N, N.basis(k)), e).vec for k in range(N.dim)]
    M = np.stack(cols, axis=1)
    c = np.linalg.lstsq(M, f.vec, rcond=None)[0]
    g = AlgElement(N, c)
    return g, relative_residual(M @ c - f.vec, f.vec)


def has_gauge(N, f, tol=None):
    """Whether ``f = (1 (x) g) e`` for some ``g`` with central expectation 1."""
    tol = _tol(N, tol)
    g, res = solve_gauge(N, f)
    return res <= tol and (center_expectation(g) - N.unit()).norm() <= tol


def check_projection_characterizations(N, f, tol=None):
    tol = _tol(N, tol)
    e = _e_value(N)
    fe = op_product(N, f, e)
    ef = op_product(N, e, f)
    ff = op_product(N, f, f)
    return StructureReport(
        {
            "fe_equals_f": relative_residual((fe - f).vec, f.vec),
            "ef_equals_e": relative_residual((ef - e).vec, e.vec),
            "idempotent": relative_residual((ff - f).vec, f.vec),
        },
        tol,
        "projection characterizations",
    )


def op_adjoint(N, x):
    """Adjoint in the natural C*-structure of ``N^o (x) N``."""
    T = opposite_first_leg(N)
    return T(T(x).adj())


def gauged_adjoint_op(N, x, g):
    """Adjoint of ``x`` for the gauge ``(g^1/2)^o (x) g^1/2`` on ``N^o (x) N``."""
    if not is_strictly_positive(g):
        raise NotPositive("gauge must be strictly positive")
    h = hermitian_function(g, np.sqrt)
    hi = hermitian_function(g, lambda w: 1.0 / np.sqrt(w))
    H, Hi = tensor_elem(h, h), tensor_elem(hi, hi)
    return op_product(N, op_product(N, H, op_adjoint(N, x)), Hi)


def orthogonality_report(N, f, g, tol=None):
    tol = _tol(N, tol)
    rep = check_projection_characterizations(N, f, tol)
    adj = gauged_adjoint_op(N, f, g)
    rep.residuals["gauged_self_adjoint"] = relative_residual((adj - f).vec, f.vec)
    rep.title = "orthogonality in gauged structure"
    return rep


def is_orthogonal_in_gauged(N, f, g, tol=None):
    """``f`` is an orthogonal projection with the direction of ``e`` for the gauged structure."""
    return orthogonality_report(N, f, g, tol).passed


def e_injectivity_singular_values(N):
    """Singular values of ``n -> e(1 (x) n)``; all nonzero iff the map is injective."""
    e = _e_value(N)
    M = np.stack([op_product(N, e, one_tensor(N, N.basis(k))).vec for k in range(N.dim)], axis=1)
    return np.linalg.svd(M, compute_uv=False)
