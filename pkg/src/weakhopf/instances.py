"""Concrete C*-quantum groupoids used as fixtures and as deformation inputs.

Every generator checks its own output against the axiom suite before
returning it.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np

from .algebra import BlockAlgebra, C, LinearMapRep, tensor, tensor_elem
from .errors import InvalidGroupoid, PostconditionViolated
from .hopf import WeakHopf, check_axioms


@dataclass(frozen=True)
class FiniteGroupoid:
    """A finite groupoid given by its arrows.

    ``compose[(g, h)]`` is ``g h`` (first ``h``, then ``g``) and is defined exactly
    when ``source[g] == target[h]``.
    """

    objects: tuple
    arrows: tuple
    source: dict
    target: dict
    compose: dict
    inverse: dict
    identity: dict

    def composable(self, g, h):
        return self.source[g] == self.target[h]

    def validate(self):
        arrows = set(self.arrows)
        if len(arrows) != len(self.arrows):
            raise InvalidGroupoid("duplicate arrow names")
        for g in self.arrows:
            if self.source[g] not in self.objects or self.target[g] not in self.objects:
                raise InvalidGroupoid(f"arrow {g!r} has unknown endpoints")
        for g, h in product(self.arrows, repeat=2):
            defined = (g, h) in self.compose
            if defined != self.composable(g, h):
                raise InvalidGroupoid(f"composition of {g!r}, {h!r} defined={defined}")
            if defined:
                gh = self.compose[(g, h)]
                if gh not in arrows or self.source[gh] != self.source[h] or self.target[gh] != self.target[g]:
                    raise InvalidGroupoid(f"bad composite {g!r}{h!r}")
        for g, h, k in product(self.arrows, repeat=3):
            if self.composable(g, h) and self.composable(h, k) and \
                    self.compose[(self.compose[(g, h)], k)] != self.compose[(g, self.compose[(h, k)])]:
                raise InvalidGroupoid(f"associativity fails at {g!r},{h!r},{k!r}")
        for x in self.objects:
            u = self.identity[x]
            if self.source[u] != x or self.target[u] != x:
                raise InvalidGroupoid(f"identity at {x!r} is not a loop")
        for g in self.arrows:
            if self.compose[(self.identity[self.target[g]], g)] != g or \
                    self.compose[(g, self.identity[self.source[g]])] != g:
                raise InvalidGroupoid(f"identities do not act neutrally on {g!r}")
            gi = self.inverse[g]
            if self.source[gi] != self.target[g]:
                raise InvalidGroupoid(f"s(g^-1) != t(g) for {g!r}")
            if self.compose[(gi, g)] != self.identity[self.source[g]] or \
                    self.compose[(g, gi)] != self.identity[self.target[g]]:
                raise InvalidGroupoid(f"{gi!r} is not inverse to {g!r}")
        return self

    @property
    def identities(self):
        return set(self.identity.values())

    @classmethod
    def from_group(cls, elements, op, name="G"):
        """A group as a one-object groupoid; ``op(a, b)`` is the product ``ab``."""
        elements = tuple(elements)
        obj = name
        table = {(a, b): op(a, b) for a in elements for b in elements}
        e = next(a for a in elements if all(table[(a, b)] == b for b in elements))
        inverse = {a: next(b for b in elements if table[(a, b)] == e) for a in elements}
        return cls((obj,), elements, {a: obj for a in elements}, {a: obj for a in elements},
                   table, inverse, {obj: e}).validate()

    @classmethod
    def cyclic(cls, n):
        return cls.from_group(range(n), lambda a, b: (a + b) % n, name=f"Z{n}")

    @classmethod
    def pair(cls, n):
        """The pair groupoid on ``n`` objects: one arrow ``(i, j): j -> i`` per ordered pair."""
        objs = tuple(range(n))
        arrows = tuple((i, j) for i in objs for j in objs)
        compose = {((i, j), (k, l)): (i, l) for (i, j) in arrows for (k, l) in arrows if j == k}
        return cls(objs, arrows, {a: a[1] for a in arrows}, {a: a[0] for a in arrows}, compose,
                   {(i, j): (j, i) for (i, j) in arrows}, {i: (i, i) for i in objs}).validate()

    @classmethod
    def discrete(cls, n):
        """``n`` objects and only identity arrows."""
        objs = tuple(range(n))
        return cls(objs, objs, {x: x for x in objs}, {x: x for x in objs},
                   {(x, x): x for x in objs}, {x: x for x in objs}, {x: x for x in objs}).validate()

    def disjoint_union(self, other):
        def tag(side, v):
            return (side, v)

        objs = tuple(tag(0, x) for x in self.objects) + tuple(tag(1, x) for x in other.objects)
        arrows = tuple(tag(0, g) for g in self.arrows) + tuple(tag(1, g) for g in other.arrows)
        src, tgt, comp, inv, ident = {}, {}, {}, {}, {}
        for side, G in ((0, self), (1, other)):
            for g in G.arrows:
                src[tag(side, g)] = tag(side, G.source[g])
                tgt[tag(side, g)] = tag(side, G.target[g])
                inv[tag(side, g)] = tag(side, G.inverse[g])
            for (g, h), gh in G.compose.items():
                comp[(tag(side, g), tag(side, h))] = tag(side, gh)
            for x, u in G.identity.items():
                ident[tag(side, x)] = tag(side, u)
        return FiniteGroupoid(objs, arrows, src, tgt, comp, inv, ident).validate()


def _verified(W, tol=None):
    rep = check_axioms(W, tol)
    if not rep.passed:
        raise PostconditionViolated(f"generated structure fails {rep.failures()}")
    return W


def pair_groupoid_wha(n, check=True):
    """``M_n`` with ``Delta(e_ij) = e_ij (x) e_ij``, ``kappa(e_ij) = e_ji``, ``eps(e_ij) = 1``."""
    A = BlockAlgebra((n,), f"pair groupoid M{n}")
    AA = tensor(A, A)
    delta = np.zeros((AA.dim, A.dim), dtype=complex)
    kappa = np.zeros((A.dim, A.dim), dtype=complex)
    for i, j in product(range(1, n + 1), repeat=2):
        k = A.index(0, i - 1, j - 1)
        delta[:, k] = tensor_elem(A.e(i, j), A.e(i, j)).vec
        kappa[A.index(0, j - 1, i - 1), k] = 1.0
    W = WeakHopf(A, LinearMapRep(A, AA, delta), LinearMapRep(A, A, kappa),
                 LinearMapRep(A, C, np.ones((1, A.dim))), label=f"pair_groupoid({n})",
                 metadata={"generator": "pair-groupoid", "n": n})
    return _verified(W) if check else W


def function_algebra_from_table(arrows, compose, inverse, identities, label="", check=True):
    """``C^arrows`` with the coproduct dual to a partial multiplication table."""
    arrows = list(arrows)
    pos = {g: k for k, g in enumerate(arrows)}
    A = BlockAlgebra((1,) * len(arrows), label)
    AA = tensor(A, A)
    delta = np.zeros((AA.dim, A.dim), dtype=complex)
    for (h, k), g in compose.items():
        delta[:, pos[g]] += tensor_elem(A.basis(pos[h]), A.basis(pos[k])).vec
    kappa = np.zeros((A.dim, A.dim), dtype=complex)
    for g in arrows:
        kappa[pos[inverse[g]], pos[g]] = 1.0
    eps = np.array([[1.0 if g in identities else 0.0 for g in arrows]])
    W = WeakHopf(A, LinearMapRep(A, AA, delta), LinearMapRep(A, A, kappa), LinearMapRep(A, C, eps),
                 label=label)
    return _verified(W) if check else W


def function_algebra_wha(G, check=True):
    """Functions on the arrows of ``G``: ``Delta(delta_g) = sum_{hk=g} delta_h (x) delta_k``."""
    G.validate()
    W = function_algebra_from_table(G.arrows, G.compose, G.inverse, G.identities,
                                    label=f"function algebra on {len(G.arrows)} arrows", check=check)
    return W.with_maps(metadata={"generator": "function-groupoid", "arrows": len(G.arrows)})


def op_tensor_wha(B, check=True):
    """The quantum groupoid on ``B^o (x) B``; the opposite leg is realized by transposition.

    On realized units ``U (x) V``: ``Delta = sum_g sum_ij 1/n_g (U (x) e_ij) (x) (e_ij (x) V)``,
    ``kappa(U (x) V) = V^T (x) U^T`` and ``eps(U (x) V) = n_g tr(U^T V)``.
    """
    if isinstance(B, (tuple, list)):
        B = BlockAlgebra(tuple(B))
    A = tensor(B, B)
    A = BlockAlgebra(A.blocks, f"op-tensor of {B}")
    AA = tensor(A, A)
    units = [B.basis(k) for k in range(B.dim)]
    labels = B.basis_labels()
    pairs = [(gamma, B.e(i, j, gamma)) for gamma, n in enumerate(B.blocks)
             for i in range(1, n + 1) for j in range(1, n + 1)]
    delta = np.zeros((AA.dim, A.dim), dtype=complex)
    kappa = np.zeros((A.dim, A.dim), dtype=complex)
    eps = np.zeros((1, A.dim), dtype=complex)
    transpose = {k: B.index(g, j, i) for k, (g, i, j) in enumerate(labels)}
    for a, b in product(range(B.dim), repeat=2):
        col = tensor_elem(units[a], units[b]).vec
        k = int(np.flatnonzero(col)[0])
        U, V = units[a], units[b]
        acc = AA.zero()
        for gamma, eij in pairs:
            n = B.blocks[gamma]
            acc = acc + (1.0 / n) * tensor_elem(tensor_elem(U, eij), tensor_elem(eij, V))
        delta[:, k] = acc.vec
        kappa[:, k] = tensor_elem(units[transpose[b]], units[transpose[a]]).vec
        if a == b:
            eps[0, k] = B.blocks[labels[a][0]]
    W = WeakHopf(A, LinearMapRep(A, AA, delta), LinearMapRep(A, A, kappa), LinearMapRep(A, C, eps),
                 label=f"op_tensor({list(B.blocks)})",
                 metadata={"generator": "op-tensor", "blocks": list(B.blocks)})
    return _verified(W) if check else W
