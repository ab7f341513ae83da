"""JSON documents for block algebras and weak Hopf structures.

Complex numbers are stored as ``[re, im]`` pairs; Python's float ``repr`` is the
shortest string that round-trips, so save/load is bit-exact.
"""
from __future__ import annotations

import json

import numpy as np

from .algebra import AlgElement, BlockAlgebra, C, GaugedInvolution, LinearMapRep, tensor
from .errors import ParseError, ShapeMismatch, UnsupportedVersion
from .hopf import WeakHopf

FORMAT_VERSION = 1


def _pairs(a):
    a = np.asarray(a, dtype=complex)
    return [[float(z.real), float(z.imag)] for z in a.ravel()]


def _matrix_out(m):
    m = np.asarray(m, dtype=complex)
    return [_pairs(row) for row in m]


def _complex(obj, what):
    try:
        arr = np.asarray(obj, dtype=float)
    except (TypeError, ValueError) as exc:
        raise ParseError(f"{what}: expected numbers") from exc
    if arr.ndim < 1 or arr.shape[-1] != 2:
        raise ParseError(f"{what}: expected [re, im] pairs")
    return arr[..., 0] + 1j * arr[..., 1]


def _matrix_in(obj, shape, what):
    m = _complex(obj, what)
    if m.shape != shape:
        raise ShapeMismatch(f"{what}: shape {m.shape}, expected {shape}")
    return m


def element_to_json(x):
    return {"blocks": list(x.algebra.blocks), "vec": _pairs(x.vec)}


def element_from_json(obj, A=None):
    try:
        blocks = tuple(int(n) for n in obj["blocks"])
        vec = _complex(obj["vec"], "element")
    except (KeyError, TypeError) as exc:
        raise ParseError("element needs 'blocks' and 'vec'") from exc
    A = BlockAlgebra(blocks) if A is None else A
    if tuple(A.blocks) != blocks or vec.shape != (A.dim,):
        raise ShapeMismatch("element does not fit the algebra")
    return AlgElement(A, vec)


def to_document(W):
    A = W.algebra
    return {
        "format_version": FORMAT_VERSION,
        "algebra": {"blocks": list(A.blocks), "label": W.label or A.label},
        "gauge": "identity" if W.inv.is_standard else _pairs(W.gauge.vec),
        "delta": _matrix_out(W.delta.matrix),
        "kappa": _matrix_out(W.kappa.matrix),
        "epsilon": _pairs(W.eps.matrix[0]),
        "metadata": W.metadata,
    }


def from_document(doc):
    if not isinstance(doc, dict):
        raise ParseError("document must be a JSON object")
    version = doc.get("format_version")
    if version != FORMAT_VERSION:
        raise UnsupportedVersion(f"format_version {version!r} (supported: {FORMAT_VERSION})")
    try:
        alg = doc["algebra"]
        blocks = tuple(int(n) for n in alg["blocks"])
        label = str(alg.get("label", ""))
        gauge, delta, kappa, eps = doc["gauge"], doc["delta"], doc["kappa"], doc["epsilon"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"missing or malformed field: {exc}") from exc
    if not blocks or any(n < 1 for n in blocks):
        raise ShapeMismatch("blocks must be positive integers")
    A = BlockAlgebra(blocks, label)
    AA = tensor(A, A)
    d = A.dim
    D = _matrix_in(delta, (AA.dim, d), "delta")
    K = _matrix_in(kappa, (d, d), "kappa")
    E = _matrix_in(eps, (d,), "epsilon").reshape(1, d)
    if gauge == "identity":
        inv = GaugedInvolution.standard(A)
    else:
        inv = GaugedInvolution(A, AlgElement(A, _matrix_in(gauge, (d,), "gauge")))
    meta = doc.get("metadata") or {}
    return WeakHopf(A, LinearMapRep(A, AA, D), LinearMapRep(A, A, K), LinearMapRep(A, C, E), inv,
                    label=label, metadata=dict(meta))


def dumps(W):
    return json.dumps(to_document(W), separators=(",", ":"))


def loads(data):
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    return from_document(doc)


def save(W, path=None):
    """Serialize ``W``; writes to ``path`` when given, returns the bytes."""
    data = dumps(W).encode("utf-8")
    if path is not None:
        with open(path, "wb") as fh:
            fh.write(data)
    return data


def load(src):
    """Load from bytes/str payload or a file path."""
    if isinstance(src, (bytes, bytearray)):
        return loads(bytes(src))
    if isinstance(src, str) and src.lstrip().startswith("{"):
        return loads(src)
    try:
        with open(src, "rb") as fh:
            return loads(fh.read())
    except OSError as exc:
        raise ParseError(f"cannot read {src}: {exc}") from exc
