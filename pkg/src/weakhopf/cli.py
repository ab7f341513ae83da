"""``wha``: validate, analyze, deform, generate and compare weak Hopf documents.

Exit codes: 0 success, 1 error, 2 validation failure, 3 provably non-isomorphic.
Reports go to stdout as JSON; diagnostics go to stderr. Commands that emit a
document write it to ``-o`` (default stdout); when the document occupies stdout
the report is sent to stderr instead, so commands can be piped.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from . import io as wio
from .deform import (
    admissible_from_base,
    canonical_element,
    deform,
    deformation_report,
    sample_admissible,
    spectra_distinct,
)
from .errors import WeakHopfError
from .hopf import (
    cartan_source,
    cartan_target,
    check_axioms,
    haar_measure,
    haar_projection,
    is_weak_kac,
)
from .instances import (
    FiniteGroupoid,
    function_algebra_wha,
    op_tensor_wha,
    pair_groupoid_wha,
)

EXIT_OK, EXIT_ERROR, EXIT_FAIL, EXIT_DISTINCT = 0, 1, 2, 3


def _tol(args):
    if getattr(args, "tol", None) is not None:
        return args.tol
    env = os.environ.get("WHA_TOL")
    return float(env) if env else None


def _read(path):
    if path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def _load(path):
    return wio.loads(_read(path))


def _emit_json(obj, stream=None):
    stream = sys.stdout if stream is None else stream
    stream.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")
    stream.flush()


def _write_document(W, out):
    data = wio.save(W)
    if out in (None, "-"):
        sys.stdout.buffer.write(data + b"\n")
        sys.stdout.flush()
        return sys.stderr
    with open(out, "wb") as fh:
        fh.write(data)
    return sys.stdout


def _pairs(vec):
    return [[float(z.real), float(z.imag)] for z in np.asarray(vec).ravel()]


# --- commands ---------------------------------------------------------------


def cmd_validate(args):
    W = _load(args.file)
    rep = check_axioms(W, _tol(args))
    _emit_json(rep.to_dict())
    if not rep.passed:
        print(f"failing axioms: {', '.join(rep.failures())}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def analyze(W, tol=None):
    At, As = cartan_target(W, tol), cartan_source(W, tol)
    p = haar_projection(W, tol)
    phi = haar_measure(W, tol)
    c = canonical_element(W, tol, At)
    kac = is_weak_kac(W, tol, phi)
    return {
        "label": W.label,
        "blocks": list(W.algebra.blocks),
        "target_blocks": list(At.blocks),
        "source_blocks": list(As.blocks),
        "haar_projection": _pairs(p.vec),
        "haar_measure": _pairs(phi.matrix[0]),
        "canonical_element": {"blocks": list(c.q_t.algebra.blocks), "vec": _pairs(c.q_t.vec)},
        "spectrum_invariant": [float(x) for x in c.spectrum],
        "weak_kac": {"involutive_antipode": kac[0], "tracial_haar_measure": kac[1]},
    }


def cmd_analyze(args):
    _emit_json(analyze(_load(args.file), _tol(args)))
    return EXIT_OK


def _k_from_file(W, path, tol, c):
    obj = json.loads(_read(path))
    coords = obj.get("coordinates", "ambient")
    if coords == "base":
        k_t = wio.element_from_json(obj, c.cartan.algebra)
        return admissible_from_base(W, k_t, tol, c).k
    if coords != "ambient":
        raise WeakHopfError(f"unknown coordinates {coords!r} (use 'ambient' or 'base')")
    return wio.element_from_json(obj, W.algebra)


def cmd_deform(args):
    W = _load(args.file)
    tol = _tol(args)
    c = canonical_element(W, tol)
    meta = {}
    if args.canonical:
        k = c.q
        meta["k"] = "canonical"
    elif args.k is not None:
        k = _k_from_file(W, args.k, tol, c)
        meta["k"] = "file"
    else:
        k = sample_admissible(W, args.seed, tol, c).k
        meta["k"] = f"sample:{args.seed}"
    out = deform(W, k, tol, verify=False, c=c)
    rep = deformation_report(W, out, k, tol, c)
    out = out.with_maps(metadata={**out.metadata, "last_deformation": meta["k"]})
    stream = _write_document(out, args.output)
    _emit_json(rep.to_dict(), stream)
    return EXIT_OK if rep.passed else EXIT_FAIL


def parse_groupoid(spec):
    """``cyclic:N``, ``pair:N``, ``discrete:N`` joined by ``+``, or a JSON file."""
    if os.path.exists(spec):
        with open(spec) as fh:
            return groupoid_from_json(json.load(fh))
    parts = []
    for term in spec.split("+"):
        kind, _, n = term.strip().partition(":")
        try:
            n = int(n)
        except ValueError as exc:
            raise WeakHopfError(f"bad groupoid term {term!r}") from exc
        make = {"cyclic": FiniteGroupoid.cyclic, "pair": FiniteGroupoid.pair,
                "discrete": FiniteGroupoid.discrete}.get(kind)
        if make is None or n < 1:
            raise WeakHopfError(f"bad groupoid term {term!r}")
        parts.append(make(n))
    G = parts[0]
    for H in parts[1:]:
        G = G.disjoint_union(H)
    return G


def groupoid_from_json(obj):
    """``{"objects", "arrows": [{"name","source","target"}], "compose": [[g,h,gh]], "inverse", "identity"}``."""
    try:
        arrows = tuple(a["name"] for a in obj["arrows"])
        src = {a["name"]: a["source"] for a in obj["arrows"]}
        tgt = {a["name"]: a["target"] for a in obj["arrows"]}
        comp = {(g, h): gh for g, h, gh in obj["compose"]}
        G = FiniteGroupoid(tuple(obj["objects"]), arrows, src, tgt, comp,
                           dict(obj["inverse"]), dict(obj["identity"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise WeakHopfError(f"malformed groupoid file: {exc}") from exc
    return G.validate()


def cmd_generate(args):
    if args.kind == "pair-groupoid":
        W = pair_groupoid_wha(args.n)
    elif args.kind == "function-groupoid":
        W = function_algebra_wha(parse_groupoid(args.spec))
        W = W.with_maps(metadata={**W.metadata, "spec": args.spec})
    else:
        W = op_tensor_wha(tuple(args.blocks))
    stream = _write_document(W, args.output)
    if stream is sys.stdout:
        _emit_json({"label": W.label, "blocks": list(W.algebra.blocks), "dim": W.dim})
    return EXIT_OK


def cmd_invariant(args):
    tol = _tol(args)
    sa = canonical_element(_load(args.file_a), tol).spectrum
    sb = canonical_element(_load(args.file_b), tol).spectrum
    distinct = spectra_distinct(sa, sb, args.sep)
    _emit_json({
        "spectrum_a": [float(x) for x in sa],
        "spectrum_b": [float(x) for x in sb],
        "separation": args.sep,
        "non_isomorphic": distinct,
    })
    return EXIT_DISTINCT if distinct else EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(prog="wha", description="Finite weak Hopf C*-algebra toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    def tol_arg(sp):
        sp.add_argument("--tol", type=float, default=None, help="residual tolerance (env WHA_TOL)")

    v = sub.add_parser("validate", help="run the axiom suite")
    v.add_argument("file", nargs="?", default="-")
    tol_arg(v)
    v.set_defaults(func=cmd_validate)

    a = sub.add_parser("analyze", help="bases, Haar data, canonical element, Kac flags")
    a.add_argument("file", nargs="?", default="-")
    tol_arg(a)
    a.set_defaults(func=cmd_analyze)

    d = sub.add_parser("deform", help="deform by an admissible element")
    d.add_argument("file", nargs="?", default="-")
    how = d.add_mutually_exclusive_group(required=True)
    how.add_argument("--canonical", action="store_true", help="use k = q")
    how.add_argument("--k", metavar="FILE", help="element JSON {blocks, vec, coordinates}")
    how.add_argument("--sample", action="store_true", help="random admissible k")
    d.add_argument("--seed", type=int, default=0)
    d.add_argument("-o", "--output", default="-")
    tol_arg(d)
    d.set_defaults(func=cmd_deform)

    g = sub.add_parser("generate", help="write an instance document")
    gsub = g.add_subparsers(dest="kind", required=True)
    pg = gsub.add_parser("pair-groupoid")
    pg.add_argument("--n", type=int, required=True)
    fg = gsub.add_parser("function-groupoid")
    fg.add_argument("spec", help="e.g. cyclic:3, pair:2, cyclic:2+pair:2, or a JSON file")
    ot = gsub.add_parser("op-tensor")
    ot.add_argument("--blocks", type=int, nargs="+", required=True)
    for sp in (pg, fg, ot):
        sp.add_argument("-o", "--output", default="-")
    g.set_defaults(func=cmd_generate)

    i = sub.add_parser("invariant", help="compare spectrum invariants")
    i.add_argument("file_a")
    i.add_argument("file_b")
    i.add_argument("--sep", type=float, default=1e-6)
    tol_arg(i)
    i.set_defaults(func=cmd_invariant)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (WeakHopfError, OSError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
