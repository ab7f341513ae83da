"""Acceptance suite: one test (or group) per criterion, each at its stated tolerance.

Every criterion records a verdict in ``RESULTS``; the terminal summary prints
one PASS/FAIL line per criterion, and each test prints its own line as well.
"""
import json
import subprocess
import sys

import mutants
import numpy as np
import pytest
from conftest import BASES, instances, normalized_gauge

from weakhopf import (
    AXIOMS,
    BlockAlgebra,
    canonical_element,
    canonical_properties,
    cartan_source,
    cartan_target,
    check_axioms,
    check_f_separating,
    check_projection_characterizations,
    deform,
    deform_to_involutive_base,
    gauge_from_separating,
    haar_measure,
    haar_projection,
    is_orthogonal_in_gauged,
    is_separating,
    is_weak_kac,
    load,
    mult_map,
    pair_groupoid_wha,
    sample_admissible,
    save,
    separating_from_gauge,
    spectra_distinct,
    spectrum_invariant,
    symmetric_e,
)
from weakhopf.algebra import invert
from weakhopf.deform import base_involutivity_residual
from weakhopf.errors import AbelianBaseOnlyTrivial, WeakHopfError
from weakhopf.hopf import (
    base_tensor_coordinates,
    cartan_angles,
    f_element,
    haar_measure_residuals,
    haar_projection_residuals,
)
from weakhopf.separating import (
    e_injectivity_singular_values,
    has_gauge,
    op_adjoint,
    op_product,
    solve_gauge,
)

RESULTS = {}
TOL = 1e-8


def record(n, ok, detail=""):
    prev_ok, prev = RESULTS.get(n, (True, ""))
    ok = prev_ok and ok
    detail = "; ".join(x for x in (prev, detail) if x)
    RESULTS[n] = (ok, detail)
    print(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
    return ok


def rel(x, y):
    return (x - y).norm() / max(1.0, y.norm())


@pytest.fixture(scope="module")
def op_m2():
    return instances()["op-M2"]


@pytest.fixture(scope="module")
def sampled(op_m2):
    """Seeds 0-19 on op_tensor(M2): the admissible k and the deformed structure."""
    c = canonical_element(op_m2, TOL)
    out = []
    for seed in range(20):
        k = sample_admissible(op_m2, seed, TOL, c)
        out.append((seed, k, deform(op_m2, k, TOL, verify=False, c=c)))
    return out


# --- 1 ---------------------------------------------------------------------


@pytest.mark.parametrize("name", list(BASES))
def test_criterion_1_separating_theory(name):
    N = BlockAlgebra(BASES[name])
    rng = np.random.default_rng(1)
    problems = []
    e = symmetric_e(N).f
    NN = e.algebra
    if rel(op_product(N, e, e), e) > TOL:
        problems.append("e not idempotent")
    if rel(op_adjoint(N, e), e) > TOL:
        problems.append("e not self-adjoint")
    if not is_separating(N, e, TOL).passed:
        problems.append("e fails flip relation")
    if e_injectivity_singular_values(N)[-1] <= TOL:
        problems.append("n -> e(1 (x) n) not injective")
    m_gap = max(rel(mult_map(N, op_product(N, e, y)), mult_map(N, y))
                for y in (NN.random_element(rng) for _ in range(100)))
    if m_gap > TOL:
        problems.append(f"m(ey) != m(y) ({m_gap:.2e})")
    disagree = 0
    for k in range(100):
        f = separating_from_gauge(N, normalized_gauge(N, rng), TOL).f
        expected = k < 50
        if not expected:
            f = f + 1e-3 * NN.random_element(rng)
        verdicts = {is_separating(N, f, TOL).passed,
                    check_projection_characterizations(N, f, TOL).passed,
                    has_gauge(N, f, TOL)}
        if verdicts != {expected}:
            disagree += 1
    if disagree:
        problems.append(f"four-way equivalence broken on {disagree}/100")
    wrong = 0
    for _ in range(20):
        g = normalized_gauge(N, rng, positive=True)
        if not is_orthogonal_in_gauged(N, separating_from_gauge(N, g, TOL).f, g, TOL):
            wrong += 1
        g2 = normalized_gauge(N, rng, positive=True)
        if rel(g2, g) > 1e-6 and is_orthogonal_in_gauged(N, separating_from_gauge(N, g2, TOL).f, g, TOL):
            wrong += 1
    if wrong:
        problems.append(f"orthogonality criterion mispredicted {wrong} times")
    ok = record(1, not problems, f"{name}: " + (", ".join(problems) or "ok"))
    assert ok, problems


# --- 2 ---------------------------------------------------------------------


def nonsymmetric_gauges():
    M2 = BlockAlgebra((2,))
    yield "M2, g = 2 e11", M2, 2 * M2.e(1, 1)
    for n in (2, 3, 4):
        N = BlockAlgebra((n,))
        rest = sum((N.e(i, i) for i in range(2, n + 1)), N.zero())
        yield f"M{n}, g = 1 + e11 - sum/(n-1)", N, N.unit() + N.e(1, 1) - (1.0 / (n - 1)) * rest


@pytest.mark.parametrize("label,N,g", list(nonsymmetric_gauges()), ids=lambda v: v if isinstance(v, str) else "")
def test_criterion_2_nonsymmetric_gauges(label, N, g):
    f = separating_from_gauge(N, g, TOL).f
    valid = is_separating(N, f, TOL).passed
    differs = rel(f, symmetric_e(N).f) > TOL
    back = rel(gauge_from_separating(N, f, TOL), g)
    ok = record(2, valid and differs and back <= 1e-10,
                f"{label}: separating={valid} differs_from_e={differs} round_trip={back:.1e}")
    assert ok


# --- 3 ---------------------------------------------------------------------


def test_criterion_3_instances_pass():
    failing = {name: check_axioms(W, TOL).failures() for name, W in instances().items()}
    failing = {k: v for k, v in failing.items() if v}
    ok = record(3, not failing, f"{len(instances())} instances pass" if not failing else f"failing {failing}")
    assert ok


@pytest.mark.parametrize("axiom", AXIOMS)
def test_criterion_3_mutant_fails_exactly_its_check(axiom):
    W = mutants.MUTANTS[axiom]()
    failures = check_axioms(W, TOL).failures()
    ok = failures == [axiom]
    record(3, ok, f"mutant {axiom}: fails {failures}")
    assert ok, f"expected only {axiom}, got {failures}"


# --- 4 ---------------------------------------------------------------------


def structures(sampled):
    out = dict(instances())
    for seed, _, D in sampled[:5]:
        out[f"deformed op-M2 seed {seed}"] = D
    return out


def test_criterion_4_structure_suite(sampled):
    problems = []
    for name, W in structures(sampled).items():
        try:
            p = haar_projection(W, TOL)
            phi = haar_measure(W, TOL)
        except WeakHopfError as exc:  # the report names the instance
            problems.append(f"{name}: {type(exc).__name__}")
            continue
        for rep in (haar_projection_residuals(W, p, TOL), haar_measure_residuals(W, phi, TOL),
                    check_f_separating(W, tol=TOL)):
            if not rep.passed:
                problems.append(f"{name}: {rep.title} {rep.failures()}")
        inv, trac = is_weak_kac(W, TOL, phi)
        if inv != trac:
            problems.append(f"{name}: Kac flags disagree ({inv}, {trac})")
    ok = record(4, not problems, f"{len(structures(sampled))} structures" if not problems else str(problems))
    assert ok


# --- 5 ---------------------------------------------------------------------


@pytest.mark.parametrize("name", sorted(instances()))
def test_criterion_5_canonical_element(name):
    W = instances()[name]
    At = cartan_target(W, TOL)
    f, _ = base_tensor_coordinates(W, At, f_element(W))
    q_a = gauge_from_separating(At.algebra, f, TOL)
    q_b, _ = solve_gauge(At.algebra, f)
    agree = rel(q_a, q_b)
    c = canonical_element(W, TOL, At)
    props = canonical_properties(W, c, TOL)
    one = rel(c.q, W.algebra.unit())
    ok = record(5, agree <= TOL and props.passed and one <= 1e-9,
                f"{name}: algorithms agree {agree:.1e}, properties {props.failures() or 'ok'}, |q-1| {one:.1e}")
    assert ok


# --- 6 ---------------------------------------------------------------------


def test_criterion_6_deformation_closure(op_m2, sampled):
    c = canonical_element(op_m2, TOL)
    At0, As0 = c.cartan, cartan_source(op_m2, TOL)
    worst = {"axioms": 0.0, "angle": 0.0, "canonical": 0.0}
    failing = []
    for seed, k, D in sampled:
        rep = check_axioms(D, TOL)
        worst["axioms"] = max(worst["axioms"], max(rep.residuals.values()))
        At, As = cartan_target(D, TOL), cartan_source(D, TOL)
        angle = max(cartan_angles(At0.basis, At.basis).max(), cartan_angles(As0.basis, As.basis).max())
        worst["angle"] = max(worst["angle"], angle)
        cq = rel(canonical_element(D, TOL, At).q, invert(k.k) * c.q)
        worst["canonical"] = max(worst["canonical"], cq)
        if not rep.passed or angle > TOL or cq > TOL:
            failing.append(seed)
    ok = record(6, not failing, f"20 seeds, worst axiom {worst['axioms']:.1e}, angle {worst['angle']:.1e}, "
                                f"canonical {worst['canonical']:.1e}" + (f", failing seeds {failing}" if failing else ""))
    assert ok


# --- 7 ---------------------------------------------------------------------


def test_criterion_7_involutive_normalization(sampled):
    worst_base, worst_idem = 0.0, 0.0
    for _, _, D in sampled:
        once = deform_to_involutive_base(D, TOL)
        worst_base = max(worst_base, base_involutivity_residual(once, TOL))
        twice = deform_to_involutive_base(once, TOL)
        change = max(np.abs(once.delta.matrix - twice.delta.matrix).max(),
                     np.abs(once.K - twice.K).max(), np.abs(once.e - twice.e).max(),
                     np.abs(once.gauge.vec - twice.gauge.vec).max())
        worst_idem = max(worst_idem, change)
    ok = record(7, worst_base <= TOL and worst_idem <= 1e-10,
                f"|kappa^2 - id| on bases {worst_base:.1e}, second pass change {worst_idem:.1e}")
    assert ok


# --- 8 ---------------------------------------------------------------------


def test_criterion_8_spectrum_witness(sampled):
    spectra = [spectrum_invariant(D, TOL) for _, _, D in sampled]
    classes = []
    for s in spectra:
        if all(spectra_distinct(s, t, 1e-6) for t in classes):
            classes.append(s)
    pairwise = all(spectra_distinct(a, b, 1e-6) for i, a in enumerate(classes) for b in classes[i + 1:])
    try:
        sample_admissible(pair_groupoid_wha(3), 0, TOL)
        abelian_ok = False
    except AbelianBaseOnlyTrivial:
        abelian_ok = True
    ok = record(8, len(classes) >= 10 and pairwise and abelian_ok,
                f"{len(classes)} pairwise distinct multisets from 20 seeds; abelian base reports only k = q: {abelian_ok}")
    assert ok


# --- 9 ---------------------------------------------------------------------


def cli(*args, stdin=b""):
    p = subprocess.run([sys.executable, "-m", "weakhopf.cli", *args], input=stdin, capture_output=True, check=False)
    return p.returncode, p.stdout, p.stderr


def test_criterion_9_cli(tmp_path):
    problems = []
    code, doc, _ = cli("generate", "op-tensor", "--blocks", "2")
    code2, deformed, _ = cli("deform", "--sample", "--seed", "7", stdin=doc)
    code3, report, err = cli("analyze", stdin=deformed)
    flags = json.loads(report)["weak_kac"] if code3 == 0 else None
    if (code, code2, code3) != (0, 0, 0) or flags != {"involutive_antipode": False, "tracial_haar_measure": False}:
        problems.append(f"pipeline flags {flags} codes {(code, code2, code3)} {err[-200:]!r}")
    # golden exit codes
    good, bad, junk = tmp_path / "good.json", tmp_path / "bad.json", tmp_path / "junk.json"
    good.write_bytes(doc)
    W = load(doc)
    save(W.with_maps(kappa=W.kappa.__class__(W.algebra, W.algebra, -W.K)), bad)
    junk.write_text("{")
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    a.write_bytes(deformed)
    b.write_bytes(cli("deform", "--sample", "--seed", "8", stdin=doc)[1])
    golden = {
        ("validate", str(good)): 0,
        ("validate", str(bad)): 2,
        ("validate", str(junk)): 1,
        ("invariant", str(a), str(b)): 3,
        ("invariant", str(a), str(a)): 0,
    }
    for args, want in golden.items():
        got = cli(*args)[0]
        if got != want:
            problems.append(f"{' '.join(args[:1])} exit {got} != {want}")
    # save/load bit-exact
    for name, Wi in instances().items():
        data = save(Wi)
        if save(load(data)) != data:
            problems.append(f"round trip differs on {name}")
    Dw = load(deformed)
    if save(load(save(Dw))) != save(Dw):
        problems.append("round trip differs on deformed document")
    ok = record(9, not problems, "pipeline flags (false, false), exit codes, bit-exact round trip"
                if not problems else str(problems))
    assert ok
