import numpy as np
import pytest

from weakhopf import (
    BlockAlgebra,
    FiniteGroupoid,
    center_expectation,
    function_algebra_wha,
    op_tensor_wha,
    pair_groupoid_wha,
)

BASES = {
    "C": (1,),
    "C2": (1, 1),
    "M2": (2,),
    "M3": (3,),
    "M2+C": (2, 1),
    "M2+M3": (2, 3),
}


def groupoids():
    return {
        "Z2": FiniteGroupoid.cyclic(2),
        "Z3": FiniteGroupoid.cyclic(3),
        "pair2": FiniteGroupoid.pair(2),
        "discrete2": FiniteGroupoid.discrete(2),
        "Z2+pair2": FiniteGroupoid.cyclic(2).disjoint_union(FiniteGroupoid.pair(2)),
    }


def build_instances():
    out = {f"pair{n}": pair_groupoid_wha(n) for n in (1, 2, 3)}
    for name in ("Z2", "Z3", "pair2", "Z2+pair2"):
        out[f"fun-{name}"] = function_algebra_wha(groupoids()[name])
    for name, blocks in (("C", (1,)), ("C2", (1, 1)), ("M2", (2,))):
        out[f"op-{name}"] = op_tensor_wha(blocks)
    return out


_CACHE = {}


def instances():
    if not _CACHE:
        _CACHE.update(build_instances())
    return _CACHE


@pytest.fixture(scope="session")
def all_instances():
    return instances()


@pytest.fixture(scope="session")
def op_m2():
    return instances()["op-M2"]


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture(params=list(BASES), ids=list(BASES))
def base(request):
    return BlockAlgebra(BASES[request.param])


def normalized_gauge(N, rng, positive=False):
    """Random gauge with central expectation 1 (strictly positive on request)."""
    g = N.random_positive(rng) if positive else N.random_element(rng)
    z = center_expectation(g)
    if positive:
        mats = [m * len(m) / np.trace(m).real for m in g.mats]
    else:
        mats = [m - zm + np.eye(len(m)) for m, zm in zip(g.mats, z.mats)]
    return N.element(mats)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(RESULTS):
        ok, detail = RESULTS[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
