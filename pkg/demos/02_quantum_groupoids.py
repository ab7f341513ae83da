"""Three families of small quantum groupoids and what the library computes from them."""
import numpy as np

from weakhopf import (
    FiniteGroupoid,
    canonical_element,
    cartan_source,
    cartan_target,
    check_axioms,
    check_f_separating,
    function_algebra_wha,
    haar_measure,
    haar_projection,
    is_weak_kac,
    op_tensor_wha,
    pair_groupoid_wha,
)

np.set_printoptions(precision=3, suppress=True)

structures = {
    "pair groupoid, 3 objects": pair_groupoid_wha(3),
    "functions on Z/2 + pair(2)": function_algebra_wha(
        FiniteGroupoid.cyclic(2).disjoint_union(FiniteGroupoid.pair(2))),
    "M2^o (x) M2": op_tensor_wha((2,)),
}

for name, W in structures.items():
    print(f"\n== {name}: blocks {W.algebra.blocks}")
    rep = check_axioms(W)
    print("axioms:", "ok" if rep.passed else rep.failures())
    At, As = cartan_target(W), cartan_source(W)
    print("target base blocks", At.blocks, "source base blocks", As.blocks)
    print("f = (kappa (x) i)Delta(1) separating:", check_f_separating(W).passed)
    p = haar_projection(W)
    phi = haar_measure(W)
    print("Haar projection trace", round(float(np.real(sum(np.trace(m) for m in p.mats))), 6))
    print("Haar measure of 1:", phi.scalar_value(W.algebra.unit()).real)
    print("canonical element spectrum", canonical_element(W).spectrum)
    print("(involutive antipode, tracial Haar measure) =", is_weak_kac(W))

# the pair groupoid's Haar projection is the all-1/n matrix
print(haar_projection(structures["pair groupoid, 3 objects"]).mats[0].real)
