"""Rescaling a quantum groupoid with a nonabelian base by admissible elements."""
import numpy as np

from weakhopf import (
    admissible_from_base,
    canonical_element,
    check_axioms,
    deform,
    deform_to_involutive_base,
    is_weak_kac,
    op_tensor_wha,
    sample_admissible,
    spectra_distinct,
    spectrum_invariant,
)
from weakhopf.deform import base_involutivity_residual

W = op_tensor_wha((2,))
c = canonical_element(W)
print("base", c.cartan.blocks, "canonical element spectrum", c.spectrum)

# %% k = diag(2, 2/3) in base coordinates: k^-1 q has eigenvalues 1/2, 3/2 (mean 1)
Nt = c.cartan.algebra
k = admissible_from_base(W, Nt.element([np.diag([2.0, 2.0 / 3.0])]))
D = deform(W, k)          # postconditions are verified before returning
print("deformed axioms ok:", check_axioms(D).passed)
print("new canonical element spectrum", spectrum_invariant(D))
print("kappa^2 - id on the bases:", base_involutivity_residual(D))
print("Kac flags:", is_weak_kac(D))

# %% deforming by the canonical element undoes the twist on the bases
B = deform_to_involutive_base(D)
print("after normalization:", spectrum_invariant(B), base_involutivity_residual(B))

# %% a family of pairwise non-isomorphic structures, one per seed
seen = []
for seed in range(12):
    s = spectrum_invariant(deform(W, sample_admissible(W, seed)))
    if all(spectra_distinct(s, t) for t in seen):
        seen.append(s)
    print(f"seed {seed:2d}  spectrum {np.round(s, 4)}")
print(len(seen), "distinct invariants")
