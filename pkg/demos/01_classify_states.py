"""Which states power the universality transformation?

Every density matrix falls into exactly one of two classes: universal
resources (tr[rho rho*] = 0, usable to simulate any unitary gate under
free real orthogonal operations) and zero resources (everything else,
usable only for real orthogonal targets).  There is no middle ground,
no matter how much imaginarity a state carries.
"""

import numpy as np

from imaginarity import (
    BlochVector,
    DensityMatrix,
    classify,
    classify_bloch,
    from_pure,
    gen_max_imaginary,
    gen_random_density,
    plus_i,
    state_of,
)

# The golden unit |+i> = (|0> + i|1>)/sqrt(2) is the canonical universal
# resource: overlap with its conjugate is 0 and the imaginarity fidelity is 1.
report = classify(from_pure(plus_i()))
print("|+i>          :", report.verdict, "  F_I =", report.imag_fidelity)

# A state that is 99.9% |+i> is already a zero resource -- exact simulation
# is unforgiving.
almost = 0.999 * from_pure(plus_i()).matrix + 0.001 * np.eye(2) / 2
report = classify(DensityMatrix(almost))
print("0.999 |+i> mix:", report.verdict, "  overlap =", f"{report.overlap_conj:.2e}")

# Random full-support states are always zero resources...
for seed in range(3):
    rho = gen_random_density(4, seed)
    print(f"random dim 4  : {classify(rho).verdict}")

# ...while the constructed maximally imaginary family is always universal,
# in any dimension and rank.
for dim, rank in [(2, 1), (6, 3), (8, 2)]:
    rho = gen_max_imaginary(dim, rank, seed=7)
    print(f"max-imag {dim},{rank} : {classify(rho).verdict}")

# For a single qubit the universal resources are exactly the two poles of
# the Bloch y axis: |+i><+i| and |-i><-i|.
for b in [BlochVector(0, 1, 0), BlochVector(0, -1, 0), BlochVector(1, 0, 0), BlochVector(0, 0.999, 0)]:
    print(f"Bloch ({b.x:+.3f}, {b.y:+.3f}, {b.z:+.3f}):", classify_bloch(b))

# The Bloch shortcut agrees with the full matrix classifier everywhere.
rng = np.random.default_rng(0)
v = rng.standard_normal(3)
v *= rng.random() / np.linalg.norm(v)
b = BlochVector(*v)
assert classify_bloch(b) == classify(state_of(b)).verdict
print("shortcut and full classifier agree on a random interior point")
