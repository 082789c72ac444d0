"""Doubly excited resonances from complex rotation.

Each level is computed in growing bases until its energy stops moving.
The last level shows the locator: 6_6 lies below the N = 5 threshold and is
picked as the eigenvalue nearest an estimate instead of by series rank.
"""
from hkhelium.quantum import ConvergenceControls, converged_level
from hkhelium.tables import reference

qm = reference("QM")
jobs = [("eZe_symmetric", 1, 1), ("eZe_symmetric", 4, 4), ("eZe_antisymmetric", 2, 3), ("Zee_singlet", 3, 3), ("Zee_singlet", 3, 4)]
for fam, N, n in jobs:
    r = converged_level(N, n, fam)
    print(f"{fam:18s} {N}_{n}: {r.binding_energy:.5f} (table {qm[(fam, N, n)]}), basis {r.basis_size}, {r.elapsed:.1f} s")

ranked = converged_level(6, 6, "eZe_symmetric")
located = converged_level(6, 6, "eZe_symmetric", ConvergenceControls(estimate=0.092))
print(f"eZe 6_6 by rank: {ranked.binding_energy:.5f}; near the estimate 0.092: {located.binding_energy:.5f} (table {qm[('eZe_symmetric', 6, 6)]})")
