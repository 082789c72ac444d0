"""Follow one collinear-helium trajectory through electron-nucleus collisions.

The regularized integrator passes through each binary collision.  Energy
stays constant and the monodromy matrix stays symplectic even while it
grows exponentially on a chaotic orbit.
"""
import numpy as np

from hkhelium.dynamics import Configuration, PhasePoint, advance_to_physical_times, hamiltonian_energy

J = np.block([[np.zeros((2, 2)), np.eye(2)], [-np.eye(2), np.zeros((2, 2))]])

config = Configuration("eZe")
start = PhasePoint(2.0, 2.3, 0.1, -0.2)
times = np.linspace(0.0, 30.0, 7)
rec = advance_to_physical_times(start, config, times)

print(f"start {start}, energy {rec.E:.6f}, status after t = {times[-1]:g}: {rec.status}")
print(f"{'t':>5} {'q1':>8} {'q2':>8} {'energy drift':>13} {'|M|':>10} {'symplectic defect / |M|^2':>27}")
for t, x, M in zip(rec.times[: rec.n_valid], rec.points, rec.monodromies):
    E = hamiltonian_energy(PhasePoint.from_array(x), config)
    norm = np.linalg.norm(M)
    defect = np.linalg.norm(M.T @ J @ M - J) / max(1.0, norm) ** 2
    print(f"{t:5.1f} {x[0]:8.4f} {x[1]:8.4f} {E - rec.E:13.2e} {norm:10.3e} {defect:27.2e}")

# the symmetric start (2, 2) at rest is a triple-collision orbit
sym = advance_to_physical_times(PhasePoint(2.0, 2.0, 0.0, 0.0), config, np.arange(0, 5.0001, 0.05))
print(f"symmetric start stops with status {sym.status!r} at t = {sym.times[sym.n_valid - 1]:.2f}")
