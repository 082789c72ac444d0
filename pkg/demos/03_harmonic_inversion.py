"""Recover line positions from a short, noisy signal.

Two lines 0.008 apart cannot be separated by a Fourier transform of a
signal of length 200.  Harmonic inversion of the time-reversal extended
signal resolves them.
"""
import numpy as np

from hkhelium.spectral import InversionWindow, fourier_spectrum, harmonic_inversion, line_filtering

dt, n = 0.25, 801
t = dt * np.arange(n)
E_true = np.array([-0.2427, -0.2343])
rng = np.random.default_rng(4)
c = (np.array([0.12, 0.08]) * np.exp(-1j * np.outer(t, E_true))).sum(axis=1)
c += 0.2 * np.exp(-0.01 * t) + 2e-3 * (rng.normal(size=n) + 1j * rng.normal(size=n))

grid = np.linspace(-0.30, -0.20, 501)
F = fourier_spectrum((c, dt), grid)
peaks = grid[1:-1][(F[1:-1] > F[:-2]) & (F[1:-1] > F[2:]) & (F[1:-1] > 0.3 * F.max())]
print("Fourier resolution 2 pi / T =", round(2 * np.pi / t[-1], 4))
print("Fourier peaks:", np.round(peaks, 4))

res = harmonic_inversion((c, dt), InversionWindow(-0.30, -0.20, K=50), extend=True)
for ln in line_filtering(res.lines, min_amplitude=0.04):
    print(f"line E = {ln.E.real:.5f} {ln.E.imag:+.1e}i, |d| = {abs(ln.d):.3f}, stability {ln.stability:.2f}")
print("true:", E_true)
