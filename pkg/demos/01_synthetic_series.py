"""Generate the three synthetic series families and sanity-check their moments."""
import numpy as np

from hurstscan import fgn_autocovariance, gen_fgn, gen_garch, gen_white

N = 100_000

# Fractional Gaussian noise: exact covariance via circulant embedding.
# Lag-1 autocorrelation should match 2**(2H-1) - 1.
print("fractional Gaussian noise, n =", N)
for h in (0.3, 0.5, 0.7):
    x = gen_fgn(N, h, seed=7)
    sample_rho = np.corrcoef(x[:-1], x[1:])[0, 1]
    theory_rho = fgn_autocovariance(np.array([1]), h)[0]
    print(
        f"  H={h}: var={x.var():.4f} (want 1), "
        f"lag-1 corr={sample_rho:+.4f} (want {theory_rho:+.4f})"
    )

# White noise is the H=0.5 special case, kept separate because it needs no FFT.
w = gen_white(N, sigma=2.0, seed=7)
print(f"\ngaussian white noise: mean={w.mean():+.4f}, std={w.std(ddof=1):.4f} (want 2)")

# GARCH(1,1): heavy tails and volatility clustering from a Gaussian driver.
omega, alpha, beta = 0.1, 0.1, 0.8
r = gen_garch(N, omega, alpha, beta, seed=7)
uncond = omega / (1 - alpha - beta)
r2 = r**2
clustering = np.corrcoef(r2[:-1], r2[1:])[0, 1]
kurt = np.mean((r - r.mean()) ** 4) / r.var() ** 2
print(f"\nGARCH(1,1) omega={omega}, alpha={alpha}, beta={beta}")
print(f"  sample var {r.var():.4f} vs unconditional {uncond:.4f}")
print(f"  excess kurtosis {kurt - 3:+.3f} (Gaussian would be 0)")
print(f"  lag-1 corr of squared returns {clustering:+.3f} (clustering)")
