"""Generate the Lilliefors critical-value table shipped with the package.

For each sample size, draws standard-normal batches, computes the KS
statistic against the normal fitted by sample mean and sample sd (ddof=1),
and stores quantiles of sqrt(n) * D.  The normality test interpolates
p-values from this table; using the same estimator conventions at test time
is what makes the correction consistent.

Run from the repository root:  python3 tools/make_lilliefors_table.py
"""

import time

import numpy as np
from scipy.special import ndtr

SIZES = [20, 50, 100, 200, 500, 1000, 2000, 5000, 10000]
N_BATCHES = 100_000
CHUNK_ELEMS = 40_000_000
PROBS = np.concatenate(
    [
        [0.0005, 0.001, 0.002, 0.005],
        np.round(np.arange(0.01, 1.00, 0.01), 2),
        [0.995, 0.998, 0.999, 0.9995],
    ]
)
SEED = 20240517


def ks_stat_rows(x):
    """Lilliefors KS statistic per row: fitted-normal vs empirical CDF."""
    n = x.shape[1]
    mu = x.mean(axis=1, keepdims=True)
    sd = x.std(axis=1, ddof=1, keepdims=True)
    z = np.sort((x - mu) / sd, axis=1)
    cdf = ndtr(z)
    grid_hi = np.arange(1, n + 1) / n
    grid_lo = np.arange(0, n) / n
    return np.maximum((grid_hi - cdf).max(axis=1), (cdf - grid_lo).max(axis=1))


def main():
    rng = np.random.Generator(np.random.Philox(SEED))
    table = {}
    for n in SIZES:
        t0 = time.time()
        rows_per_chunk = max(CHUNK_ELEMS // n, 1)
        stats = np.empty(N_BATCHES)
        done = 0
        while done < N_BATCHES:
            m = min(rows_per_chunk, N_BATCHES - done)
            x = rng.standard_normal((m, n))
            stats[done : done + m] = ks_stat_rows(x)
            done += m
        table[n] = np.quantile(np.sqrt(n) * stats, PROBS)
        print(f"n={n}: {time.time()-t0:.1f}s  median={np.median(np.sqrt(n)*stats):.4f}")

    with open("src/levymlmc/_lilliefors.py", "w") as fh:
        fh.write(
            '"""Monte Carlo critical values of the Lilliefors-corrected KS test.\n\n'
            "Quantiles of sqrt(n) * D under the normal null with estimated mean and\n"
            "sd (ddof=1), %d calibration batches per sample size.  Generated by\n"
            "tools/make_lilliefors_table.py; regenerate rather than edit.\n"
            '"""\n\nimport numpy as np\n\n' % N_BATCHES
        )
        fh.write("PROBS = np.array(%r)\n\n" % PROBS.tolist())
        fh.write("SIZES = %r\n\n" % SIZES)
        fh.write("QUANTILES = {\n")
        for n in SIZES:
            fh.write("    %d: np.array(%r),\n" % (n, [round(v, 6) for v in table[n]]))
        fh.write("}\n")
    print("wrote src/levymlmc/_lilliefors.py")


if __name__ == "__main__":
    main()
