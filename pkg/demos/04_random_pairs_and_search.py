# Random pairs sit near PSC = 2; searches find the Golay pairs at PSC = 1.
from golaycorr import format_sequence
from golaycorr.explore import exhaustive_min_psc, local_search_min_psc, monte_carlo

for length in (2, 8, 32, 64, 128):
    st = monte_carlo(length, 20000, seed=1)
    print(f"l={length:4d}  ADF {st.mean_adf:.4f} (1-1/l = {1 - 1 / length:.4f})  "
          f"CDF {st.mean_cdf:.4f}  PSC {st.mean_psc:.4f}")

for length in range(1, 7):
    res = exhaustive_min_psc(length)
    print(f"exhaustive l={length}: min PSC {res.min_psc:.6f}, {res.golay_count} Golay pairs")

res = local_search_min_psc(10, iterations=5000, restarts=200, seed=3)
print("local search l=10:", res.min_psc, format_sequence(res.best_pair[0]), format_sequence(res.best_pair[1]))
