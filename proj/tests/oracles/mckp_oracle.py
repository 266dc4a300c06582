"""Linear MCKP relaxation optima via a general LP solver (scipy HiGHS)."""
import numpy as np
from scipy.optimize import linprog


def mckp_lp(profits, weights, capacity):
    sizes = [len(p) for p in profits]
    c = -np.concatenate([np.asarray(p, float) for p in profits])
    w = np.concatenate([np.asarray(x, float) for x in weights])
    a_eq = np.zeros((len(sizes), sum(sizes)))
    start = 0
    for i, s in enumerate(sizes):
        a_eq[i, start:start + s] = 1.0
        start += s
    res = linprog(c, A_ub=[w], b_ub=[capacity], A_eq=a_eq, b_eq=np.ones(len(sizes)),
                  bounds=(0, 1), method="highs")
    assert res.status == 0
    return -res.fun


# Generic instance with dominated and LP-dominated items.
PROFITS = [[0, 3, 4, 9, 9.5], [1, 2, 7, 7], [0, 5, 6], [0.5, 0.5, 4, 10]]
WEIGHTS = [[0, 1, 2, 3, 5], [0, 2, 1, 4], [0, 2, 2.5], [0, 1, 3, 6]]
for cap in (0, 3.5, 7.25, 12, 20):
    print("generic capacity", cap, repr(mckp_lp(PROFITS, WEIGHTS, cap)))

# Ergodic-rate instance: alpha=4, n=4, F=4, M=2, Zipf gamma=0.6.
R = [0.0, 0.615980180132516, 1.16940455342241, 1.16940455342241, 2.14815506205043]
g = 0.6
raw = np.array([j ** -g for j in range(1, 5)])
p = raw / raw.sum()
profits = [[pj * r for r in R] for pj in p]
weights = [[k / 4 for k in range(5)] for _ in p]
print("rate instance", repr(mckp_lp(profits, weights, 2)))
