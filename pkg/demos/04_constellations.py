"""Noisy star constellations look unbalanced even though they are built from stars."""
import warnings

import numpy as np

from triadic.census import census_undirected_batch
from triadic.generators import (
    ConstellationParams, constellation_batch, constellation_expectation, sign_pattern_report,
)
from triadic.montecarlo import run_chunked

np.set_printoptions(suppress=True)
p = ConstellationParams(k=2, n=50, delta=0.02)
ex = constellation_expectation(p)
print("expected edges", ex.eps, "matched p", round(ex.p_match, 5))
print("constellation", np.round(ex.constellation, 1))
print("random graph ", np.round(ex.er, 1))

sims = run_chunked(lambda a, b: census_undirected_batch(constellation_batch(p, 3, a, b)), 2000)
print("simulated    ", np.round(sims.mean(axis=0), 1))

# 1-edge triads fall short of the random graph, the other three classes exceed it
warnings.simplefilter("ignore")
for n in (100, 200, 400, 800, 1600):
    r = sign_pattern_report(ConstellationParams(2, n, n**-0.75))
    print(n, r.signs, "gap ratio %.3f" % r.one_edge_gap_ratio)
