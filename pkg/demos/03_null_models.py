"""Erdos-Renyi expectations checked against simulation."""
import numpy as np

from triadic.census import census_undirected_batch, intransitive_triples_batch
from triadic.montecarlo import run_chunked
from triadic.null_models import (
    ErParams, er_directed_batch, er_undirected_batch,
    expected_census_undirected, expected_intransitive_triples,
)

params = ErParams(40, 0.1)
sims = run_chunked(lambda a, b: census_undirected_batch(er_undirected_batch(params, 7, a, b)), 5000)
print("formula  ", np.round(expected_census_undirected(params), 1))
print("simulated", np.round(sims.mean(axis=0), 1))
print("z-scores ", np.round((sims.mean(axis=0) - expected_census_undirected(params))
                            / (sims.std(axis=0, ddof=1) / np.sqrt(len(sims))), 2))

# ordered triples x->y->z without x->z in a random digraph
d = ErParams(25, 0.2)
t = run_chunked(lambda a, b: intransitive_triples_batch(er_directed_batch(d, 7, a, b)), 5000)
print("intransitive triples: formula %.1f, simulated %.1f" % (expected_intransitive_triples(d), t.mean()))

# the sampled stream of draw i never depends on how the run is chunked
one = census_undirected_batch(er_undirected_batch(params, 7, 123, 124))
print("draw 123 again:", one[0], sims[123])
