"""Loop digraphs, where the rules apply to all triples, and flow balance of weighted digraphs."""
from triadic.census import flow_balance
from triadic.graphs import LoopDigraph, WeightedDigraph
from triadic.null_models import ErParams, expected_motto_prime_failures, sample_er_loop
from triadic.triads import balanced_loop_digraph_structure, motto_prime_failures

# two cliques with every loop present: an equivalence relation with two classes
blocks = {(u, v) for part in ({1, 2, 3}, {4, 5}) for u in part for v in part}
g = LoopDigraph(5, frozenset(blocks))
print(motto_prime_failures(g), balanced_loop_digraph_structure(g))

# three classes break M2': x, y, z pairwise unrelated
three = LoopDigraph(3, frozenset({(1, 1), (2, 2), (3, 3)}))
print(balanced_loop_digraph_structure(three).witness)

params = ErParams(50, 0.2)
ex = expected_motto_prime_failures(params)
print("leading", ex.leading)
print("exact  ", tuple(round(x, 1) for x in ex.exact))
print("one draw", motto_prime_failures(sample_er_loop(params, 1)))

cycle = WeightedDigraph(3, {(1, 2): 2.5, (2, 3): 2.5, (3, 1): 2.5})
print(flow_balance(cycle))
print(flow_balance(WeightedDigraph(2, {(1, 2): 1})))
