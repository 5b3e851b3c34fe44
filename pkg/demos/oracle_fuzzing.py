"""
Checking the preprocessor against a brute-force oracle
======================================================

The oracle tabulates the matrix with numpy and reduces one axis per variable.
It is slow but obviously correct on a dozen variables, which is enough to
fuzz every configuration of the preprocessor.
"""

import numpy as np

from qbfredux import Mode, PreprocessConfig, evaluate, preprocess, replay_trace, write_trace
from qbfredux.formula import PcnfFormula, Prefix, Quantifier
from qbfredux.generators import RandomQbfConfig, gen_random_qbf
from qbfredux.oracle import game_labels, tree_implies

f = gen_random_qbf(RandomQbfConfig(num_vars=6, num_blocks=3, num_clauses=6, clause_width=(2, 3), seed=5))
print(f)

# labels per depth of the assignment tree; the root decides the formula
labels = game_labels(f)
print("label shape per depth:", [np.shape(x) for x in labels])
print("verdict:", evaluate(f))

configs = [
    PreprocessConfig(mode=mode, enable_qrate=qrate, enable_qratu=qratu)
    for mode in Mode
    for qrate, qratu in [(True, False), (False, True), (True, True)]
]
rng = np.random.default_rng(1)
mismatches = reduced = 0
for seed in rng.integers(0, 2**32, size=200):
    f = gen_random_qbf(RandomQbfConfig(10, 3, 12, (3, 4), int(seed)))
    verdict = evaluate(f)
    for cfg in configs:
        g, trace, _ = preprocess(f, cfg)
        reduced += bool(trace)
        mismatches += evaluate(g) != verdict
        assert replay_trace(f, write_trace(trace)) == g
print(f"{reduced} reducing runs, {mismatches} verdict mismatches")

# implication in the model sense: (x) does not follow from the
# satisfiable formula forall u exists x . (u or -x) and (-u or x)
g = PcnfFormula(Prefix.build([(Quantifier.FORALL, [1]), (Quantifier.EXISTS, [2])]), [(1, -2), (-1, 2)])
print("implies (x):", tree_implies(g, (2,)), " implies (u or x or -x):", tree_implies(g, (1, 2, -2)))
