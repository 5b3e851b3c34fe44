"""
Removing universal literals: Phi_L and QUParity
===============================================

"""

from qbfredux import (
    Mode,
    PreprocessConfig,
    evaluate,
    gen_lqparity,
    gen_phi_l,
    gen_quparity,
    preprocess,
)

f = gen_phi_l(2)
outer = set(f.prefix.blocks[0].variables)
print("outer universal block:", sorted(outer))

for mode in Mode:
    g, trace, _ = preprocess(f, PreprocessConfig(mode=mode, enable_qrate=False))
    left = sum(1 for c in g for lit in c if abs(lit) in outer)
    print(f"{mode.value:9s} removed {len(trace)} literals, {left} outer occurrences left")

# QUParity: removing every z2 literal leaves a formula that is LQParity
# once z2 is dropped from the prefix
n = 4
z2 = n + 2
cfg = PreprocessConfig(mode=Mode.QRAT, enable_qrate=False, qratu_variables=frozenset({z2}))
g, trace, _ = preprocess(gen_quparity(n), cfg)
print(f"QUParity({n}): {len(trace)} z2 literals removed")
print("equals LQParity:", g.restrict_prefix([z2]) == gen_lqparity(n))
print("verdicts:", evaluate(gen_quparity(n)), "/", evaluate(g))

# without the restriction z1 becomes removable as well
g, trace, _ = preprocess(gen_quparity(n), PreprocessConfig(mode=Mode.QRAT, enable_qrate=False))
print("unrestricted: literals of", sorted({abs(e.witness) for e in trace}), "removed")
