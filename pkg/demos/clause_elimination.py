"""
Clause elimination on the Phi_C family
======================================

Each gadget of Phi_C(n) is fully removable when implication is checked by QAT,
while the AT-based check does not remove a single clause.
"""

import time

from qbfredux import Mode, PreprocessConfig, gen_phi_c, preprocess, write_trace

f = gen_phi_c(1)
print(f)

for mode in Mode:
    g, trace, stats = preprocess(f, PreprocessConfig(mode=mode, enable_qratu=False))
    print(f"{mode.value:9s} clauses left: {len(g)}")
    print(write_trace(trace), end="")

# the effect scales linearly with the number of gadgets
print(" n  left  seconds")
for n in (1, 5, 10, 25):
    start = time.perf_counter()
    g, _, stats = preprocess(gen_phi_c(n), PreprocessConfig(enable_qratu=False))
    print(f"{n:2d}  {len(g):4d}  {time.perf_counter() - start:.3f}")
