"""
Unit propagation with universal reduction
=========================================

Plain unit propagation treats every variable as existential.  Adding
universal reduction is only sound on an abstraction of the prefix, which is
what qat_check uses.
"""

from qbfredux.formula import PcnfFormula, Prefix, Quantifier
from qbfredux.propagation import Trail, assume_negation, at_check, propagate, qat_check

E, A = Quantifier.EXISTS, Quantifier.FORALL

# forall u exists x . (u or -x) and (-u or x)   with u = 1, x = 2
f = PcnfFormula(Prefix.build([(A, [1]), (E, [2])]), [(1, -2), (-1, 2)])

for level in (0, 2):
    trail = Trail(f, level)
    assume_negation(trail, (2,))
    outcome = propagate(f, trail)
    print(f"level {level}: {outcome.kind.name}, trail {trail.literals}")

# at level 0 the conflict would "prove" (x), which the formula does not imply
print("qat_check (x):", qat_check(f, (2,)))

# a clause with QAT but without AT
# forall u1 exists x3 forall u2 exists x4, numbered 1..4
g = PcnfFormula(
    Prefix.build([(A, [1]), (E, [2]), (A, [3]), (E, [4])]),
    [(1, -2, 4), (-3, -4)],
)
c = (1, -2)
print("AT: ", at_check(g, c))
print("QAT:", qat_check(g, c))

trail = Trail(g, g.prefix.max_level(c))
assume_negation(trail, c)
outcome = propagate(g, trail)
print("conflict in", g.clauses[outcome.conflict_clause], "after", trail.literals)
