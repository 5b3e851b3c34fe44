"""
Reading, abstracting and writing PCNF formulas
==============================================

"""

from qbfredux import abstract_formula, parse_qdimacs, write_qdimacs

text = """c exists x1 forall u exists x2
p cnf 3 2
e 1 0
a 2 0
e 3 0
1 2 3 0
-1 -2 -3 0
"""
f, diagnostics = parse_qdimacs(text)
print(f)
print("warnings:", diagnostics.warnings)

# nesting level and quantifier of each variable
for v in f.prefix.variables:
    print(v, f.prefix.quantifier_of(v), "level", f.prefix.level_of(v))

# abstracting level 2 turns the universal u into an existential;
# the trailing existential block merges into the new leading block
for i in range(f.prefix.num_blocks + 1):
    print(i, abstract_formula(f, i).prefix)

print(write_qdimacs(f), end="")

# tautologies and repeated literals are dropped while parsing
g, diagnostics = parse_qdimacs("p cnf 2 2\ne 1 2 0\n1 1 2 0\n1 -1 0\n")
print(list(g), diagnostics.dropped_tautologies, diagnostics.merged_duplicate_literals)
