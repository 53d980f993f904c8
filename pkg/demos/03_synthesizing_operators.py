"""Compiling preference operators from a table of preference levels.

Run with ``python demos/03_synthesizing_operators.py``.
"""
from lexilog import LevelTable, equivalent, evaluate, render_formula, synthesize, verify_synthesis

# "The more the better": rank rows by how many of the three inputs hold.
more = LevelTable.from_function(lambda *bits: 3 - sum(bits), 3)
f = synthesize(more, chain_length=3)
print("more(x1, x2, x3) =")
print("  ", render_formula(f))
print("verified:", verify_synthesis(more, f))
simplified = "(x1 | x2 | x3) >> ((x1 & x2) | (x2 & x3) | (x1 & x3)) >> (x1 & x2 & x3)"
print("classically equal to the hand-simplified form:", bool(equivalent(f, simplified, 0)))
for bits in more.rows:
    print("  ", ["T" if b else "F" for b in bits], evaluate(f, more.assignment(bits)))

# "x and if possible y" falls out of the same procedure.
if_possible = LevelTable.from_function(lambda x, y: 0 if x and y else 1 if x else 2, ["x", "y"])
g = synthesize(if_possible)
print("\nand-if-possible:", render_formula(g))
print("same as x &> y on classical inputs:", bool(equivalent(g, "x &> y", 0)))

# A made-up operator: prefer exactly one of a, b; both is next; neither is worst.
one_of = LevelTable.from_function(lambda a, b: {1: 0, 2: 1, 0: 2}[a + b], ["a", "b"])
h = synthesize(one_of)
print("\none-of:", render_formula(h), "->", verify_synthesis(one_of, h))
