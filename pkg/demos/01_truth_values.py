"""Truth values as lists: building them, ordering them, scoring them.

Run with ``python demos/01_truth_values.py``.
"""
from lexilog import FALSE, TRUE, enumerate_values, lex_combine, negate, sign, value_of
from lexilog.valuation import render

# The classical values are one-digit lists. Combining two values with ``>>``
# prefixes a 0 marker, so the nesting structure survives in the list.
partly = lex_combine(TRUE, FALSE)
print("[T] >> [F]          =", partly)
print("([T] >> [F]) >> [F] =", lex_combine(partly, FALSE))
print("[T] >> ([F] >> [F]) =", lex_combine(TRUE, lex_combine(FALSE, FALSE)))

# The two groupings differ: the first leaves the primary wish only partly met.
# Lists compare lexicographically with F < 0 < T.
print("left grouping is worse:", lex_combine(partly, FALSE) < lex_combine(TRUE, lex_combine(FALSE, FALSE)))

# ``sign`` tells whether a value is some degree of true or of false, and
# negation swaps F and T digit by digit.
v = lex_combine(FALSE, lex_combine(FALSE, TRUE))
print(v, "has sign", sign(v), "and negation", negate(v))

# Read as balanced ternary, each list is an exact rational in [-1, 1] and
# the numeric order agrees with the list order.
print()
print(f"{'value':<14}{'fraction':>10}{'decimal':>16}")
for v in enumerate_values(2):
    if len(v) <= 5:
        r = value_of(v)
        print(f"{str(v):<14}{render(r):>10}{render(r, 'decimal'):>16}")

sizes = [len(enumerate_values(d)) for d in range(4)]
print("\nvalues reachable with nesting depth 0..3:", sizes)
