"""Ranking query results by how well they satisfy a preference formula.

Run with ``python demos/02_ranking_cars.py``.
"""
from lexilog import parse, rank_models, render_rational
from lexilog.dataset import read_dataset

CARS = """\
id,electric,diesel,fast,expensive,blue
zoe,T,F,F,F,T
model3,T,F,T,T,F
golf,F,T,T,F,T
leaf,T,F,F,F,F
mustang,F,F,T,T,T
"""

data = read_dataset(CARS)

# Electric is the primary wish; among those, fast beats not fast; colour
# only breaks the remaining ties.
prefs = parse("electric >> (fast >> blue)")
print("preference:", prefs)
for m in rank_models(prefs, data.assignments()):
    print(f"  {m.rank}. {data.ids[m.index]:<8} {str(m.value):<14} {render_rational(m.score)}")

# Derived connectives read naturally: "electric, and if possible not expensive".
prefs = parse("electric &> !expensive")
print("\npreference:", prefs)
for m in rank_models(prefs, data.assignments()):
    print(f"  {m.rank}. {data.ids[m.index]:<8} {str(m.value):<14} {render_rational(m.score)}")

# Ties share a rank: any car that runs on exactly one fuel and is fast and
# cheap is fully satisfying.
prefs = parse("(electric ^ diesel) >> (fast & !expensive)")
print("\npreference:", prefs)
for m in rank_models(prefs, data.assignments()):
    print(f"  {m.rank}. {data.ids[m.index]:<8} {str(m.value):<14} {render_rational(m.score)}")
