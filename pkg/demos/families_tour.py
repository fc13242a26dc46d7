"""A quick tour of the built-in automata families.

Run with:  python demos/families_tour.py
"""

from synchromata import (
    FAMILIES,
    a_odd,
    b_series,
    build_family,
    is_strongly_connected,
    is_synchronizing,
    m_series,
)
from synchromata.io import to_dot, to_text

print("Available families and their parameter meanings:")
for name, (_, low, meaning) in sorted(FAMILIES.items()):
    print(f"  {name:14s} parameter {meaning}, at least {low}")

print()
print("The 7-state member of the odd two-cycle family, as a plain table")
print("(one row per letter, 1-based successor states):")
print(to_text(a_odd(4)))

print("Letter a rotates the two cycles; letter b folds the upper cycle")
print("down onto the lower one and swaps the cycle ends.")
print()

print("Every family member is strongly connected and synchronizing:")
for name in sorted(FAMILIES):
    low = FAMILIES[name][1]
    dfa = build_family(name, low + 2)
    print(f"  {name:14s} n={dfa.n}: connected={is_strongly_connected(dfa)}, "
          f"synchronizing={is_synchronizing(dfa)}")

print()
print("The ternary series in Graphviz form (note the merged b,c loops):")
print(to_dot(m_series(4)))

print("The b-series pairs a 4-cycle with a 3-cycle; the coprime lengths let")
print("words of the form a^i slide any straddling pair onto the merging edge:")
print(to_text(b_series(4)))
