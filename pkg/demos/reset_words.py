"""Shortest reset words, computed two independent ways.

A reset word sends every state to the same single state.  The forward
method searches images of the full state set; the inverse method grows
layer families of maximal subsets reachable from mergeable singletons
by repeated preimages.  They must agree, and reset_length() checks that
they do on every call.

Run with:  python demos/reset_words.py
"""

from synchromata import (
    cerny,
    check_sync_word,
    inverse_layers,
    m_prime_series,
    m_series,
    m_series_sync_word,
    reset_length,
    shortest_reset_word,
)

print("The classical binary series attains the (n-1)^2 bound exactly:")
for n in range(3, 8):
    print(f"  n={n}: reset length {reset_length(cerny(n))}  (bound {(n - 1) ** 2})")

print()
print("The ternary series lands just below it, at n^2-3n+3 and n^2-3n+2:")
for n in range(4, 9):
    base = reset_length(m_series(n))
    prime = reset_length(m_prime_series(n))
    print(f"  n={n}: base {base:3d}, merge-variant {prime:3d}, bound {(n - 1) ** 2}")

n = 6
dfa = m_series(n)
word = shortest_reset_word(dfa)
print()
print(f"A shortest reset word for the {n}-state base member: {dfa.word_str(word)}")
print(f"It funnels everything into q{check_sync_word(dfa, word)}.")
closed = m_series_sync_word(n)
print(f"The closed-form word {dfa.word_str(closed)} has the same length "
      f"({len(closed)}).")

print()
print("Watching the inverse layer search on the same automaton: every n-th")
print("layer is a single growing interval of states, which is what pins the")
print("exact reset length without touching most of the subset lattice.")
trace = inverse_layers(dfa)
for i in range(0, n - 2):
    layer = trace.layers[i * n]
    print(f"  L_{i * n:<2d} = {' '.join(str(s) for s in layer)}")
print(f"  full set first appears in L_{trace.found_at}")
