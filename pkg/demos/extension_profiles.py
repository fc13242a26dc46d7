"""How hard can it be to grow a subset backwards?

An extending word for S has a preimage strictly larger than S.  Chains
of short extending words give short reset words, so families where some
subset only extends via a long word are the obstructions to that proof
strategy.  The odd two-cycle family is the extreme case: its upper
cycle needs a quadratic-length word.

Run with:  python demos/extension_profiles.py
"""

from synchromata import (
    FamilySpec,
    StateSet,
    a_odd,
    conservative,
    extension_profile,
    greedy_extending_word,
    named_subset,
    preimage,
    preimage_word,
    shortest_extending_word,
)

print("Shortest extending word for the upper cycle of each odd member:")
for m in range(4, 8):
    dfa = a_odd(m)
    upper = named_subset(FamilySpec("a-odd", m), "upper")
    word = shortest_extending_word(dfa, upper)
    greedy = greedy_extending_word(m)
    print(f"  m={m} (n={dfa.n}): exact {len(word):2d}, greedy strategy "
          f"{len(greedy):2d}, n itself is only {dfa.n}")

m = 5
dfa = a_odd(m)
upper = named_subset(FamilySpec("a-odd", m), "upper")
word = shortest_extending_word(dfa, upper)
print()
print(f"The witness for m={m}: {dfa.word_str(word)}")
print(f"  {upper} pulls back to {preimage_word(dfa, upper, word)}")

print()
print("The whole profile of the 9-state member (worst shortest-extending")
print("length per subset size):")
report = extension_profile(dfa)
for c, value in enumerate(report.per_cardinality_max, start=1):
    print(f"  size {c}: {value}")
print(f"  worst overall: {report.max_length}, attained by {report.witness_set}")

print()
print("The conservative variant shows that one cheap extension step can be")
print("a trap: a single a grows the upper cycle, but the grown set only")
print("extends again after a quadratic detour through the lower cycle.")
for m in (4, 5, 6):
    dfa = conservative(m)
    s = StateSet(range(m + 1, 2 * m), 2 * m)
    grown = preimage(dfa, s, "a")
    word = shortest_extending_word(dfa, grown)
    print(f"  m={m}: |S|={len(s)} -> a -> |{len(grown)}|, but then "
          f"{len(word)} more letters (n = {2 * m})")
