"""Independent brute-force oracles used to cross-check the library.

Everything here works on the public 1-based transition table and plain
Python sets (or naive per-state scans), deliberately avoiding the
library's bitmask helpers, precomputed inverse tables and shared-search
shortcuts, so that agreement is meaningful.
"""

from collections import deque
from itertools import product

from synchromata import Dfa


def o_image(rows, states, word):
    out = frozenset(states)
    for a in word:
        out = frozenset(rows[a][q - 1] for q in out)
    return out


def o_preimage(rows, states, a):
    n = len(rows[0])
    return frozenset(q for q in range(1, n + 1) if rows[a][q - 1] in states)


def o_preimage_word(rows, states, word):
    out = frozenset(states)
    for a in reversed(list(word)):
        out = o_preimage(rows, out, a)
    return out


def o_reset_length(rows):
    """Shortest-reset length by breadth-first search over frozensets."""
    n = len(rows[0])
    k = len(rows)
    full = frozenset(range(1, n + 1))
    if len(full) == 1:
        return 0
    seen = {full}
    queue = deque([(full, 0)])
    while queue:
        cur, d = queue.popleft()
        for a in range(k):
            nxt = frozenset(rows[a][q - 1] for q in cur)
            if nxt in seen:
                continue
            seen.add(nxt)
            if len(nxt) == 1:
                return d + 1
            queue.append((nxt, d + 1))
    return None


def o_extending_length(dfa: Dfa, mask: int):
    """Shortest extending length by per-subset BFS with per-state preimage scans."""
    rows = dfa.rows()
    n, k = dfa.n, dfa.k
    card = bin(mask).count("1")
    seen = {mask}
    queue = deque([(mask, 0)])
    while queue:
        cur, d = queue.popleft()
        for a in range(k):
            nxt = 0
            for q in range(1, n + 1):
                if cur >> (rows[a][q - 1] - 1) & 1:
                    nxt |= 1 << (q - 1)
            if nxt in seen:
                continue
            seen.add(nxt)
            if bin(nxt).count("1") > card:
                return d + 1
            queue.append((nxt, d + 1))
    return None


def o_profile(dfa: Dfa):
    """Extension profile as a per-cardinality list, one naive BFS per subset."""
    n = dfa.n
    out = []
    for c in range(1, n):
        worst = 0
        for mask in range(1, 1 << n):
            if bin(mask).count("1") != c:
                continue
            length = o_extending_length(dfa, mask)
            if length is None:
                worst = None
                break
            worst = max(worst, length)
        out.append(worst)
    return out


def no_shorter_extending_word(dfa: Dfa, states, length):
    """True iff no word shorter than ``length`` extends the given subset.

    Exhaustive enumeration over all k^l words; only usable for small
    lengths and alphabets.
    """
    rows = dfa.rows()
    start = frozenset(states)
    for l in range(length):
        for word in product(range(dfa.k), repeat=l):
            if len(o_preimage_word(rows, start, word)) > len(start):
                return False
    return True


def random_dfa(rng, n, k):
    rows = [[rng.randint(1, n) for _ in range(n)] for _ in range(k)]
    return Dfa(n, k, rows)
