"""Parametric generators for the extremal automata families.

All families follow the same geometry: the states split into a lower
group q_1..q_m and an upper group, letter a rotates each group along a
cycle, and letter b folds the upper group down onto the lower one.  The
ternary series m_series / m_prime_series instead combine one merging
letter with near-identity letters.  Indices in this module follow the
1-based naming convention of :mod:`synchromata.automaton`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .automaton import Dfa, StateSet, Word, preimage_word

A, B, C = 0, 1, 2


class ConstructionSearchError(RuntimeError):
    """A bounded search that must succeed by construction found nothing."""


def _rows(n: int, *maps: dict[int, int]) -> list[list[int]]:
    return [[m[i] for i in range(1, n + 1)] for m in maps]


def a_odd(m: int) -> Dfa:
    """Two counter-rotating cycles on 2m-1 states with a folding letter.

    Letter a runs a cycle on the lower states q_1..q_m and a cycle on
    the upper states q_{m+1}..q_{2m-1}.  Letter b fixes q_1..q_{m-1},
    swaps q_m with q_{2m-1} and drops every other upper state q_{m+i}
    to q_i.  The upper subset of this family needs extending words of
    quadratic length.
    """
    if m < 3:
        raise ValueError(f"a_odd needs m >= 3, got {m}")
    n = 2 * m - 1
    a = {}
    b = {}
    for i in range(1, n + 1):
        if i == m:
            a[i] = 1
        elif i == 2 * m - 1:
            a[i] = m + 1
        else:
            a[i] = i + 1
        if i <= m - 1:
            b[i] = i
        elif i == m:
            b[i] = 2 * m - 1
        elif i == 2 * m - 1:
            b[i] = m
        else:
            b[i] = i - m
    return Dfa(n, 2, _rows(n, a, b))


def a_even(m: int) -> Dfa:
    """Even-size counterpart of :func:`a_odd` on 2m states.

    Letter a cycles q_1..q_m and q_{m+1}..q_{2m}; letter b fixes
    q_1..q_{m-1}, swaps q_m with q_{2m}, drops q_{m+i} to q_i for
    i <= m-2 and sends q_{2m-1} to q_m.
    """
    if m < 3:
        raise ValueError(f"a_even needs m >= 3, got {m}")
    n = 2 * m
    a = {}
    b = {}
    for i in range(1, n + 1):
        if i == m:
            a[i] = 1
        elif i == 2 * m:
            a[i] = m + 1
        else:
            a[i] = i + 1
        if i <= m - 1:
            b[i] = i
        elif i == m:
            b[i] = 2 * m
        elif i == 2 * m:
            b[i] = m
        elif i == 2 * m - 1:
            b[i] = m
        else:
            b[i] = i - m
    return Dfa(n, 2, _rows(n, a, b))


def conservative(m: int) -> Dfa:
    """A 2m-state family whose one-letter extension leads into a trap.

    The upper a-cycle covers only q_{m+1}..q_{2m-1}; state q_{2m} feeds
    into it.  The subset of upper-cycle states grows by one under a
    single a-preimage, but the grown set can only move forward through
    a quadratic-length bottleneck, so cheap extensions do not compose.
    """
    if m < 3:
        raise ValueError(f"conservative needs m >= 3, got {m}")
    n = 2 * m
    a = {}
    b = {}
    for i in range(1, n + 1):
        if i == m:
            a[i] = 1
        elif i in (2 * m - 1, 2 * m):
            a[i] = m + 1
        else:
            a[i] = i + 1
        if i <= m - 1:
            b[i] = i
        elif i == m:
            b[i] = 2 * m
        elif i == 2 * m:
            b[i] = m
        elif i == 2 * m - 1:
            b[i] = m - 1
        else:
            b[i] = i - m
    return Dfa(n, 2, _rows(n, a, b))


def b_series(m: int) -> Dfa:
    """A 2m-state family with a-cycles of coprime lengths m and m-1.

    State q_{2m} carries an a-self-loop and b swaps it with q_{2m-1};
    b also swaps q_{m-1} with q_{2m-2} and merges q_m into q_{2m}.
    Its two-state image subsets need extending words of length 3m-1,
    and avoiding q_{2m} takes words of length 2m+2.
    """
    if m < 4:
        raise ValueError(f"b_series needs m >= 4, got {m}")
    n = 2 * m
    a = {}
    b = {}
    for i in range(1, n + 1):
        if i == m:
            a[i] = 1
        elif i == 2 * m - 1:
            a[i] = m + 1
        elif i == 2 * m:
            a[i] = 2 * m
        else:
            a[i] = i + 1
        if i <= m - 2 or m + 1 <= i <= 2 * m - 3:
            b[i] = i
        elif i == m - 1:
            b[i] = 2 * m - 2
        elif i == 2 * m - 2:
            b[i] = m - 1
        elif i == m:
            b[i] = 2 * m
        elif i == 2 * m - 1:
            b[i] = 2 * m
        else:  # i == 2m
            b[i] = 2 * m - 1
    return Dfa(n, 2, _rows(n, a, b))


def m_series(n: int) -> Dfa:
    """Ternary slowly synchronizing series with reset length n^2-3n+3.

    a almost-cycles the states (q_n re-enters at q_2, merging with q_1's
    successor), b merges q_1 into q_2 and fixes everything else, and c
    swaps q_1 with q_n.  Removing any letter breaks synchronization.
    """
    if n < 3:
        raise ValueError(f"m_series needs n >= 3, got {n}")
    a = {i: i + 1 if i < n else 2 for i in range(1, n + 1)}
    b = {i: 2 if i == 1 else i for i in range(1, n + 1)}
    c = {i: i for i in range(1, n + 1)}
    c[1], c[n] = n, 1
    return Dfa(n, 3, _rows(n, a, b, c))


def m_prime_series(n: int) -> Dfa:
    """Variant of :func:`m_series` with reset length n^2-3n+2.

    Identical except that c merges q_n into q_1 instead of swapping.
    """
    if n < 3:
        raise ValueError(f"m_prime_series needs n >= 3, got {n}")
    a = {i: i + 1 if i < n else 2 for i in range(1, n + 1)}
    b = {i: 2 if i == 1 else i for i in range(1, n + 1)}
    c = {i: 1 if i == n else i for i in range(1, n + 1)}
    return Dfa(n, 3, _rows(n, a, b, c))


def cerny(n: int) -> Dfa:
    """The classical binary series attaining reset length (n-1)^2.

    a cyclically shifts all states; b merges q_1 into q_2 and fixes the
    rest.  Any convention with the same reset length would do; this one
    is pinned so serialized output stays stable.
    """
    if n < 2:
        raise ValueError(f"cerny needs n >= 2, got {n}")
    a = {i: i % n + 1 for i in range(1, n + 1)}
    b = {i: 2 if i == 1 else i for i in range(1, n + 1)}
    return Dfa(n, 2, _rows(n, a, b))


#: family name -> (builder, minimum parameter, parameter meaning)
FAMILIES = {
    "a-odd": (a_odd, 3, "m (n = 2m-1)"),
    "a-even": (a_even, 3, "m (n = 2m)"),
    "conservative": (conservative, 3, "m (n = 2m)"),
    "b-series": (b_series, 4, "m (n = 2m)"),
    "m-series": (m_series, 3, "n"),
    "m-prime": (m_prime_series, 3, "n"),
    "cerny": (cerny, 2, "n"),
}


@dataclass(frozen=True)
class FamilySpec:
    """A family name together with its size parameter."""

    name: str
    param: int

    def __post_init__(self):
        if self.name not in FAMILIES:
            raise ValueError(
                f"unknown family {self.name!r}; choose from {sorted(FAMILIES)}"
            )
        builder, low, meaning = FAMILIES[self.name]
        if self.param < low:
            raise ValueError(
                f"family {self.name!r} needs parameter >= {low} ({meaning}), "
                f"got {self.param}"
            )

    def build(self) -> Dfa:
        return FAMILIES[self.name][0](self.param)


def build_family(name: str, param: int) -> Dfa:
    return FamilySpec(name, param).build()


def named_subset(spec: FamilySpec, which: str) -> StateSet:
    """The canonical 'upper' or 'lower' state block of an a-odd/a-even family.

    For a-odd the upper block is q_{m+1}..q_{2m-1}; for a-even it is
    q_{m+1}..q_{2m}.  The lower block is q_1..q_m in both.
    """
    if spec.name not in ("a-odd", "a-even"):
        raise ValueError(f"family {spec.name!r} has no named upper/lower subsets")
    m = spec.param
    n = 2 * m - 1 if spec.name == "a-odd" else 2 * m
    if which == "lower":
        return StateSet(range(1, m + 1), n)
    if which == "upper":
        return StateSet(range(m + 1, n + 1), n)
    raise ValueError(f"unknown subset name {which!r}; use 'upper' or 'lower'")


def upper_subset(dfa: Dfa) -> StateSet:
    """Upper block of an a-odd automaton given by its state count."""
    if dfa.n % 2 == 0 or dfa.n < 5:
        raise ValueError("expected an a-odd family automaton (odd n >= 5)")
    m = (dfa.n + 1) // 2
    return StateSet(range(m + 1, dfa.n + 1), dfa.n)


def is_covered(dfa: Dfa, s: StateSet, q: int) -> bool:
    """In an a-odd automaton, an upper state of s is covered if b keeps it in s.

    Requires q to lie in the intersection of s with the upper block.
    """
    upper = upper_subset(dfa)
    if q not in s or q not in upper:
        raise ValueError(f"state q{q} is not in the upper part of the set")
    return dfa.step(q, B) in s


# ---------------------------------------------------------------------------
# explicit words
# ---------------------------------------------------------------------------

def a_odd_sync_word(m: int) -> Word:
    """The explicit word of length 2m^2-2m+2 that resets a_odd(m) to q_1.

    Shape: b a b a^m b followed by m-2 repetitions of a^{m-1} b a^m b.
    Each repetition peels one more state off the lower cycle.
    """
    if m < 3:
        raise ValueError(f"need m >= 3, got {m}")
    head = Word([B, A, B]) + Word([A]) * m + Word([B])
    block = Word([A]) * (m - 1) + Word([B]) + Word([A]) * m + Word([B])
    return head + block * (m - 2)


def m_series_sync_word(n: int) -> Word:
    """The word a c b (a^{n-2} c b)^{n-3} of length n^2-3n+3 resetting m_series(n)."""
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    return Word([A, C, B]) + (Word([A]) * (n - 2) + Word([C, B])) * (n - 3)


def m_prime_series_sync_word(n: int) -> Word:
    """The word c b (a^{n-2} c b)^{n-3} of length n^2-3n+2 resetting m_prime_series(n)."""
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    return Word([C, B]) + (Word([A]) * (n - 2) + Word([C, B])) * (n - 3)


def _greedy_candidate(m: int, d: int, t: int) -> Word:
    # b a^t (b a^{2m-1})^{d-2} (b a^{2m-3} b a^2) b
    return (
        Word([B])
        + Word([A]) * t
        + (Word([B]) + Word([A]) * (2 * m - 1)) * (d - 2)
        + Word([B])
        + Word([A]) * (2 * m - 3)
        + Word([B, A, A])
        + Word([B])
    )


def greedy_extending_word(m: int) -> Word:
    """Shortest greedy-strategy word that extends the upper block of a_odd(m).

    The strategy collects lower-cycle states one at a time with the
    blocks b a^{2m-1}, seeded by b a^{2m-3} b a^2, then rotates the
    collected run with a^t so that a final b doubles it.  The search
    scans the collected count d and the rotation t; the winning length
    is m^2 - 3m/2 + 4 for even m and m^2 - m + 2 for odd m (odd m needs
    the full rotation t = 2m-1).
    """
    if m < 4:
        raise ValueError(f"need m >= 4, got {m}")
    dfa = a_odd(m)
    target = upper_subset(dfa)
    goal = len(target)
    best = None
    for d in range(2, m + 3):
        for t in range(0, 2 * m):
            w = _greedy_candidate(m, d, t)
            if best is not None and len(best) <= len(w):
                continue
            if len(preimage_word(dfa, target, w)) > goal:
                best = w
    if best is None:
        raise ConstructionSearchError(
            f"no greedy candidate extends the upper block for m={m}"
        )
    return best
