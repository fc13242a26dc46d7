"""Extending words, extension profiles, reachable images and avoiding words.

An extending word for a subset S is one whose preimage of S is strictly
larger than S.  Searches here never prune by cardinality: a shortest
extending path may dip far below |S| before growing, so the full
preimage-step graph over the subset lattice is explored.
"""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .automaton import (
    ConsistencyError,
    Dfa,
    StateSet,
    Word,
    _check_set,
    image_mask,
    is_synchronizing,
    preimage_mask,
    remove_letter,
)

#: Largest n for which whole-lattice reports (profile, image-extension
#: bound) are attempted; single-subset queries work up to the mask width.
PROFILE_BOUND = 20


def shortest_extending_word(dfa: Dfa, s: StateSet) -> Optional[Word]:
    """A minimum-length word whose preimage of s beats |s|, or None.

    Breadth-first search from s where each step applies one more letter
    in front of the word built so far (a preimage step).  Ties are broken
    by letter order.
    """
    mask = _check_set(dfa, s)
    if mask == 0 or mask == dfa.full_mask:
        raise ValueError("extending needs a non-empty proper subset")
    card = mask.bit_count()
    parent: dict[int, tuple[int, int]] = {mask: (-1, -1)}
    queue = deque([mask])
    while queue:
        cur = queue.popleft()
        for a in range(dfa.k):
            nxt = preimage_mask(dfa, cur, a)
            if nxt in parent:
                continue
            parent[nxt] = (cur, a)
            if nxt.bit_count() > card:
                letters = []
                node = nxt
                while node != mask:
                    prev, letter = parent[node]
                    letters.append(letter)
                    node = prev
                # the letter into the final set is the first letter of w
                return Word(letters)
            queue.append(nxt)
    return None


@dataclass(frozen=True)
class ExtensionReport:
    """Worst-case shortest-extending length over all non-empty proper subsets.

    ``per_cardinality_max[c-1]`` covers the subsets of size c; a None
    entry means some subset of that size has no extending word at all,
    in which case ``max_length`` is None as well and ``witness_set`` is
    such a subset.
    """

    max_length: Optional[int]
    witness_set: StateSet
    witness_word: Optional[Word]
    per_cardinality_max: tuple[Optional[int], ...]


def _preimage_step_table(dfa: Dfa) -> list[list[int]]:
    """step[a][mask] = preimage of mask under letter a, for every mask."""
    size = 1 << dfa.n
    table = []
    for a in range(dfa.k):
        inv = dfa.inverse[a]
        row = [0] * size
        for mask in range(1, size):
            low = mask & -mask
            row[mask] = row[mask ^ low] | inv[low.bit_length() - 1]
        table.append(row)
    return table


def extension_profile(dfa: Dfa, bound: int = PROFILE_BOUND) -> ExtensionReport:
    """Exact extension profile of the whole automaton.

    One multi-source backward search per cardinality class answers every
    subset of that size at once, instead of one forward search per
    subset.  Refuses automata above ``bound`` states; query single
    subsets with :func:`shortest_extending_word` instead for those.
    """
    n = dfa.n
    if n > bound:
        raise ValueError(
            f"profile over 2^{n} subsets exceeds the bound ({bound} states); "
            "query individual subsets with shortest_extending_word"
        )
    if n < 2:
        raise ValueError("a single-state automaton has no proper subsets to extend")
    size = 1 << n
    step = _preimage_step_table(dfa)
    radj: dict[int, list[int]] = defaultdict(list)
    for a in range(dfa.k):
        row = step[a]
        for mask in range(size):
            radj[row[mask]].append(mask)
    popcount = [m.bit_count() for m in range(size)]

    per_card: list[Optional[int]] = []
    worst: dict[int, int] = {}  # cardinality -> smallest mask attaining the max
    missing: Optional[int] = None
    for c in range(1, n):
        dist = [-1] * size
        queue = deque()
        for mask in range(size):
            if popcount[mask] > c:
                dist[mask] = 0
                queue.append(mask)
        while queue:
            cur = queue.popleft()
            d = dist[cur] + 1
            for prev in radj.get(cur, ()):
                if dist[prev] < 0:
                    dist[prev] = d
                    queue.append(prev)
        best = 0
        best_mask = None
        unreachable = None
        for mask in range(size):
            if popcount[mask] != c:
                continue
            if dist[mask] < 0:
                unreachable = mask
                break
            if dist[mask] > best:
                best = dist[mask]
                best_mask = mask
        if unreachable is not None:
            per_card.append(None)
            if missing is None:
                missing = unreachable
        else:
            per_card.append(best)
            worst[c] = best_mask

    if missing is not None:
        return ExtensionReport(
            max_length=None,
            witness_set=StateSet.from_mask(missing, n),
            witness_word=None,
            per_cardinality_max=tuple(per_card),
        )
    max_length = max(per_card)  # type: ignore[type-var]
    for c in range(1, n):
        if per_card[c - 1] == max_length:
            witness = StateSet.from_mask(worst[c], n)
            break
    word = shortest_extending_word(dfa, witness)
    return ExtensionReport(
        max_length=max_length,
        witness_set=witness,
        witness_word=word,
        per_cardinality_max=tuple(per_card),
    )


def _reachable_masks(dfa: Dfa) -> set[int]:
    seen = {dfa.full_mask}
    queue = deque([dfa.full_mask])
    while queue:
        cur = queue.popleft()
        for a in range(dfa.k):
            nxt = image_mask(dfa, cur, a)
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return seen


def reachable_images(dfa: Dfa) -> tuple[StateSet, ...]:
    """All subsets that arise as the image of the full state set.

    Includes the full set itself (empty word).  Sorted by decreasing
    size, then by mask, so the full set comes first.
    """
    masks = sorted(_reachable_masks(dfa), key=lambda m: (-m.bit_count(), m))
    return tuple(StateSet.from_mask(m, dfa.n) for m in masks)


@dataclass(frozen=True)
class ImageExtensionReport:
    """Worst case over reachable images of the image-aware extension length.

    For each reachable proper image S this measures the shortest u whose
    preimage of S contains some reachable image larger than S, and
    reports the maximum together with the witness S and the ratio
    worst_length / n.
    """

    reachable_image_count: int
    worst_set: StateSet
    worst_length: int
    constant_witness: Fraction


def image_extension_bound(dfa: Dfa, bound: int = PROFILE_BOUND) -> ImageExtensionReport:
    """Worst image-aware extension length over all reachable proper images.

    Requires a synchronizing automaton: reversing a reset word shows the
    search below always terminates, so a miss means an implementation
    bug rather than bad input.
    """
    n = dfa.n
    if n > bound:
        raise ValueError(
            f"image-extension search over 2^{n} subsets exceeds the bound "
            f"({bound} states)"
        )
    if n < 2:
        raise ValueError("a single-state automaton has no proper images to extend")
    if not is_synchronizing(dfa):
        raise ValueError("image-extension bound needs a synchronizing automaton")
    reach = _reachable_masks(dfa)
    by_card: dict[int, list[int]] = defaultdict(list)
    for m in reach:
        by_card[m.bit_count()].append(m)
    for bucket in by_card.values():
        bucket.sort()
    cards_desc = sorted(by_card, reverse=True)

    def contains_larger(mask: int, card: int) -> bool:
        for c in cards_desc:
            if c <= card:
                return False
            for t in by_card[c]:
                if t & ~mask == 0:
                    return True
        return False

    worst_len = -1
    worst_mask = 0
    for s in sorted(reach, key=lambda m: (m.bit_count(), m)):
        if s == dfa.full_mask:
            continue
        card = s.bit_count()
        dist = {s: 0}
        queue = deque([s])
        found = 0 if contains_larger(s, card) else None
        while queue and found is None:
            cur = queue.popleft()
            d = dist[cur] + 1
            for a in range(dfa.k):
                nxt = preimage_mask(dfa, cur, a)
                if nxt in dist:
                    continue
                dist[nxt] = d
                if contains_larger(nxt, card):
                    found = d
                    break
                queue.append(nxt)
        if found is None:
            raise ConsistencyError(
                f"reachable image {StateSet.from_mask(s, n)} admits no "
                "image-extending word in a synchronizing automaton"
            )
        if found > worst_len:
            worst_len = found
            worst_mask = s
    return ImageExtensionReport(
        reachable_image_count=len(reach),
        worst_set=StateSet.from_mask(worst_mask, n),
        worst_length=worst_len,
        constant_witness=Fraction(worst_len, n),
    )


def shortest_avoiding_word(dfa: Dfa, q: int) -> Optional[Word]:
    """A minimum-length word whose image of the full set misses state q.

    None if every image contains q.  Search over forward images of the
    full state set.
    """
    if not 1 <= q <= dfa.n:
        raise ValueError(f"state {q} out of range 1..{dfa.n}")
    bit = 1 << (q - 1)
    start = dfa.full_mask
    seen = {start}
    queue = deque([(start, ())])
    while queue:
        cur, w = queue.popleft()
        for a in range(dfa.k):
            nxt = image_mask(dfa, cur, a)
            if nxt in seen:
                continue
            seen.add(nxt)
            if not nxt & bit:
                return Word(w + (a,))
            queue.append((nxt, w + (a,)))
    return None


def is_irreducibly_synchronizing(dfa: Dfa) -> bool:
    """True iff synchronizing and removing any single letter breaks it.

    Raises if the input does not synchronize in the first place.  A
    synchronizing automaton over a single letter counts as irreducible,
    since no letter can be spared.
    """
    if not is_synchronizing(dfa):
        raise ValueError("irreducibility is defined for synchronizing automata")
    if dfa.k == 1:
        return True
    return all(
        not is_synchronizing(remove_letter(dfa, a)) for a in range(dfa.k)
    )
