"""Exact shortest-reset-word computation by two independent methods.

The forward method searches the image subsets of the full state set.
The inverse method grows the layer families L_0, L_1, ... of maximal
subsets reachable from mergeable singletons by repeated one-letter
preimages; the first layer containing the full set gives the reset
length.  Both run in O(2^n k) at worst and must always agree.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from .automaton import (
    ConsistencyError,
    Dfa,
    StateSet,
    Word,
    WordLike,
    _check_word,
    image_mask,
    image_word_mask,
    preimage_mask,
)


def shortest_reset_word(dfa: Dfa) -> Optional[Word]:
    """A minimum-length word of rank 1, or None if the automaton never resets.

    Breadth-first search over images of the full state set, memoized by
    bitmask; predecessor links reconstruct the witness.  Ties between
    equal-length words are broken by letter order.
    """
    start = dfa.full_mask
    if start.bit_count() == 1:
        return Word()
    parent: dict[int, tuple[int, int]] = {start: (-1, -1)}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for a in range(dfa.k):
            nxt = image_mask(dfa, cur, a)
            if nxt in parent:
                continue
            parent[nxt] = (cur, a)
            if nxt.bit_count() == 1:
                letters = []
                node = nxt
                while node != start:
                    prev, letter = parent[node]
                    letters.append(letter)
                    node = prev
                return Word(reversed(letters))
            queue.append(nxt)
    return None


@dataclass(frozen=True)
class LayerTrace:
    """The layer families produced by the inverse search.

    ``layers[i]`` holds the maximal non-singleton subsets first reached
    after i preimage steps; ``found_at`` is the first index whose layer
    contains the full state set, or None.  ``truncated`` is set when the
    iteration limit was hit while layers were still growing.
    """

    layers: tuple[tuple[StateSet, ...], ...]
    found_at: Optional[int]
    truncated: bool


def default_layer_limit(n: int) -> int:
    # safe upper bound: comfortably above the general (n^3 - n)/6 - 1 cap
    return n ** 3 // 6 + n


def inverse_layers(dfa: Dfa, limit: Optional[int] = None) -> LayerTrace:
    """Grow the layer families L_0..L_limit and report where Q first appears.

    L_0 holds the singletons that some letter maps at least two states
    onto.  Each next layer takes all one-letter preimages of the previous
    layer and discards the visited ones: singletons, sets contained in a
    member of any earlier layer, and proper subsets of another candidate
    in the same round.  Stops early once the full set appears or a layer
    comes out empty.
    """
    if limit is None:
        limit = default_layer_limit(dfa.n)
    if limit < 0:
        raise ValueError(f"limit must be >= 0, got {limit}")
    n = dfa.n
    full = dfa.full_mask

    level0 = [
        1 << q
        for q in range(n)
        if any(dfa.inverse[a][q].bit_count() >= 2 for a in range(dfa.k))
    ]
    layer_masks: list[list[int]] = [level0]
    kept: list[int] = list(level0)
    found_at = None
    truncated = False

    i = 0
    while found_at is None and layer_masks[-1]:
        if i == limit:
            truncated = True
            break
        i += 1
        candidates = set()
        for s in layer_masks[-1]:
            for a in range(dfa.k):
                candidates.add(preimage_mask(dfa, s, a))
        level = []
        for s in sorted(candidates):
            if s.bit_count() <= 1:
                continue
            if any(s & ~t == 0 for t in kept):
                continue
            if any(s != t and s & ~t == 0 for t in candidates):
                continue
            level.append(s)
        layer_masks.append(level)
        kept.extend(level)
        if full in level:
            found_at = i

    layers = tuple(
        tuple(StateSet.from_mask(s, n) for s in level) for level in layer_masks
    )
    return LayerTrace(layers=layers, found_at=found_at, truncated=truncated)


def reset_length(dfa: Dfa, limit: Optional[int] = None) -> Optional[int]:
    """Reset length computed by both methods, or None if not synchronizing.

    Raises ConsistencyError if the forward search and the layer search
    disagree, which would mean a bug in one of them.  A single-state
    automaton resets with the empty word; the layer machinery only
    applies for n >= 2, so that case is answered directly.
    """
    word = shortest_reset_word(dfa)
    if dfa.n == 1:
        return 0
    trace = inverse_layers(dfa, limit)
    forward = None if word is None else len(word)
    if forward != trace.found_at:
        raise ConsistencyError(
            f"forward search found {forward}, layer search found "
            f"{trace.found_at} (truncated={trace.truncated})"
        )
    return forward


def check_sync_word(dfa: Dfa, w: WordLike) -> Optional[int]:
    """The single state that w maps every state to, or None if rank(w) > 1."""
    word = _check_word(dfa, w)
    out = image_word_mask(dfa, dfa.full_mask, word.letters)
    if out.bit_count() != 1:
        return None
    return out.bit_length()
