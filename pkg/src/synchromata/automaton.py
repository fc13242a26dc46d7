"""Complete deterministic automata with bitmask subset algebra.

States are numbered 1..n in every public interface; letters are named
a, b, c, ... and mapped to indices 0..k-1 in order.  Words act left to
right (the first letter is applied first), so preimages of a word fold
over its letters from the last one back to the first.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator, Optional, Sequence, Union

#: Width of the subset bitmask; automata larger than this are rejected.
MAX_STATES = 24

LETTER_NAMES = "abcdefghijklmnopqrstuvwxyz"


class ConsistencyError(RuntimeError):
    """Two independent computations of the same quantity disagreed.

    This always indicates an implementation bug, never bad user input.
    """


def letter_name(a: int) -> str:
    return LETTER_NAMES[a]


def letter_index(name: str, k: Optional[int] = None) -> int:
    """Map a letter name ('a', 'b', ...) to its index."""
    idx = LETTER_NAMES.find(name)
    if idx < 0 or (k is not None and idx >= k):
        raise ValueError(f"unknown letter {name!r}")
    return idx


class Word:
    """An immutable sequence of letter indices.  The empty word is allowed."""

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[int] = ()):
        object.__setattr__(self, "letters", tuple(letters))
        if any(a < 0 for a in self.letters):
            raise ValueError("letter indices must be non-negative")

    @classmethod
    def parse(cls, text: str, k: Optional[int] = None) -> "Word":
        """Build a word from a letter-name string such as 'bab'."""
        return cls(letter_index(ch, k) for ch in text)

    def __setattr__(self, name, value):
        raise AttributeError("Word is immutable")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __add__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def __mul__(self, times: int) -> "Word":
        return Word(self.letters * times)

    def __eq__(self, other) -> bool:
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self) -> int:
        return hash(self.letters)

    def __str__(self) -> str:
        return "".join(LETTER_NAMES[a] for a in self.letters)

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"


WordLike = Union[Word, str, Sequence[int]]


def as_word(w: WordLike, k: Optional[int] = None) -> Word:
    if isinstance(w, Word):
        return w
    if isinstance(w, str):
        return Word.parse(w, k)
    return Word(w)


class StateSet:
    """A subset of the states of an n-state automaton, stored as a bitmask.

    Bit i-1 of ``mask`` is set iff state q_i belongs to the set.
    """

    __slots__ = ("mask", "n")

    def __init__(self, states: Iterable[int], n: int):
        mask = 0
        for q in states:
            if not 1 <= q <= n:
                raise ValueError(f"state {q} out of range 1..{n}")
            mask |= 1 << (q - 1)
        object.__setattr__(self, "mask", mask)
        object.__setattr__(self, "n", n)

    @classmethod
    def from_mask(cls, mask: int, n: int) -> "StateSet":
        if mask < 0 or mask >> n:
            raise ValueError(f"mask {mask:#x} has bits outside 1..{n}")
        s = cls.__new__(cls)
        object.__setattr__(s, "mask", mask)
        object.__setattr__(s, "n", n)
        return s

    @classmethod
    def full(cls, n: int) -> "StateSet":
        return cls.from_mask((1 << n) - 1, n)

    @classmethod
    def empty(cls, n: int) -> "StateSet":
        return cls.from_mask(0, n)

    def __setattr__(self, name, value):
        raise AttributeError("StateSet is immutable")

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, q: int) -> bool:
        return 1 <= q <= self.n and self.mask >> (q - 1) & 1 == 1

    def __iter__(self) -> Iterator[int]:
        m = self.mask
        while m:
            low = m & -m
            yield low.bit_length()
            m ^= low

    def states(self) -> tuple[int, ...]:
        return tuple(self)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, StateSet)
            and self.mask == other.mask
            and self.n == other.n
        )

    def __hash__(self) -> int:
        return hash((self.mask, self.n))

    def __or__(self, other: "StateSet") -> "StateSet":
        return StateSet.from_mask(self.mask | other.mask, self.n)

    def __and__(self, other: "StateSet") -> "StateSet":
        return StateSet.from_mask(self.mask & other.mask, self.n)

    def __sub__(self, other: "StateSet") -> "StateSet":
        return StateSet.from_mask(self.mask & ~other.mask, self.n)

    def __le__(self, other: "StateSet") -> bool:
        return self.mask & ~other.mask == 0

    def __lt__(self, other: "StateSet") -> bool:
        return self.mask != other.mask and self <= other

    def __str__(self) -> str:
        return "{" + ", ".join(f"q{q}" for q in self) + "}"

    def __repr__(self) -> str:
        return f"StateSet({list(self)}, n={self.n})"


class Dfa:
    """A complete deterministic automaton over n states and k letters.

    ``rows`` holds one row per letter with n entries, each a 1-based
    successor index: rows[a][i-1] is where letter a sends state q_i.
    Per-letter preimage masks are precomputed at construction because
    preimages are the hot path of every analysis.  Instances are
    immutable and safe to share between threads.
    """

    __slots__ = ("n", "k", "delta", "inverse", "full_mask", "letters")

    def __init__(
        self,
        n: int,
        k: int,
        rows: Sequence[Sequence[int]],
        letters: Optional[str] = None,
    ):
        if n < 1:
            raise ValueError(f"need at least one state, got n={n}")
        if n > MAX_STATES:
            raise ValueError(f"n={n} exceeds the supported mask width {MAX_STATES}")
        if k < 1:
            raise ValueError(f"need at least one letter, got k={k}")
        if len(rows) != k:
            raise ValueError(f"expected {k} transition rows, got {len(rows)}")
        delta = []
        for a, row in enumerate(rows):
            if len(row) != n:
                raise ValueError(
                    f"letter {letter_name(a)}: expected {n} entries, got {len(row)}"
                )
            for i, t in enumerate(row):
                if not 1 <= t <= n:
                    raise ValueError(
                        f"letter {letter_name(a)}, state q{i + 1}: "
                        f"target {t} out of range 1..{n}"
                    )
            delta.append(tuple(t - 1 for t in row))
        if letters is None:
            letters = LETTER_NAMES[:k]
        if len(letters) != k or len(set(letters)) != k:
            raise ValueError(f"need {k} distinct letter names, got {letters!r}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "delta", tuple(delta))
        object.__setattr__(self, "full_mask", (1 << n) - 1)
        object.__setattr__(self, "letters", letters)
        inverse = []
        for a in range(k):
            inv = [0] * n
            for q in range(n):
                inv[delta[a][q]] |= 1 << q
            inverse.append(tuple(inv))
        object.__setattr__(self, "inverse", tuple(inverse))

    def __setattr__(self, name, value):
        raise AttributeError("Dfa is immutable")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Dfa)
            and self.n == other.n
            and self.k == other.k
            and self.delta == other.delta
            and self.letters == other.letters
        )

    def __hash__(self) -> int:
        return hash((self.n, self.k, self.delta, self.letters))

    def __repr__(self) -> str:
        return f"Dfa(n={self.n}, k={self.k})"

    def step(self, q: int, a: int) -> int:
        """Successor of state q (1-based) under letter index a."""
        return self.delta[a][q - 1] + 1

    def rows(self) -> list[list[int]]:
        """Transition table as 1-based rows, one per letter."""
        return [[t + 1 for t in row] for row in self.delta]

    def full_set(self) -> StateSet:
        return StateSet.from_mask(self.full_mask, self.n)

    def word(self, text: str) -> Word:
        """Parse a word using this automaton's letter names."""
        out = []
        for ch in text:
            idx = self.letters.find(ch)
            if idx < 0:
                raise ValueError(f"unknown letter {ch!r} (alphabet {self.letters!r})")
            out.append(idx)
        return Word(out)

    def word_str(self, w: Word) -> str:
        """Render a word with this automaton's letter names."""
        return "".join(self.letters[a] for a in w)


def make_dfa(
    n: int, k: int, rows: Sequence[Sequence[int]], letters: Optional[str] = None
) -> Dfa:
    """Construct a Dfa from k rows of n 1-based successor indices."""
    return Dfa(n, k, rows, letters)


# ---------------------------------------------------------------------------
# mask-level helpers (internal hot path; public ops wrap them)
# ---------------------------------------------------------------------------

def image_mask(dfa: Dfa, mask: int, a: int) -> int:
    row = dfa.delta[a]
    out = 0
    while mask:
        low = mask & -mask
        out |= 1 << row[low.bit_length() - 1]
        mask ^= low
    return out


def image_word_mask(dfa: Dfa, mask: int, letters: Sequence[int]) -> int:
    for a in letters:
        mask = image_mask(dfa, mask, a)
    return mask


def preimage_mask(dfa: Dfa, mask: int, a: int) -> int:
    inv = dfa.inverse[a]
    out = 0
    while mask:
        low = mask & -mask
        out |= inv[low.bit_length() - 1]
        mask ^= low
    return out


def preimage_word_mask(dfa: Dfa, mask: int, letters: Sequence[int]) -> int:
    # S(uv)^-1 = (Sv^-1)u^-1, so fold from the last letter backwards.
    for a in reversed(letters):
        mask = preimage_mask(dfa, mask, a)
    return mask


def _check_set(dfa: Dfa, s: StateSet) -> int:
    if s.n != dfa.n:
        raise ValueError(f"state set is over {s.n} states, automaton has {dfa.n}")
    return s.mask


def _check_letter(dfa: Dfa, a: Union[int, str]) -> int:
    if isinstance(a, str):
        idx = dfa.letters.find(a)
        if idx < 0:
            raise ValueError(f"unknown letter {a!r} (alphabet {dfa.letters!r})")
        return idx
    if not 0 <= a < dfa.k:
        raise ValueError(f"letter index {a} out of range 0..{dfa.k - 1}")
    return a


def _check_word(dfa: Dfa, w: WordLike) -> Word:
    word = dfa.word(w) if isinstance(w, str) else as_word(w)
    for a in word:
        if a >= dfa.k:
            raise ValueError(f"letter index {a} out of range for k={dfa.k}")
    return word


# ---------------------------------------------------------------------------
# public operations
# ---------------------------------------------------------------------------

def image(dfa: Dfa, s: StateSet, w: WordLike) -> StateSet:
    """The set s moved forward by the word w (first letter acts first)."""
    word = _check_word(dfa, w)
    return StateSet.from_mask(image_word_mask(dfa, _check_set(dfa, s), word.letters), dfa.n)


def preimage(dfa: Dfa, s: StateSet, a: Union[int, str]) -> StateSet:
    """All states that the single letter a sends into s."""
    return StateSet.from_mask(
        preimage_mask(dfa, _check_set(dfa, s), _check_letter(dfa, a)), dfa.n
    )


def preimage_word(dfa: Dfa, s: StateSet, w: WordLike) -> StateSet:
    """All states that the word w sends into s."""
    word = _check_word(dfa, w)
    return StateSet.from_mask(
        preimage_word_mask(dfa, _check_set(dfa, s), word.letters), dfa.n
    )


def rank(dfa: Dfa, w: WordLike) -> int:
    """Size of the image of the full state set under w."""
    word = _check_word(dfa, w)
    return image_word_mask(dfa, dfa.full_mask, word.letters).bit_count()


def shortest_compressing_word(dfa: Dfa, s: StateSet) -> Optional[Word]:
    """Shortest word w with |sw| < |s|, or None if s is incompressible.

    Breadth-first search over the images of s; ties are broken by letter
    order.
    """
    mask = _check_set(dfa, s)
    card = mask.bit_count()
    if card < 2:
        raise ValueError("compressibility needs a set of at least two states")
    seen = {mask}
    queue = deque([(mask, ())])
    while queue:
        cur, w = queue.popleft()
        for a in range(dfa.k):
            nxt = image_mask(dfa, cur, a)
            if nxt in seen:
                continue
            seen.add(nxt)
            if nxt.bit_count() < card:
                return Word(w + (a,))
            queue.append((nxt, w + (a,)))
    return None


def is_compressible(dfa: Dfa, s: StateSet) -> bool:
    """True iff some word strictly shrinks the image of s."""
    return shortest_compressing_word(dfa, s) is not None


def is_strongly_connected(dfa: Dfa) -> bool:
    """True iff every state reaches every other along letter transitions."""
    n = dfa.n
    if n == 1:
        return True
    seen = 1
    stack = [0]
    while stack:
        p = stack.pop()
        for a in range(dfa.k):
            q = dfa.delta[a][p]
            if not seen >> q & 1:
                seen |= 1 << q
                stack.append(q)
    if seen != dfa.full_mask:
        return False
    # same walk along reversed edges
    seen = 1
    stack = [0]
    while stack:
        p = stack.pop()
        for a in range(dfa.k):
            new = dfa.inverse[a][p] & ~seen
            seen |= new
            while new:
                low = new & -new
                new ^= low
                stack.append(low.bit_length() - 1)
    return seen == dfa.full_mask


def is_synchronizing(dfa: Dfa) -> bool:
    """True iff some word maps every state to one state.

    Decided by backward reachability from the mergeable pairs in the
    graph of unordered state pairs, which avoids the exponential subset
    construction.
    """
    n = dfa.n
    if n == 1:
        return True
    pair_id = {}
    pairs = []
    for p in range(n):
        for q in range(p + 1, n):
            pair_id[p, q] = len(pairs)
            pairs.append((p, q))
    good = [False] * len(pairs)
    queue = deque()
    for i, (p, q) in enumerate(pairs):
        if any(dfa.delta[a][p] == dfa.delta[a][q] for a in range(dfa.k)):
            good[i] = True
            queue.append((p, q))
    while queue:
        r, s = queue.popleft()
        for a in range(dfa.k):
            pm = dfa.inverse[a][r]
            while pm:
                lp = pm & -pm
                pm ^= lp
                p = lp.bit_length() - 1
                sm = dfa.inverse[a][s]
                while sm:
                    ls = sm & -sm
                    sm ^= ls
                    q = ls.bit_length() - 1
                    if p == q:
                        continue
                    key = (p, q) if p < q else (q, p)
                    i = pair_id[key]
                    if not good[i]:
                        good[i] = True
                        queue.append(key)
    return all(good)


def remove_letter(dfa: Dfa, a: Union[int, str]) -> Dfa:
    """The same automaton without letter a; remaining letters keep their order."""
    idx = _check_letter(dfa, a)
    if dfa.k == 1:
        raise ValueError("cannot remove the only letter")
    rows = [
        [t + 1 for t in dfa.delta[b]] for b in range(dfa.k) if b != idx
    ]
    names = dfa.letters[:idx] + dfa.letters[idx + 1:]
    return Dfa(dfa.n, dfa.k - 1, rows, names)
