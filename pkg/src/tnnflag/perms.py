"""
Symmetric-group arithmetic: one-line permutations, Bruhat order, reduced
words, and positive distinguished subexpressions inside the canonical
longest word.

Permutations are 1-indexed tuples in one-line notation, so ``(4, 2, 1, 3)``
is the map 1 -> 4, 2 -> 2, 3 -> 1, 4 -> 3.

>>> length((4, 2, 1, 3))
4
>>> bruhat_leq((1, 3, 2, 4), (4, 2, 1, 3))
True
>>> canonical_w0_word(3)
Word(n=3, letters=(1, 2, 1), runs=(1, 1, 2))
"""

__all__ = [
    "Perm", "IndexSet", "Word", "Subexpression",
    "identity", "inverse", "compose", "length", "is_perm",
    "left_mult_s", "right_mult_s", "perm_from_word", "longest_element",
    "perm_from_str", "perm_to_str", "all_perms",
    "gale_leq", "bruhat_leq", "bruhat_interval",
    "canonical_w0_word", "positive_distinguished_subexpression",
    "is_positive_distinguished",
]

import itertools
from dataclasses import dataclass
from typing import Iterator, NewType

# a permutation of {1..n} in one-line notation
Perm = NewType("Perm", tuple[int, ...])

# a sorted subset of {1..n}
IndexSet = NewType("IndexSet", tuple[int, ...])


def identity(n: int) -> Perm:
    return Perm(tuple(range(1, n + 1)))


def is_perm(w: tuple[int, ...]) -> bool:
    """
    >>> is_perm((2, 1, 3)), is_perm((1, 1, 2))
    (True, False)
    """
    return sorted(w) == list(range(1, len(w) + 1))


def inverse(w: Perm) -> Perm:
    """
    >>> inverse((3, 1, 2))
    (2, 3, 1)
    """
    inv = [0] * len(w)
    for i, x in enumerate(w, start=1):
        inv[x - 1] = i
    return Perm(tuple(inv))


def compose(u: Perm, v: Perm) -> Perm:
    """(u o v)(i) = u(v(i)).

    >>> compose((2, 1, 3, 4), (2, 1, 3, 4))
    (1, 2, 3, 4)
    """
    if len(u) != len(v):
        raise ValueError("mismatched n")
    return Perm(tuple(u[x - 1] for x in v))


def length(w: Perm) -> int:
    """Number of inversions of the one-line notation."""
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def left_mult_s(i: int, w: Perm) -> Perm:
    """s_i * w: swap the *values* i and i+1 in the one-line notation."""
    return Perm(tuple(i + 1 if x == i else i if x == i + 1 else x for x in w))


def right_mult_s(w: Perm, i: int) -> Perm:
    """w * s_i: swap the entries at *positions* i and i+1."""
    lst = list(w)
    lst[i - 1], lst[i] = lst[i], lst[i - 1]
    return Perm(tuple(lst))


def perm_from_word(n: int, letters: tuple[int, ...]) -> Perm:
    """Evaluate a word in the generators s_1..s_{n-1} left to right."""
    w = identity(n)
    for i in letters:
        w = right_mult_s(w, i)
    return w


def longest_element(n: int) -> Perm:
    return Perm(tuple(range(n, 0, -1)))


def perm_to_str(w: Perm) -> str:
    """Comma-free digits for n <= 9 ("4213"), comma-separated beyond."""
    if len(w) <= 9:
        return "".join(str(x) for x in w)
    return ",".join(str(x) for x in w)


def perm_from_str(s: str) -> Perm:
    """Parse "4,2,1,3" or (for n <= 9) the comma-free form "4213"."""
    s = s.strip()
    parts = s.split(",") if "," in s else list(s)
    try:
        w = tuple(int(x) for x in parts)
    except ValueError as exc:
        raise ValueError(f"not a permutation: {s!r}") from exc
    if not is_perm(w):
        raise ValueError(f"not a permutation: {s!r}")
    return Perm(w)


def all_perms(n: int) -> Iterator[Perm]:
    for w in itertools.permutations(range(1, n + 1)):
        yield Perm(w)


# ---------------------------------------------------------------------------
# Orders
# ---------------------------------------------------------------------------

def gale_leq(I: tuple[int, ...], J: tuple[int, ...]) -> bool:
    """Componentwise order on equal-size subsets after sorting.

    >>> gale_leq((1, 3), (2, 3)), gale_leq((1, 4), (2, 3))
    (True, False)
    """
    if len(I) != len(J):
        raise ValueError("size mismatch")
    return all(i <= j for i, j in zip(sorted(I), sorted(J)))


def bruhat_leq(v: Perm, w: Perm) -> bool:
    """Tableau criterion: {v(1..k)} <= {w(1..k)} in Gale order for all k.

    >>> bruhat_leq((1, 3, 2, 4), (4, 2, 1, 3))
    True
    """
    if len(v) != len(w):
        raise ValueError("mismatched n")
    n = len(v)
    vk: list[int] = []
    wk: list[int] = []
    for k in range(1, n + 1):
        vk = sorted(vk + [v[k - 1]])
        wk = sorted(wk + [w[k - 1]])
        if not all(a <= b for a, b in zip(vk, wk)):
            return False
    return True


def bruhat_interval(v: Perm, w: Perm) -> set[Perm]:
    """{u : v <= u <= w}, computed with bruhat_leq."""
    if not bruhat_leq(v, w):
        raise ValueError("v is not <= w in Bruhat order")
    return {u for u in all_perms(len(v))
            if bruhat_leq(v, u) and bruhat_leq(u, w)}


# ---------------------------------------------------------------------------
# Words and positive distinguished subexpressions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Word:
    """A word in the generators s_i, with run annotations when the word is
    (a subword of) the canonical longest word (s_1..s_{n-1})(s_1..s_{n-2})...(s_1).
    """
    n: int
    letters: tuple[int, ...]
    runs: tuple[int, ...] | None = None

    def evaluation(self) -> Perm:
        return perm_from_word(self.n, self.letters)

    def __len__(self) -> int:
        return len(self.letters)


@dataclass(frozen=True)
class Subexpression:
    """A choice of positions (1-based, strictly increasing) inside a word."""
    parent: Word
    positions: tuple[int, ...]

    def letters(self) -> tuple[int, ...]:
        return tuple(self.parent.letters[p - 1] for p in self.positions)

    def runs(self) -> tuple[int, ...] | None:
        if self.parent.runs is None:
            return None
        return tuple(self.parent.runs[p - 1] for p in self.positions)

    def evaluation(self) -> Perm:
        return perm_from_word(self.parent.n, self.letters())


def canonical_w0_word(n: int) -> Word:
    """The run-annotated word (s_1...s_{n-1})(s_1...s_{n-2})...(s_1).

    >>> canonical_w0_word(4).letters
    (1, 2, 3, 1, 2, 1)
    """
    letters: list[int] = []
    runs: list[int] = []
    for r in range(1, n):
        for i in range(1, n - r + 1):
            letters.append(i)
            runs.append(r)
    return Word(n, tuple(letters), tuple(runs))


def positive_distinguished_subexpression(target: Perm, parent: Word) -> Subexpression:
    """The unique leftmost reduced subexpression for ``target`` in ``parent``.

    Scans left to right keeping the still-unmatched piece of the target;
    a position is chosen exactly when its letter shortens that piece on
    the left.

    >>> positive_distinguished_subexpression(
    ...     (3, 2, 1, 4), canonical_w0_word(4)).positions
    (1, 2, 4)
    """
    remaining = target
    positions: list[int] = []
    for p, i in enumerate(parent.letters, start=1):
        # s_i * remaining is shorter iff value i appears after value i+1
        if remaining.index(i) > remaining.index(i + 1):
            positions.append(p)
            remaining = left_mult_s(i, remaining)
    if remaining != identity(parent.n):
        raise ValueError("target is not below the parent word in Bruhat order")
    return Subexpression(parent, tuple(positions))


def is_positive_distinguished(sub: Subexpression, target: Perm) -> bool:
    """Position-by-position recheck of the defining condition: whenever a
    letter shortens the unmatched piece, that position must be chosen.
    """
    chosen = set(sub.positions)
    remaining = target
    for p, i in enumerate(sub.parent.letters, start=1):
        shortens = remaining.index(i) > remaining.index(i + 1)
        if shortens != (p in chosen):
            return False
        if shortens:
            remaining = left_mult_s(i, remaining)
    return remaining == identity(sub.parent.n)


if __name__ == "__main__":
    import doctest
    doctest.testmod()
