"""
Extremal index machinery: the basis-exchange maps Xi and Xi*, extremal
chains per size, the first-extremal-iterate map e, and the independent
generating index set of a cell (one fresh wiring edge per member).

All maps only consult the support (nonzero / finite) pattern, so they act
uniformly on classical vectors, tropical vectors, and bare cell supports.

>>> from tnnflag.perms import perm_from_str
>>> sup = cell_support(perm_from_str("1324"), perm_from_str("4213"))
>>> xi(sup, (1,))
(3,)
>>> xi(sup, (1, 3))
(2, 3)
"""

__all__ = [
    "SupportVector", "ExtremalChain", "Generator",
    "is_supported", "xi", "xi_star", "extremal_indices",
    "extremal_index_set", "e", "cell_support", "generators", "s_vw",
    "precedes_key",
]

from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping, Union

from .perms import Perm, bruhat_interval, gale_leq, inverse, length
from .plucker import Index, PlueckerVector, TropPlueckerVector
from .wiring import (
    PathCollection, SignedMonomial, build_diagram, collection_weight,
    enumerate_path_collections,
)


@dataclass(frozen=True)
class SupportVector:
    """A bare support pattern: which indices are nonzero/finite, per size."""
    n: int
    sets: Mapping[int, frozenset[Index]]


Supported = Union[PlueckerVector, TropPlueckerVector, SupportVector]


def is_supported(p: Supported, I) -> bool:
    I = tuple(sorted(I))
    if isinstance(p, SupportVector):
        return I in p.sets.get(len(I), frozenset())
    if isinstance(p, TropPlueckerVector):
        return not p.coord(I).is_inf
    return p.coord(I) != 0


@lru_cache(maxsize=None)
def cell_support(v: Perm, w: Perm) -> SupportVector:
    """Indices supported on the cell: prefixes {u(1..k)} over the Bruhat
    interval v^-1 <= u <= w^-1."""
    n = len(v)
    sets: dict[int, set[Index]] = {k: set() for k in range(1, n)}
    for u in bruhat_interval(inverse(v), inverse(w)):
        for k in range(1, n):
            sets[k].add(tuple(sorted(u[:k])))
    return SupportVector(n, {k: frozenset(s) for k, s in sets.items()})


# ---------------------------------------------------------------------------
# Xi and extremal chains
# ---------------------------------------------------------------------------

def xi(p: Supported, I) -> Index:
    """Swap out b = the largest increasable element of I for the largest
    element that keeps the index supported; fixed point when none exists
    or I itself is unsupported.
    """
    I = tuple(sorted(I))
    if not is_supported(p, I):
        return I
    n = p.n
    inside = set(I)
    b = None
    for i in sorted(I, reverse=True):
        rest = tuple(sorted(inside - {i}))
        if any(j > i and is_supported(p, tuple(sorted(rest + (j,))))
               for j in range(1, n + 1) if j not in inside):
            b = i
            break
    if b is None:
        return I
    rest = tuple(sorted(inside - {b}))
    a = max(j for j in range(1, n + 1)
            if j not in inside and is_supported(p, tuple(sorted(rest + (j,)))))
    return tuple(sorted(rest + (a,)))


def xi_star(p: Supported, I) -> Index:
    """Dual of xi: lowers the index maximally (min in place of max)."""
    I = tuple(sorted(I))
    if not is_supported(p, I):
        return I
    n = p.n
    inside = set(I)
    b = None
    for i in sorted(I):
        rest = tuple(sorted(inside - {i}))
        if any(j < i and is_supported(p, tuple(sorted(rest + (j,))))
               for j in range(1, n + 1) if j not in inside):
            b = i
            break
    if b is None:
        return I
    rest = tuple(sorted(inside - {b}))
    a = min(j for j in range(1, n + 1)
            if j not in inside and is_supported(p, tuple(sorted(rest + (j,)))))
    return tuple(sorted(rest + (a,)))


@dataclass(frozen=True)
class ExtremalChain:
    size: int
    chain: tuple[Index, ...]   # Gale-minimal first, Gale-maximal last


def extremal_indices(p: Supported) -> list[ExtremalChain]:
    """Per size, the Xi-orbit chain from the Gale-minimal supported index.

    Requires the support to be a flag matroid (checked via the brute-force
    verifier).
    """
    from .oracle import flag_matroid_check  # late import: oracle builds on us

    sup = p.sets if isinstance(p, SupportVector) else p.support()
    if not flag_matroid_check(sup):
        raise ValueError("support is not a flag matroid")
    out = []
    for k in range(1, p.n):
        if not sup[k]:
            raise ValueError(f"no supported index of size {k}")
        start = min(sup[k])
        if not all(gale_leq(start, J) for J in sup[k]):
            raise ValueError(f"size {k} has no Gale-minimal supported index")
        chain = [start]
        while True:
            nxt = xi(p, chain[-1])
            if nxt == chain[-1]:
                break
            chain.append(nxt)
        out.append(ExtremalChain(k, tuple(chain)))
    return out


def extremal_index_set(p: Supported) -> frozenset[Index]:
    return frozenset(I for ch in extremal_indices(p) for I in ch.chain)


def e(p: Supported, S) -> Index:
    """Least Xi-iterate of S landing on an extremal index."""
    S = tuple(sorted(S))
    if not is_supported(p, S):
        raise ValueError(f"index {S} is not supported")
    extremals = extremal_index_set(p)
    cur = S
    while cur not in extremals:
        nxt = xi(p, cur)
        if nxt == cur:
            raise AssertionError(f"Xi stalled at non-extremal {cur} (bug)")
        cur = nxt
    return cur


def precedes_key(I: Index):
    """Sort key for the traversal order: larger size first, then lex."""
    return (-len(I), I)


# ---------------------------------------------------------------------------
# Independent generators
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Generator:
    """One extremal index together with its unique path collection; when the
    collection uses a wiring edge not seen at any earlier extremal index,
    that edge's weight is newly solvable from this coordinate."""
    index: Index
    collection: PathCollection
    monomial: SignedMonomial
    new_weight_id: int | None
    in_svw: bool


@lru_cache(maxsize=None)
def generators(v: Perm, w: Perm) -> tuple[Generator, ...]:
    d = build_diagram(v, w)
    sup = cell_support(v, w)
    chains = extremal_indices(sup)
    minimal = {ch.chain[0] for ch in chains}
    order = sorted((I for ch in chains for I in ch.chain), key=precedes_key)
    used: set[int] = set()
    out: list[Generator] = []
    for I in order:
        colls = enumerate_path_collections(d, range(1, len(I) + 1), I)
        if len(colls) != 1:
            raise AssertionError(
                f"extremal index {I} admits {len(colls)} collections (bug)")
        coll = colls[0]
        mono = collection_weight(coll, d)
        if mono.sign != 1 or any(e != 1 for e in mono.exponents.values()):
            raise AssertionError(f"extremal coordinate at {I} is not a "
                                 "plain positive monomial (bug)")
        fresh = sorted(set(mono.exponents) - used)
        used |= set(mono.exponents)
        if I in minimal:
            if mono.exponents:
                raise AssertionError(f"Gale-minimal {I} has a non-diagonal "
                                     "collection (bug)")
            out.append(Generator(I, coll, mono, None, True))
        elif fresh:
            if len(fresh) != 1:
                raise AssertionError(
                    f"extremal index {I} introduces {len(fresh)} new edges; "
                    "expected exactly one (bug)")
            out.append(Generator(I, coll, mono, fresh[0], True))
        else:
            out.append(Generator(I, coll, mono, None, False))
    solved = {g.new_weight_id for g in out if g.new_weight_id is not None}
    if solved != set(d.weight_ids()):
        raise AssertionError("not every weight got an independent generator (bug)")
    return tuple(out)


def s_vw(v: Perm, w: Perm) -> list[Index]:
    """The independent generating indices, in traversal order: the n-1
    Gale-minimal indices plus one index per cell weight.
    """
    result = [g.index for g in generators(v, w) if g.in_svw]
    n = len(v)
    if len(result) != (n - 1) + (length(w) - length(v)):
        raise AssertionError("independent generator count mismatch (bug)")
    return result


if __name__ == "__main__":
    import doctest
    doctest.testmod()
