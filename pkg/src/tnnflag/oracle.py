"""
Independent brute-force verifiers: exhaustive-enumeration supports, a
subword-search Bruhat test, cofactor determinants, random flags, and
sampled elements of the quadratic ideal. These deliberately avoid the
library's fast code paths so they can serve as oracles in tests.
"""

__all__ = [
    "determinant_cofactor", "reduced_word_oracle", "bruhat_leq_oracle",
    "support_oracle", "flag_matroid_check", "random_flag",
    "generic_weights", "ideal_element_sample",
]

import itertools
import random
from fractions import Fraction
from typing import Iterable, Mapping

from .perms import Perm, identity, inverse, left_mult_s, right_mult_s
from .plucker import (
    Index, PlueckerVector, all_proper_indices, generate_relations, phi,
)
from .wiring import build_diagram

_MAX_N = 7


def determinant_cofactor(m) -> Fraction:
    """Naive cofactor-expansion determinant (exponential; oracle only)."""
    n = len(m)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(m[0][0])
    total = Fraction(0)
    for c in range(n):
        if m[0][c] == 0:
            continue
        minor = [row[:c] + row[c + 1:] for row in m[1:]]
        total += (-1) ** c * Fraction(m[0][c]) * determinant_cofactor(minor)
    return total


def reduced_word_oracle(w: Perm) -> tuple[int, ...]:
    """A reduced word for w, built by stripping right descents."""
    letters: list[int] = []
    u = w
    n = len(w)
    while u != identity(n):
        i = next(i for i in range(1, n) if u[i - 1] > u[i])
        u = right_mult_s(u, i)
        letters.append(i)
    return tuple(reversed(letters))


def bruhat_leq_oracle(v: Perm, w: Perm) -> bool:
    """Subword property: v <= w iff some subword of a reduced word for w is
    a reduced word for v. Dynamic program consuming the word left to right.
    """
    word = reduced_word_oracle(w)
    n = len(v)
    memo: dict[tuple[int, Perm], bool] = {}

    def reachable(pos: int, target: Perm) -> bool:
        if target == identity(n):
            return True
        if pos == len(word):
            return False
        key = (pos, target)
        if key not in memo:
            i = word[pos]
            ok = reachable(pos + 1, target)
            # letter usable iff it shortens the target from the left
            if not ok and target.index(i) > target.index(i + 1):
                ok = reachable(pos + 1, left_mult_s(i, target))
            memo[key] = ok
        return memo[key]

    return reachable(0, v)


def support_oracle(v: Perm, w: Perm, k: int) -> set[Index]:
    """{sorted {u(1..k)} : v^-1 <= u <= w^-1} by exhaustive enumeration."""
    n = len(v)
    if n > _MAX_N:
        raise ValueError(f"support_oracle refuses n > {_MAX_N}")
    if not bruhat_leq_oracle(v, w):
        raise ValueError("v is not <= w in Bruhat order")
    vi, wi = inverse(v), inverse(w)
    out: set[Index] = set()
    for u in itertools.permutations(range(1, n + 1)):
        u = Perm(u)
        if bruhat_leq_oracle(vi, u) and bruhat_leq_oracle(u, wi):
            out.add(tuple(sorted(u[:k])))
    return out


def flag_matroid_check(support: Mapping[int, Iterable[Index]]) -> bool:
    """Basis exchange within each size class, and the two containment
    conditions for every pair of sizes j < k.
    """
    classes = {k: {tuple(sorted(B)) for B in bases}
               for k, bases in support.items()}
    for k, bases in classes.items():
        if not bases:
            return False
        if any(len(B) != k for B in bases):
            return False
        for B1 in bases:
            for B2 in bases:
                for x in set(B1) - set(B2):
                    rest = set(B1) - {x}
                    if not any(tuple(sorted(rest | {y})) in bases
                               for y in set(B2) - set(B1)):
                        return False
    sizes = sorted(classes)
    for j in sizes:
        for k in sizes:
            if j >= k:
                continue
            for B in classes[j]:
                if not any(set(B) <= set(C) for C in classes[k]):
                    return False
            for C in classes[k]:
                if not any(set(B) <= set(C) for B in classes[j]):
                    return False
    return True


def random_flag(n: int, seed: int) -> PlueckerVector:
    """Pluecker vector of a random invertible integer matrix (not normalized,
    not necessarily nonnegative); minors by the cofactor oracle."""
    if n > _MAX_N:
        raise ValueError(f"random_flag refuses n > {_MAX_N}")
    rng = random.Random(seed)
    while True:
        m = [[Fraction(rng.randint(-9, 9)) for _ in range(n)] for _ in range(n)]
        if determinant_cofactor(m) != 0:
            break
    coords: dict[Index, Fraction] = {}
    for I in all_proper_indices(n):
        minor = [[m[r][c - 1] for c in I] for r in range(len(I))]
        val = determinant_cofactor(minor)
        if val != 0:
            coords[I] = val
    return PlueckerVector(n, coords)


_PRIMES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59,
           61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113]


def generic_weights(v: Perm, w: Perm, seed: int) -> dict[int, Fraction]:
    """Positive weights with distinct prime numerators; two independent
    draws must produce the same support, otherwise both are resampled
    (protects against accidental coordinate collisions to zero).
    """
    ids = build_diagram(v, w).weight_ids()
    rng = random.Random(seed)

    def draw() -> dict[int, Fraction]:
        primes = rng.sample(_PRIMES, len(ids))
        return {j: Fraction(p, rng.randint(1, 7))
                for j, p in zip(ids, primes)}

    for _ in range(50):
        a1, a2 = draw(), draw()
        s1 = {I for I, x in phi(v, w, a1).coords.items() if x != 0}
        s2 = {I for I, x in phi(v, w, a2).coords.items() if x != 0}
        if s1 == s2:
            return a1
    raise RuntimeError("could not stabilize a generic support in 50 draws")


def ideal_element_sample(n: int, count: int, seed: int,
                         ) -> list[list[tuple[int, dict[Index, int]]]]:
    """Random small combinations sum_m q_m * gen_m of incidence relations,
    with monomial multipliers q_m; each returned polynomial is a list of
    (integer coefficient, exponent map) terms with like terms merged.
    """
    if n > 4:
        raise ValueError("ideal_element_sample refuses n > 4")
    gens = generate_relations(n)
    indices = list(all_proper_indices(n))
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        acc: dict[frozenset, int] = {}
        for _ in range(rng.randint(1, 3)):
            gen = rng.choice(gens)
            mult_coeff = rng.choice([-3, -2, -1, 1, 2, 3])
            mult_vars = rng.sample(indices, rng.randint(0, 2))
            for sign, left, right in gen.terms:
                mono: dict[Index, int] = {}
                for var in (left, right, *mult_vars):
                    mono[var] = mono.get(var, 0) + 1
                key = frozenset(mono.items())
                acc[key] = acc.get(key, 0) + mult_coeff * sign
        poly = [(c, dict(key)) for key, c in acc.items() if c != 0]
        out.append(poly)
    return out
