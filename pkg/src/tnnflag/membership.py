"""
Inverting the cell parameterization and deciding membership: cell
identification from a support pattern, the Laurent-monomial inverse map
(classical and min-plus), certificate-producing decision procedures for
the nonnegative flag variety and the nonnegative flag Dressian, and the
three-term propagation that rebuilds a vector from its extremal values.

>>> from tnnflag.perms import perm_from_str
>>> from fractions import Fraction
>>> from tnnflag.plucker import phi
>>> v, w = perm_from_str("1324"), perm_from_str("4213")
>>> p = phi(v, w, {1: Fraction(2), 2: Fraction(3), 4: Fraction(5)})
>>> cert = decide_tnn(p)
>>> cert.verdict, cert.cell == (v, w)
('member', True)
"""

__all__ = [
    "CellCertificate", "identify_cell", "psi_monomials", "psi", "trop_psi",
    "decide_tnn", "decide_trop",
    "propagate_three_term", "trop_propagate_three_term",
]

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from .algebra import (
    TROP_INF, LaurentMonomial, Trop, eval_monomial, monomial_div,
    rat_to_str, trop_eval_monomial, trop_to_str,
)
from .perms import Perm, bruhat_leq, gale_leq, inverse, perm_to_str
from .plucker import (
    Index, PlueckerVector, TropPlueckerVector, generate_relations,
    index_to_str, phi, trop_check_relation, trop_phi,
)
from .extremal import (
    SupportVector, cell_support, extremal_index_set, generators,
    is_supported, s_vw, xi,
)
from .wiring import build_diagram, enumerate_path_collections


@dataclass
class CellCertificate:
    verdict: str                                   # "member" | "non-member"
    cell: tuple[Perm, Perm] | None = None
    weights: dict[int, object] | None = None       # Fraction or Trop values
    witness: dict | None = None

    def to_json_dict(self) -> dict:
        out: dict = {"verdict": self.verdict}
        if self.cell is not None:
            out["v"] = perm_to_str(self.cell[0])
            out["w"] = perm_to_str(self.cell[1])
        if self.weights is not None:
            out["weights"] = {
                str(j): (trop_to_str(x) if isinstance(x, Trop) else rat_to_str(x))
                for j, x in sorted(self.weights.items())}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


def _non_member(witness: dict) -> CellCertificate:
    return CellCertificate("non-member", witness=witness)


# ---------------------------------------------------------------------------
# Cell identification
# ---------------------------------------------------------------------------

def identify_cell(support: Mapping[int, set], n: int) -> tuple[Perm, Perm]:
    """Read v^-1 off the Gale-minimal chain increments and w^-1 off the
    Gale-maximal chain; raises ValueError when the chains do not exist,
    are not nested, or v is not <= w (all signal non-membership).
    """
    mins: list[Index] = []
    maxs: list[Index] = []
    for k in range(1, n):
        bases = {tuple(sorted(B)) for B in support.get(k, set())}
        if not bases:
            raise ValueError(f"no supported index of size {k}")
        lo, hi = min(bases), max(bases)
        if not all(gale_leq(lo, B) and gale_leq(B, hi) for B in bases):
            raise ValueError(f"size {k} has no Gale extremes")
        mins.append(lo)
        maxs.append(hi)

    def chain_to_perm(chain: list[Index]) -> Perm:
        images: list[int] = []
        seen: set[int] = set()
        for k, I in enumerate(chain, start=1):
            new = set(I) - seen
            if len(I) != k or not seen <= set(I) or len(new) != 1:
                raise ValueError("Gale-extreme indices do not form a flag")
            images.append(new.pop())
            seen = set(I)
        images.extend(sorted(set(range(1, n + 1)) - seen))
        return inverse(Perm(tuple(images)))

    v, w = chain_to_perm(mins), chain_to_perm(maxs)
    if not bruhat_leq(v, w):
        raise ValueError("no cell: v is not <= w in Bruhat order")
    return v, w


# ---------------------------------------------------------------------------
# The inverse map
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def psi_monomials(v: Perm, w: Perm) -> dict[int, LaurentMonomial]:
    """Each cell weight as a Laurent monomial in the coordinates at the
    independent generating indices: traversing extremal indices, each
    monomial coordinate P_I = prod(weights on its unique collection)
    solves its one fresh weight.
    """
    solved: dict[int, LaurentMonomial] = {}
    for gen in generators(v, w):
        if gen.new_weight_id is None:
            continue
        mono = LaurentMonomial(Fraction(1), {gen.index: 1})
        for wid in gen.monomial.exponents:
            if wid != gen.new_weight_id:
                mono = monomial_div(mono, solved[wid])
        solved[gen.new_weight_id] = mono
    return solved


def psi(v: Perm, w: Perm, p: PlueckerVector) -> dict[int, Fraction]:
    """Recover the cell weights from the coordinates at the independent
    generating indices (which must be strictly positive)."""
    values: dict[Index, Fraction] = {}
    for I in s_vw(v, w):
        val = p.coord(I)
        if val <= 0:
            raise ValueError(f"coordinate at generating index {I} is not positive")
        values[I] = val
    return {j: eval_monomial(m, values)
            for j, m in psi_monomials(v, w).items()}


def trop_psi(v: Perm, w: Perm, p: TropPlueckerVector) -> dict[int, Trop]:
    """The same Laurent monomials read min-plus (pure sums and differences)."""
    values: dict[Index, Trop] = {}
    for I in s_vw(v, w):
        val = p.coord(I)
        if val.is_inf:
            raise ValueError(f"coordinate at generating index {I} is infinite")
        values[I] = val
    return {j: trop_eval_monomial(m, values)
            for j, m in psi_monomials(v, w).items()}


# ---------------------------------------------------------------------------
# Decision procedures
# ---------------------------------------------------------------------------

def _first_index_order(indices) -> list[Index]:
    return sorted(indices, key=lambda I: (len(I), I))


def decide_tnn(p: PlueckerVector) -> CellCertificate:
    """Decide membership in the nonnegative complete flag variety by
    reconstruction-and-compare, certifying members by (v, w, weights)."""
    from .oracle import flag_matroid_check

    for I in _first_index_order(p.coords):
        if p.coords[I] < 0:
            return _non_member({"type": "negative-coordinate",
                                "index": index_to_str(I),
                                "value": rat_to_str(p.coords[I])})
    support = p.support()
    if not flag_matroid_check(support):
        return _non_member({"type": "support-not-flag-matroid"})
    try:
        v, w = identify_cell(support, p.n)
    except ValueError as exc:
        return _non_member({"type": "no-cell", "reason": str(exc)})
    q = p.canonicalize()
    try:
        weights = psi(v, w, q)
    except ValueError as exc:
        return _non_member({"type": "unsupported-generating-index",
                            "reason": str(exc)})
    if any(x <= 0 for x in weights.values()):
        return _non_member({"type": "nonpositive-weight"})
    r = phi(v, w, weights)
    for I in _first_index_order(set(q.coords) | set(r.coords)):
        if q.coord(I) != r.coord(I):
            return _non_member({
                "type": "reconstruction-mismatch", "index": index_to_str(I),
                "input": rat_to_str(q.coord(I)),
                "reconstructed": rat_to_str(r.coord(I))})
    return CellCertificate("member", cell=(v, w), weights=dict(weights))


def decide_trop(p: TropPlueckerVector) -> CellCertificate:
    """Decide membership in the nonnegative flag Dressian: every three-term
    tropical relation must be positively solved, and the vector must
    reconstruct exactly from its cell weights."""
    for rel in generate_relations(p.n, True):
        if not trop_check_relation(rel, p, positive=True):
            return _non_member({
                "type": "violated-tropical-relation",
                "I": index_to_str(rel.I) if rel.I else "",
                "J": index_to_str(rel.J),
                "terms": [[sign, index_to_str(a), index_to_str(b)]
                          for sign, a, b in rel.terms]})
    support = p.support()
    try:
        v, w = identify_cell(support, p.n)
    except ValueError as exc:
        return _non_member({"type": "no-cell", "reason": str(exc)})
    q = p.canonicalize()
    try:
        x = trop_psi(v, w, q)
    except ValueError as exc:
        return _non_member({"type": "unsupported-generating-index",
                            "reason": str(exc)})
    r = trop_phi(v, w, x)
    for I in _first_index_order(set(q.coords) | set(r.coords)):
        if q.coord(I) != r.coord(I):
            return _non_member({
                "type": "reconstruction-mismatch", "index": index_to_str(I),
                "input": trop_to_str(q.coord(I)),
                "reconstructed": trop_to_str(r.coord(I))})
    return CellCertificate("member", cell=(v, w), weights=dict(x))


# ---------------------------------------------------------------------------
# Three-term propagation
# ---------------------------------------------------------------------------

class _ClassicalOps:
    zero = Fraction(0)
    @staticmethod
    def mul(a, b):
        return a * b
    @staticmethod
    def div(a, b):
        return a / b
    @staticmethod
    def add(a, b):
        return a + b


class _TropicalOps:
    zero = TROP_INF
    @staticmethod
    def mul(a, b):
        return a * b
    @staticmethod
    def div(a, b):
        return a / b
    @staticmethod
    def add(a, b):
        return min(a, b)


def _case_c_witness(v: Perm, w: Perm, S: Index, b: int, c: int,
                    sup: SupportVector) -> tuple[int, int]:
    """Pick the strand pair (x, y): the lowest-origin non-diagonal path of a
    collection realizing S starts at x and ends at y."""
    d = build_diagram(v, w)
    k = len(S)
    for coll in enumerate_path_collections(d, range(1, k + 1), S):
        nondiag = [p for p in coll.paths if p.edges]
        if not nondiag:
            continue
        p = min(nondiag, key=lambda p: p.start_strand)
        x, y = p.start_strand, p.sink
        if x >= b or y == b or (b < y < c):
            continue
        if not is_supported(sup, tuple(sorted((set(S) - {y}) | {x}))):
            continue
        if not is_supported(sup, tuple(sorted((set(S) - {b, y}) | {c, x}))):
            continue
        return x, y
    raise ValueError("three-term propagation: no usable relation at "
                     f"{S} (inconsistent input)")


def _propagate(values: Mapping[Index, object], cell: tuple[Perm, Perm], ops):
    v, w = cell
    n = len(v)
    sup = cell_support(v, w)
    extremals = extremal_index_set(sup)
    known: dict[Index, object] = {}
    for I in extremals:
        if I not in values:
            raise ValueError(f"missing value at extremal index {I}")
        known[I] = values[I]

    def val(I) -> object:
        I = tuple(sorted(I))
        if not is_supported(sup, I):
            return ops.zero
        if I not in known:
            raise AssertionError(f"propagation needs {I} before it is known (bug)")
        return known[I]

    def first_extremal(S: Index) -> Index:
        cur = S
        while cur not in extremals:
            cur = xi(sup, cur)
        return cur

    for k in range(n - 1, 0, -1):
        pending = [S for S in sup.sets[k] if S not in extremals]
        pending.sort(key=lambda S: (len(set(first_extremal(S)) - set(S)), sum(S), S))
        for S in pending:
            eS = first_extremal(S)
            b = min(set(S) - set(eS))
            it = S
            while b in it:
                it = xi(sup, it)
            cands = [c for c in set(it) - set(S)
                     if c > b and is_supported(sup, tuple(sorted((set(S) - {b}) | {c})))]
            if not cands:
                raise ValueError(f"three-term propagation stuck at {S} "
                                 "(inconsistent input)")
            c = min(cands)
            outside = [a for a in range(1, n + 1) if a not in S and a < b]
            sb = set(S) - {b}
            a_full = [a for a in outside
                      if is_supported(sup, tuple(sorted(S + (a,))))]
            if a_full:
                a = max(a_full)
                num = ops.add(
                    ops.mul(val(sb | {c}), val(set(S) | {a})),
                    ops.mul(val(sb | {a}), val(set(S) | {c})))
                known[S] = ops.div(num, val(sb | {a, c}))
                continue
            a_swap = [a for a in outside if is_supported(sup, tuple(sorted(sb | {a})))]
            if a_swap:
                a = max(a_swap)
                d_cands = [dd for dd in range(b + 1, n + 1) if dd not in S
                           and is_supported(sup, tuple(sorted(S + (dd,))))]
                if not d_cands:
                    raise ValueError(f"three-term propagation stuck at {S} "
                                     "(inconsistent input)")
                dd = min(d_cands)
                known[S] = ops.div(
                    ops.mul(val(sb | {a}), val(set(S) | {dd})),
                    val(sb | {a, dd}))
                continue
            x, y = _case_c_witness(v, w, S, b, c, sup)
            known[S] = ops.div(
                ops.mul(val((set(S) - {y}) | {x}), val(sb | {c})),
                val((set(S) - {b, y}) | {c, x}))
    return known


def propagate_three_term(values: Mapping[Index, Fraction],
                         cell: tuple[Perm, Perm]) -> PlueckerVector:
    """Rebuild every supported coordinate from the extremal values by
    solving one three-term relation per unknown (largest size first, then
    distance to the extremal chain, then Gale order)."""
    known = _propagate(values, cell, _ClassicalOps)
    return PlueckerVector(len(cell[0]), dict(known)).canonicalize()


def trop_propagate_three_term(values: Mapping[Index, Trop],
                              cell: tuple[Perm, Perm]) -> TropPlueckerVector:
    """Min-plus version of propagate_three_term; every unknown sits alone on
    the monomial side of its relation, so no minimization is needed to
    solve for it."""
    known = _propagate(values, cell, _TropicalOps)
    return TropPlueckerVector(len(cell[0]), dict(known)).canonicalize()


if __name__ == "__main__":
    import doctest
    doctest.testmod()
