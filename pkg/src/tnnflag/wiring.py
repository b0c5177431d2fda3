"""
Planar wiring diagrams for Bruhat pairs v <= w: n horizontal strands,
weighted vertical edges, and signed diagonal segments, together with
enumeration of non-intersecting path collections and their signed
Laurent-monomial weights.

Geometry conventions: strand r is the r-th from the bottom; sinks are the
right ends of the strands (sink r on strand r); sources are primed labels
attached to the left ends, bottom to top. Every object carries an x-key:
vertical edges use the position of their letter in the canonical longest
word (so larger keys are further right), and the -1 diagonal segments sit
at half-integral keys between two letters.

>>> from tnnflag.perms import perm_from_str
>>> d = build_diagram(perm_from_str("1324"), perm_from_str("4213"))
>>> d.source_label
(1, 3, 2, 4)
>>> [(e.weight_id, e.lower, e.upper) for e in d.edges]
[(1, 1, 3), (2, 2, 4), (4, 1, 2)]
"""

__all__ = [
    "VerticalEdge", "NegativeSegment", "WiringDiagram",
    "Path", "PathCollection", "SignedMonomial",
    "build_diagram", "enumerate_path_collections", "collection_weight",
    "left_greedy_collection", "graph_extremal_collections",
    "path_sum_matrix", "dump",
]

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping

from .perms import (
    Perm, Word, bruhat_leq, canonical_w0_word, identity, length,
    positive_distinguished_subexpression,
)


@dataclass(frozen=True)
class VerticalEdge:
    weight_id: int          # position of the letter within w's reduced word
    key: int                # position of the letter within the canonical word
    column: int             # n + 1 - run
    lower: int              # strand at the bottom end (after any reattachment)
    upper: int              # strand at the top end; always lower < upper


@dataclass(frozen=True)
class NegativeSegment:
    strand: int
    key: Fraction           # half-integral: left boundary of the crossing's column
    columns: tuple[int, int]  # the two columns the segment sits between


@dataclass(frozen=True)
class WiringDiagram:
    n: int
    cell: tuple[Perm, Perm]
    source_label: tuple[int, ...]   # strand r (bottom = 1) -> primed label
    edges: tuple[VerticalEdge, ...]
    neg_segments: tuple[NegativeSegment, ...]
    w_word: Word                    # the PDS of w inside the canonical word
    v_positions: tuple[int, ...]    # positions of v's PDS inside w_word

    def weight_ids(self) -> tuple[int, ...]:
        return tuple(sorted(e.weight_id for e in self.edges))

    def strand_of_label(self, label: int) -> int:
        return self.source_label.index(label) + 1


@dataclass(frozen=True)
class Path:
    """A source-to-sink path: ride the strand rightward, climb each edge."""
    source: int                     # primed label
    start_strand: int
    edges: tuple[VerticalEdge, ...]

    @property
    def sink(self) -> int:
        return self.edges[-1].upper if self.edges else self.start_strand

    @property
    def is_diagonal(self) -> bool:
        return not self.edges

    def intervals(self) -> tuple[tuple[int, Fraction, Fraction | None], ...]:
        """Closed occupancy intervals (strand, lo, hi); hi None = +infinity."""
        out = []
        strand = self.start_strand
        lo: Fraction = Fraction(0)
        for e in self.edges:
            out.append((strand, lo, Fraction(e.key)))
            strand, lo = e.upper, Fraction(e.key)
        out.append((strand, lo, None))
        return tuple(out)


@dataclass(frozen=True)
class PathCollection:
    paths: tuple[Path, ...]         # ordered by source label

    @property
    def sources(self) -> frozenset[int]:
        return frozenset(p.source for p in self.paths)

    @property
    def sinks(self) -> frozenset[int]:
        return frozenset(p.sink for p in self.paths)


@dataclass
class SignedMonomial:
    sign: int                       # +1 or -1, includes crossed -1 segments
    exponents: dict[int, int]       # weight_id -> multiplicity


# ---------------------------------------------------------------------------
# Construction
# ---------------------------------------------------------------------------

def _run_starts(n: int) -> dict[int, int]:
    """Canonical-word position of the first letter of each run."""
    starts, pos = {}, 1
    for r in range(1, n):
        starts[r] = pos
        pos += n - r
    return starts


@lru_cache(maxsize=None)
def build_diagram(v: Perm, w: Perm) -> WiringDiagram:
    """Replay the distinguished subexpressions of w (in the canonical word)
    and of v (in w's word): weight letters add vertical edges; crossing
    letters swap source labels, reattach edge endpoints, and leave a -1
    segment just left of their column.
    """
    if not bruhat_leq(v, w):
        raise ValueError("v is not <= w in Bruhat order")
    n = len(v)
    canonical = canonical_w0_word(n)
    w_sub = positive_distinguished_subexpression(w, canonical)
    w_word = Word(n, w_sub.letters(), w_sub.runs())
    canonical_pos = w_sub.positions
    v_sub = positive_distinguished_subexpression(v, w_word)
    v_pos = set(v_sub.positions)
    starts = _run_starts(n)

    labels = list(range(1, n + 1))
    edges: list[dict] = []
    segments: list[NegativeSegment] = []
    for j, (i, r) in enumerate(zip(w_word.letters, w_word.runs), start=1):
        column = n + 1 - r
        if j not in v_pos:
            edges.append({
                "weight_id": j, "key": canonical_pos[j - 1],
                "column": column, "lower": i, "upper": i + 1,
            })
        else:
            labels[i - 1], labels[i] = labels[i], labels[i - 1]
            for e in edges:
                for end in ("lower", "upper"):
                    if e[end] == i:
                        e[end] = i + 1
                    elif e[end] == i + 1:
                        e[end] = i
            # a crossing swaps the strands' whole contents, so -1 segments
            # already sitting on either strand travel to the other one
            segments = [
                NegativeSegment((2 * i + 1) - s.strand, s.key, s.columns)
                if s.strand in (i, i + 1) else s
                for s in segments
            ]
            segments.append(NegativeSegment(
                strand=i,
                key=Fraction(starts[r]) - Fraction(1, 2),
                columns=(column, column + 1),
            ))

    built = tuple(VerticalEdge(**e) for e in edges)
    if any(e.lower >= e.upper for e in built):
        raise AssertionError("downward vertical edge produced (bug)")
    if tuple(labels) != v:
        raise AssertionError("source labels do not read v bottom-to-top (bug)")
    return WiringDiagram(
        n=n, cell=(v, w), source_label=tuple(labels),
        edges=built, neg_segments=tuple(segments),
        w_word=w_word, v_positions=tuple(sorted(v_pos)),
    )


# ---------------------------------------------------------------------------
# Path enumeration
# ---------------------------------------------------------------------------

def _paths_from(d: WiringDiagram, strand: int, min_key: Fraction,
                ) -> Iterator[tuple[VerticalEdge, ...]]:
    yield ()
    for e in d.edges:
        if e.lower == strand and e.key > min_key:
            for rest in _paths_from(d, e.upper, e.key):
                yield (e,) + rest


def _overlap(a: tuple, b: tuple) -> bool:
    s1, lo1, hi1 = a
    s2, lo2, hi2 = b
    if s1 != s2:
        return False
    return (hi2 is None or lo1 <= hi2) and (hi1 is None or lo2 <= hi1)


def _disjoint_from(path: Path, occupied: list[tuple]) -> bool:
    return not any(_overlap(iv, jv) for iv in path.intervals() for jv in occupied)


def enumerate_path_collections(d: WiringDiagram, sources: Iterable[int],
                               sinks: Iterable[int]) -> list[PathCollection]:
    """All vertex-disjoint collections routing the primed ``sources`` onto
    the strand-numbered ``sinks`` (a complete, possibly empty, list).
    """
    src = sorted(sources)
    snk = frozenset(sinks)
    if len(src) != len(snk):
        raise ValueError("|sources| must equal |sinks|")
    per_source: list[list[Path]] = []
    for s in src:
        strand = d.strand_of_label(s)
        paths = [Path(s, strand, es)
                 for es in _paths_from(d, strand, Fraction(0))
                 if (es[-1].upper if es else strand) in snk]
        per_source.append(paths)

    out: list[PathCollection] = []

    def backtrack(idx: int, chosen: list[Path], used_sinks: set[int],
                  occupied: list[tuple]) -> None:
        if idx == len(src):
            out.append(PathCollection(tuple(chosen)))
            return
        for p in per_source[idx]:
            if p.sink in used_sinks or not _disjoint_from(p, occupied):
                continue
            backtrack(idx + 1, chosen + [p], used_sinks | {p.sink},
                      occupied + list(p.intervals()))

    backtrack(0, [], set(), [])
    out.sort(key=lambda c: tuple(p.sink for p in c.paths))
    return out


def collection_weight(c: PathCollection, d: WiringDiagram) -> SignedMonomial:
    """sgn of the source->sink assignment, times -1 per crossed negative
    segment, times the product of the vertical-edge weights.
    """
    sinks = [p.sink for p in c.paths]          # paths ordered by source label
    inversions = sum(1 for i in range(len(sinks)) for j in range(i + 1, len(sinks))
                     if sinks[i] > sinks[j])
    sign = -1 if inversions % 2 else 1
    exponents: dict[int, int] = {}
    for p in c.paths:
        for e in p.edges:
            exponents[e.weight_id] = exponents.get(e.weight_id, 0) + 1
        for strand, lo, hi in p.intervals():
            for seg in d.neg_segments:
                if seg.strand == strand and lo < seg.key and (hi is None or seg.key < hi):
                    sign = -sign
    return SignedMonomial(sign, exponents)


# ---------------------------------------------------------------------------
# Greedy / extremal collections
# ---------------------------------------------------------------------------

def _greedy_path(d: WiringDiagram, source: int, occupied: list[tuple]) -> Path:
    """From the source's strand, take every upward edge that does not touch
    the paths already placed; error out if boxed in with no exit.
    """
    strand = d.strand_of_label(source)
    key = Fraction(0)
    taken: list[VerticalEdge] = []
    if any(s == strand and lo <= key and (hi is None or key <= hi)
           for s, lo, hi in occupied):
        raise RuntimeError("greedy source strand already occupied")
    while True:
        block = min((lo for s, lo, hi in occupied if s == strand and lo > key),
                    default=None)
        moved = False
        for e in sorted(d.edges, key=lambda e: e.key):
            if e.lower != strand or e.key <= key:
                continue
            if block is not None and e.key >= block:
                break
            landing_blocked = any(
                s == e.upper and lo <= e.key and (hi is None or e.key <= hi)
                for s, lo, hi in occupied)
            if landing_blocked:
                continue
            taken.append(e)
            strand, key = e.upper, Fraction(e.key)
            moved = True
            break
        if moved:
            continue
        if block is not None:
            raise RuntimeError("greedy path boxed in with no exit")
        return Path(source, d.strand_of_label(source), tuple(taken))


def left_greedy_collection(d: WiringDiagram, sources: Iterable[int]) -> PathCollection:
    """Add paths top-down (by strand); each takes every left turn it can
    without intersecting the paths already in the collection.
    """
    order = sorted(sources, key=d.strand_of_label, reverse=True)
    occupied: list[tuple] = []
    paths: list[Path] = []
    for s in order:
        p = _greedy_path(d, s, occupied)
        paths.append(p)
        occupied.extend(p.intervals())
    paths.sort(key=lambda p: p.source)
    return PathCollection(tuple(paths))


def graph_extremal_collections(d: WiringDiagram, k: int) -> list[PathCollection]:
    """For each i in 0..k: left-greedy paths from the topmost i sources of
    {1'..k'} plus diagonal paths from the rest; deduplicated by sink set,
    each verified to be the unique collection for its sink set.
    """
    if not 1 <= k <= d.n:
        raise ValueError("k out of range")
    labels = list(range(1, k + 1))
    top_down = sorted(labels, key=d.strand_of_label, reverse=True)
    seen: dict[frozenset[int], PathCollection] = {}
    for i in range(k + 1):
        greedy_part = left_greedy_collection(d, top_down[:i]) if i else PathCollection(())
        diag = [Path(s, d.strand_of_label(s), ()) for s in top_down[i:]]
        paths = sorted(list(greedy_part.paths) + diag, key=lambda p: p.source)
        occupied: list[tuple] = []
        for p in paths:
            if not _disjoint_from(p, occupied):
                raise RuntimeError("extremal union is not vertex-disjoint (bug)")
            occupied.extend(p.intervals())
        coll = PathCollection(tuple(paths))
        seen.setdefault(coll.sinks, coll)
    for sinks, coll in seen.items():
        all_colls = enumerate_path_collections(d, labels, sinks)
        if len(all_colls) != 1:
            raise RuntimeError(
                f"extremal sink set {sorted(sinks)} admits {len(all_colls)} "
                "collections; expected exactly one (bug)")
    return [seen[s] for s in sorted(seen, key=lambda s: tuple(sorted(s)))]


# ---------------------------------------------------------------------------
# Path-sum matrix and debug dump
# ---------------------------------------------------------------------------

def path_sum_matrix(d: WiringDiagram, a: Mapping[int, Fraction]) -> list[list[Fraction]]:
    """N[i][j] = signed weighted sum over paths from source i' to sink j."""
    n = d.n
    out = [[Fraction(0)] * n for _ in range(n)]
    for label in range(1, n + 1):
        strand = d.strand_of_label(label)
        for es in _paths_from(d, strand, Fraction(0)):
            p = Path(label, strand, tuple(es))
            mono = collection_weight(PathCollection((p,)), d)
            term = Fraction(mono.sign)
            for wid, e in mono.exponents.items():
                term *= Fraction(a[wid]) ** e
            out[label - 1][p.sink - 1] += term
    return out


def dump(d: WiringDiagram) -> str:
    lines = [f"n={d.n} v={d.cell[0]} w={d.cell[1]}",
             "labels(bottom-to-top)=" + ",".join(f"{x}'" for x in d.source_label)]
    for e in d.edges:
        lines.append(f"edge (c={e.column}, r={e.lower}->{e.upper}, a_{e.weight_id})")
    for s in d.neg_segments:
        lines.append(f"-1 segment (strand {s.strand}, between columns "
                     f"{s.columns[0]} and {s.columns[1]})")
    return "\n".join(lines)


if __name__ == "__main__":
    import doctest
    doctest.testmod()
