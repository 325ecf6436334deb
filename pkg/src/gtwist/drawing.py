"""Combinatorial model of simple drawings of K_n.

A drawing is stored as a rotation system (counterclockwise neighbor order per
vertex) plus, for every edge, the ordered sequence of its crossings.  Edges
are always identified by the pair ``(u, v)`` with ``u < v`` and their crossing
sequences run from ``u`` to ``v``.  The sign of a crossing record is +1 iff
the other edge, oriented low-to-high, passes from the right side to the left
side of this edge, oriented low-to-high; the two stored copies of one crossing
therefore carry opposite signs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

Edge = tuple[int, int]


def edge_key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def all_edges(n: int) -> list[Edge]:
    return list(itertools.combinations(range(1, n + 1), 2))


@dataclass(frozen=True)
class CrossingRecord:
    other: Edge
    sign: int


@dataclass(frozen=True)
class WeakIsoSignature:
    n: int
    pairs: tuple

    def __str__(self) -> str:
        return f"WeakIsoSignature(n={self.n}, {len(self.pairs)} crossing pairs)"


@dataclass
class ValidationReport:
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, msg: str) -> None:
        self.violations.append(msg)

    def __str__(self) -> str:
        return "valid" if self.ok else "; ".join(self.violations)


class Drawing:
    """Immutable-by-convention combinatorial simple drawing of K_n."""

    __slots__ = ("n", "rotations", "crossings", "_pair_set")

    def __init__(self, n: int, rotations, crossings):
        if n < 1:
            raise ValueError("need at least one vertex")
        self.n = n
        self.rotations = tuple(tuple(r) for r in rotations)
        self.crossings = {edge_key(*e): tuple(recs) for e, recs in crossings.items()}
        for e in all_edges(n):
            self.crossings.setdefault(e, ())
        self._pair_set = None

    def rotation(self, v: int) -> tuple[int, ...]:
        return self.rotations[v - 1]

    def edges(self) -> list[Edge]:
        return all_edges(self.n)

    def crossing_seq(self, e: Edge) -> tuple[CrossingRecord, ...]:
        return self.crossings[edge_key(*e)]

    def crossing_pairs(self) -> set[frozenset]:
        if self._pair_set is None:
            self._pair_set = {frozenset((e, r.other)) for e, recs in self.crossings.items()
                              for r in recs}
        return self._pair_set

    def pair_crosses(self, e: Edge, f: Edge) -> bool:
        return frozenset((edge_key(*e), edge_key(*f))) in self.crossing_pairs()

    def crossing_sign(self, e: Edge, f: Edge) -> int:
        e, f = edge_key(*e), edge_key(*f)
        for r in self.crossings[e]:
            if r.other == f:
                return r.sign
        raise KeyError(f"edges {e} and {f} do not cross")

    def relabel(self, perm: dict[int, int]) -> "Drawing":
        """New drawing with vertex v renamed perm[v]; rotations/orders preserved."""
        rotations = [None] * self.n
        for v in range(1, self.n + 1):
            rotations[perm[v] - 1] = tuple(perm[w] for w in self.rotation(v))
        crossings = {}
        for (u, v), recs in self.crossings.items():
            nu, nv = perm[u], perm[v]
            e = edge_key(nu, nv)
            e_flip = nu > nv
            mapped = []
            for r in recs:
                fa, fb = perm[r.other[0]], perm[r.other[1]]
                f_flip = fa > fb
                sign = r.sign * (-1 if e_flip else 1) * (-1 if f_flip else 1)
                mapped.append(CrossingRecord(edge_key(fa, fb), sign))
            if e_flip:
                mapped.reverse()
            crossings[e] = tuple(mapped)
        return Drawing(self.n, rotations, crossings)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Drawing) and self.n == other.n
                and self.rotations == other.rotations and self.crossings == other.crossings)

    def __hash__(self):
        return hash((self.n, self.rotations, tuple(sorted(self.crossings.items()))))

    def __repr__(self) -> str:
        return f"Drawing(n={self.n}, crossings={len(self.crossing_pairs())})"


def validate(d: Drawing) -> ValidationReport:
    """Check the simple-drawing axioms; empty report means valid."""
    report = ValidationReport()
    n = d.n
    if len(d.rotations) != n:
        report.add(f"expected {n} rotations, got {len(d.rotations)}")
        return report
    for v in range(1, n + 1):
        rot = d.rotation(v)
        if sorted(rot) != [w for w in range(1, n + 1) if w != v]:
            report.add(f"rotation of vertex {v} is not a permutation of the other vertices")
    expected = set(all_edges(n))
    stored = set(d.crossings)
    if stored != expected:
        missing = expected - stored
        extra = stored - expected
        if missing:
            report.add(f"incomplete edge set: missing {sorted(missing)[:4]}")
        if extra:
            report.add(f"unknown edges {sorted(extra)[:4]}")
        return report
    for e, recs in d.crossings.items():
        seen = set()
        for r in recs:
            f = r.other
            if f not in expected:
                report.add(f"edge {e} lists crossing with unknown edge {f}")
                continue
            if set(e) & set(f):
                report.add(f"adjacent edges cross: {e} and {f}")
            if r.sign not in (1, -1):
                report.add(f"crossing ({e},{f}) has sign {r.sign}")
            if f in seen:
                report.add(f"edges {e} and {f} cross more than once")
            seen.add(f)
    for e, recs in d.crossings.items():
        for r in recs:
            f = r.other
            if f not in expected:
                continue
            back = [rb for rb in d.crossings[f] if rb.other == e]
            if not back:
                report.add(f"asymmetric crossing: {e} lists {f} but not vice versa")
            elif len(back) == 1 and back[0].sign != -r.sign and r.sign in (1, -1):
                report.add(f"sign of crossing ({e},{f}) is not antisymmetric")
    return report


def crossing_pairs(d: Drawing) -> set[frozenset]:
    """Set of unordered edge pairs that cross."""
    return set(d.crossing_pairs())


def induced_subdrawing(d: Drawing, S) -> Drawing:
    """Subdrawing on vertex set S, relabeled 1..|S| in sorted order."""
    S = sorted(set(S))
    if not S:
        raise ValueError("vertex subset must be nonempty")
    if S[0] < 1 or S[-1] > d.n:
        raise ValueError(f"vertices out of range: {S}")
    pos = {v: i + 1 for i, v in enumerate(S)}
    keep = set(S)
    rotations = [tuple(pos[w] for w in d.rotation(v) if w in keep) for v in S]
    crossings = {}
    for (u, v), recs in d.crossings.items():
        if u in keep and v in keep:
            crossings[(pos[u], pos[v])] = tuple(
                CrossingRecord((pos[r.other[0]], pos[r.other[1]]), r.sign)
                for r in recs if r.other[0] in keep and r.other[1] in keep)
    return Drawing(len(S), rotations, crossings)


def signature_of_pairs(n: int, pairs) -> WeakIsoSignature:
    """Lexicographically minimal crossing-pair list over all vertex relabelings.

    Exhaustive search with best-prefix pruning; guarded to n <= 9.
    """
    if n > 9:
        raise ValueError("canonical signatures are only computed for n <= 9")
    all_pairs = [tuple(sorted((tuple(e), tuple(f)))) for e, f in (tuple(p) for p in pairs)]

    best: list | None = None

    # candidate ordering heuristic: vertices with small crossing involvement first
    weight = {v: 0 for v in range(1, n + 1)}
    for (a, b), (c, d) in all_pairs:
        for v in (a, b, c, d):
            weight[v] += 1
    order_hint = sorted(range(1, n + 1), key=lambda v: (weight[v], v))

    sigma = [0] * (n + 1)  # input vertex -> output position
    placed: list[int] = []  # input vertices in output-position order

    def buckets_for(p: int) -> list:
        """Sorted bucket of normalized output pairs whose max output index is p."""
        x = placed[p - 1]
        out = []
        for (a, b), (c, d) in all_pairs:
            if x not in (a, b, c, d):
                continue
            qa, qb, qc, qd = sigma[a], sigma[b], sigma[c], sigma[d]
            if 0 in (qa, qb, qc, qd):
                continue
            if max(qa, qb, qc, qd) != p:
                continue
            e1 = (qa, qb) if qa < qb else (qb, qa)
            e2 = (qc, qd) if qc < qd else (qd, qc)
            out.append((e1, e2) if e1 < e2 else (e2, e1))
        out.sort()
        return out

    def search(p: int, prefix: list, tied: bool):
        nonlocal best
        if p > n:
            if best is None or prefix < best:
                best = list(prefix)
            return
        for x in order_hint:
            if sigma[x]:
                continue
            sigma[x] = p
            placed.append(x)
            bucket = buckets_for(p)
            new_prefix = prefix + bucket
            go = True
            new_tied = tied
            if best is not None and tied:
                limit = best[:len(new_prefix)]
                if new_prefix > limit:
                    go = False
                elif new_prefix < limit:
                    new_tied = False
            if go:
                search(p + 1, new_prefix, new_tied)
            placed.pop()
            sigma[x] = 0

    search(1, [], True)
    return WeakIsoSignature(n, tuple(best or []))


def canonical_signature(d: Drawing) -> WeakIsoSignature:
    return signature_of_pairs(d.n, [tuple(sorted(p)) for p in d.crossing_pairs()])
