"""Exact-rational scene generators and their combinatorial drawings.

Two geometric models are used:

* the unrolled annulus strip: vertex i sits at (i, rho_i); the edge (i, j)
  with i < j is either the *wrapped* straight segment from (i, rho_i) to
  (j-(n+1), rho_j), which crosses the seam ray x = 0 exactly once, or the
  *direct* segment to (j, rho_j), which does not.  A scene with every edge
  wrapped realizes a generalized twisted drawing; mixed wrap sets realize
  c-monotone drawings.  Crossings are computed over the lifts m*(n+1),
  m in {-1, 0, 1}.

* straight-line scenes: exact rational points in general position.

Every comparison is exact; scenes are checked, never trusted.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .drawing import CrossingRecord, Drawing, all_edges, edge_key, validate
from .exact import (DegeneracyError, cross_point, orient, point_in_segment_interior,
                    segment_param, segments_cross, sort_ccw)

Edge = tuple[int, int]


class SceneInvalidError(ValueError):
    """The sampled scene violates the simple-drawing axioms."""


class RetryBudgetExhausted(RuntimeError):
    def __init__(self, what: str, seed):
        super().__init__(f"retry budget exhausted for {what} (seed={seed!r})")
        self.seed = seed


def twisted_rule_pairs(n: int) -> set[frozenset]:
    """Crossing pairs of the twisted drawing: (i,j) x (k,l) iff i<k<l<j or k<i<j<l."""
    out = set()
    for (i, j), (k, l) in itertools.combinations(all_edges(n), 2):
        if len({i, j, k, l}) == 4 and (i < k < l < j or k < i < j < l):
            out.add(frozenset(((i, j), (k, l))))
    return out


def convex_rule_pairs(n: int) -> set[frozenset]:
    """Crossing pairs of the convex drawing: interleaved index pairs."""
    out = set()
    for (i, j), (k, l) in itertools.combinations(all_edges(n), 2):
        if len({i, j, k, l}) == 4 and (i < k < j < l or k < i < l < j):
            out.add(frozenset(((i, j), (k, l))))
    return out


# ---------------------------------------------------------------------------
# strip scenes

class StripScene:
    """Strip realization with per-edge wrap flags (all wrapped = generalized twisted)."""

    def __init__(self, n: int, radii, wrapped=None, check: bool = True):
        self.n = n
        self.period = n + 1
        if isinstance(radii, dict):
            self.radii = {i: Fraction(radii[i]) for i in range(1, n + 1)}
        else:
            self.radii = {i: Fraction(radii[i - 1]) for i in range(1, n + 1)}
        if wrapped is None:
            wrapped = set(all_edges(n))
        self.wrapped = {edge_key(*e) for e in wrapped}
        self._cross_memo: dict[frozenset, tuple] = {}
        if len(set(self.radii.values())) < n:
            raise SceneInvalidError("degenerate radii: not pairwise distinct")
        if any(r <= 0 for r in self.radii.values()):
            raise SceneInvalidError("radii must be positive")
        if check:
            self.validate_scene()

    # -- geometry ------------------------------------------------------------

    def segment(self, e: Edge):
        u, v = edge_key(*e)
        a = (Fraction(u), self.radii[u])
        if (u, v) in self.wrapped:
            b = (Fraction(v - self.period), self.radii[v])
        else:
            b = (Fraction(v), self.radii[v])
        return a, b

    def crosses_seam(self, e: Edge) -> bool:
        return edge_key(*e) in self.wrapped

    def _pair_crossings(self, e: Edge, f: Edge):
        """All proper crossings of e with lifts of f: list of (m, point on e)."""
        a, b = self.segment(e)
        hits = []
        for m in (-1, 0, 1):
            s = m * self.period
            c0, d0 = self.segment(f)
            c = (c0[0] + s, c0[1])
            d = (d0[0] + s, d0[1])
            if max(a[0], b[0]) < min(c[0], d[0]) or max(c[0], d[0]) < min(a[0], b[0]):
                continue
            if segments_cross(a, b, c, d):
                hits.append((m, cross_point(a, b, c, d)))
        return hits

    def pair_crossings(self, e: Edge, f: Edge):
        key = frozenset((edge_key(*e), edge_key(*f)))
        if key not in self._cross_memo:
            self._cross_memo[key] = tuple(self._pair_crossings(e, f))
        return self._cross_memo[key]

    def pair_crosses(self, e: Edge, f: Edge) -> bool:
        e, f = edge_key(*e), edge_key(*f)
        if e == f or set(e) & set(f):
            return False
        return bool(self.pair_crossings(e, f))

    def vertex_images(self, t: int):
        imgs = [(Fraction(t), self.radii[t])]
        imgs.append((Fraction(t - self.period), self.radii[t]))
        imgs.append((Fraction(t + self.period), self.radii[t]))
        return imgs

    def validate_scene(self) -> None:
        edges = all_edges(self.n)
        for e in edges:
            a, b = self.segment(e)
            for t in range(1, self.n + 1):
                for p in self.vertex_images(t):
                    if point_in_segment_interior(p, a, b):
                        raise SceneInvalidError(f"vertex {t} lies on edge {e}")
        for e, f in itertools.combinations(edges, 2):
            try:
                hits = self.pair_crossings(e, f)
            except DegeneracyError as exc:
                raise SceneInvalidError(f"degenerate pair {e},{f}: {exc}") from exc
            if set(e) & set(f):
                if hits:
                    raise SceneInvalidError(f"adjacent edges cross: {e},{f}")
            elif len(hits) > 1:
                raise SceneInvalidError(f"edges cross twice: {e},{f}")

    def crossing_pairs(self) -> set[frozenset]:
        out = set()
        for e, f in itertools.combinations(all_edges(self.n), 2):
            if not set(e) & set(f) and self.pair_crossings(e, f):
                out.add(frozenset((e, f)))
        return out

    # -- combinatorics ---------------------------------------------------------

    def rotation(self, v: int) -> tuple[int, ...]:
        # germ direction at v's image; directions are translation-invariant
        # across the two images, so a single ccw sort merges both sides.
        germs = []
        for w in range(1, self.n + 1):
            if w == v:
                continue
            e = edge_key(v, w)
            a, b = self.segment(e)
            if e[0] == v:  # segment starts at P_v
                germs.append((w, (b[0] - a[0], b[1] - a[1])))
            else:  # segment ends at P_v or its inner image
                germs.append((w, (a[0] - b[0], a[1] - b[1])))
        order = sort_ccw([g[1] for g in germs])
        return tuple(germs[i][0] for i in order)

    def drawing(self, check: bool = True) -> Drawing:
        n = self.n
        per_edge: dict[Edge, list] = {e: [] for e in all_edges(n)}
        for e, f in itertools.combinations(all_edges(n), 2):
            if set(e) & set(f):
                if self.pair_crossings(e, f):
                    raise SceneInvalidError(f"adjacent edges cross: {e},{f}")
                continue
            hits = self.pair_crossings(e, f)
            if not hits:
                continue
            if len(hits) > 1:
                raise SceneInvalidError(f"edges cross twice: {e},{f}")
            m, point = hits[0]
            ae, be = self.segment(e)
            af, bf = self.segment(f)
            te = segment_param(point, ae, be)
            pf = (point[0] - m * self.period, point[1])
            tf = segment_param(pf, af, bf)
            de = (be[0] - ae[0], be[1] - ae[1])
            df = (bf[0] - af[0], bf[1] - af[1])
            cr = de[0] * df[1] - de[1] * df[0]
            sign = 1 if cr > 0 else -1
            per_edge[e].append((te, f, sign))
            per_edge[f].append((tf, e, -sign))
        crossings = {}
        for e, lst in per_edge.items():
            lst.sort(key=lambda item: item[0])
            for (t1, _, _), (t2, _, _) in zip(lst, lst[1:]):
                if t1 == t2:
                    raise DegeneracyError(f"concurrent crossings on edge {e}")
            crossings[e] = tuple(CrossingRecord(f, s) for _, f, s in lst)
        rotations = [self.rotation(v) for v in range(1, n + 1)]
        d = Drawing(n, rotations, crossings)
        if check:
            report = validate(d)
            if not report.ok:
                raise SceneInvalidError(f"scene produced invalid drawing: {report}")
        return d

    def seam_steps(self):
        """Once-crossing seam ray as portable curve steps, ordered outward from O.

        Every edge must be wrapped.  Each step is (edge, segment_index,
        enter_from_left) relative to the edge's low-to-high dart.
        """
        if self.wrapped != set(all_edges(self.n)):
            raise ValueError("seam route requires a fully wrapped (gt) scene")
        order = []
        for e in all_edges(self.n):
            a, b = self.segment(e)
            # y at x=0
            y0 = a[1] + (0 - a[0]) * (b[1] - a[1]) / (b[0] - a[0])
            t0 = segment_param((Fraction(0), y0), a, b)
            n_before = sum(1 for (te, _, _) in self._edge_param_list(e) if te < t0)
            order.append((y0, e, n_before))
        order.sort(key=lambda item: item[0])
        return [(e, seg_idx, True) for _, e, seg_idx in order]

    def _edge_param_list(self, e: Edge):
        a, b = self.segment(e)
        out = []
        for f in all_edges(self.n):
            if f == e or set(e) & set(f):
                continue
            for m, point in self.pair_crossings(e, f):
                out.append((segment_param(point, a, b), f, m))
        out.sort(key=lambda item: item[0])
        return out


def lemma1_pattern_violations(n: int, pairs) -> list[tuple]:
    """Crossing pairs with the forbidden interleaved pattern i<k<j<l."""
    bad = []
    for pair in pairs:
        (i, j), (k, l) = sorted(pair)
        if i < k < j < l or k < i < l < j:
            bad.append(((i, j), (k, l)))
    return bad


@lru_cache(maxsize=64)
def canonical_gt(n: int) -> tuple[StripScene, Drawing]:
    """The canonical generalized twisted drawing: radii rho_i = i.

    The scene is fully checked and its crossing set verified against the
    twisted rule; if that ever failed for some n, rejection-sampled radii
    would be used instead.
    """
    if n < 1:
        raise ValueError("n must be positive")
    try:
        scene = StripScene(n, [Fraction(i) for i in range(1, n + 1)])
        d = scene.drawing()
        if d.crossing_pairs() != twisted_rule_pairs(n):
            raise SceneInvalidError("canonical radii do not reproduce the twisted rule")
        return scene, d
    except (SceneInvalidError, DegeneracyError):
        return random_gt(n, seed=0)


def random_gt(n: int, seed) -> tuple[StripScene, Drawing]:
    """Random generalized twisted drawing via rejection-sampled radii."""
    rnd = random.Random(("gt", seed, n))
    expected = len(list(itertools.combinations(range(n), 4))) if n >= 4 else 0
    for attempt in range(240):
        style = attempt % 3
        if style == 0:
            vals = sorted(rnd.sample(range(1, 10 ** 6), n))
            radii = [Fraction(v) for v in vals]
        elif style == 1:
            radii = [Fraction(i) + Fraction(rnd.randint(-440, 440), 1000) for i in range(1, n + 1)]
        else:
            radii = [Fraction(i) + Fraction(rnd.randint(-1990, 1990), 1000) for i in range(1, n + 1)]
        if len(set(radii)) < n or min(radii) <= 0:
            continue
        try:
            scene = StripScene(n, radii)
            d = scene.drawing()
        except (SceneInvalidError, DegeneracyError):
            continue
        pairs = d.crossing_pairs()
        if n >= 4 and len(pairs) != expected:
            raise AssertionError("valid gt scene is not crossing maximal")
        if lemma1_pattern_violations(n, pairs):
            raise AssertionError("gt scene violates the non-interleaving pattern")
        return scene, d
    raise RetryBudgetExhausted("random_gt", seed)


# ---------------------------------------------------------------------------
# straight-line scenes

class PointScene:
    """Exact straight-line drawing of K_n on points in general position."""

    def __init__(self, points, check: bool = True):
        self.points = {i: (Fraction(p[0]), Fraction(p[1])) for i, p in enumerate(points, 1)}
        self.n = len(self.points)
        self._pairs: set[frozenset] | None = None
        if check:
            self.validate_scene()

    def validate_scene(self) -> None:
        pts = list(self.points.items())
        if len({p for _, p in pts}) < self.n:
            raise SceneInvalidError("coincident points")
        for (i, a), (j, b), (k, c) in itertools.combinations(pts, 3):
            if orient(a, b, c) == 0:
                raise SceneInvalidError(f"collinear points {i},{j},{k}")

    def segment(self, e: Edge):
        u, v = edge_key(*e)
        return self.points[u], self.points[v]

    def crossing_pairs(self) -> set[frozenset]:
        if self._pairs is None:
            self._pairs = _bulk_straight_line_pairs(self.points)
        return self._pairs

    def pair_crosses(self, e: Edge, f: Edge) -> bool:
        e, f = edge_key(*e), edge_key(*f)
        if e == f or set(e) & set(f):
            return False
        return frozenset((e, f)) in self.crossing_pairs()

    def rotation(self, v: int) -> tuple[int, ...]:
        pv = self.points[v]
        others = [w for w in self.points if w != v]
        dirs = [(self.points[w][0] - pv[0], self.points[w][1] - pv[1]) for w in others]
        order = sort_ccw(dirs)
        return tuple(others[i] for i in order)

    def drawing(self, check: bool = True) -> Drawing:
        n = self.n
        per_edge: dict[Edge, list] = {e: [] for e in all_edges(n)}
        for pair in self.crossing_pairs():
            e, f = sorted(pair)
            ae, be = self.segment(e)
            af, bf = self.segment(f)
            point = cross_point(ae, be, af, bf)
            te = segment_param(point, ae, be)
            tf = segment_param(point, af, bf)
            de = (be[0] - ae[0], be[1] - ae[1])
            df = (bf[0] - af[0], bf[1] - af[1])
            cr = de[0] * df[1] - de[1] * df[0]
            sign = 1 if cr > 0 else -1
            per_edge[e].append((te, f, sign))
            per_edge[f].append((tf, e, -sign))
        crossings = {}
        for e, lst in per_edge.items():
            lst.sort(key=lambda item: item[0])
            for (t1, _, _), (t2, _, _) in zip(lst, lst[1:]):
                if t1 == t2:
                    raise DegeneracyError(f"concurrent crossings on edge {e}")
            crossings[e] = tuple(CrossingRecord(f, s) for _, f, s in lst)
        rotations = [self.rotation(v) for v in range(1, n + 1)]
        d = Drawing(n, rotations, crossings)
        if check:
            report = validate(d)
            if not report.ok:
                raise SceneInvalidError(f"scene produced invalid drawing: {report}")
        return d


def _bulk_straight_line_pairs(points: dict[int, tuple]) -> set[frozenset]:
    """All properly crossing edge pairs of the straight-line K_n (numpy, exact int64)."""
    n = len(points)
    edges = all_edges(n)
    # integer coordinates required for the vectorized path
    denom = 1
    for x, y in points.values():
        denom = denom * x.denominator // _gcd(denom, x.denominator)
        denom = denom * y.denominator // _gcd(denom, y.denominator)
    if denom > 10 ** 6 or max(max(abs(p[0]), abs(p[1])) for p in points.values()) * denom > 10 ** 7:
        return _slow_straight_line_pairs(points)
    P = {v: (int(p[0] * denom), int(p[1] * denom)) for v, p in points.items()}
    E = len(edges)
    ax = np.array([P[e[0]][0] for e in edges], dtype=np.int64)
    ay = np.array([P[e[0]][1] for e in edges], dtype=np.int64)
    bx = np.array([P[e[1]][0] for e in edges], dtype=np.int64)
    by = np.array([P[e[1]][1] for e in edges], dtype=np.int64)
    ii, jj = np.triu_indices(E, k=1)
    u1 = np.array([e[0] for e in edges]); v1 = np.array([e[1] for e in edges])
    shared = ((u1[ii] == u1[jj]) | (u1[ii] == v1[jj]) | (v1[ii] == u1[jj]) | (v1[ii] == v1[jj]))
    keep = ~shared
    ii, jj = ii[keep], jj[keep]
    out: set[frozenset] = set()
    chunk = 2_000_000
    for start in range(0, len(ii), chunk):
        s = slice(start, start + chunk)
        i, j = ii[s], jj[s]
        o1 = _orient_np(ax[i], ay[i], bx[i], by[i], ax[j], ay[j])
        o2 = _orient_np(ax[i], ay[i], bx[i], by[i], bx[j], by[j])
        o3 = _orient_np(ax[j], ay[j], bx[j], by[j], ax[i], ay[i])
        o4 = _orient_np(ax[j], ay[j], bx[j], by[j], bx[i], by[i])
        zero = (o1 == 0) | (o2 == 0) | (o3 == 0) | (o4 == 0)
        if zero.any():
            raise SceneInvalidError("degenerate straight-line configuration")
        mask = (np.sign(o1) != np.sign(o2)) & (np.sign(o3) != np.sign(o4))
        for a, b in zip(i[mask], j[mask]):
            out.add(frozenset((edges[a], edges[b])))
    return out


def _orient_np(px, py, qx, qy, rx, ry):
    return (qx - px) * (ry - py) - (qy - py) * (rx - px)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _slow_straight_line_pairs(points) -> set[frozenset]:
    out = set()
    segs = {}
    n = len(points)
    for e in all_edges(n):
        segs[e] = (points[e[0]], points[e[1]])
    for e, f in itertools.combinations(all_edges(n), 2):
        if set(e) & set(f):
            continue
        if segments_cross(*segs[e], *segs[f]):
            out.add(frozenset((e, f)))
    return out


def straight_line_drawing(scene: PointScene) -> Drawing:
    return scene.drawing()


def random_points(n: int, seed, box: int = 10 ** 6) -> PointScene:
    """Random integer points in general position."""
    rnd = random.Random(("pts", seed, n))
    for _ in range(200):
        pts = [(rnd.randint(0, box), rnd.randint(0, box)) for _ in range(n)]
        try:
            return PointScene(pts)
        except SceneInvalidError:
            continue
    raise RetryBudgetExhausted("random_points", seed)


@lru_cache(maxsize=64)
def convex_scene(n: int) -> PointScene:
    """Points in convex position (perturbed parabola, degeneracy-checked)."""
    for attempt in range(50):
        rnd = random.Random(("convex", n, attempt))
        ts = []
        for i in range(1, n + 1):
            if attempt == 0:
                ts.append(Fraction(i))
            else:
                ts.append(Fraction(i) + Fraction(rnd.randint(-400, 400), 997))
        pts = [(t, t * t) for t in ts]
        try:
            scene = PointScene(pts)
        except SceneInvalidError:
            continue
        # convex position: consecutive triples turn the same way (parabola is convex)
        if any(orient(pts[k], pts[k + 1], pts[k + 2]) <= 0 for k in range(n - 2)):
            continue
        try:
            # materialization catches concurrent crossings for small n
            if n <= 12:
                scene.drawing()
        except (DegeneracyError, SceneInvalidError):
            continue
        if scene.crossing_pairs() != convex_rule_pairs(n):
            continue
        return scene
    raise RetryBudgetExhausted("convex_scene", n)


def convex_drawing(n: int) -> Drawing:
    """Straight-line drawing of points in convex position; crossing set is the
    interleave rule."""
    return convex_scene(n).drawing()


# ---------------------------------------------------------------------------
# mixed c-monotone scenes

class CMonotoneScene(StripScene):
    """Strip scene with per-edge wrap flags and the seam-crossing predicate."""

    def seam_flags(self) -> dict[Edge, bool]:
        return {e: e in self.wrapped for e in all_edges(self.n)}


def cmonotone_mixed(n: int, seed=None, wrap_predicate=None) -> CMonotoneScene:
    """Sample a valid mixed c-monotone strip scene.

    With `wrap_predicate`, the wrap set is fixed and radii are rejection-sampled.
    With a seed, wraps are grown edge by edge, each flip kept only if the scene
    stays valid (iid wrap sets are almost never valid, so global rejection on
    the wrap set does not terminate even at n = 9).
    """
    if wrap_predicate is not None:
        rnd = random.Random(("cmono-pred", seed, n))
        wraps = {e for e in all_edges(n) if wrap_predicate(*e)}
        for _ in range(200):
            vals = sorted(rnd.sample(range(1, 10 ** 6), n))
            try:
                return CMonotoneScene(n, [Fraction(v) for v in vals], wraps)
            except (SceneInvalidError, DegeneracyError):
                continue
        raise RetryBudgetExhausted("cmonotone_mixed(predicate)", seed)

    rnd = random.Random(("cmono", seed, n))
    style = rnd.choice(["from-direct", "from-gt", "from-direct", "from-gt", "balanced"])
    for _ in range(40):
        vals = sorted(rnd.sample(range(1, 10 ** 6), n))
        radii = [Fraction(v) for v in vals]
        try:
            if style == "from-gt":
                scene = CMonotoneScene(n, radii, set(all_edges(n)))
                target_state = False
            else:
                scene = CMonotoneScene(n, radii, set())
                target_state = True
        except (SceneInvalidError, DegeneracyError):
            continue
        edges = all_edges(n)
        rnd.shuffle(edges)
        budget = len(edges) if n <= 24 else max(4 * n, 48)
        if style == "balanced":
            budget = len(edges) if n <= 24 else 8 * n
        flipped = 0
        checker = _IncrementalWrapChecker(scene)
        for e in edges[:budget]:
            if checker.try_flip(e, wrap=target_state):
                flipped += 1
        return scene
    raise RetryBudgetExhausted("cmonotone_mixed", seed)


class _IncrementalWrapChecker:
    """Keeps a CMonotoneScene valid while flipping wrap flags edge by edge.

    The bulk candidate-vs-all test runs on int64 numpy arrays; any zero sign
    (potential degeneracy) falls back to per-pair exact checks.
    """

    def __init__(self, scene: CMonotoneScene):
        self.scene = scene
        self.n = scene.n
        self.period = scene.period
        self.edges = all_edges(scene.n)
        self.eidx = {e: k for k, e in enumerate(self.edges)}
        if any(r.denominator != 1 for r in scene.radii.values()):
            raise ValueError("incremental checker needs integer radii")
        self.rad = {i: int(r) for i, r in scene.radii.items()}
        E = len(self.edges)
        self.x0 = np.zeros(E, dtype=np.int64)
        self.y0 = np.zeros(E, dtype=np.int64)
        self.x1 = np.zeros(E, dtype=np.int64)
        self.y1 = np.zeros(E, dtype=np.int64)
        self.u = np.array([e[0] for e in self.edges])
        self.v = np.array([e[1] for e in self.edges])
        for e in self.edges:
            self._store(e)

    def _coords(self, e: Edge, wrapped: bool):
        u, v = e
        if wrapped:
            # x-sorted: wrapped runs from (v-period) up to u
            return (v - self.period, self.rad[v], u, self.rad[u])
        return (u, self.rad[u], v, self.rad[v])

    def _store(self, e: Edge):
        k = self.eidx[e]
        self.x0[k], self.y0[k], self.x1[k], self.y1[k] = self._coords(e, e in self.scene.wrapped)

    def try_flip(self, e: Edge, wrap: bool) -> bool:
        currently = e in self.scene.wrapped
        if currently == wrap:
            return False
        cx0, cy0, cx1, cy1 = self._coords(e, wrap)
        if not self._candidate_ok(e, cx0, cy0, cx1, cy1):
            return False
        if wrap:
            self.scene.wrapped.add(e)
        else:
            self.scene.wrapped.discard(e)
        self.scene._cross_memo.clear()
        self._store(e)
        return True

    def _candidate_ok(self, e: Edge, cx0, cy0, cx1, cy1) -> bool:
        # vertex images strictly inside the candidate segment
        a = (Fraction(cx0), Fraction(cy0))
        b = (Fraction(cx1), Fraction(cy1))
        for t in range(1, self.n + 1):
            for m in (-1, 0, 1):
                p = (Fraction(t + m * self.period), Fraction(self.rad[t]))
                if point_in_segment_interior(p, a, b):
                    return False
        k = self.eidx[e]
        adj = (self.u == e[0]) | (self.u == e[1]) | (self.v == e[0]) | (self.v == e[1])
        counts = np.zeros(len(self.edges), dtype=np.int64)
        suspicious = np.zeros(len(self.edges), dtype=bool)
        cdx = cx1 - cx0
        cdy = cy1 - cy0
        for m in (-1, 0, 1):
            s = m * self.period
            lo = np.maximum(cx0, self.x0 + s)
            hi = np.minimum(cx1, self.x1 + s)
            mask = lo < hi
            if not mask.any():
                continue
            # y-comparison numerators at window ends, cross-multiplied (dx > 0)
            dx = self.x1 - self.x0
            dy = self.y1 - self.y0

            def ysign(xq):
                num_c = cy0 * cdx + (xq - cx0) * cdy
                num_o = self.y0 * dx + (xq - (self.x0 + s)) * dy
                return np.sign(num_c * dx - num_o * cdx)

            s_lo, s_hi = ysign(lo), ysign(hi)
            crossing = mask & (s_lo * s_hi < 0)
            touch = mask & ((s_lo == 0) | (s_hi == 0))
            counts += crossing.astype(np.int64)
            suspicious |= touch
        counts[k] = 0
        suspicious[k] = False
        # window-endpoint touches get an exact recount (bulk sign tests cannot
        # distinguish a shared vertex from a genuine tangency or hidden crossing)
        if suspicious.any():
            for idx in np.nonzero(suspicious)[0]:
                f = self.edges[int(idx)]
                try:
                    counts[idx] = self._exact_pair(a, b, f)
                except DegeneracyError:
                    return False
        if (counts[adj] > 0).any():
            return False
        if (counts > 1).any():
            return False
        return True

    def _exact_pair(self, a, b, f: Edge) -> int:
        kf = self.eidx[f]
        c0 = (Fraction(int(self.x0[kf])), Fraction(int(self.y0[kf])))
        d0 = (Fraction(int(self.x1[kf])), Fraction(int(self.y1[kf])))
        cnt = 0
        for m in (-1, 0, 1):
            s = m * self.period
            c = (c0[0] + s, c0[1])
            d = (d0[0] + s, d0[1])
            if max(a[0], b[0]) < min(c[0], d[0]) or max(c[0], d[0]) < min(a[0], b[0]):
                continue
            if segments_cross(a, b, c, d):
                cnt += 1
        return cnt
