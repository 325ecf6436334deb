"""JSON interchange formats.

Drawings:      {"format": "sdkn-drawing/1", "n": ..., "rotations": [...], "edges": [...]}
Strip scenes:  {"format": "sdkn-strip/1", "n": ..., "radii": ["p/q", ...]}
Point scenes:  {"format": "sdkn-points/1", "points": [["x", "y"], ...]}
Mixed scenes:  {"format": "sdkn-cmono/1", "n": ..., "radii": [...], "wrapped": [[u, v], ...]}

Serialization is deterministic (fixed key order, compact separators, trailing
newline) so identical objects produce identical bytes.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .drawing import CrossingRecord, Drawing, all_edges, validate

DRAWING_FORMAT = "sdkn-drawing/1"
STRIP_FORMAT = "sdkn-strip/1"
POINTS_FORMAT = "sdkn-points/1"
CMONO_FORMAT = "sdkn-cmono/1"


class FormatError(ValueError):
    """Malformed input file; message carries the JSON location."""


class DrawingValidationError(ValueError):
    def __init__(self, report):
        super().__init__(str(report))
        self.report = report


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":")) + "\n"


def frac_str(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_frac(s, where: str) -> Fraction:
    try:
        return Fraction(str(s))
    except (ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"{where}: not a rational: {s!r}") from exc


def drawing_to_obj(d: Drawing) -> dict:
    return {
        "format": DRAWING_FORMAT,
        "n": d.n,
        "rotations": [list(d.rotation(v)) for v in range(1, d.n + 1)],
        "edges": [
            {"u": u, "v": v,
             "crossings": [{"u": r.other[0], "v": r.other[1], "sign": r.sign}
                           for r in d.crossing_seq((u, v))]}
            for u, v in all_edges(d.n)
        ],
    }


def dumps_drawing(d: Drawing) -> str:
    return _dump(drawing_to_obj(d))


def drawing_from_obj(obj, check: bool = True) -> Drawing:
    if not isinstance(obj, dict):
        raise FormatError("top level: expected an object")
    if obj.get("format") != DRAWING_FORMAT:
        raise FormatError(f"format: expected {DRAWING_FORMAT!r}, got {obj.get('format')!r}")
    n = obj.get("n")
    if not isinstance(n, int) or n < 1:
        raise FormatError(f"n: expected positive integer, got {n!r}")
    rotations = obj.get("rotations")
    if not isinstance(rotations, list) or len(rotations) != n:
        raise FormatError(f"rotations: expected list of {n} rotations")
    for i, rot in enumerate(rotations):
        if not isinstance(rot, list) or not all(isinstance(w, int) for w in rot):
            raise FormatError(f"rotations[{i}]: expected list of vertex ids")
    edges = obj.get("edges")
    if not isinstance(edges, list):
        raise FormatError("edges: expected a list")
    crossings = {}
    for k, entry in enumerate(edges):
        where = f"edges[{k}]"
        if not isinstance(entry, dict):
            raise FormatError(f"{where}: expected an object")
        u, v = entry.get("u"), entry.get("v")
        if not (isinstance(u, int) and isinstance(v, int) and 1 <= u < v <= n):
            raise FormatError(f"{where}: bad endpoints u={u!r} v={v!r} (need 1 <= u < v <= n)")
        if (u, v) in crossings:
            raise FormatError(f"{where}: duplicate edge ({u},{v})")
        recs = []
        for m, c in enumerate(entry.get("crossings", [])):
            cw = f"{where}.crossings[{m}]"
            if not isinstance(c, dict):
                raise FormatError(f"{cw}: expected an object")
            cu, cv, sign = c.get("u"), c.get("v"), c.get("sign")
            if not (isinstance(cu, int) and isinstance(cv, int) and 1 <= cu < cv <= n):
                raise FormatError(f"{cw}: bad endpoints u={cu!r} v={cv!r}")
            if sign not in (1, -1):
                raise FormatError(f"{cw}: sign must be 1 or -1, got {sign!r}")
            recs.append(CrossingRecord((cu, cv), sign))
        crossings[(u, v)] = tuple(recs)
    d = Drawing(n, rotations, crossings)
    if check:
        report = validate(d)
        if not report.ok:
            raise DrawingValidationError(report)
    return d


def loads_drawing(text: str, check: bool = True) -> Drawing:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from exc
    return drawing_from_obj(obj, check=check)


def write_drawing(d: Drawing, path) -> None:
    with open(path, "w", encoding="utf-8") as fp:
        fp.write(dumps_drawing(d))


def read_drawing(path, check: bool = True) -> Drawing:
    with open(path, encoding="utf-8") as fp:
        return loads_drawing(fp.read(), check=check)


# -- scenes -----------------------------------------------------------------

def dumps_strip(n: int, radii) -> str:
    return _dump({"format": STRIP_FORMAT, "n": n,
                  "radii": [frac_str(r) for r in radii]})


def parse_strip(obj) -> tuple[int, list[Fraction]]:
    if obj.get("format") != STRIP_FORMAT:
        raise FormatError(f"format: expected {STRIP_FORMAT!r}")
    n = obj.get("n")
    radii = obj.get("radii")
    if not isinstance(n, int) or n < 1:
        raise FormatError(f"n: expected positive integer, got {n!r}")
    if not isinstance(radii, list) or len(radii) != n:
        raise FormatError(f"radii: expected {n} entries")
    return n, [parse_frac(r, f"radii[{i}]") for i, r in enumerate(radii)]


def dumps_points(points) -> str:
    return _dump({"format": POINTS_FORMAT,
                  "points": [[frac_str(x), frac_str(y)] for x, y in points]})


def parse_points(obj) -> list[tuple[Fraction, Fraction]]:
    if obj.get("format") != POINTS_FORMAT:
        raise FormatError(f"format: expected {POINTS_FORMAT!r}")
    pts = obj.get("points")
    if not isinstance(pts, list) or not pts:
        raise FormatError("points: expected a nonempty list")
    out = []
    for i, p in enumerate(pts):
        if not isinstance(p, list) or len(p) != 2:
            raise FormatError(f"points[{i}]: expected [x, y]")
        out.append((parse_frac(p[0], f"points[{i}].x"), parse_frac(p[1], f"points[{i}].y")))
    return out


def dumps_cmono(n: int, radii, wrapped) -> str:
    return _dump({"format": CMONO_FORMAT, "n": n,
                  "radii": [frac_str(r) for r in radii],
                  "wrapped": sorted([list(e) for e in wrapped])})


def parse_cmono(obj) -> tuple[int, list[Fraction], set]:
    if obj.get("format") != CMONO_FORMAT:
        raise FormatError(f"format: expected {CMONO_FORMAT!r}")
    n = obj.get("n")
    if not isinstance(n, int) or n < 1:
        raise FormatError(f"n: expected positive integer, got {n!r}")
    radii = obj.get("radii")
    if not isinstance(radii, list) or len(radii) != n:
        raise FormatError(f"radii: expected {n} entries")
    wrapped = set()
    for i, e in enumerate(obj.get("wrapped", [])):
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) for x in e)):
            raise FormatError(f"wrapped[{i}]: expected [u, v]")
        u, v = e
        if not 1 <= u < v <= n:
            raise FormatError(f"wrapped[{i}]: bad edge ({u},{v})")
        wrapped.add((u, v))
    return n, [parse_frac(r, f"radii[{i}]") for i, r in enumerate(radii)], wrapped


def load_any(text: str):
    """Parse any sdkn-* payload; returns (kind, parsed)."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from exc
    fmt = obj.get("format") if isinstance(obj, dict) else None
    if fmt == DRAWING_FORMAT:
        return "drawing", drawing_from_obj(obj)
    if fmt == STRIP_FORMAT:
        return "strip", parse_strip(obj)
    if fmt == POINTS_FORMAT:
        return "points", parse_points(obj)
    if fmt == CMONO_FORMAT:
        return "cmono", parse_cmono(obj)
    raise FormatError(f"format: unrecognized {fmt!r}")
