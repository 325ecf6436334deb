"""Simple drawings of complete graphs, generalized twisted drawings, and the
plane-substructure machinery built on them."""

from .drawing import (CrossingRecord, Drawing, ValidationReport, WeakIsoSignature,
                      canonical_signature, crossing_pairs, induced_subdrawing,
                      signature_of_pairs, validate)
from .generate import (CMonotoneScene, PointScene, SceneInvalidError, StripScene,
                       canonical_gt, cmonotone_mixed, convex_drawing, convex_rule_pairs,
                       convex_scene, lemma1_pattern_violations, random_gt, random_points,
                       straight_line_drawing, twisted_rule_pairs)

__all__ = [
    "CrossingRecord", "Drawing", "ValidationReport", "WeakIsoSignature",
    "canonical_signature", "crossing_pairs", "induced_subdrawing",
    "signature_of_pairs", "validate",
    "CMonotoneScene", "PointScene", "SceneInvalidError", "StripScene",
    "canonical_gt", "cmonotone_mixed", "convex_drawing", "convex_rule_pairs",
    "convex_scene", "lemma1_pattern_violations", "random_gt", "random_points",
    "straight_line_drawing", "twisted_rule_pairs",
]

__version__ = "0.1.0"
